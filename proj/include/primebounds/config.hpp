#pragma once
// Run configuration shared by the engine, verifier, grid runner, and CLI,
// plus the error taxonomy behind the process exit codes
// (0 clean / 1 violations / 2 inconclusive / 3 capacity-config-usage).

#include <cstdint>
#include <stdexcept>
#include <string>

namespace primebounds {

class capacity_error : public std::runtime_error {
 public:
  explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

class argument_error : public std::invalid_argument {
 public:
  explicit argument_error(const std::string& what) : std::invalid_argument(what) {}
};

enum class PrecisionMode { standard, escalating };
enum class OutputMode { json, csv, human };

inline constexpr std::uint64_t kHardCap = (1ull << 63);
inline constexpr std::uint64_t kDefaultCeiling = 1'000'000'000ull;

struct RunConfig {
  std::uint64_t ceiling = kDefaultCeiling;    // largest prime value sieved
  int workers = 1;
  std::uint64_t chunk_size = 1u << 20;        // indices per verification chunk
  PrecisionMode precision = PrecisionMode::escalating;
  OutputMode output = OutputMode::human;
  std::string checkpoint_dir;                 // empty: no checkpoints
  bool resume = false;
  std::uint64_t checkpoint_stride = 1'000'000;
  bool include_conditional = false;           // RH-conditional catalog entries
  std::size_t segment_bytes = 256 * 1024;     // odd-bitmap bytes per segment

  void validate() const {
    if (ceiling > kHardCap) throw capacity_error("ceiling exceeds hard cap 2^63");
    if (workers < 1) throw argument_error("workers must be >= 1");
    if (chunk_size < 1000) throw argument_error("chunk_size must be >= 1000");
    if (segment_bytes < 64) throw argument_error("segment_bytes too small");
  }
};

}  // namespace primebounds
