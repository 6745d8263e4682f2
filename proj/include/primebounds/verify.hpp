#pragma once
// Range verification: stream PrimePoints and check one catalog bound or one
// point predicate at every index of a range; find minimal thresholds by
// exhaustive scan; cross-check the theta envelope.
//
// Reports are deterministic (bit-exact) for a fixed subject and range,
// independent of chunk size, worker count, and checkpoint/resume splits: the
// theta accumulator works on absolute index blocks, every per-point check is
// pure, and chunk results merge in ascending range order.  wall_time_s is the
// only non-deterministic field.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "primebounds/bounds.hpp"
#include "primebounds/config.hpp"
#include "primebounds/engine.hpp"
#include "primebounds/predicates.hpp"

namespace primebounds {

// A verification subject is either a catalog bound or a point predicate.
// Names are resolved against the bound registry first; the two z-form names
// exist in both registries with identical margins.
struct Subject {
  bool is_bound = true;
  BoundId bound{};
  PredicateId pred{};
  std::string name;
  bool strict = false;
  bool needs_theta = false;
  std::uint64_t domain_min = 2;
  std::optional<std::uint64_t> claimed_threshold;
};

Subject resolve_subject(const std::string& name);  // throws argument_error

struct Violation {
  std::uint64_t n = 0;
  Interval margin = Interval::invalid();
};

// Empirical cross-check of the envelope |theta(p_n) - p_n| < 0.15 p_n/log^3 p_n
// (reported, not asserted: the cited validity of the envelope starts beyond
// desk scale, and the streamed theta enclosure cannot be escalated).
struct ThetaEnvelope {
  std::uint64_t holds = 0;
  std::uint64_t violations = 0;
  std::uint64_t indeterminate = 0;
  std::uint64_t worst_n = 0;          // largest upper bound of the ratio
  Interval worst_ratio = Interval::invalid();  // |theta - p| / (0.15 p/z^3)
};

struct VerificationReport {
  std::string subject;
  std::uint64_t n_lo = 0;
  std::uint64_t n_hi = 0;
  std::uint64_t count_checked = 0;

  std::vector<Violation> violations;  // ascending by n, capped
  std::uint64_t violation_count = 0;  // true count, preserved past the cap
  std::optional<std::uint64_t> last_violation;

  // Points whose double-precision margin straddled 0 and were settled on a
  // higher tier (capped list + true count).
  std::vector<std::uint64_t> escalated;
  std::uint64_t escalated_count = 0;
  // Points still indeterminate after the full ladder; nonempty means the run
  // is inconclusive.
  std::vector<std::uint64_t> indeterminates;
  std::uint64_t indeterminate_count = 0;
  std::optional<std::uint64_t> last_indeterminate;

  std::uint64_t min_margin_n = 0;
  Interval min_margin = Interval::invalid();  // smallest certified margin

  double wall_time_s = 0.0;  // excluded from determinism guarantees
  std::optional<ThetaEnvelope> theta_envelope;

  bool inconclusive() const { return indeterminate_count > 0; }
};

struct VerifyOptions {
  PrecisionMode precision = PrecisionMode::escalating;
  std::uint64_t chunk_size = 1u << 20;  // points per streamed chunk
  int workers = 1;                      // chunks checked concurrently
  std::size_t list_cap = 100000;        // cap on violation/escalation lists
  // When set, the merged report state is written here after each completed
  // wave of chunks; resume picks the scan up at the recorded index.  The
  // resumed report is bit-identical to an uninterrupted run.
  std::string checkpoint_dir;
  bool resume = false;
  // Testing hook: widen the first-tier margin outward by this much to force
  // escalations; escalated tiers are not widened.
  double debug_widen = 0.0;
};

// Exhaustive check of subject at every n in [n_lo, n_hi].
VerificationReport verify_range(const PrimeEngine& engine,
                                const std::string& subject,
                                std::uint64_t n_lo, std::uint64_t n_hi,
                                const VerifyOptions& opts = {});

// Least N such that subject holds for every n in [N, n_hi]; equal to the
// subject's domain minimum when the whole scan is clean.  Unresolved
// indeterminates block like violations (the threshold is never understated).
std::uint64_t find_min_threshold(const PrimeEngine& engine,
                                 const std::string& subject,
                                 std::uint64_t n_hi,
                                 const VerifyOptions& opts = {});

// verify_range for a theta-target catalog entry, plus the envelope
// cross-check.  Rejects subjects that do not target theta.
VerificationReport verify_theta(const PrimeEngine& engine,
                                const std::string& subject,
                                std::uint64_t n_lo, std::uint64_t n_hi,
                                const VerifyOptions& opts = {});

std::string report_json(const VerificationReport& r);
std::string report_csv(const VerificationReport& r);

}  // namespace primebounds
