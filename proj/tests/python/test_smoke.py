"""Python smoke tests for the primebounds extension module.

Runnable directly (python3 test_smoke.py) or under pytest.  These only spot
check the binding layer; the exhaustive suites live in the C++ tests.
"""

import math

import primebounds as pb


def test_engine_queries():
    eng = pb.Engine(ceiling=2_000_000)
    assert eng.ceiling == 2_000_000
    assert eng.nth_prime(6) == 13
    assert eng.nth_prime(10000) == 104729
    assert eng.prime_count(1_000_000) == 78498
    lo, hi = eng.theta(5)
    assert lo <= math.log(2 * 3 * 5 * 7 * 11) <= hi
    assert hi - lo < 1e-12
    pt = eng.point(100)
    assert pt["p"] == 541
    y_lo, y_hi = pt["y"]
    assert y_lo <= math.log(100.0) <= y_hi
    z_lo, z_hi = pt["z"]
    assert z_lo <= math.log(541.0) <= z_hi


def test_registries():
    b = pb.bounds()
    assert len(b["bounds"]) == 22
    ids = {e["id"] for e in b["bounds"]}
    assert {"thm-1.1-upper", "thm-1.2-lower", "eq-1.4-upper",
            "theta-upper-10.367", "theta-lower-11.808"} <= ids
    p = pb.predicates()
    assert len(p["predicates"]) == 23
    g = pb.grid_manifest()
    assert {x["name"] for x in g["grids"]} == {
        "paper:g1", "paper:h1", "paper:alpha", "paper:beta", "paper:gamma",
        "paper:r"}


def test_eval_and_check():
    lo, hi = pb.eval_bound("eq-1.6-upper", 4)
    assert 8.158 < lo <= hi < 8.159
    lo, hi = pb.eval_bound("rosser-lower", 1)
    assert lo <= 0.0 <= hi
    assert pb.check_bound("rosser-lower", 1, 2)["verdict"] == "holds"
    out = pb.check_bound("eq-1.4-upper", 5, 11)
    assert out["verdict"] == "fails"
    assert out["margin"][1] < 0
    assert pb.check_predicate("kor-2.6", 71, 353)["verdict"] == "holds"


def test_verification():
    eng = pb.Engine(ceiling=2_000_000)
    rep = pb.verify_range(eng, "eq-1.4-upper", 2, 10)
    assert rep["count_checked"] == 9
    assert rep["violation_count"] == 4
    assert rep["last_violation"] == 5
    assert not rep["inconclusive"]
    assert pb.find_min_threshold(eng, "eq-1.4-upper", 10_000) == 6
    rep = pb.verify_theta(eng, "theta-upper-10.367", 2581, 5000)
    assert rep["violation_count"] == 0
    assert "theta_envelope" in rep
    serial = pb.verify_range(eng, "eq-1.8-lower", 2, 30_000)
    chunked = pb.verify_range(eng, "eq-1.8-lower", 2, 30_000,
                              workers=2, chunk_size=7919)
    serial.pop("wall_time_s")
    chunked.pop("wall_time_s")
    assert serial == chunked


def test_grids():
    rep = pb.run_grid("paper:r")
    assert rep["passed"] and rep["failure_count"] == 0
    rep = pb.run_grid("coarse:g1", fn="g1", x_start="0", step="0.01",
                      cells=700)
    assert rep["failure_count"] > 0
    rep = pb.tail_scan("f2", "3.05", "30", "0.01")
    assert rep["passed"]


def test_errors():
    eng = pb.Engine(ceiling=1000)
    try:
        eng.nth_prime(1_000_000)
        raise AssertionError("expected CapacityError")
    except pb.CapacityError:
        pass
    try:
        pb.eval_bound("no-such-bound", 10)
        raise AssertionError("expected ValueError")
    except ValueError:
        pass
    try:
        pb.run_grid("coarse:g1", fn="g1", x_start="0.1", step="0.01",
                    cells=10)
        # 0.1 parses exactly as 1/10, so this must succeed
    except ValueError:
        raise AssertionError("decimal strings must parse exactly")


if __name__ == "__main__":
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for fn in tests:
        fn()
        print(f"{fn.__name__} ok")
    print(f"{len(tests)} python smoke tests passed")
