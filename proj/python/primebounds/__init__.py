"""Explicit bounds for the n-th prime and theta(p_n).

Verified outward-rounded enclosures for the bound catalog, exhaustive range
verification with adaptive precision escalation, and interval grid
certification.  All heavy lifting happens in the C++ extension module.
"""

from ._primebounds import (
    CapacityError,
    Engine,
    bounds,
    check_bound,
    check_predicate,
    eval_bound,
    find_min_threshold,
    grid_manifest,
    predicates,
    run_grid,
    tail_scan,
    verify_range,
    verify_theta,
)

__all__ = [
    "CapacityError",
    "Engine",
    "bounds",
    "check_bound",
    "check_predicate",
    "eval_bound",
    "find_min_threshold",
    "grid_manifest",
    "predicates",
    "run_grid",
    "tail_scan",
    "verify_range",
    "verify_theta",
]
