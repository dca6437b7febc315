"""Exact verifiers for translate-inclusion problems on groups and the real line.

All scalars cross the boundary as text in the canonical ``p/q+r/s*sqrt2`` form;
interval sets use the ``[lo,hi]u[lo,hi]`` syntax. Arithmetic underneath is exact
rational + rational-multiple-of-sqrt2, never floating point.
"""

from ._core import (
    IntervalSet,
    check_swelling_real,
    coset_count_bound,
    interval_example,
    necessary_condition_filter,
    quotient_project,
    run_orbit,
    set_intersection,
    set_union,
    sweep,
    translate_set,
    verify_finite,
)

__all__ = [
    "IntervalSet",
    "check_swelling_real",
    "coset_count_bound",
    "interval_example",
    "necessary_condition_filter",
    "quotient_project",
    "run_orbit",
    "set_intersection",
    "set_union",
    "sweep",
    "translate_set",
    "verify_finite",
]
