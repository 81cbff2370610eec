from sglab.cycles.search import (
    CycleQuery,
    canonical_cycle,
    enumerate_negative_cycles,
    find_negative_cycle_of_length,
    find_negative_cycle_through_edge,
    is_Cl_minus_free,
    iter_cycles,
    negative_girth,
    negative_triangle,
    search_negative_cycles,
)

__all__ = [
    "CycleQuery",
    "canonical_cycle",
    "enumerate_negative_cycles",
    "find_negative_cycle_of_length",
    "find_negative_cycle_through_edge",
    "is_Cl_minus_free",
    "iter_cycles",
    "negative_girth",
    "negative_triangle",
    "search_negative_cycles",
]
