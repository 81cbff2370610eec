from sglab.models.models import (
    BalanceWitness,
    Cycle,
    SignedGraph,
    VertexSet,
    bits_to_list,
    iter_bits,
)

__all__ = [
    "BalanceWitness",
    "Cycle",
    "SignedGraph",
    "VertexSet",
    "bits_to_list",
    "iter_bits",
]
