from sglab.verify.enumeration import (
    SignClassIterator,
    enumerate_sign_classes,
    enumerate_underlying_graphs,
)
from sglab.verify.claims import (  # noqa: I001
    verify_bounds_random,
    verify_charpoly,
    verify_claim,
    verify_construction_C2k1,
    verify_construction_spectral,
    verify_dense_negative_girth,
    verify_lemma_Hna,
    verify_lemma_unbalanced_complete,
    verify_spectral_C3,
    verify_turan_C3,
)
from sglab.verify.falsify import SearchState, falsify_search

__all__ = [
    "SearchState",
    "SignClassIterator",
    "enumerate_sign_classes",
    "enumerate_underlying_graphs",
    "falsify_search",
    "verify_bounds_random",
    "verify_charpoly",
    "verify_claim",
    "verify_construction_C2k1",
    "verify_construction_spectral",
    "verify_dense_negative_girth",
    "verify_lemma_Hna",
    "verify_lemma_unbalanced_complete",
    "verify_spectral_C3",
    "verify_turan_C3",
]
