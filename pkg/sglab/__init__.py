"""
sglab - grafos sinalizados sem ciclos negativos de comprimento fixo.

Construções extremais, switching, busca de ciclos negativos, cotas espectrais
e a bancada de verificação dos resultados extremais e espectrais.
"""

from sglab.core.exceptions import (
    ExactLimitExceeded,
    InvalidInputError,
    SgFormatError,
    SignedGraphError,
)
from sglab.models.models import Cycle, SignedGraph, VertexSet
from sglab.verify import verify_claim  # noqa: I001
from sglab.constructions.families import (
    build_C3minus_K,
    build_G_st,
    build_H_na,
    complete_signed,
)
from sglab.core.switching import is_balanced, switch, tree_canonical_form
from sglab.cycles.search import find_negative_cycle_of_length, is_Cl_minus_free
from sglab.spectral.eigen import eigenvalues, spectral_radius

__version__ = "0.1.0"

__all__ = [
    "Cycle",
    "ExactLimitExceeded",
    "InvalidInputError",
    "SgFormatError",
    "SignedGraph",
    "SignedGraphError",
    "VertexSet",
    "build_C3minus_K",
    "build_G_st",
    "build_H_na",
    "complete_signed",
    "eigenvalues",
    "find_negative_cycle_of_length",
    "is_Cl_minus_free",
    "is_balanced",
    "spectral_radius",
    "switch",
    "tree_canonical_form",
    "verify_claim",
]
