"""
Isomorfismo a menos de switching.

Busca isomorfismos do grafo subjacente com networkx (podando por grau e por
triângulos negativos em cada vértice) e testa switching_equivalent para cada um.
"""

import logging

from networkx.algorithms.isomorphism import GraphMatcher

from sglab.config import settings
from sglab.core.switching import negative_triangle_counts, switching_equivalent
from sglab.models.models import SignedGraph

logger = logging.getLogger(__name__)


def _grafo_rotulado(g: SignedGraph):
    graph = g.underlying().to_networkx()
    for v, count in enumerate(negative_triangle_counts(g)):
        graph.nodes[v]["neg_triangles"] = count
    return graph


def switching_isomorphic(g1: SignedGraph, g2: SignedGraph) -> bool:
    """
    Verdadeiro sse existe isomorfismo φ do grafo subjacente tal que φ(Ġ1) ~ Ġ2.

    Ordens, tamanhos ou invariantes diferentes devolvem False sem busca.
    """
    if g1.n != g2.n or g1.edge_count != g2.edge_count:
        return False
    if g1.degree_sequence() != g2.degree_sequence():
        return False
    if sorted(negative_triangle_counts(g1)) != sorted(negative_triangle_counts(g2)):
        return False
    if g1.n > settings.ISOMORPHISM_LIMIT:
        logger.warning(
            f"switching_isomorphic: n={g1.n} acima de {settings.ISOMORPHISM_LIMIT}, a busca pode ser lenta"
        )

    matcher = GraphMatcher(
        _grafo_rotulado(g1),
        _grafo_rotulado(g2),
        node_match=lambda a, b: a["neg_triangles"] == b["neg_triangles"],
    )
    for mapping in matcher.isomorphisms_iter():
        perm = [mapping[v] for v in range(g1.n)]
        if switching_equivalent(g1.relabel(perm), g2):
            return True
    return False
