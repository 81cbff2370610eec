"""
Índice de frustração exato por branch and bound.

l(Ġ) = min sobre s ∈ {-1,+1}^n do número de arestas com σ(uv)·s_u·s_v = -1.
Cada componente é resolvida separadamente, com o primeiro vértice fixado em +1.
"""

import logging

from sglab.config import settings
from sglab.core.exceptions import ExactLimitExceeded
from sglab.core.switching import _bfs, tree_canonical_form
from sglab.models.models import SignedGraph, iter_bits

logger = logging.getLogger(__name__)


def _custos(g: SignedGraph, v: int, plus: int, minus: int) -> tuple[int, int]:
    """Violações de v com os vizinhos já atribuídos, para s_v = +1 e s_v = -1."""
    if_plus = (g.pos[v] & minus).bit_count() + (g.neg[v] & plus).bit_count()
    if_minus = (g.pos[v] & plus).bit_count() + (g.neg[v] & minus).bit_count()
    return if_plus, if_minus


def _frustracao_componente(g: SignedGraph, order: list[int], upper: int) -> int:
    best = upper
    if best == 0 or len(order) <= 2:
        return best
    rest_after = [0] * (len(order) + 1)
    for i in range(len(order) - 1, -1, -1):
        rest_after[i] = rest_after[i + 1] | (1 << order[i])

    def limite_inferior(i: int, plus: int, minus: int) -> int:
        bound = 0
        for w in iter_bits(rest_after[i]):
            bound += min(_custos(g, w, plus, minus))
        return bound

    def busca(i: int, plus: int, minus: int, cost: int) -> None:
        nonlocal best
        if i == len(order):
            best = min(best, cost)
            return
        if cost + limite_inferior(i, plus, minus) >= best:
            return
        v = order[i]
        if_plus, if_minus = _custos(g, v, plus, minus)
        branches = [(if_plus, True), (if_minus, False)]
        branches.sort(key=lambda b: b[0])
        for extra, positive in branches:
            if cost + extra >= best:
                continue
            if positive:
                busca(i + 1, plus | 1 << v, minus, cost + extra)
            else:
                busca(i + 1, plus, minus | 1 << v, cost + extra)

    root = order[0]
    busca(1, 1 << root, 0, 0)
    return best


def frustration_index(g: SignedGraph, limit: int | None = None) -> int:
    """
    Número mínimo de arestas cuja remoção equilibra Ġ.

    Args:
        g: grafo sinalizado
        limit: ordem máxima aceita (padrão: settings.FRUSTRATION_EXACT_LIMIT)

    Raises:
        ExactLimitExceeded: n acima do limite; nunca devolve estimativa
    """
    limit = settings.FRUSTRATION_EXACT_LIMIT if limit is None else limit
    if g.n > limit:
        raise ExactLimitExceeded("frustration_index", g.n, limit)

    canonical, _ = tree_canonical_form(g)
    order, parent, _ = _bfs(canonical)
    total = 0
    start = 0
    for i in range(1, len(order) + 1):
        if i == len(order) or parent[order[i]] < 0:
            comp_order = order[start:i]
            comp_mask = sum(1 << v for v in comp_order)
            upper = sum((canonical.neg[v] & comp_mask).bit_count() for v in comp_order) // 2
            total += _frustracao_componente(canonical, comp_order, upper)
            start = i
    logger.debug(f"frustration_index: n={g.n} e={g.edge_count} l={total}")
    return total
