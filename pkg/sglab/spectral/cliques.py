"""
Número de clique ω e número de clique equilibrada ω_b por branch and bound em bitsets.

A poda usa coloração gulosa dos candidatos: uma clique não tem dois vértices
da mesma cor, então tamanho atual + número de cores limita o que ainda cabe.
"""

from sglab.config import settings
from sglab.core.exceptions import ExactLimitExceeded
from sglab.models.models import SignedGraph, bits_to_list


def _lsb_index(x: int) -> int:
    return (x & -x).bit_length() - 1


def _color_sort(candidates: int, adj: list[int]) -> tuple[list[int], list[int]]:
    """Vértices de candidates agrupados por cor, com a cor acumulada de cada um."""
    order: list[int] = []
    colors: list[int] = []
    color = 0
    work = candidates
    while work:
        color += 1
        free = work
        this_color = 0
        while free:
            v = _lsb_index(free)
            bit = 1 << v
            order.append(v)
            colors.append(color)
            this_color |= bit
            free &= ~bit
            free &= ~adj[v]
        work &= ~this_color
    return order, colors


class _MaxClique:
    def __init__(self, adj: list[int]):
        self.adj = adj
        self.best_size = 0
        self.best_bits = 0

    def expand(self, size: int, chosen: int, candidates: int) -> None:
        if not candidates:
            if size > self.best_size:
                self.best_size, self.best_bits = size, chosen
            return
        order, colors = _color_sort(candidates, self.adj)
        local = candidates
        for i in range(len(order) - 1, -1, -1):
            if size + colors[i] <= self.best_size:
                break
            v = order[i]
            bit = 1 << v
            self.expand(size + 1, chosen | bit, local & self.adj[v])
            local &= ~bit


class _MaxBalancedClique:
    """
    Clique equilibrada = clique com bipartição (lado +, lado -) em que arestas
    internas a um lado são positivas e arestas entre lados são negativas.
    """

    def __init__(self, g: SignedGraph):
        self.g = g
        self.adj = [g.adj(v) for v in range(g.n)]
        self.best_size = 0
        self.best_bits = 0

    def expand(self, size: int, chosen: int, plus: int, minus: int) -> None:
        candidates = plus | minus
        if not candidates:
            if size > self.best_size:
                self.best_size, self.best_bits = size, chosen
            return
        order, colors = _color_sort(candidates, self.adj)
        for i in range(len(order) - 1, -1, -1):
            if size + colors[i] <= self.best_size:
                break
            v = order[i]
            bit = 1 << v
            if size == 0:
                # raiz: v abre o lado +, vizinhos negativos vão para o lado -
                self.expand(1, bit, plus & self.g.pos[v], plus & self.g.neg[v])
            elif plus & bit:
                self.expand(size + 1, chosen | bit, plus & self.g.pos[v], minus & self.g.neg[v])
            elif minus & bit:
                self.expand(size + 1, chosen | bit, plus & self.g.neg[v], minus & self.g.pos[v])
            plus &= ~bit
            minus &= ~bit


def max_clique(g: SignedGraph, limit: int | None = None) -> list[int]:
    """Vértices de uma clique máxima do grafo subjacente."""
    limit = settings.CLIQUE_LIMIT if limit is None else limit
    if g.n > limit:
        raise ExactLimitExceeded("clique_number", g.n, limit)
    solver = _MaxClique([g.adj(v) for v in range(g.n)])
    solver.expand(0, 0, (1 << g.n) - 1)
    return bits_to_list(solver.best_bits)


def clique_number(g: SignedGraph, limit: int | None = None) -> int:
    """ω do grafo subjacente."""
    return len(max_clique(g, limit))


def max_balanced_clique(g: SignedGraph, limit: int | None = None) -> list[int]:
    """Vértices de uma clique equilibrada máxima (o primeiro vértice escolhido fica no lado +)."""
    limit = settings.BALANCED_CLIQUE_LIMIT if limit is None else limit
    if g.n > limit:
        raise ExactLimitExceeded("balanced_clique_number", g.n, limit)
    solver = _MaxBalancedClique(g)
    solver.expand(0, 0, (1 << g.n) - 1, 0)
    return bits_to_list(solver.best_bits)


def balanced_clique_number(g: SignedGraph, limit: int | None = None) -> int:
    """ω_b: maior clique cujo subgrafo sinalizado induzido é equilibrado."""
    return len(max_balanced_clique(g, limit))
