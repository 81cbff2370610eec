"""
Enumeração de grafos subjacentes e de classes de switching.

Classes de switching de um grafo fixo ficam em bijeção com os sinais das
arestas fora de uma floresta geradora (todas as arestas da floresta +1), o
que dá exatamente 2^(m - n + c) representantes.
"""

import logging
from collections.abc import Iterator
from functools import lru_cache
from pathlib import Path

import networkx as nx

from sglab.config import settings
from sglab.core.exceptions import InvalidInputError
from sglab.core.switching import bfs_forest
from sglab.models.models import SignedGraph
from sglab.utils.sgformat import iter_graph6, to_graph6

logger = logging.getLogger(__name__)

Edge = tuple[int, int]


class SignClassIterator:
    """
    Um representante por classe de switching, na ordem lexicográfica dos padrões
    de sinais das arestas fora da floresta (+ antes de -; a primeira aresta é a
    mais significativa). O índice 0 é a classe equilibrada.
    """

    def __init__(self, underlying: SignedGraph):
        self.underlying = underlying.underlying()
        self.forest: tuple[Edge, ...] = bfs_forest(self.underlying)
        tree = set(self.forest)
        self.free_edges: tuple[Edge, ...] = tuple(
            (u, v) for u, v, _ in self.underlying.edges() if (u, v) not in tree
        )
        self.cursor = 0
        self._adj = [self.underlying.adj(v) for v in range(self.underlying.n)]

    def __len__(self) -> int:
        return 1 << len(self.free_edges)

    def __iter__(self) -> "SignClassIterator":
        return self

    def __next__(self) -> SignedGraph:
        if self.cursor >= len(self):
            raise StopIteration
        g = self.graph_at(self.cursor)
        self.cursor += 1
        return g

    def graph_at(self, index: int) -> SignedGraph:
        """Representante de índice `index`: bit (f-1-i) ligado torna free_edges[i] negativa."""
        if not 0 <= index < len(self):
            raise InvalidInputError(f"sign pattern index {index} out of range")
        pos = self._adj[:]
        neg = [0] * len(pos)
        f = len(self.free_edges)
        for i, (u, v) in enumerate(self.free_edges):
            if index >> (f - 1 - i) & 1:
                pos[u] &= ~(1 << v)
                pos[v] &= ~(1 << u)
                neg[u] |= 1 << v
                neg[v] |= 1 << u
        return SignedGraph._unchecked(len(pos), pos, neg)

    def block(self, start: int, stop: int) -> Iterator[tuple[int, SignedGraph]]:
        """Pares (índice, representante) para start <= índice < stop."""
        for index in range(max(start, 0), min(stop, len(self))):
            yield index, self.graph_at(index)

    def blocks(self, size: int | None = None) -> list[tuple[int, int]]:
        """Partição de 0..len-1 em blocos de até BLOCK_SIZE padrões."""
        size = settings.BLOCK_SIZE if size is None else size
        total = len(self)
        return [(s, min(s + size, total)) for s in range(0, total, size)]


def enumerate_sign_classes(underlying: SignedGraph) -> SignClassIterator:
    """Iterador de representantes canônicos (um por classe de switching); sinais de entrada são ignorados."""
    return SignClassIterator(underlying)


# ==================== Grafos subjacentes ====================


def _chave(graph: nx.Graph) -> tuple:
    degrees = tuple(sorted(d for _, d in graph.degree()))
    return degrees, nx.weisfeiler_lehman_graph_hash(graph, iterations=3)


@lru_cache(maxsize=None)
def _todos_os_grafos(n: int) -> tuple[SignedGraph, ...]:
    """
    Um representante por classe de isomorfismo, por aumento de vértice:
    cada grafo de ordem n-1 ganha o vértice n-1 ligado a cada subconjunto.
    Duplicatas caem por (graus, hash WL) e nx.is_isomorphic dentro do balde.
    """
    if n <= 1:
        return (SignedGraph.empty(max(n, 0)),)
    buckets: dict[tuple, list[nx.Graph]] = {}
    reps: list[nx.Graph] = []
    for parent in _todos_os_grafos(n - 1):
        base = parent.to_networkx()
        for subset in range(1 << (n - 1)):
            graph = base.copy()
            graph.add_node(n - 1)
            graph.add_edges_from((v, n - 1) for v in range(n - 1) if subset >> v & 1)
            bucket = buckets.setdefault(_chave(graph), [])
            if any(nx.is_isomorphic(graph, rep) for rep in bucket):
                continue
            bucket.append(graph)
            reps.append(graph)
    graphs = [SignedGraph.from_networkx(g) for g in reps]
    graphs.sort(key=lambda g: (g.edge_count, to_graph6(g)))
    logger.debug(f"[Enum] n={n}: {len(graphs)} grafos")
    return tuple(graphs)


def enumerate_underlying_graphs(
    n: int,
    connected: bool,
    graphs_file: str | Path | None = None,
) -> Iterator[SignedGraph]:
    """
    Um grafo (todo positivo) por classe de isomorfismo de ordem n.

    Até ENUMERATION_LIMIT a geração é interna; acima disso os grafos vêm de um
    arquivo graph6, filtrados por ordem e conexidade.

    Raises:
        InvalidInputError: n acima do limite sem arquivo
    """
    if n < 1:
        raise InvalidInputError(f"graph order must be >= 1, got {n}")
    if graphs_file is not None:
        source: Iterator[SignedGraph] = (g for g in iter_graph6(graphs_file) if g.n == n)
    elif n <= settings.ENUMERATION_LIMIT:
        source = iter(_todos_os_grafos(n))
    else:
        raise InvalidInputError(
            f"built-in enumeration stops at n={settings.ENUMERATION_LIMIT}; supply a graph6 file"
        )
    for g in source:
        if not connected or g.is_connected():
            yield g
