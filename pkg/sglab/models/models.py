"""
Modelos de domínio do sglab.

O grafo sinalizado é um valor imutável: vértices densos 0..n-1 e, para cada
vértice, duas máscaras de bits (vizinhos positivos e negativos). Todas as
operações devolvem novos objetos.
"""

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

import networkx as nx
import numpy as np

from sglab.core.exceptions import InvalidInputError


def iter_bits(mask: int) -> Iterator[int]:
    """Itera os índices dos bits ligados em ordem crescente."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_to_list(mask: int) -> list[int]:
    return list(iter_bits(mask))


def _validar_sinal(s: int) -> int:
    if s not in (1, -1):
        raise InvalidInputError(f"sign must be +1 or -1, got {s!r}")
    return int(s)


@dataclass(frozen=True, slots=True)
class SignedGraph:
    """
    Grafo sinalizado Ġ = (G, σ).

    Campos:
        n: número de vértices (0..n-1)
        pos: pos[v] é a máscara dos vizinhos de v por arestas positivas
        neg: neg[v] é a máscara dos vizinhos de v por arestas negativas
    """

    n: int
    pos: tuple[int, ...]
    neg: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise InvalidInputError(f"vertex count must be >= 0, got {self.n}")
        if len(self.pos) != self.n or len(self.neg) != self.n:
            raise InvalidInputError("adjacency masks must have length n")
        full = (1 << self.n) - 1
        for v in range(self.n):
            p, q = self.pos[v], self.neg[v]
            if (p | q) & ~full:
                raise InvalidInputError(f"vertex {v} has a neighbour out of range")
            if (p | q) >> v & 1:
                raise InvalidInputError(f"self-loop at vertex {v}")
            if p & q:
                raise InvalidInputError(f"vertex {v} has an edge with two signs")
            for u in iter_bits(p):
                if not self.pos[u] >> v & 1:
                    raise InvalidInputError(f"asymmetric sign on edge {{{u},{v}}}")
            for u in iter_bits(q):
                if not self.neg[u] >> v & 1:
                    raise InvalidInputError(f"asymmetric sign on edge {{{u},{v}}}")

    # ==================== Construtores ====================

    @classmethod
    def _unchecked(cls, n: int, pos: Sequence[int], neg: Sequence[int]) -> "SignedGraph":
        """Monta sem validar; só para máscaras já consistentes por construção."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "n", n)
        object.__setattr__(obj, "pos", tuple(pos))
        object.__setattr__(obj, "neg", tuple(neg))
        return obj

    @classmethod
    def empty(cls, n: int) -> "SignedGraph":
        return cls(n, (0,) * n, (0,) * n)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int, int]]) -> "SignedGraph":
        """
        Cria um grafo a partir de triplas (u, v, sinal).

        Raises:
            InvalidInputError: laço, índice fora da faixa, aresta duplicada ou sinal inválido
        """
        if n < 0:
            raise InvalidInputError(f"vertex count must be >= 0, got {n}")
        pos = [0] * n
        neg = [0] * n
        for u, v, s in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidInputError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise InvalidInputError(f"self-loop at vertex {u}")
            if (pos[u] | neg[u]) >> v & 1:
                raise InvalidInputError(f"duplicate edge {{{u},{v}}}")
            target = pos if _validar_sinal(s) == 1 else neg
            target[u] |= 1 << v
            target[v] |= 1 << u
        return cls._unchecked(n, pos, neg)

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "SignedGraph":
        """Converte um nx.Graph rotulado 0..n-1; atributo 'sign' ausente vale +1."""
        n = graph.number_of_nodes()
        if sorted(graph.nodes()) != list(range(n)):
            graph = nx.convert_node_labels_to_integers(graph, ordering="sorted")
        return cls.from_edges(
            n, ((u, v, d.get("sign", 1)) for u, v, d in graph.edges(data=True))
        )

    # ==================== Consultas ====================

    def adj(self, v: int) -> int:
        """Máscara de todos os vizinhos de v."""
        return self.pos[v] | self.neg[v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj(u) >> v & 1)

    def sign(self, u: int, v: int) -> int:
        """Sinal da aresta {u,v}: +1, -1, ou 0 se não for aresta."""
        if self.pos[u] >> v & 1:
            return 1
        if self.neg[u] >> v & 1:
            return -1
        return 0

    def degree(self, v: int) -> int:
        return self.adj(v).bit_count()

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted((self.degree(v) for v in range(self.n)), reverse=True))

    @property
    def edge_count(self) -> int:
        """e(Ġ)."""
        return sum(self.adj(v).bit_count() for v in range(self.n)) // 2

    @property
    def negative_edge_count(self) -> int:
        return sum(q.bit_count() for q in self.neg) // 2

    def edges(self) -> list[tuple[int, int, int]]:
        """Arestas (u, v, sinal) com u < v, ordenadas por (u, v)."""
        result = []
        for u in range(self.n):
            higher = self.adj(u) >> (u + 1) << (u + 1)
            for v in iter_bits(higher):
                result.append((u, v, 1 if self.pos[u] >> v & 1 else -1))
        return result

    def negative_edges(self) -> list[tuple[int, int]]:
        result = []
        for u in range(self.n):
            for v in iter_bits(self.neg[u] >> (u + 1) << (u + 1)):
                result.append((u, v))
        return result

    def components(self) -> list[int]:
        """Componentes conexas como máscaras, ordenadas pelo menor vértice."""
        seen = 0
        result = []
        for root in range(self.n):
            if seen >> root & 1:
                continue
            comp = 1 << root
            frontier = comp
            while frontier:
                reach = 0
                for v in iter_bits(frontier):
                    reach |= self.adj(v)
                frontier = reach & ~comp
                comp |= frontier
            seen |= comp
            result.append(comp)
        return result

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    # ==================== Transformações ====================

    def underlying(self) -> "SignedGraph":
        """Grafo subjacente como grafo sinalizado todo positivo (G, +)."""
        return SignedGraph._unchecked(self.n, [self.adj(v) for v in range(self.n)], [0] * self.n)

    def with_edge(self, u: int, v: int, s: int) -> "SignedGraph":
        """Adiciona a aresta {u,v} com sinal s."""
        self._check_pair(u, v)
        if self.has_edge(u, v):
            raise InvalidInputError(f"edge {{{u},{v}}} already present")
        pos, neg = list(self.pos), list(self.neg)
        target = pos if _validar_sinal(s) == 1 else neg
        target[u] |= 1 << v
        target[v] |= 1 << u
        return SignedGraph._unchecked(self.n, pos, neg)

    def without_edge(self, u: int, v: int) -> "SignedGraph":
        self._check_pair(u, v)
        if not self.has_edge(u, v):
            raise InvalidInputError(f"edge {{{u},{v}}} not present")
        pos, neg = list(self.pos), list(self.neg)
        pos[u] &= ~(1 << v)
        pos[v] &= ~(1 << u)
        neg[u] &= ~(1 << v)
        neg[v] &= ~(1 << u)
        return SignedGraph._unchecked(self.n, pos, neg)

    def with_sign(self, u: int, v: int, s: int) -> "SignedGraph":
        """Troca o sinal de uma aresta existente para s."""
        return self.without_edge(u, v).with_edge(u, v, s)

    def relabel(self, perm: Sequence[int]) -> "SignedGraph":
        """Renomeia o vértice v para perm[v]."""
        if sorted(perm) != list(range(self.n)):
            raise InvalidInputError("relabel expects a permutation of 0..n-1")
        return SignedGraph.from_edges(
            self.n, ((perm[u], perm[v], s) for u, v, s in self.edges())
        )

    def induced(self, vertices: Sequence[int]) -> "SignedGraph":
        """Subgrafo induzido, com vertices[i] renomeado para i."""
        index = {v: i for i, v in enumerate(vertices)}
        if len(index) != len(vertices) or any(not 0 <= v < self.n for v in vertices):
            raise InvalidInputError("induced expects distinct in-range vertices")
        return SignedGraph.from_edges(
            len(vertices),
            (
                (index[u], index[v], s)
                for u, v, s in self.edges()
                if u in index and v in index
            ),
        )

    def adjacency_matrix(self) -> np.ndarray:
        """Matriz de adjacência A(Ġ) com entradas em {-1, 0, +1}."""
        a = np.zeros((self.n, self.n), dtype=np.int64)
        for u, v, s in self.edges():
            a[u, v] = a[v, u] = s
        return a

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from((u, v, {"sign": s}) for u, v, s in self.edges())
        return graph

    def _check_pair(self, u: int, v: int) -> None:
        if not (0 <= u < self.n and 0 <= v < self.n) or u == v:
            raise InvalidInputError(f"invalid vertex pair ({u},{v}) for n={self.n}")

    def __repr__(self) -> str:
        return f"SignedGraph(n={self.n}, e={self.edge_count}, neg={self.negative_edge_count})"


@dataclass(frozen=True, slots=True)
class VertexSet:
    """Subconjunto de vértices (semântica de bitset), ex: o conjunto U de uma troca."""

    members: int = 0

    @classmethod
    def of(cls, vertices: Iterable[int]) -> "VertexSet":
        mask = 0
        for v in vertices:
            if v < 0:
                raise InvalidInputError(f"negative vertex index {v}")
            mask |= 1 << v
        return cls(mask)

    def __contains__(self, v: int) -> bool:
        return bool(self.members >> v & 1)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.members)

    def __len__(self) -> int:
        return self.members.bit_count()

    def fits(self, n: int) -> bool:
        return self.members >> n == 0


@dataclass(frozen=True, slots=True)
class Cycle:
    """Ciclo dado pela sequência v0, ..., v_{l-1}; a aresta de fechamento é implícita."""

    vertices: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(int(v) for v in self.vertices))
        if len(self.vertices) < 3:
            raise InvalidInputError("a cycle needs at least 3 vertices")
        if len(set(self.vertices)) != len(self.vertices):
            raise InvalidInputError(f"repeated vertex in cycle {list(self.vertices)}")

    @property
    def length(self) -> int:
        return len(self.vertices)

    def edges(self) -> list[tuple[int, int]]:
        vs = self.vertices
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def canonical(self) -> "Cycle":
        """Rotaciona para o menor vértice primeiro e escolhe o sentido pelo menor segundo vértice."""
        vs = self.vertices
        i = vs.index(min(vs))
        forward = vs[i:] + vs[:i]
        backward = (forward[0], *reversed(forward[1:]))
        return Cycle(min(forward, backward, key=lambda c: c[1]))

    def __iter__(self) -> Iterator[int]:
        return iter(self.vertices)


@dataclass(frozen=True, slots=True)
class BalanceWitness:
    """
    Certificado de equilíbrio: potenciais s em {-1,+1}^n com σ(uv)s_u s_v = +1
    em toda aresta, ou um ciclo negativo que certifica o desequilíbrio.
    """

    potentials: tuple[int, ...] | None = None
    cycle: Cycle | None = None

    def __post_init__(self):
        if (self.potentials is None) == (self.cycle is None):
            raise InvalidInputError("BalanceWitness needs exactly one of potentials or cycle")

    @property
    def balanced(self) -> bool:
        return self.potentials is not None
