"""
Busca de ciclos negativos de comprimento fixo.

A busca principal roda na forma canônica por floresta: todo ciclo negativo usa
pelo menos uma aresta negativa desse representante, então basta procurar, para
cada aresta negativa f = {a,b}, caminhos positivos de a até b com ℓ-1 arestas.
As arestas negativas anteriores a f ficam proibidas, o que faz cada ciclo
aparecer uma única vez.
"""

import logging
from collections.abc import Iterator, Sequence
from dataclasses import dataclass

from sglab.core.exceptions import InvalidInputError
from sglab.core.switching import is_balanced, tree_canonical_form
from sglab.models.models import Cycle, SignedGraph, iter_bits

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class CycleQuery:
    """Consulta C_ℓ⁻: comprimento ℓ, sinal desejado e quantas testemunhas devolver (0 = existência)."""

    length: int
    want_sign: int = -1
    limit: int = 0

    def __post_init__(self):
        if self.length < 3:
            raise InvalidInputError(f"cycle length must be >= 3, got {self.length}")
        if self.want_sign != -1:
            raise InvalidInputError("only negative cycles are searched")
        if self.limit < 0:
            raise InvalidInputError(f"limit must be >= 0, got {self.limit}")

    def check(self, g: SignedGraph) -> None:
        if self.length > g.n:
            raise InvalidInputError(f"cycle length {self.length} exceeds n={g.n}")


def canonical_cycle(vertices: Sequence[int]) -> Cycle:
    """Forma normal de um ciclo: menor vértice primeiro, sentido pelo menor segundo vértice."""
    return Cycle(tuple(vertices)).canonical()


# ==================== Caminhos com paridade ====================


def _walk_table(pos: list[int], neg: list[int], target: int, blocked: int, depth: int) -> list[tuple[int, int]]:
    """
    table[r] = (máscara +, máscara -): vértices com passeio de r arestas até target
    com aquele sinal, sem tocar blocked nem passar por target antes do fim.
    """
    n = len(pos)
    allowed = ((1 << n) - 1) & ~blocked & ~(1 << target)
    table = [(1 << target, 0)]
    for _ in range(depth):
        prev_plus, prev_minus = table[-1]
        plus = minus = 0
        for y in iter_bits(allowed):
            if pos[y] & prev_plus or neg[y] & prev_minus:
                plus |= 1 << y
            if pos[y] & prev_minus or neg[y] & prev_plus:
                minus |= 1 << y
        table.append((plus, minus))
    return table


def _search_paths(
    pos: list[int],
    neg: list[int],
    a: int,
    b: int,
    steps: int,
    want_sign: int,
) -> Iterator[tuple[int, ...]]:
    """
    Caminhos simples a → b com exatamente `steps` arestas e produto de sinais want_sign.

    Poda: o próximo vértice precisa ter passeio até b com o comprimento restante
    e o sinal que falta (isso inclui a distância), b precisa ter vizinho livre, e
    deve restar aresta negativa livre quando a paridade ainda precisa mudar.
    """
    n = len(pos)
    adj = [pos[v] | neg[v] for v in range(n)]
    walks = _walk_table(pos, neg, b, 1 << a, steps)
    neg_touch = 0
    for v in range(n):
        if neg[v]:
            neg_touch |= 1 << v
    bit_b = 1 << b
    path = [a]

    def dfs(x: int, used: int, remaining: int, sign: int) -> Iterator[tuple[int, ...]]:
        if remaining == 1:
            if adj[x] & bit_b and sign * (1 if pos[x] & bit_b else -1) == want_sign:
                yield (*path, b)
            return
        if not adj[b] & ~used:
            return
        if sign != want_sign and not neg_touch & (~used | 1 << x | bit_b):
            return
        plus_ok, minus_ok = walks[remaining - 1]
        for y in iter_bits(adj[x] & ~used & ~bit_b):
            new_sign = sign * (1 if pos[x] >> y & 1 else -1)
            if not (plus_ok if want_sign * new_sign == 1 else minus_ok) >> y & 1:
                continue
            path.append(y)
            yield from dfs(y, used | 1 << y, remaining - 1, new_sign)
            path.pop()

    yield from dfs(a, 1 << a, steps, 1)


# ==================== Busca restrita ====================


def _iter_negative_cycles(g: SignedGraph, length: int, assume_canonical: bool = False) -> Iterator[Cycle]:
    canonical = g if assume_canonical else tree_canonical_form(g)[0]
    pos = list(canonical.pos)
    neg = list(canonical.neg)
    for a, b in canonical.negative_edges():
        pos_f = pos[:]
        neg_f = neg[:]
        neg_f[a] &= ~(1 << b)
        neg_f[b] &= ~(1 << a)
        # o caminho mais a aresta negativa {a,b} fecha um ciclo negativo sse o caminho é positivo
        for path in _search_paths(pos_f, neg_f, a, b, length - 1, 1):
            yield canonical_cycle(path)
        neg[a] &= ~(1 << b)
        neg[b] &= ~(1 << a)


def search_negative_cycles(
    g: SignedGraph, query: CycleQuery, assume_canonical: bool = False
) -> list[Cycle]:
    """
    Executa uma CycleQuery: com limit=0 devolve no máximo uma testemunha.

    Com assume_canonical=True, g já é +1 na sua floresta BFS (como os
    representantes de SignClassIterator) e a canonização é pulada.

    Raises:
        InvalidInputError: ℓ maior que n
    """
    query.check(g)
    wanted = max(query.limit, 1)
    found: set[Cycle] = set()
    for cycle in _iter_negative_cycles(g, query.length, assume_canonical):
        found.add(cycle)
        if len(found) >= wanted:
            break
    return sorted(found, key=lambda c: c.vertices)


def find_negative_cycle_of_length(g: SignedGraph, length: int) -> Cycle | None:
    """Um ciclo negativo com exatamente ℓ vértices, ou None."""
    hits = search_negative_cycles(g, CycleQuery(length))
    return hits[0] if hits else None


def is_Cl_minus_free(g: SignedGraph, length: int) -> bool:  # noqa: N802
    """Ġ não tem ciclo negativo de comprimento ℓ."""
    return find_negative_cycle_of_length(g, length) is None


def enumerate_negative_cycles(g: SignedGraph, length: int, limit: int) -> list[Cycle]:
    """Até `limit` ciclos negativos distintos de comprimento ℓ, em forma canônica e ordem determinística."""
    if limit < 1:
        raise InvalidInputError(f"limit must be >= 1, got {limit}")
    return search_negative_cycles(g, CycleQuery(length, limit=limit))


def negative_girth(g: SignedGraph) -> int | None:
    """Menor ℓ com ciclo negativo; None sse Ġ é equilibrado."""
    if is_balanced(g)[0]:
        return None
    for length in range(3, g.n + 1):
        if find_negative_cycle_of_length(g, length) is not None:
            return length
    raise AssertionError("unbalanced graph without a negative cycle")


def find_negative_cycle_through_edge(g: SignedGraph, u: int, v: int, length: int) -> Cycle | None:
    """
    Ciclo negativo de comprimento ℓ que usa a aresta {u,v}.

    Raises:
        InvalidInputError: {u,v} não é aresta ou ℓ fora de 3..n
    """
    CycleQuery(length).check(g)
    if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
        raise InvalidInputError(f"{{{u},{v}}} is not an edge")
    canonical, _ = tree_canonical_form(g)
    pos = list(canonical.pos)
    neg = list(canonical.neg)
    want = -canonical.sign(u, v)
    for mask in (pos, neg):
        mask[u] &= ~(1 << v)
        mask[v] &= ~(1 << u)
    for path in _search_paths(pos, neg, u, v, length - 1, want):
        return canonical_cycle(path)
    return None


# ==================== Enumeração ingênua ====================


def iter_cycles(g: SignedGraph, length: int) -> Iterator[Cycle]:
    """
    Todos os ciclos de comprimento ℓ em forma canônica, por força bruta.

    Cada ciclo começa no seu menor vértice e o segundo vértice é menor que o último.
    """
    CycleQuery(length).check(g)
    for start in range(g.n):
        higher = ((1 << g.n) - 1) >> (start + 1) << (start + 1)
        path = [start]

        def extend(x: int, used: int) -> Iterator[Cycle]:
            if len(path) == length:
                if g.has_edge(x, start) and path[1] < path[-1]:
                    yield Cycle(tuple(path))
                return
            for y in iter_bits(g.adj(x) & higher & ~used):
                path.append(y)
                yield from extend(y, used | 1 << y)
                path.pop()

        yield from extend(start, 1 << start)


def negative_triangle(g: SignedGraph) -> Cycle | None:
    """Caminho rápido para ℓ = 3: todo triângulo negativo tem uma aresta negativa."""
    for u, v in g.negative_edges():
        # com {u,v} negativa, o triângulo uvw é negativo sse uw e vw têm o mesmo sinal
        common = (g.pos[u] & g.pos[v]) | (g.neg[u] & g.neg[v])
        if common:
            w = (common & -common).bit_length() - 1
            return canonical_cycle((u, v, w))
    return None
