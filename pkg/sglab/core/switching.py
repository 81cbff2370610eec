"""
Troca de sinais (switching), sinal de ciclos, equilíbrio e forma canônica por floresta.
"""

from collections import deque
from collections.abc import Iterable, Mapping, Sequence

from sglab.core.exceptions import InvalidInputError
from sglab.models.models import BalanceWitness, Cycle, SignedGraph, VertexSet, iter_bits

Edge = tuple[int, int]


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def switch(g: SignedGraph, u_set: VertexSet | Iterable[int]) -> SignedGraph:
    """
    Inverte o sinal de toda aresta com exatamente uma ponta em U.

    Raises:
        InvalidInputError: se U tiver vértice fora de 0..n-1
    """
    if not isinstance(u_set, VertexSet):
        u_set = VertexSet.of(u_set)
    if not u_set.fits(g.n):
        raise InvalidInputError(f"switching set has a vertex outside 0..{g.n - 1}")
    full = (1 << g.n) - 1
    inside = u_set.members
    pos, neg = [], []
    for v in range(g.n):
        cross = (full & ~inside) if inside >> v & 1 else inside
        pos.append((g.pos[v] & ~cross) | (g.neg[v] & cross))
        neg.append((g.neg[v] & ~cross) | (g.pos[v] & cross))
    return SignedGraph._unchecked(g.n, pos, neg)


def switch_by_potentials(g: SignedGraph, potentials: Sequence[int]) -> SignedGraph:
    """Aplica σ'(uv) = σ(uv)·s_u·s_v, i.e. switching pelo conjunto {v : s_v = -1}."""
    return switch(g, VertexSet.of(v for v, s in enumerate(potentials) if s == -1))


def negate(g: SignedGraph) -> SignedGraph:
    """-Ġ: todos os sinais invertidos."""
    return SignedGraph._unchecked(g.n, g.neg, g.pos)


def cycle_sign(g: SignedGraph, c: Cycle | Sequence[int]) -> int:
    """
    Produto dos sinais das arestas do ciclo.

    Raises:
        InvalidInputError: vértice repetido, fora da faixa, ou par consecutivo que não é aresta
    """
    if not isinstance(c, Cycle):
        c = Cycle(tuple(c))
    product = 1
    for u, v in c.edges():
        if not (0 <= u < g.n and 0 <= v < g.n):
            raise InvalidInputError(f"cycle vertex out of range for n={g.n}")
        s = g.sign(u, v)
        if s == 0:
            raise InvalidInputError(f"{{{u},{v}}} is not an edge")
        product *= s
    return product


# ==================== Floresta BFS ====================


def _bfs(g: SignedGraph) -> tuple[list[int], list[int], list[int]]:
    """
    BFS a partir do menor vértice de cada componente, vizinhos em ordem crescente.

    Returns:
        (ordem de visita, pai de cada vértice ou -1, profundidade)
    """
    parent = [-1] * g.n
    depth = [-1] * g.n
    order: list[int] = []
    for root in range(g.n):
        if depth[root] >= 0:
            continue
        depth[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            order.append(u)
            for w in iter_bits(g.adj(u)):
                if depth[w] < 0:
                    depth[w] = depth[u] + 1
                    parent[w] = u
                    queue.append(w)
    return order, parent, depth


def bfs_forest(g: SignedGraph) -> tuple[Edge, ...]:
    """Floresta geradora canônica, como arestas (u, v) com u < v em ordem lexicográfica."""
    _, parent, _ = _bfs(g)
    return tuple(sorted(_norm(v, p) for v, p in enumerate(parent) if p >= 0))


def _tree_path_cycle(parent: list[int], depth: list[int], u: int, w: int) -> Cycle:
    """Ciclo fundamental da aresta não-arbórea {u,w}: caminhos até o ancestral comum."""
    left, right = [u], [w]
    a, b = u, w
    while depth[a] > depth[b]:
        a = parent[a]
        left.append(a)
    while depth[b] > depth[a]:
        b = parent[b]
        right.append(b)
    while a != b:
        a, b = parent[a], parent[b]
        left.append(a)
        right.append(b)
    return Cycle(tuple(left + right[-2::-1])).canonical()


def is_balanced(g: SignedGraph) -> tuple[bool, BalanceWitness]:
    """
    Testa equilíbrio propagando potenciais pela floresta BFS.

    Returns:
        (True, potenciais) ou (False, ciclo negativo fechado por uma aresta em conflito)
    """
    order, parent, depth = _bfs(g)
    pot = [0] * g.n
    for v in order:
        p = parent[v]
        pot[v] = 1 if p < 0 else pot[p] * g.sign(p, v)
    for u in order:
        for w in iter_bits(g.adj(u) >> (u + 1) << (u + 1)):
            if g.sign(u, w) * pot[u] * pot[w] == -1:
                return False, BalanceWitness(cycle=_tree_path_cycle(parent, depth, u, w))
    return True, BalanceWitness(potentials=tuple(pot))


# ==================== Forma canônica ====================


def _validar_floresta(g: SignedGraph, forest: Iterable[Edge]) -> tuple[Edge, ...]:
    edges = tuple(sorted({_norm(u, v) for u, v in forest}))
    root = list(range(g.n))

    def find(x: int) -> int:
        while root[x] != x:
            root[x] = root[root[x]]
            x = root[x]
        return x

    for u, v in edges:
        if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
            raise InvalidInputError(f"forest edge {{{u},{v}}} is not an edge of the graph")
        ru, rv = find(u), find(v)
        if ru == rv:
            raise InvalidInputError(f"forest is not acyclic at edge {{{u},{v}}}")
        root[ru] = rv
    if len(edges) != g.n - len(g.components()):
        raise InvalidInputError("forest does not span every component")
    return edges


def tree_canonical_form(
    g: SignedGraph,
    forest: Iterable[Edge] | None = None,
    tree_signs: Mapping[Edge, int] | None = None,
) -> tuple[SignedGraph, tuple[Edge, ...]]:
    """
    Representante único da classe de switching com sinais prescritos na floresta.

    Sem tree_signs, toda aresta da floresta fica +1 e cada aresta fora dela
    recebe o sinal do seu ciclo fundamental.

    Args:
        g: grafo sinalizado
        forest: floresta geradora; None usa bfs_forest(g)
        tree_signs: sinal desejado por aresta da floresta (ausente vale +1)

    Returns:
        (grafo canônico, floresta usada)
    """
    edges = bfs_forest(g) if forest is None else _validar_floresta(g, forest)
    wanted = {_norm(*e): s for e, s in (tree_signs or {}).items()}
    for e, s in wanted.items():
        if e not in edges:
            raise InvalidInputError(f"tree_signs names {e}, which is not a forest edge")
        if s not in (1, -1):
            raise InvalidInputError(f"tree sign must be +1 or -1, got {s!r}")

    tree_adj = [0] * g.n
    for u, v in edges:
        tree_adj[u] |= 1 << v
        tree_adj[v] |= 1 << u
    pot = [0] * g.n
    for r in range(g.n):
        if pot[r]:
            continue
        pot[r] = 1
        stack = [r]
        while stack:
            x = stack.pop()
            for y in iter_bits(tree_adj[x]):
                if not pot[y]:
                    pot[y] = wanted.get(_norm(x, y), 1) * g.sign(x, y) * pot[x]
                    stack.append(y)
    return switch_by_potentials(g, pot), edges


def switching_equivalent(g1: SignedGraph, g2: SignedGraph) -> bool:
    """
    Verdadeiro sse a assinatura produto σ1·σ2 é equilibrada.

    Raises:
        InvalidInputError: grafos subjacentes diferentes (use switching_isomorphic)
    """
    if g1.n != g2.n or any(g1.adj(v) != g2.adj(v) for v in range(g1.n)):
        raise InvalidInputError("switching_equivalent needs identical underlying graphs")
    product = SignedGraph._unchecked(
        g1.n,
        [(g1.pos[v] & g2.pos[v]) | (g1.neg[v] & g2.neg[v]) for v in range(g1.n)],
        [(g1.pos[v] & g2.neg[v]) | (g1.neg[v] & g2.pos[v]) for v in range(g1.n)],
    )
    return is_balanced(product)[0]


def negative_triangle_counts(g: SignedGraph) -> tuple[int, ...]:
    """Número de triângulos negativos em cada vértice (invariante por switching)."""
    counts = [0] * g.n
    for u in range(g.n):
        for v in iter_bits(g.adj(u) >> (u + 1) << (u + 1)):
            s_uv = g.sign(u, v)
            for w in iter_bits(g.adj(u) & g.adj(v) >> (v + 1) << (v + 1)):
                if s_uv * g.sign(u, w) * g.sign(v, w) == -1:
                    counts[u] += 1
                    counts[v] += 1
                    counts[w] += 1
    return tuple(counts)
