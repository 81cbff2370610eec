"""
Construtores das famílias nomeadas de grafos sinalizados.

Convenções de rótulos (fixas, para relatórios reprodutíveis):
    G_{s,t}:      u=0, v=1, u_1..u_s = 2..s+1, v_1..v_t = s+2..s+t+1; {u,v} negativa
    C3⁻·K_{n-2}:  0 e 1 são os vértices de grau 2 do triângulo, 2 é o vértice de corte,
                  3..n-1 completam a clique; {0,1} é a única aresta negativa
    H_{n,a}:      caminho u=0, 1, ..., a-1=v; clique K_{n-a} em a..n-1
"""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from itertools import combinations
from typing import Literal

from sglab.core.exceptions import InvalidInputError
from sglab.models.models import SignedGraph


@dataclass(frozen=True, slots=True)
class HnaVariant:
    """
    Seleção entre Ḣ¹, Ḣ² e Ḣ³ pelas arestas de v até a clique.

    Campos:
        kind: 1 (todas negativas), 2 (todas positivas) ou 3 (mistas)
        negative_attach: para kind 3, índices relativos 0..n-a-1 da clique que
            recebem aresta negativa de v
    """

    kind: Literal[1, 2, 3]
    negative_attach: frozenset[int] | None = None

    def __post_init__(self):
        if self.kind not in (1, 2, 3):
            raise InvalidInputError(f"H_na kind must be 1, 2 or 3, got {self.kind!r}")
        if self.negative_attach is not None:
            object.__setattr__(self, "negative_attach", frozenset(self.negative_attach))
        if self.kind == 3:
            if not self.negative_attach:
                raise InvalidInputError("kind 3 needs a nonempty negative_attach subset")
        elif self.negative_attach is not None:
            raise InvalidInputError("negative_attach is only valid for kind 3")

    def attach_sign(self, index: int) -> int:
        if self.kind == 1:
            return -1
        if self.kind == 2:
            return 1
        return -1 if index in self.negative_attach else 1


def _parse_signs(signs: Sequence[int | str]) -> list[int]:
    parsed = []
    for s in signs:
        if s in ("+", 1, "+1"):
            parsed.append(1)
        elif s in ("-", -1, "-1"):
            parsed.append(-1)
        else:
            raise InvalidInputError(f"invalid sign {s!r}")
    return parsed


def build_path(n: int, signs: Sequence[int | str]) -> SignedGraph:
    """Caminho 0-1-...-(n-1); signs[i] é o sinal de {i, i+1}."""
    if n < 2:
        raise InvalidInputError(f"path needs n >= 2, got {n}")
    parsed = _parse_signs(signs)
    if len(parsed) != n - 1:
        raise InvalidInputError(f"path on {n} vertices needs {n - 1} signs, got {len(parsed)}")
    return SignedGraph.from_edges(n, ((i, i + 1, s) for i, s in enumerate(parsed)))


def build_cycle(n: int, signs: Sequence[int | str]) -> SignedGraph:
    """Ciclo 0-1-...-(n-1)-0; signs[i] é o sinal de {i, (i+1) mod n}."""
    if n < 3:
        raise InvalidInputError(f"cycle needs n >= 3, got {n}")
    parsed = _parse_signs(signs)
    if len(parsed) != n:
        raise InvalidInputError(f"cycle on {n} vertices needs {n} signs, got {len(parsed)}")
    return SignedGraph.from_edges(n, ((i, (i + 1) % n, s) for i, s in enumerate(parsed)))


def complete_signed(n: int, negative_edges: Iterable[tuple[int, int]] = ()) -> SignedGraph:
    """K_n com as arestas dadas negativas e as demais positivas."""
    if n < 1:
        raise InvalidInputError(f"complete graph needs n >= 1, got {n}")
    negatives = set()
    for u, v in negative_edges:
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise InvalidInputError(f"invalid edge ({u},{v}) for K_{n}")
        negatives.add((min(u, v), max(u, v)))
    return SignedGraph.from_edges(
        n, ((u, v, -1 if (u, v) in negatives else 1) for u, v in combinations(range(n), 2))
    )


def coalescence(g1: SignedGraph, v1: int, g2: SignedGraph, v2: int) -> SignedGraph:
    """
    G1·G2: identifica v1 de G1 com v2 de G2.

    Os rótulos de G1 são mantidos; os demais vértices de G2 vêm depois, em ordem.
    """
    if not 0 <= v1 < g1.n or not 0 <= v2 < g2.n:
        raise InvalidInputError("coalescence vertex out of range")
    mapping = {}
    nxt = g1.n
    for w in range(g2.n):
        if w == v2:
            mapping[w] = v1
        else:
            mapping[w] = nxt
            nxt += 1
    edges = g1.edges() + [(mapping[u], mapping[v], s) for u, v, s in g2.edges()]
    return SignedGraph.from_edges(g1.n + g2.n - 1, edges)


def build_G_st(s: int, t: int) -> SignedGraph:  # noqa: N802
    """
    G_{s,t}: (K_{s+t}, +) mais u ligado a s e v ligado a t vértices da clique,
    com a aresta negativa {u,v}. Tem n(n-1)/2 - (n-2) arestas, n = s+t+2.
    """
    if s < 1 or t < 1:
        raise InvalidInputError(f"G_st needs s, t >= 1, got s={s}, t={t}")
    n = s + t + 2
    edges = [(0, 1, -1)]
    edges += [(0, i, 1) for i in range(2, s + 2)]
    edges += [(1, j, 1) for j in range(s + 2, n)]
    edges += [(x, y, 1) for x, y in combinations(range(2, n), 2)]
    return SignedGraph.from_edges(n, edges)


def gst_label(s: int, t: int) -> str:
    """Rótulo normalizado com s <= t (G_{s,t} ≅ G_{t,s})."""
    return f"G_{{{min(s, t)},{max(s, t)}}}"


def build_C3minus_K(n: int) -> SignedGraph:  # noqa: N802
    """C3⁻·K_{n-2}: triângulo negativo coalescido a (K_{n-2}, +) no vértice 2."""
    if n < 4:
        raise InvalidInputError(f"C3-·K needs n >= 4, got {n}")
    triangle = build_cycle(3, [-1, 1, 1])
    return coalescence(triangle, 2, complete_signed(n - 2), 0)


def build_H_na(
    n: int,
    a: int,
    variant: HnaVariant,
    closing_sign: int = 1,
    clique_negative: Iterable[tuple[int, int]] | None = None,
) -> SignedGraph:
    """
    Ḣ_{n,a} normalizado: +1 em E(P_a) e em E({u}, K_{n-a}); arestas de v conforme o tipo.

    Args:
        n: ordem
        a: ordem do caminho (a >= 2; a = 2 dá um grafo completo)
        variant: tipo 1, 2 ou 3
        closing_sign: sinal da aresta {u,v} quando a >= 3
        clique_negative: pares relativos (i, j) da clique que ficam negativos

    Raises:
        InvalidInputError: parâmetros fora da faixa ou subconjunto do tipo 3 vazio/cheio
    """
    if a < 2:
        raise InvalidInputError(f"H_na needs a >= 2, got {a}")
    if n < a + 2:
        raise InvalidInputError(f"H_na needs n >= a + 2, got n={n}, a={a}")
    if closing_sign not in (1, -1):
        raise InvalidInputError(f"closing_sign must be +1 or -1, got {closing_sign!r}")
    size = n - a
    if variant.kind == 3 and (
        len(variant.negative_attach) >= size
        or any(not 0 <= i < size for i in variant.negative_attach)
    ):
        raise InvalidInputError(f"negative_attach must be a proper subset of 0..{size - 1}")

    u, v = 0, a - 1
    edges = [(i, i + 1, 1) for i in range(a - 1)]
    if a >= 3:
        edges.append((u, v, closing_sign))
    edges += [(u, a + i, 1) for i in range(size)]
    edges += [(v, a + i, variant.attach_sign(i)) for i in range(size)]

    clique = complete_signed(size, clique_negative or ())
    edges += [(a + x, a + y, s) for x, y, s in clique.edges()]
    return SignedGraph.from_edges(n, edges)


def named_family(
    family: str,
    n: int | None = None,
    s: int | None = None,
    t: int | None = None,
    a: int | None = None,
    variant: HnaVariant | None = None,
) -> SignedGraph:
    """Despacha pelo nome da família usado na linha de comando (gst, c3k, complete, hna)."""

    def exigir(name: str, value: int | None) -> int:
        if value is None:
            raise InvalidInputError(f"family {family!r} needs parameter --{name}")
        return value

    if family == "gst":
        return build_G_st(exigir("s", s), exigir("t", t))
    if family == "c3k":
        return build_C3minus_K(exigir("n", n))
    if family == "complete":
        return complete_signed(exigir("n", n))
    if family == "hna":
        return build_H_na(exigir("n", n), exigir("a", a), variant or HnaVariant(1))
    raise InvalidInputError(f"unknown family {family!r}; choose from c3k, complete, gst, hna")
