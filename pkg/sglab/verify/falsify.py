"""
Busca de falsificação para as cotas de arestas e de ρ sem C_{2k+1}⁻.

Hill-climbing com reinícios sobre grafos sinalizados desequilibrados e sem
ciclo negativo de comprimento 2k+1 (desconexos permitidos). O objetivo é
lexicográfico: número de arestas e, em empate, ρ. O estado fica sempre na forma
canônica por floresta.

Um relatório "fail" só sai dentro da faixa de k dos enunciados: mais de
n(n-1)/2 - 2(n-3) arestas com 3 <= k <= n/10 - 1, ou ρ acima de ρ(C3⁻·K_{n-2})
com 3 <= k <= (n-11)/10. Fora dela o excesso é relatado numa nota.
"""

import logging
import time
from dataclasses import dataclass, field
from typing import Literal

import numpy as np
from tqdm import tqdm

from sglab.config import settings
from sglab.constructions.families import build_C3minus_K, build_cycle
from sglab.core.exceptions import InvalidInputError
from sglab.core.switching import is_balanced, tree_canonical_form
from sglab.cycles.search import is_Cl_minus_free
from sglab.models.models import SignedGraph
from sglab.schemas.schemas import Counters, TheoremReport, Witness
from sglab.spectral.eigen import spectral_radius
from sglab.utils.sgformat import format_sg
from sglab.worker import progress_enabled

logger = logging.getLogger(__name__)

Initial = Literal["random", "extremal"]

ADD_PROB = 0.6
DELETE_PROB = 0.2


def _rho_guia(g: SignedGraph) -> float:
    """ρ via LAPACK; só orienta a busca, os valores relatados vêm de spectral_radius."""
    if g.n == 0:
        return 0.0
    values = np.linalg.eigvalsh(g.adjacency_matrix().astype(np.float64))
    return float(max(values[-1], -values[0]))


@dataclass(slots=True)
class SearchState:
    """Estado de um reinício: grafo canônico atual, objetivo, semente e passos restantes."""

    current: SignedGraph
    objective: int
    rng_seed: int
    budget: int
    rho: float = 0.0
    forest: frozenset[tuple[int, int]] = field(default_factory=frozenset)
    best: SignedGraph | None = None
    best_rho: float = 0.0
    max_rho: float = 0.0
    max_rho_graph: SignedGraph | None = None
    accepted: int = 0
    improving: int = 0

    @classmethod
    def start(cls, g: SignedGraph, rng_seed: int, budget: int) -> "SearchState":
        canonical, forest = tree_canonical_form(g)
        rho = _rho_guia(canonical)
        return cls(
            canonical,
            canonical.edge_count,
            rng_seed,
            budget,
            rho,
            frozenset(forest),
            best=canonical,
            best_rho=rho,
            max_rho=rho,
            max_rho_graph=canonical,
        )

    def key(self) -> tuple[int, float]:
        return self.objective, self.rho

    def move_to(self, g: SignedGraph, rho: float | None = None) -> None:
        canonical, forest = tree_canonical_form(g)
        self.current = canonical
        self.forest = frozenset(forest)
        self.objective = canonical.edge_count
        self.rho = _rho_guia(canonical) if rho is None else rho
        self.accepted += 1
        assert self.best is not None
        if self.objective > self.best.edge_count:
            self.improving += 1
        tol = settings.RHO_TOLERANCE
        if self.objective > self.best.edge_count or (
            self.objective == self.best.edge_count and self.rho > self.best_rho + tol
        ):
            self.best, self.best_rho = canonical, self.rho
        if self.rho > self.max_rho + tol:
            self.max_rho, self.max_rho_graph = self.rho, canonical


def edge_bound(n: int) -> int:
    """n(n-1)/2 - 2(n-3)."""
    return n * (n - 1) // 2 - 2 * (n - 3)


def k_range_flags(n: int, k: int) -> dict[str, bool]:
    """Faixas de k em que as cotas de arestas e de ρ são afirmadas."""
    return {
        "edge_bound_range": k >= 3 and 10 * k <= n - 10,
        "spectral_range": k >= 3 and 10 * k <= n - 11,
    }


def random_initial_state(rng: np.random.Generator, n: int) -> SignedGraph:
    """Um 4-ciclo desequilibrado (uma aresta negativa) em quatro vértices sorteados; o resto isolado."""
    vertices = [int(v) for v in rng.choice(n, size=4, replace=False)]
    square = build_cycle(4, [-1, 1, 1, 1])
    edges = [(vertices[u], vertices[v], s) for u, v, s in square.edges()]
    return SignedGraph.from_edges(n, edges)


def _admissible(g: SignedGraph, length: int, check_balance: bool, check_free: bool) -> bool:
    if check_balance and is_balanced(g)[0]:
        return False
    return not check_free or is_Cl_minus_free(g, length)


def _step(state: SearchState, rng: np.random.Generator, length: int) -> None:
    """
    Um passo: sorteia um par de vértices e um tipo de movimento; movimentos
    inválidos são rejeitados. Uma troca de sinal só é aceita se não baixa ρ.
    """
    g = state.current
    n = g.n
    u, v = sorted(int(x) for x in rng.choice(n, size=2, replace=False))
    r = rng.random()
    if r < ADD_PROB:
        if g.has_edge(u, v):
            return
        # acrescentar aresta não desfaz o desequilíbrio
        candidate = g.with_edge(u, v, 1 if rng.random() < 0.5 else -1)
        if _admissible(candidate, length, check_balance=False, check_free=True):
            state.move_to(candidate)
    elif r < ADD_PROB + DELETE_PROB:
        if not g.has_edge(u, v) or rng.random() >= settings.SEARCH_DOWNHILL_PROB:
            return
        # remover aresta não cria ciclo negativo
        candidate = g.without_edge(u, v)
        if _admissible(candidate, length, check_balance=True, check_free=False):
            state.move_to(candidate)
    else:
        if not g.has_edge(u, v) or (u, v) in state.forest:
            return
        candidate = g.with_sign(u, v, -g.sign(u, v))
        rho = _rho_guia(candidate)
        if rho < state.rho - settings.RHO_TOLERANCE:
            return
        if _admissible(candidate, length, check_balance=True, check_free=True):
            state.move_to(candidate, rho)


def _run_restart(state: SearchState, length: int) -> SearchState:
    rng = np.random.default_rng(state.rng_seed)
    for _ in range(state.budget):
        _step(state, rng, length)
    return state


def falsify_search(
    n: int,
    k: int,
    budget: int,
    seed: int = 0,
    restarts: int | None = None,
    initial: Initial = "random",
) -> TheoremReport:
    """
    Procura um grafo desequilibrado sem C_{2k+1}⁻ com mais arestas que a cota
    ou com ρ acima do da construção extremal.

    O orçamento total de passos é dividido igualmente entre os reinícios; cada
    reinício tem semente própria derivada de `seed`, então o relatório é
    determinístico.

    Args:
        n: ordem
        k: comprimento proibido 2k+1
        budget: total de passos
        seed: semente
        restarts: número de reinícios (padrão SEARCH_RESTARTS)
        initial: "random" (4-ciclo desequilibrado) ou "extremal" (C3⁻·K_{n-2})

    Raises:
        InvalidInputError: budget negativo, restarts < 1 ou initial desconhecido
    """
    restarts = settings.SEARCH_RESTARTS if restarts is None else restarts
    if budget < 0:
        raise InvalidInputError(f"budget must be >= 0, got {budget}")
    if restarts < 1:
        raise InvalidInputError(f"restarts must be >= 1, got {restarts}")
    if initial not in ("random", "extremal"):
        raise InvalidInputError(f"initial must be 'random' or 'extremal', got {initial!r}")

    params = {"n": n, "k": k, "budget": budget, "seed": seed, "restarts": restarts, "initial": initial}
    length = 2 * k + 1
    if n < 4 or k < 1 or length > n:
        return TheoremReport(
            claim="thm-1.3-search",
            params=params,
            status="infeasible",
            notes=["needs n >= 4 and 3 <= 2k+1 <= n"],
        )
    extremal = build_C3minus_K(n)
    if initial == "extremal" and not _admissible(extremal, length, check_balance=True, check_free=True):
        return TheoremReport(
            claim="thm-1.3-search",
            params=params,
            status="infeasible",
            notes=[f"C3-·K_{{n-2}} contains a negative {length}-cycle; it is not an admissible start"],
        )

    started = time.perf_counter()
    bound = edge_bound(n)
    flags = k_range_flags(n, k)
    extremal_rho = spectral_radius(extremal)
    children = np.random.SeedSequence(seed).spawn(restarts)
    share, extra = divmod(budget, restarts)

    states: list[SearchState] = []
    for i, child in enumerate(tqdm(children, desc=f"search n={n} k={k}", disable=not progress_enabled())):
        child_seed = int(child.generate_state(1)[0])
        start = extremal if initial == "extremal" else random_initial_state(np.random.default_rng(child), n)
        state = SearchState.start(start, child_seed, share + (1 if i < extra else 0))
        states.append(_run_restart(state, length))
        logger.debug(
            f"[Search] restart {i}: best={state.best.edge_count if state.best else None} "
            f"accepted={state.accepted} improving={state.improving}"
        )

    per_restart = []
    for state in states:
        assert state.best is not None
        per_restart.append((state.best.edge_count, spectral_radius(state.best), state.best))
    best_e, best_rho, best_g = max(per_restart, key=lambda item: (item[0], item[1]))
    top = max(states, key=lambda s: s.max_rho)
    assert top.max_rho_graph is not None
    max_rho = spectral_radius(top.max_rho_graph)
    improving = sum(s.improving for s in states)
    edges_exceeded = best_e > bound
    rho_exceeded = max_rho > extremal_rho + settings.RHO_TOLERANCE
    contradiction = (edges_exceeded and flags["edge_bound_range"]) or (
        rho_exceeded and flags["spectral_range"]
    )

    witnesses = [
        Witness(
            kind="graph",
            label="best state",
            sg=format_sg(best_g),
            data={"n": n, "edges": best_e, "rho": best_rho},
        )
    ]
    if rho_exceeded:
        witnesses.append(
            Witness(
                kind="graph",
                label="max rho state",
                sg=format_sg(top.max_rho_graph),
                data={"n": n, "edges": top.max_rho_graph.edge_count, "rho": max_rho},
            )
        )
    notes = ["budgeted falsification: a pass is evidence, not a proof"]
    if initial == "extremal":
        notes.append("started from C3-·K_{n-2}; improving_moves counts moves above it")
    if not flags["edge_bound_range"]:
        notes.append("outside stated hypothesis: 3 <= k <= n/10 - 1 (edge bound not claimed)")
        if edges_exceeded:
            notes.append(f"edge count {best_e} exceeds {bound} outside the hypothesis")
    if not flags["spectral_range"]:
        notes.append("outside stated hypothesis: 3 <= k <= (n-11)/10 (rho bound not claimed)")
        if rho_exceeded:
            notes.append(
                f"rho {max_rho:.12g} exceeds the construction's {extremal_rho:.12g} outside the hypothesis"
            )
    report = TheoremReport(
        claim="thm-1.3-search",
        params=params,
        status="fail" if contradiction else "pass",
        expected={"max_edges": bound, "max_rho": extremal_rho},
        observed={
            "best_edges": best_e,
            "best_rho": best_rho,
            "max_rho": max_rho,
            "edges_exceed_bound": edges_exceeded,
            "rho_exceeds_extremal": rho_exceeded,
            "improving_moves": improving,
            "accepted_moves": sum(s.accepted for s in states),
            "per_restart_best": [e for e, _, _ in per_restart],
            **flags,
        },
        witnesses=witnesses,
        counters=Counters(graphs=restarts, classes=sum(s.accepted for s in states) + restarts),
        notes=notes,
    )
    report.counters.seconds = round(time.perf_counter() - started, 6)
    logger.info(
        f"[Search] n={n} k={k}: best={best_e} bound={bound} max_rho={max_rho:.6g} "
        f"improving={improving} -> {report.status}"
    )
    return report
