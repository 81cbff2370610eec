"""
Cotas espectrais e extremais.

    hong:   ρ(G) <= sqrt(2e - n + 1), G conexo
    stanic: λ1(Ġ) <= sqrt(2(e - l) - n + 1), Ġ conexo, l = índice de frustração
    wyq:    λ1(Ġ) <= (1 - 1/ω_b)·n
    wyq sem sinal: λ1(G) <= (1 - 1/ω)·n
    turan:  e > (1 - 1/r)·n²/2  implica  K_{r+1} ⊆ G
"""

import math

from sglab.config import settings
from sglab.core.exceptions import InvalidInputError
from sglab.core.frustration import frustration_index
from sglab.models.models import SignedGraph
from sglab.schemas.schemas import BoundReport
from sglab.spectral.cliques import balanced_clique_number, clique_number
from sglab.spectral.eigen import eigenvalues, spectral_radius


def _relatorio(name: str, value: float, quantity: float, slack: float, **details) -> BoundReport:
    return BoundReport(
        name=name,
        value=value,
        quantity=quantity,
        slack=slack,
        satisfied=slack >= -settings.BOUND_TOLERANCE,
        details=details,
    )


def _exigir_conexo(g: SignedGraph, bound: str) -> None:
    if g.n < 1 or not g.is_connected():
        raise InvalidInputError(f"{bound} bound requires a connected graph")


def hong_bound(g: SignedGraph) -> BoundReport:
    """sqrt(2e - n + 1) contra ρ do grafo subjacente todo positivo."""
    _exigir_conexo(g, "hong")
    e = g.edge_count
    value = math.sqrt(2 * e - g.n + 1)
    rho = spectral_radius(g.underlying())
    return _relatorio("hong", value, rho, value - rho, n=g.n, e=e)


def stanic_bound(g: SignedGraph) -> BoundReport:
    """sqrt(2(e - l) - n + 1) contra λ1(Ġ); l exato (pode levantar ExactLimitExceeded)."""
    _exigir_conexo(g, "stanic")
    e = g.edge_count
    l = frustration_index(g)  # noqa: E741
    value = math.sqrt(2 * (e - l) - g.n + 1)
    lambda1 = eigenvalues(g).lambda_1
    return _relatorio("stanic", value, lambda1, value - lambda1, n=g.n, e=e, l=l)


def wyq_bound(g: SignedGraph, unsigned: bool = False) -> BoundReport:
    """
    (1 - 1/ω_b)·n contra λ1(Ġ); com unsigned=True, (1 - 1/ω)·n contra λ1 do subjacente.
    """
    if g.n < 1:
        raise InvalidInputError("wyq bound requires n >= 1")
    if unsigned:
        base = g.underlying()
        omega = clique_number(base)
        name = "wyq_unsigned"
    else:
        base = g
        omega = balanced_clique_number(g)
        name = "wyq"
    value = (1 - 1 / omega) * g.n
    lambda1 = eigenvalues(base).lambda_1
    return _relatorio(name, value, lambda1, value - lambda1, n=g.n, omega=omega)


def turan_clique_guarantee(n: int, e: int) -> int:
    """
    Maior r+1 com e > (1 - 1/r)·n²/2, ou 1 se nenhum r >= 1 serve.

    A comparação é feita em inteiros: 2·r·e > (r-1)·n².
    """
    if n < 0 or not 0 <= e <= n * (n - 1) // 2:
        raise InvalidInputError(f"edge count {e} out of range for n={n}")
    if e == 0:
        return 1
    r = 1
    while 2 * (r + 1) * e > r * n * n:
        r += 1
    return r + 1


def turan_bound(g: SignedGraph) -> BoundReport:
    """Compara ω(G) com a ordem de clique garantida por Turán."""
    guarantee = turan_clique_guarantee(g.n, g.edge_count)
    omega = clique_number(g)
    return _relatorio("turan", guarantee, omega, omega - guarantee, n=g.n, e=g.edge_count)


def stanic_edge_requirement(lambda1: float, n: int, l: int) -> float:  # noqa: E741
    """Menor número de arestas compatível com a cota de Stanić: (λ1² + n - 1)/2 + l."""
    return (lambda1 * lambda1 + n - 1) / 2 + l


def all_bounds(g: SignedGraph) -> list[BoundReport]:
    """Todas as cotas aplicáveis a Ġ; hong e stanic só para grafos conexos."""
    reports = []
    if g.n >= 1 and g.is_connected():
        reports += [hong_bound(g), stanic_bound(g)]
    if g.n >= 1:
        reports += [wyq_bound(g), wyq_bound(g, unsigned=True)]
    reports.append(turan_bound(g))
    return reports
