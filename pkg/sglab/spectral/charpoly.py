"""
Polinômio característico exato.

Recorrência de traços de Faddeev–LeVerrier sobre inteiros do Python:
    M_0 = 0, c_n = 1
    M_k = A·M_{k-1} + c_{n-k+1}·I
    c_{n-k} = -tr(A·M_k) / k
Todas as divisões são exatas para matrizes inteiras; uma divisão com resto é erro.
"""

import numpy as np

from sglab.config import settings
from sglab.core.exceptions import ExactLimitExceeded, InvalidInputError
from sglab.models.models import SignedGraph
from sglab.schemas.schemas import CharPoly


def poly_times(a: list[int], b: list[int]) -> list[int]:
    """Produto de polinômios com coeficientes em ordem crescente de grau."""
    res = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            res[i + j] += x * y
    return res


def poly_power(a: list[int], k: int) -> list[int]:
    res = [1]
    for _ in range(k):
        res = poly_times(res, a)
    return res


def char_poly(g: SignedGraph, limit: int | None = None) -> CharPoly:
    """
    Coeficientes exatos de det(xI - A(Ġ)).

    Raises:
        ExactLimitExceeded: n acima de CHARPOLY_LIMIT
    """
    limit = settings.CHARPOLY_LIMIT if limit is None else limit
    if g.n > limit:
        raise ExactLimitExceeded("char_poly", g.n, limit)
    n = g.n
    a = g.adjacency_matrix().astype(object)
    identity = np.identity(n, dtype=np.int64).astype(object)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    m = np.zeros((n, n), dtype=np.int64).astype(object)
    for k in range(1, n + 1):
        m = a.dot(m) + coeffs[n - k + 1] * identity
        trace = int(np.trace(a.dot(m)))
        if trace % k:
            raise ArithmeticError(f"Faddeev-LeVerrier: inexact division at step {k}")
        coeffs[n - k] = -trace // k
    return CharPoly(coeffs=[int(c) for c in coeffs])


def cubic_factor_C3K(n: int) -> CharPoly:  # noqa: N802
    """x³ - (n-5)x² - (2n-5)x + n - 5."""
    if n < 4:
        raise InvalidInputError(f"cubic factor needs n >= 4, got {n}")
    return CharPoly(coeffs=[n - 5, -(2 * n - 5), -(n - 5), 1])


def char_poly_C3K(n: int) -> CharPoly:  # noqa: N802
    """Forma fechada (x+1)^{n-4}(x-1)(x³ - (n-5)x² - (2n-5)x + n - 5), expandida."""
    if n < 4:
        raise InvalidInputError(f"char_poly_C3K needs n >= 4, got {n}")
    coeffs = poly_times(poly_power([1, 1], n - 4), [-1, 1])
    coeffs = poly_times(coeffs, cubic_factor_C3K(n).coeffs)
    return CharPoly(coeffs=coeffs)
