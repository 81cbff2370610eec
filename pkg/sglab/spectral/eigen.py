"""
Autovalores por Jacobi cíclico.

Cada varredura zera os pares (p, q) acima da diagonal em ordem de linhas, com
rotações de Givens; para quando a norma fora da diagonal fica abaixo de
JACOBI_TOLERANCE relativa à norma de Frobenius. Determinístico para uma
entrada fixa.
"""

import logging
import math

import numpy as np

from sglab.config import settings
from sglab.models.models import SignedGraph
from sglab.schemas.schemas import Spectrum

logger = logging.getLogger(__name__)


def _off_norm(a: np.ndarray) -> float:
    """Norma de Frobenius da parte fora da diagonal, calculada diretamente."""
    return float(np.linalg.norm(a - np.diag(np.diag(a))))


def jacobi_eigenvalues(matrix: np.ndarray, tol: float | None = None, max_sweeps: int | None = None):
    """
    Autovalores de uma matriz simétrica real.

    Returns:
        (autovalores em ordem decrescente, norma fora da diagonal final, varreduras)
    """
    tol = settings.JACOBI_TOLERANCE if tol is None else tol
    max_sweeps = settings.JACOBI_MAX_SWEEPS if max_sweeps is None else max_sweeps
    a = np.array(matrix, dtype=np.float64, copy=True)
    n = a.shape[0]
    if a.shape != (n, n) or not np.array_equal(a, a.T):
        raise ValueError("jacobi_eigenvalues expects a square symmetric matrix")

    scale = max(1.0, float(np.linalg.norm(a)))
    threshold = tol * scale
    negligible = threshold / (2 * max(n, 1))
    sweeps = 0
    off = _off_norm(a)
    while off > threshold and sweeps < max_sweeps:
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                # abaixo de negligible a norma final já fica sob threshold
                if abs(apq) <= negligible:
                    continue
                tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                if abs(tau) > 1e150:
                    t = 0.5 / tau
                else:
                    t = math.copysign(1.0, tau) / (abs(tau) + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = a[q, p] = 0.0
        off = _off_norm(a)
    if off > threshold:
        logger.warning(f"Jacobi não convergiu em {max_sweeps} varreduras (off={off:.3e})")
    values = sorted((float(x) for x in np.diag(a)), reverse=True)
    return values, off, sweeps


def eigenvalues(g: SignedGraph) -> Spectrum:
    """Espectro completo de A(Ġ)."""
    if g.n < 1:
        raise ValueError("eigenvalues needs n >= 1")
    values, off, sweeps = jacobi_eigenvalues(g.adjacency_matrix())
    return Spectrum(
        eigenvalues=values,
        rho=max(values[0], -values[-1]),
        tolerance=off,
        sweeps=sweeps,
    )


def spectral_radius(g: SignedGraph) -> float:
    """ρ(Ġ) = max(λ1, -λn)."""
    return eigenvalues(g).rho
