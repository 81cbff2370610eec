"""
Fixtures compartilhados para testes.
"""

import os
from collections.abc import Callable

import numpy as np
import pytest

# Set test environment variables BEFORE importing the package
os.environ["SGLAB_JOBS"] = "1"
os.environ["SGLAB_PROGRESS"] = "false"
os.environ["SGLAB_LOG_LEVEL"] = "WARNING"

from sglab.constructions.families import build_C3minus_K, build_cycle, build_G_st, complete_signed
from sglab.models.models import SignedGraph


@pytest.fixture
def triangle_negative() -> SignedGraph:
    """Triângulo com uma aresta negativa (C3⁻)."""
    return build_cycle(3, [-1, 1, 1])


@pytest.fixture
def square_unbalanced() -> SignedGraph:
    """4-ciclo com uma aresta negativa."""
    return build_cycle(4, [-1, 1, 1, 1])


@pytest.fixture
def k4_one_negative() -> SignedGraph:
    return complete_signed(4, [(0, 1)])


@pytest.fixture
def c3k10() -> SignedGraph:
    return build_C3minus_K(10)


@pytest.fixture
def g13() -> SignedGraph:
    return build_G_st(1, 3)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240611)


@pytest.fixture
def random_signed_graph() -> Callable[[np.random.Generator, int, float], SignedGraph]:
    """Fábrica de grafos sinalizados aleatórios G(n, p) com sinais uniformes."""

    def factory(rng: np.random.Generator, n: int, p: float = 0.5) -> SignedGraph:
        edges = []
        for u in range(n):
            for v in range(u + 1, n):
                if rng.random() < p:
                    edges.append((u, v, 1 if rng.random() < 0.5 else -1))
        return SignedGraph.from_edges(n, edges)

    return factory
