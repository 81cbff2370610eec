"""
Testes do modelo de grafo sinalizado, switching, frustração e isomorfismo.
"""

from itertools import product

import pytest

from sglab.constructions.families import build_C3minus_K, build_G_st, complete_signed
from sglab.core.exceptions import ExactLimitExceeded, InvalidInputError
from sglab.core.frustration import frustration_index
from sglab.core.isomorphism import switching_isomorphic
from sglab.core.switching import (
    bfs_forest,
    cycle_sign,
    is_balanced,
    negate,
    negative_triangle_counts,
    switch,
    switching_equivalent,
    tree_canonical_form,
)
from sglab.cycles.search import iter_cycles
from sglab.models.models import BalanceWitness, Cycle, SignedGraph, VertexSet


def _naive_balanced(g: SignedGraph) -> bool:
    return all(
        cycle_sign(g, c) == 1 for length in range(3, g.n + 1) for c in iter_cycles(g, length)
    )


def _naive_frustration(g: SignedGraph) -> int:
    """Mínimo sobre todos os potenciais ±1 (o vértice 0 fixo em +1)."""
    edges = g.edges()
    best = len(edges)
    for tail in product((1, -1), repeat=max(g.n - 1, 0)):
        pot = (1, *tail)
        best = min(best, sum(1 for u, v, s in edges if s * pot[u] * pot[v] == -1))
    return best


class TestSignedGraph:
    """Testes do tipo SignedGraph."""

    def test_from_edges_counts(self, k4_one_negative: SignedGraph):
        """Contagens e sinais de K4 com uma aresta negativa."""
        assert k4_one_negative.n == 4
        assert k4_one_negative.edge_count == 6
        assert k4_one_negative.negative_edge_count == 1
        assert k4_one_negative.negative_edges() == [(0, 1)]
        assert k4_one_negative.sign(1, 0) == -1
        assert k4_one_negative.sign(2, 3) == 1

    def test_duplicate_edge_rejected(self):
        """Aresta repetida em qualquer ordem é rejeitada."""
        with pytest.raises(InvalidInputError):
            SignedGraph.from_edges(3, [(0, 1, 1), (1, 0, -1)])

    def test_self_loop_rejected(self):
        """Laço é rejeitado."""
        with pytest.raises(InvalidInputError):
            SignedGraph.from_edges(3, [(1, 1, 1)])

    def test_invalid_sign_rejected(self):
        """Sinal fora de ±1 é rejeitado."""
        with pytest.raises(InvalidInputError):
            SignedGraph.from_edges(3, [(0, 1, 0)])

    def test_asymmetric_masks_rejected(self):
        """Máscaras de adjacência assimétricas são rejeitadas."""
        with pytest.raises(InvalidInputError):
            SignedGraph(2, (0b10, 0), (0, 0))

    def test_edges_sorted(self, triangle_negative: SignedGraph):
        """edges() sai em ordem lexicográfica."""
        assert triangle_negative.edges() == [(0, 1, -1), (0, 2, 1), (1, 2, 1)]

    def test_components(self):
        """Vértice isolado conta como componente."""
        g = SignedGraph.from_edges(5, [(0, 1, 1), (3, 4, -1)])
        assert len(g.components()) == 3
        assert not g.is_connected()

    def test_edge_updates_are_persistent(self, triangle_negative: SignedGraph):
        """with_sign/without_edge devolvem cópias e não alteram o original."""
        g = triangle_negative.with_sign(0, 1, 1)
        assert g.sign(0, 1) == 1
        assert triangle_negative.sign(0, 1) == -1
        assert g.without_edge(0, 1).edge_count == 2
        with pytest.raises(InvalidInputError):
            g.with_edge(0, 1, 1)

    def test_relabel_and_induced(self, k4_one_negative: SignedGraph):
        """Reindexação e subgrafo induzido preservam sinais."""
        g = k4_one_negative.relabel([3, 2, 1, 0])
        assert g.sign(3, 2) == -1
        sub = k4_one_negative.induced([0, 1, 2])
        assert sub.edge_count == 3
        assert sub.sign(0, 1) == -1

    def test_networkx_round_trip_keeps_signs(self, c3k10: SignedGraph):
        """Conversão para networkx e de volta mantém o grafo."""
        assert SignedGraph.from_networkx(c3k10.to_networkx()) == c3k10

    def test_adjacency_matrix(self, triangle_negative: SignedGraph):
        """A matriz de adjacência é simétrica com entradas ±1."""
        a = triangle_negative.adjacency_matrix()
        assert a[0, 1] == a[1, 0] == -1
        assert a[0, 2] == 1
        assert (a == a.T).all()


class TestCycleAndWitness:
    """Testes de Cycle, VertexSet e BalanceWitness."""

    def test_canonical_rotation(self):
        """A forma canônica começa no menor vértice."""
        assert Cycle((3, 1, 2)).canonical().vertices == (1, 2, 3)

    def test_canonical_direction(self):
        """A forma canônica escolhe o sentido com segundo vértice menor."""
        assert Cycle((2, 0, 3, 1)).canonical().vertices == (0, 2, 1, 3)

    def test_cycle_needs_three_distinct_vertices(self):
        """Ciclo com menos de três vértices distintos é rejeitado."""
        with pytest.raises(InvalidInputError):
            Cycle((0, 1))
        with pytest.raises(InvalidInputError):
            Cycle((0, 1, 0))

    def test_vertex_set(self):
        """Pertinência, tamanho, iteração e limite de VertexSet."""
        u = VertexSet.of([0, 3])
        assert 3 in u and 1 not in u
        assert len(u) == 2
        assert list(u) == [0, 3]
        assert u.fits(4) and not u.fits(3)

    def test_balance_witness_needs_exactly_one(self):
        """A testemunha tem potenciais ou ciclo, nunca ambos nem nenhum."""
        with pytest.raises(InvalidInputError):
            BalanceWitness()
        with pytest.raises(InvalidInputError):
            BalanceWitness(potentials=(1,), cycle=Cycle((0, 1, 2)))


class TestSwitching:
    """Testes de switching, sinal de ciclos e equilíbrio."""

    def test_switch_is_involution(self, c3k10: SignedGraph):
        """Aplicar o mesmo switching duas vezes volta ao grafo original."""
        assert switch(switch(c3k10, [0, 4, 7]), [0, 4, 7]) == c3k10

    def test_switch_flips_cut_edges(self, k4_one_negative: SignedGraph):
        """Só as arestas do corte trocam de sinal."""
        g = switch(k4_one_negative, VertexSet.of([0]))
        assert g.sign(0, 1) == 1
        assert g.sign(0, 2) == -1
        assert g.sign(1, 2) == 1

    def test_switch_rejects_out_of_range(self, triangle_negative: SignedGraph):
        """Vértice fora do grafo é rejeitado."""
        with pytest.raises(InvalidInputError):
            switch(triangle_negative, [5])

    def test_cycle_sign_invariant_under_switching(self, square_unbalanced: SignedGraph):
        """O sinal de um ciclo não muda com switching."""
        assert cycle_sign(square_unbalanced, (0, 1, 2, 3)) == -1
        assert cycle_sign(switch(square_unbalanced, [1, 2]), (0, 1, 2, 3)) == -1

    def test_cycle_sign_requires_edges(self, square_unbalanced: SignedGraph):
        """Sequência que não é ciclo do grafo é rejeitada."""
        with pytest.raises(InvalidInputError):
            cycle_sign(square_unbalanced, (0, 1, 3))

    def test_is_balanced_with_potentials(self):
        """Grafo equilibrado devolve potenciais que tornam toda aresta positiva."""
        g = switch(complete_signed(5), [1, 3])
        balanced, witness = is_balanced(g)
        assert balanced
        pot = witness.potentials
        assert all(s * pot[u] * pot[v] == 1 for u, v, s in g.edges())

    def test_is_balanced_with_negative_cycle(self, c3k10: SignedGraph):
        """Grafo desequilibrado devolve um ciclo negativo."""
        balanced, witness = is_balanced(c3k10)
        assert not balanced
        assert witness.cycle is not None
        assert cycle_sign(c3k10, witness.cycle) == -1

    def test_is_balanced_matches_cycle_enumeration(self, rng, random_signed_graph):
        """Equilíbrio concorda com a enumeração de todos os ciclos para n ≤ 7."""
        for _ in range(80):
            n = int(rng.integers(3, 8))
            g = random_signed_graph(rng, n, float(rng.uniform(0.3, 1.0)))
            balanced, witness = is_balanced(g)
            assert balanced == _naive_balanced(g)
            if not balanced:
                assert cycle_sign(g, witness.cycle) == -1

    def test_negate(self, triangle_negative: SignedGraph):
        """Negar troca o sinal de ciclos ímpares."""
        assert is_balanced(negate(triangle_negative))[0]
        assert not is_balanced(negate(complete_signed(3)))[0]

    def test_bfs_forest_spans(self, c3k10: SignedGraph):
        """A floresta BFS de um grafo conexo tem n - 1 arestas."""
        forest = bfs_forest(c3k10)
        assert len(forest) == c3k10.n - 1
        assert all(u < v for u, v in forest)

    def test_tree_canonical_form_is_positive_on_forest(self, c3k10: SignedGraph):
        """A forma canônica deixa a floresta toda positiva."""
        canonical, forest = tree_canonical_form(switch(c3k10, [2, 5, 9]))
        assert all(canonical.sign(u, v) == 1 for u, v in forest)

    def test_tree_canonical_form_is_class_invariant(self, c3k10: SignedGraph):
        """Grafos da mesma classe de switching têm a mesma forma canônica."""
        left, _ = tree_canonical_form(c3k10)
        right, _ = tree_canonical_form(switch(c3k10, [1, 3, 4, 8]))
        assert left == right
        assert left.negative_edge_count == 1

    def test_tree_canonical_form_with_prescribed_signs(self, square_unbalanced: SignedGraph):
        """Sinais prescritos na floresta são respeitados."""
        forest = [(0, 1), (1, 2), (2, 3)]
        canonical, used = tree_canonical_form(square_unbalanced, forest, {(0, 1): -1})
        assert used == ((0, 1), (1, 2), (2, 3))
        assert canonical.sign(0, 1) == -1
        assert canonical.sign(1, 2) == canonical.sign(2, 3) == 1
        assert canonical.sign(0, 3) == 1

    def test_tree_canonical_form_rejects_bad_forest(self, square_unbalanced: SignedGraph):
        """Floresta que não gera ou sinal fora dela é rejeitado."""
        with pytest.raises(InvalidInputError):
            tree_canonical_form(square_unbalanced, [(0, 1), (1, 2)])
        with pytest.raises(InvalidInputError):
            tree_canonical_form(square_unbalanced, bfs_forest(square_unbalanced), {(0, 2): 1})

    def test_switching_equivalent(self, k4_one_negative: SignedGraph):
        """Equivalência por switching no mesmo grafo subjacente."""
        assert switching_equivalent(k4_one_negative, switch(k4_one_negative, [2]))
        assert not switching_equivalent(k4_one_negative, complete_signed(4))

    def test_switching_equivalent_needs_same_underlying(self, k4_one_negative: SignedGraph):
        """Grafos subjacentes diferentes são erro de entrada."""
        with pytest.raises(InvalidInputError):
            switching_equivalent(k4_one_negative, k4_one_negative.without_edge(2, 3))

    def test_negative_triangle_counts(self, k4_one_negative: SignedGraph):
        """Triângulos negativos por vértice."""
        assert negative_triangle_counts(k4_one_negative) == (2, 2, 1, 1)


class TestFrustration:
    """Testes do índice de frustração exato."""

    def test_balanced_is_zero(self):
        """Grafo equilibrado tem frustração zero."""
        assert frustration_index(switch(complete_signed(6), [0, 2])) == 0

    def test_single_negative_cycle(self, c3k10: SignedGraph, square_unbalanced: SignedGraph):
        """Basta remover uma aresta de C3⁻·K8 e de C4⁻."""
        assert frustration_index(c3k10) == 1
        assert frustration_index(square_unbalanced) == 1

    def test_all_negative_k4(self):
        """-K4 precisa perder 2 arestas (corte máximo de K4 tem 4)."""
        assert frustration_index(negate(complete_signed(4))) == 2

    def test_disconnected_sums_components(self, triangle_negative: SignedGraph):
        """Em grafo desconexo a frustração soma as componentes."""
        g = SignedGraph.from_edges(
            6, triangle_negative.edges() + [(u + 3, v + 3, s) for u, v, s in triangle_negative.edges()]
        )
        assert frustration_index(g) == 2

    def test_limit(self, c3k10: SignedGraph):
        """Acima do limite a função recusa em vez de estimar."""
        with pytest.raises(ExactLimitExceeded, match="no approximation"):
            frustration_index(c3k10, limit=5)

    def test_matches_all_potentials(self, rng, random_signed_graph):
        """Igual ao mínimo sobre todos os potenciais, zero sse equilibrado."""
        for _ in range(60):
            n = int(rng.integers(2, 9))
            g = random_signed_graph(rng, n, float(rng.uniform(0.2, 1.0)))
            value = frustration_index(g)
            assert value == _naive_frustration(g)
            assert (value == 0) == is_balanced(g)[0]

    def test_switching_invariant(self, rng, random_signed_graph):
        """Switching não altera a frustração."""
        for _ in range(40):
            n = int(rng.integers(3, 9))
            g = random_signed_graph(rng, n, 0.7)
            u_set = [v for v in range(n) if rng.random() < 0.5]
            assert frustration_index(switch(g, u_set)) == frustration_index(g)


class TestSwitchingIsomorphism:
    """Testes de isomorfismo a menos de switching."""

    def test_relabel_and_switch(self):
        """Reindexar e aplicar switching preserva a classe."""
        g = build_G_st(1, 3)
        h = switch(g.relabel([5, 4, 3, 2, 1, 0]), [1, 4])
        assert switching_isomorphic(g, h)

    def test_distinct_extremal_classes(self):
        """G_{1,3} e G_{2,2} são classes distintas."""
        assert not switching_isomorphic(build_G_st(1, 3), build_G_st(2, 2))

    def test_symmetric_family_label(self):
        """G_{s,t} e G_{t,s} são a mesma classe."""
        assert switching_isomorphic(build_G_st(1, 2), build_G_st(2, 1))

    def test_same_underlying_different_class(self):
        """K4 e K4 com uma aresta negativa não são switching-isomorfos."""
        assert not switching_isomorphic(complete_signed(4), complete_signed(4, [(0, 1)]))

    def test_c3k_not_gst(self):
        """C3⁻·K4 não é G_{1,3}."""
        assert not switching_isomorphic(build_C3minus_K(6), build_G_st(1, 3))
