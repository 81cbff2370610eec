"""
Testes da enumeração, do worker e das verificações dos teoremas e lemas.
"""

import itertools
import json
import math

import pytest

from sglab.constructions.families import build_C3minus_K, build_cycle, build_path, complete_signed
from sglab.core.exceptions import InvalidInputError
from sglab.core.switching import bfs_forest, is_balanced, switching_equivalent
from sglab.cycles.search import is_Cl_minus_free
from sglab.models.models import SignedGraph
from sglab.schemas.schemas import CLAIM_IDS
from sglab.spectral.eigen import spectral_radius
from sglab.utils.sgformat import parse_sg
from sglab.verify import falsify
from sglab.verify.claims import (
    hna_k_range,
    verify_bounds_random,
    verify_charpoly,
    verify_claim,
    verify_construction_C2k1,
    verify_construction_spectral,
    verify_dense_negative_girth,
    verify_lemma_Hna,
    verify_lemma_unbalanced_complete,
    verify_spectral_C3,
    verify_turan_C3,
)
from sglab.verify.enumeration import (
    SignClassIterator,
    enumerate_sign_classes,
    enumerate_underlying_graphs,
)
from sglab.verify.falsify import SearchState, edge_bound, falsify_search, k_range_flags
from sglab.worker import job_negative_cycles, job_turan_C3, make_sweep_tasks, run_tasks


def _square_in(n: int) -> SignedGraph:
    """C4⁻ nos vértices 0..3, o resto isolado."""
    return SignedGraph.from_edges(n, build_cycle(4, [-1, 1, 1, 1]).edges())


class TestSignClasses:
    """Um representante por classe de switching."""

    def test_class_count(self, c3k10: SignedGraph):
        """2^(e - n + c) classes."""
        assert len(enumerate_sign_classes(complete_signed(4))) == 8
        assert len(SignClassIterator(c3k10)) == 2 ** (31 - 10 + 1)

    def test_class_count_disconnected(self, triangle_negative: SignedGraph):
        """Cada componente contribui com seu próprio número ciclomático."""
        two = SignedGraph.from_edges(
            6, triangle_negative.edges() + [(u + 3, v + 3, s) for u, v, s in triangle_negative.edges()]
        )
        assert len(SignClassIterator(two)) == 4
        assert sum(1 for _ in SignClassIterator(two)) == 4

    def test_representatives_positive_on_forest(self):
        """Todo representante é positivo na floresta BFS."""
        classes = SignClassIterator(complete_signed(5))
        forest = bfs_forest(complete_signed(5))
        for g in classes:
            assert all(g.sign(u, v) == 1 for u, v in forest)

    def test_representatives_pairwise_distinct(self):
        """Representantes distintos não são switching-equivalentes."""
        reps = list(SignClassIterator(complete_signed(5)))
        assert len(reps) == 64
        for g, h in itertools.combinations(reps, 2):
            assert not switching_equivalent(g, h)

    def test_index_zero_is_balanced(self, c3k10: SignedGraph):
        """O índice 0 é a classe toda positiva."""
        assert SignClassIterator(c3k10).graph_at(0).negative_edge_count == 0

    def test_input_signs_ignored(self, c3k10: SignedGraph):
        """Só o grafo subjacente da entrada importa."""
        assert SignClassIterator(c3k10).graph_at(5) == SignClassIterator(c3k10.underlying()).graph_at(5)

    def test_index_out_of_range(self):
        """Índice fora da faixa é rejeitado."""
        with pytest.raises(InvalidInputError):
            SignClassIterator(complete_signed(4)).graph_at(8)

    def test_blocks(self):
        """Blocos contíguos cobrem todos os índices."""
        assert SignClassIterator(complete_signed(4)).blocks(3) == [(0, 3), (3, 6), (6, 8)]


class TestUnderlyingGraphs:
    """Enumeração de grafos por classe de isomorfismo."""

    @pytest.mark.parametrize(
        "n,connected,count",
        [(1, True, 1), (3, False, 4), (4, True, 6), (4, False, 11), (5, True, 21), (5, False, 34), (6, True, 112)],
    )
    def test_counts(self, n, connected, count):
        """Contagens conhecidas de grafos não isomorfos."""
        assert sum(1 for _ in enumerate_underlying_graphs(n, connected)) == count

    @pytest.mark.slow
    def test_counts_seven(self):
        """853 conexos e 1044 no total em n = 7."""
        assert sum(1 for _ in enumerate_underlying_graphs(7, True)) == 853
        assert sum(1 for _ in enumerate_underlying_graphs(7, False)) == 1044

    def test_above_limit_needs_file(self):
        """Acima do limite interno é preciso um arquivo graph6."""
        with pytest.raises(InvalidInputError, match="graph6"):
            list(enumerate_underlying_graphs(9, True))

    def test_graph6_file(self, tmp_path):
        """O arquivo é filtrado por ordem e conexidade."""
        path = tmp_path / "g.g6"
        path.write_text("C~\nCQ\nBw\n", encoding="ascii")
        graphs = list(enumerate_underlying_graphs(4, True, path))
        assert [g.edge_count for g in graphs] == [6]


class TestWorker:
    """Divisão em blocos e execução ordenada."""

    def test_tasks_cover_all_classes(self):
        """As tarefas cobrem as classes de cada grafo em blocos."""
        tasks = make_sweep_tasks([complete_signed(4), complete_signed(5)], block_size=10)
        assert [(t.graph_index, t.start, t.stop) for t in tasks] == [
            (0, 0, 8),
            (1, 0, 10),
            (1, 10, 20),
            (1, 20, 30),
            (1, 30, 40),
            (1, 40, 50),
            (1, 50, 60),
            (1, 60, 64),
        ]

    def test_turan_job_on_complete(self):
        """K5 não tem classe C3⁻-livre desequilibrada."""
        results = run_tasks(job_turan_C3, make_sweep_tasks([complete_signed(5)], block_size=16), jobs=1)
        assert sum(r["classes"] for r in results) == 64
        assert all(r["hits"] == [] for r in results)

    def test_parallel_matches_inline(self):
        """O resultado não depende do número de workers."""
        tasks = make_sweep_tasks([complete_signed(6)], {"lengths": [3, 5]}, block_size=128)
        inline = run_tasks(job_negative_cycles, tasks, jobs=1)
        parallel = run_tasks(job_negative_cycles, tasks, jobs=2)
        assert inline == parallel


class TestExhaustiveClaims:
    """Verificações exaustivas em ordem pequena."""

    @pytest.mark.parametrize(
        "n,maximum,classes",
        [(4, 4, ["G_{1,1}"]), (5, 7, ["G_{1,2}"]), (6, 11, ["G_{1,3}", "G_{2,2}"])],
    )
    def test_turan_C3(self, n, maximum, classes):
        """Máximo de arestas e classes extremais sem C3⁻."""
        report = verify_turan_C3(n)
        assert report.status == "pass"
        assert report.observed["max_edges"] == maximum
        assert report.observed["extremal_classes"] == classes

    def test_turan_C3_n4_note(self):
        """Em n = 4 sai uma nota sobre o caso de borda."""
        assert any("n=4" in note for note in verify_turan_C3(4).notes)

    def test_turan_C3_out_of_range(self):
        """Fora da faixa exaustiva o relatório é infeasible."""
        assert verify_turan_C3(9).status == "infeasible"
        assert verify_turan_C3(3).status == "infeasible"

    def test_turan_C3_worker_count_independent(self):
        """O JSON não depende do número de workers."""
        inline = verify_turan_C3(5, jobs=1).to_json(timestamp=False)
        parallel = verify_turan_C3(5, jobs=2).to_json(timestamp=False)
        assert inline == parallel

    @pytest.mark.parametrize("n", [4, 5, 6])
    def test_spectral_C3(self, n):
        """O maior ρ sem C3⁻ é o de G_{1,n-3}."""
        report = verify_spectral_C3(n)
        assert report.status == "pass"
        assert report.observed["max_rho"] == pytest.approx(((n * n - 8) ** 0.5 + n - 4) / 2, abs=1e-8)
        assert report.observed["extremal_classes"] == 1

    def test_spectral_C3_n5_value(self):
        """Valor numérico em n = 5."""
        assert verify_spectral_C3(5).observed["max_rho"] == pytest.approx(2.561553, abs=1e-6)

    @pytest.mark.parametrize("n", [5, 6])
    def test_unbalanced_complete(self, n):
        """Todo Kn desequilibrado tem os ciclos negativos pedidos."""
        report = verify_lemma_unbalanced_complete(n)
        assert report.status == "pass"
        assert report.observed["unbalanced_classes"] == 2 ** (n * (n - 1) // 2 - n + 1) - 1
        assert report.counters.classes == 2 ** (n * (n - 1) // 2 - n + 1)

    @pytest.mark.slow
    def test_unbalanced_complete_seven(self):
        """n = 7 com k em {1, 2}."""
        report = verify_lemma_unbalanced_complete(7)
        assert report.status == "pass"
        assert report.observed["unbalanced_classes"] == 32767
        assert report.params["ks"] == [1, 2]

    def test_unbalanced_complete_range(self):
        """n = 4 está fora da faixa."""
        assert verify_lemma_unbalanced_complete(4).status == "infeasible"

    def test_hna_k_range(self):
        """Faixa de k admitida para Ḣ_{n,a}."""
        assert hna_k_range(9, 3) == [1, 2]
        assert hna_k_range(7, 3) == [1]
        assert hna_k_range(9, 5) == []
        assert hna_k_range(8, 5) == []

    @pytest.mark.parametrize("n,a", [(6, 3), (7, 3)])
    def test_hna(self, n, a):
        """Ḣ_{n,a} passa dentro da hipótese."""
        report = verify_lemma_Hna(n, a)
        assert report.status == "pass"
        assert report.params["ks"] == [1]

    def test_hna_vacuous(self):
        """Faixa de k vazia passa com nota de vacuidade."""
        report = verify_lemma_Hna(8, 5)
        assert report.status == "pass"
        assert any("vacuous" in note for note in report.notes)
        assert report.counters.classes == 0

    def test_hna_outside_hypothesis_reported(self):
        """k pedido fora da hipótese é relatado sem reprovar."""
        report = verify_lemma_Hna(7, 3, ks=[1, 2])
        assert report.status == "pass"
        assert report.params["k_range"] == [1]
        assert any("outside hypothesis" in note for note in report.notes)
        assert "outside_hypothesis_failures" in report.observed

    def test_hna_ranges(self):
        """Parâmetros fora da faixa exaustiva são infeasible."""
        assert verify_lemma_Hna(10, 3).status == "infeasible"
        assert verify_lemma_Hna(6, 2).status == "infeasible"
        assert verify_lemma_Hna(6, 5).status == "infeasible"

    @pytest.mark.parametrize("n,threshold", [(5, 6), (6, 9)])
    def test_dense_negative_girth(self, n, threshold):
        """Acima do limiar de arestas a cintura negativa é 3 ou 4."""
        report = verify_dense_negative_girth(n)
        assert report.status == "pass"
        assert report.params["edge_threshold"] == threshold
        observed = report.observed
        assert observed["negative_girth_3"] + observed["negative_girth_4"] == observed["unbalanced_classes"]


class TestConstructionClaims:
    """Lado da construção e polinômio característico."""

    @pytest.mark.slow
    def test_c2k1_at_forty(self):
        """C3⁻·K38 tem 706 arestas e k = 3 está na faixa das arestas."""
        report = verify_construction_C2k1(40, 3)
        assert report.status == "pass"
        assert report.observed["edges"] == 706
        assert report.observed["edge_bound_range"]
        assert not report.observed["spectral_range"]

    def test_c2k1_flagged_outside_range(self):
        """Fora da faixa de k a verificação passa com nota."""
        report = verify_construction_C2k1(20, 3)
        assert report.status == "pass"
        assert report.observed["edges"] == edge_bound(20)
        assert any("outside stated hypothesis" in note for note in report.notes)

    def test_c2k1_infeasible(self):
        """2k+1 > n é infeasible."""
        assert verify_construction_C2k1(6, 3).status == "infeasible"

    @pytest.mark.slow
    def test_spectral_at_forty_one(self):
        """Em n = 41 vale a faixa espectral e ρ fica no sanduíche."""
        report = verify_construction_spectral(41, 3)
        assert report.status == "pass"
        assert report.observed["spectral_range"]
        assert any("sandwich" in note for note in report.notes)

    def test_spectral_small(self):
        """Em n pequeno a comparação usa o polinômio exato."""
        report = verify_construction_spectral(12, 3)
        assert report.status == "pass"
        assert report.observed["rho"] > 9
        assert any("exact" in note for note in report.notes)

    def test_spectral_n4(self):
        """Em n = 4 o raio vem do menor autovalor."""
        report = verify_construction_spectral(4, 1)
        assert report.observed["rho_is_lambda1"]
        assert any("n=4" in note for note in report.notes)

    def test_charpoly(self):
        """Fórmula fechada confirmada de 4 a 12."""
        report = verify_charpoly(12)
        assert report.status == "pass"
        per_n = report.observed["per_n"]
        assert sorted(per_n, key=int) == [str(n) for n in range(4, 13)]
        assert all(entry["cubic_at_n_minus_3"] == "-2" for entry in per_n.values())

    def test_charpoly_range(self):
        """Acima de 12 é infeasible."""
        assert verify_charpoly(13).status == "infeasible"

    def test_bounds_random(self):
        """Cotas valem em grafos aleatórios e a igualdade de Hong aparece em K12."""
        report = verify_bounds_random(60, seed=7)
        assert report.status == "pass"
        assert all(v >= -1e-8 for v in report.observed["min_slack"].values())
        assert any(w.label == "hong equality K12" for w in report.witnesses)

    @pytest.mark.slow
    def test_bounds_random_thousand(self):
        """Mil tentativas com a semente 7 não violam nenhuma cota."""
        report = verify_bounds_random(1000, seed=7)
        assert report.status == "pass"
        assert report.observed["min_slack"]["wyq"] >= -1e-8

    def test_bounds_random_deterministic(self):
        """Mesma semente, mesmo JSON."""
        left = verify_bounds_random(20, seed=3).to_json(timestamp=False)
        right = verify_bounds_random(20, seed=3).to_json(timestamp=False)
        assert left == right

    def test_bounds_random_trials(self):
        """Zero tentativas é rejeitado."""
        with pytest.raises(InvalidInputError):
            verify_bounds_random(0)


class TestFalsify:
    """Busca de falsificação com orçamento."""

    def test_deterministic(self):
        """Mesma semente, mesmo relatório."""
        left = falsify_search(12, 3, budget=60, seed=5, restarts=3).to_json(timestamp=False)
        right = falsify_search(12, 3, budget=60, seed=5, restarts=3).to_json(timestamp=False)
        assert left == right

    def test_best_state_is_admissible(self):
        """O melhor estado é desequilibrado e sem C5⁻."""
        report = falsify_search(10, 2, budget=90, seed=1, restarts=3)
        # 30 passos por reinício a partir de 4 arestas
        assert report.observed["best_edges"] <= 4 + 30
        best = parse_sg(report.witnesses[0].sg)
        assert best.edge_count == report.observed["best_edges"]
        assert not is_balanced(best)[0]
        assert is_Cl_minus_free(best, 5)

    def test_zero_budget_keeps_start(self):
        """Sem orçamento cada reinício fica no 4-ciclo inicial."""
        report = falsify_search(12, 3, budget=0, seed=4, restarts=2)
        assert report.status == "pass"
        assert report.observed["per_restart_best"] == [4, 4]
        assert report.observed["accepted_moves"] == 0
        assert report.observed["best_rho"] == pytest.approx(math.sqrt(2), abs=1e-9)

    def test_extremal_start_has_no_improving_move(self):
        """Partindo de C3⁻·K18 nenhum movimento ganha arestas."""
        report = falsify_search(20, 3, budget=40, seed=2, restarts=2, initial="extremal")
        assert report.status == "pass"
        assert report.observed["best_edges"] == edge_bound(20)
        assert report.observed["improving_moves"] == 0

    def test_extremal_start_must_be_admissible(self):
        """C3⁻·K6 tem triângulo negativo, então não serve de início para k = 1."""
        report = falsify_search(8, 1, budget=100, initial="extremal")
        assert report.status == "infeasible"
        assert any("not an admissible start" in note for note in report.notes)

    def test_outside_range_is_flagged_not_failed(self):
        """Com k fora de 3 <= k <= n/10 - 1 o relatório passa com nota."""
        report = falsify_search(7, 3, budget=400, seed=1, restarts=2)
        assert report.status == "pass"
        assert report.observed["edge_bound_range"] is False
        assert report.observed["spectral_range"] is False
        assert any("outside stated hypothesis: 3 <= k <= n/10 - 1" in note for note in report.notes)
        assert any("rho bound not claimed" in note for note in report.notes)

    def test_k_range_flags(self):
        """Faixas de k das cotas de arestas e de ρ."""
        assert k_range_flags(40, 3) == {"edge_bound_range": True, "spectral_range": False}
        assert k_range_flags(41, 3) == {"edge_bound_range": True, "spectral_range": True}
        assert k_range_flags(12, 2) == {"edge_bound_range": False, "spectral_range": False}
        assert k_range_flags(100, 9) == {"edge_bound_range": True, "spectral_range": False}

    def test_excess_inside_range_fails(self, monkeypatch):
        """Excesso de arestas dentro da faixa vira fail com testemunha."""
        monkeypatch.setattr(falsify, "edge_bound", lambda n: 3)
        monkeypatch.setattr(
            falsify, "k_range_flags", lambda n, k: {"edge_bound_range": True, "spectral_range": False}
        )
        report = falsify_search(12, 3, budget=0, seed=4, restarts=1)
        assert report.status == "fail"
        assert report.observed["edges_exceed_bound"] is True
        assert report.witnesses[0].label == "best state"

    def test_excess_outside_range_is_only_noted(self, monkeypatch):
        """O mesmo excesso fora da faixa fica numa nota."""
        monkeypatch.setattr(falsify, "edge_bound", lambda n: 3)
        report = falsify_search(12, 3, budget=0, seed=4, restarts=1)
        assert report.status == "pass"
        assert report.observed["edges_exceed_bound"] is True
        assert any("exceeds 3 outside the hypothesis" in note for note in report.notes)

    def test_expected_rho_is_extremal(self):
        """O ρ esperado é o de C3⁻·K_{n-2}."""
        report = falsify_search(12, 3, budget=30, seed=3, restarts=1)
        assert report.expected["max_rho"] == pytest.approx(spectral_radius(build_C3minus_K(12)))
        assert report.observed["max_rho"] >= report.observed["best_rho"] - 1e-9

    def test_extremal_start_does_not_beat_itself(self):
        """Sem passos, o início extremal não excede o próprio ρ."""
        report = falsify_search(20, 3, budget=0, restarts=1, initial="extremal")
        assert report.observed["rho_exceeds_extremal"] is False
        assert report.observed["max_rho"] == pytest.approx(report.expected["max_rho"], abs=1e-9)
        assert len(report.witnesses) == 1

    def test_tie_prefers_higher_rho(self):
        """Com o mesmo número de arestas o melhor estado é o de maior ρ."""
        state = SearchState.start(_square_in(5), rng_seed=0, budget=0)
        star = SignedGraph.from_edges(5, [(0, v, 1) for v in range(1, 5)])
        state.move_to(star)
        assert state.best_rho == pytest.approx(2.0)
        state.move_to(build_path(5, [1, 1, 1, 1]))
        assert state.best_rho == pytest.approx(2.0)
        assert state.best.edge_count == 4
        assert state.max_rho == pytest.approx(2.0)
        assert state.improving == 0
        assert state.accepted == 2

    def test_more_edges_beat_higher_rho(self):
        """Mais arestas vencem mesmo com ρ menor."""
        star = SignedGraph.from_edges(6, [(0, v, 1) for v in range(1, 6)])
        state = SearchState.start(star, rng_seed=0, budget=0)
        state.move_to(build_cycle(6, [-1, 1, 1, 1, 1, 1]))
        assert state.best.edge_count == 6
        assert state.improving == 1
        assert state.max_rho == pytest.approx(math.sqrt(5))

    def test_infeasible_small_order(self):
        """2k+1 > n é infeasible."""
        assert falsify_search(5, 3, budget=10).status == "infeasible"

    def test_invalid_arguments(self):
        """Orçamento negativo e zero reinícios são rejeitados."""
        with pytest.raises(InvalidInputError):
            falsify_search(12, 3, budget=-1)
        with pytest.raises(InvalidInputError):
            falsify_search(12, 3, budget=10, restarts=0)


class TestDispatch:
    """verify_claim para todos os identificadores."""

    def test_all_claims_dispatch(self):
        """Todo identificador despacha e devolve pass ou infeasible."""
        params = {"n": 5, "k": 2, "a": 3, "nmax": 5, "trials": 5, "budget": 0, "restarts": 1}
        for claim in CLAIM_IDS:
            if claim == "lem-2.4":
                report = verify_claim(claim, **{**params, "n": 6})
            else:
                report = verify_claim(claim, **params)
            assert report.claim == claim
            assert report.status in ("pass", "infeasible")

    def test_missing_parameter(self):
        """Parâmetro obrigatório ausente é erro de entrada."""
        with pytest.raises(InvalidInputError, match="requires k"):
            verify_claim("thm-1.3-construction", n=40)

    def test_report_json(self):
        """O relatório serializa em JSON."""
        data = json.loads(verify_claim("thm-1.1", n=4).to_json(timestamp=False))
        assert data["claim"] == "thm-1.1"
        assert data["status"] == "pass"
        assert data["counters"]["classes"] > 0

    def test_c3k_graph_witness(self):
        """A construção passa sem testemunhas."""
        report = verify_construction_C2k1(10, 2)
        assert report.status == "pass"
        assert report.witnesses == []
        assert build_C3minus_K(10).edge_count == report.observed["edges"]
