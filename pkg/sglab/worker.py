"""
Worker - execução paralela das varreduras exaustivas.

Responsabilidades:
- Dividir cada grafo subjacente em blocos de padrões de sinais (SweepTask)
- Executar jobs puros sobre cada bloco num multiprocessing.Pool
- Devolver os resultados na ordem das tarefas, para uma redução determinística

Com jobs=1 tudo roda no processo atual, pela mesma função de job.
"""

import logging
import sys
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from multiprocessing import Pool
from typing import Any

from tqdm import tqdm

from sglab.config import settings
from sglab.cycles.search import CycleQuery, negative_triangle, search_negative_cycles
from sglab.models.models import SignedGraph
from sglab.spectral.eigen import spectral_radius
from sglab.verify.enumeration import SignClassIterator

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class SweepTask:
    """Bloco [start, stop) dos padrões de sinais do grafo `graph_index`."""

    graph_index: int
    graph: SignedGraph
    start: int
    stop: int
    params: dict[str, Any] = field(default_factory=dict)

    @property
    def size(self) -> int:
        return self.stop - self.start


# =============================================================================
# HELPERS
# =============================================================================


def make_sweep_tasks(
    graphs: Sequence[SignedGraph],
    params: dict[str, Any] | None = None,
    block_size: int | None = None,
) -> list[SweepTask]:
    """Uma tarefa por (grafo, bloco de até BLOCK_SIZE padrões)."""
    tasks = []
    for index, g in enumerate(graphs):
        for start, stop in SignClassIterator(g).blocks(block_size):
            tasks.append(SweepTask(index, g, start, stop, dict(params or {})))
    return tasks


def progress_enabled() -> bool:
    return settings.PROGRESS and sys.stderr.isatty()


def run_tasks(
    job: Callable[[SweepTask], dict],
    tasks: Sequence[SweepTask],
    jobs: int | None = None,
    desc: str = "sweep",
) -> list[dict]:
    """
    Executa `job` em cada tarefa e devolve os resultados na ordem das tarefas.

    A barra de progresso conta padrões de sinais, não tarefas.
    """
    jobs = settings.JOBS if jobs is None else jobs
    total = sum(t.size for t in tasks)
    logger.info(f"[Worker] {desc}: {len(tasks)} tarefa(s), {total} classe(s), jobs={jobs}")

    results: list[dict] = []
    with tqdm(total=total, desc=desc, unit=" cls", disable=not progress_enabled()) as progress:
        if jobs <= 1 or len(tasks) <= 1:
            for task in tasks:
                results.append(job(task))
                progress.update(task.size)
        else:
            with Pool(processes=jobs) as pool:
                for task, result in zip(tasks, pool.imap(job, tasks), strict=True):
                    results.append(result)
                    progress.update(task.size)

    logger.info(f"[Worker] {desc} concluída: {len(results)} resultado(s)")
    return results


# =============================================================================
# JOBS
# =============================================================================


def job_turan_C3(task: SweepTask) -> dict:  # noqa: N802
    """Índices das classes desequilibradas sem triângulo negativo."""
    classes = SignClassIterator(task.graph)
    resultados: dict[str, Any] = {"classes": 0, "hits": []}
    for index, rep in classes.block(task.start, task.stop):
        resultados["classes"] += 1
        if index and negative_triangle(rep) is None:
            resultados["hits"].append(index)
    return resultados


def job_spectral_C3(task: SweepTask) -> dict:  # noqa: N802
    """Maior ρ entre as classes desequilibradas sem triângulo negativo, com os índices que o atingem."""
    tol = task.params.get("rho_tolerance", settings.RHO_TOLERANCE)
    classes = SignClassIterator(task.graph)
    resultados: dict[str, Any] = {"classes": 0, "candidates": 0, "best_rho": None, "best": []}
    for index, rep in classes.block(task.start, task.stop):
        resultados["classes"] += 1
        if not index or negative_triangle(rep) is not None:
            continue
        resultados["candidates"] += 1
        rho = spectral_radius(rep)
        best = resultados["best_rho"]
        if best is None or rho > best + tol:
            resultados["best_rho"] = rho
            resultados["best"] = [(index, rho)]
        elif rho >= best - tol:
            resultados["best"].append((index, rho))
            resultados["best_rho"] = max(best, rho)
    return resultados


def job_negative_cycles(task: SweepTask) -> dict:
    """
    Para cada classe desequilibrada e cada ℓ em params["lengths"], procura um ciclo
    negativo de comprimento ℓ. Guarda as primeiras falhas e amostras de ciclos.
    """
    lengths: list[int] = task.params["lengths"]
    sample = task.params.get("sample", settings.WITNESS_SAMPLE)
    classes = SignClassIterator(task.graph)
    resultados: dict[str, Any] = {
        "classes": 0,
        "unbalanced": 0,
        "failure_counts": {ell: 0 for ell in lengths},
        "failures": [],
        "samples": {ell: [] for ell in lengths},
    }
    for index, rep in classes.block(task.start, task.stop):
        resultados["classes"] += 1
        if not index:
            continue
        resultados["unbalanced"] += 1
        for ell in lengths:
            hits = search_negative_cycles(rep, CycleQuery(ell), assume_canonical=True)
            if not hits:
                resultados["failure_counts"][ell] += 1
                if len(resultados["failures"]) < sample:
                    resultados["failures"].append((index, ell))
            elif len(resultados["samples"][ell]) < sample:
                resultados["samples"][ell].append((index, list(hits[0].vertices)))
    return resultados


def job_dense_girth(task: SweepTask) -> dict:
    """Cada classe desequilibrada precisa de ciclo negativo de comprimento 3 ou 4."""
    sample = task.params.get("sample", settings.WITNESS_SAMPLE)
    classes = SignClassIterator(task.graph)
    resultados: dict[str, Any] = {
        "classes": 0,
        "unbalanced": 0,
        "girth3": 0,
        "girth4": 0,
        "failure_count": 0,
        "failures": [],
    }
    for index, rep in classes.block(task.start, task.stop):
        resultados["classes"] += 1
        if not index:
            continue
        resultados["unbalanced"] += 1
        if negative_triangle(rep) is not None:
            resultados["girth3"] += 1
        elif task.graph.n >= 4 and search_negative_cycles(rep, CycleQuery(4), assume_canonical=True):
            resultados["girth4"] += 1
        else:
            resultados["failure_count"] += 1
            if len(resultados["failures"]) < sample:
                resultados["failures"].append(index)
    return resultados
