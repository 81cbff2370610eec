"""
Linha de comando do sglab.

    sglab construct --family c3k --n 40 --out c3k40.sg
    sglab check --in c3k40.sg --ell 7 --witness
    sglab spectrum --in c3k40.sg
    sglab verify --claim thm-1.1 --n 6 --out report.json
    sglab search --n 40 --k 3 --budget 1000000 --seed 1

Códigos de saída: 0 sucesso, 1 teorema contrariado ou checagem falhou, 2 erro de uso.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any

from pydantic import ValidationError

from sglab.config import settings
from sglab.constructions.families import HnaVariant, named_family
from sglab.core.exceptions import SignedGraphError
from sglab.core.frustration import frustration_index
from sglab.cycles.search import find_negative_cycle_of_length
from sglab.schemas.schemas import CLAIM_IDS, RunConfig, TheoremReport
from sglab.spectral.bounds import all_bounds
from sglab.spectral.charpoly import char_poly
from sglab.spectral.eigen import eigenvalues
from sglab.utils.formatters import fmt_bound, fmt_charpoly, fmt_report, fmt_spectrum
from sglab.utils.sgformat import format_sg, read_sg, write_sg
from sglab.verify.claims import verify_claim
from sglab.verify.falsify import falsify_search

logger = logging.getLogger(__name__)

VERBS = ("construct", "check", "spectrum", "bounds", "frustration", "verify", "search")


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--in", dest="input", type=Path, help="Arquivo .sg de entrada")
    common.add_argument("--out", dest="output", type=Path, help="Arquivo de saída (.sg ou JSON)")
    common.add_argument("--graphs", type=Path, help="Arquivo graph6 com os grafos subjacentes")
    common.add_argument("--family", choices=["gst", "c3k", "complete", "hna"])
    common.add_argument("--claim", choices=CLAIM_IDS)
    for name in ("n", "k", "ell", "s", "t", "a", "nmax", "trials", "budget", "restarts", "jobs"):
        common.add_argument(f"--{name}", type=int)
    common.add_argument("--variant", type=int, choices=[1, 2, 3], default=1, help="Ḣ¹, Ḣ² ou Ḣ³")
    common.add_argument("--attach", type=int, nargs="+", help="Índices da clique com aresta negativa (Ḣ³)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--initial", choices=["random", "extremal"], default="random")
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument("--witness", action="store_true", help="Imprime o ciclo encontrado")
    common.add_argument("--quiet", action="store_true", help="Sem barras de progresso")
    common.add_argument("--no-timestamp", dest="timestamp", action="store_false")

    parser = argparse.ArgumentParser(prog="sglab", description="Grafos sinalizados sem ciclos negativos")
    sub = parser.add_subparsers(dest="verb", required=True)
    helps = {
        "construct": "Constrói uma família nomeada e grava .sg",
        "check": "Testa se o grafo é livre de C_ell negativo",
        "spectrum": "Autovalores, raio espectral e polinômio característico",
        "bounds": "Cotas de Hong, Stanić, Wang-Yan-Qian e Turán",
        "frustration": "Índice de frustração exato",
        "verify": "Verifica um teorema ou lema e emite o relatório JSON",
        "search": "Busca de falsificação da cota de arestas",
    }
    for verb in VERBS:
        sub.add_parser(verb, parents=[common], help=helps[verb])
    return parser


def _config(argv: list[str] | None) -> RunConfig:
    args = vars(_build_parser().parse_args(argv))
    if args["jobs"] is None:
        args.pop("jobs")
    return RunConfig(**args)


def _emit(text: str, output: Path | None = None) -> None:
    if output is None:
        print(text)
    else:
        output.write_text(text + "\n", encoding="utf-8")


def _emit_report(report: TheoremReport, cfg: RunConfig) -> int:
    if cfg.timestamp:
        report = report.stamp()
    document = report.to_json(timestamp=cfg.timestamp)
    if cfg.output is not None:
        cfg.output.write_text(document + "\n", encoding="utf-8")
        logger.info(f"[CLI] relatório gravado em {cfg.output}")
    print(document if cfg.format == "json" else fmt_report(report))
    return 1 if report.status == "fail" else 0


# ==================== Verbos ====================


def _construct(cfg: RunConfig) -> int:
    assert cfg.family is not None
    variant = None
    if cfg.family == "hna":
        attach = frozenset(cfg.attach) if cfg.variant == 3 and cfg.attach else None
        variant = HnaVariant(cfg.variant, attach)
    g = named_family(cfg.family, n=cfg.n, s=cfg.s, t=cfg.t, a=cfg.a, variant=variant)
    comment = f"family={cfg.family} n={g.n} edges={g.edge_count}"
    if cfg.output is None:
        _emit(format_sg(g, comment).rstrip("\n"))
    else:
        write_sg(g, cfg.output, comment)
        logger.info(f"[CLI] {comment} gravado em {cfg.output}")
    return 0


def _check(cfg: RunConfig) -> int:
    assert cfg.input is not None and cfg.ell is not None
    g = read_sg(cfg.input)
    cycle = find_negative_cycle_of_length(g, cfg.ell)
    free = cycle is None
    if cfg.format == "json":
        payload: dict[str, Any] = {"ell": cfg.ell, "free": free}
        if cfg.witness:
            payload["cycle"] = None if cycle is None else list(cycle.vertices)
        _emit(json.dumps(payload, sort_keys=True), cfg.output)
    else:
        lines = [f"free: {'true' if free else 'false'}"]
        if cfg.witness and cycle is not None:
            lines.append("witness: " + " ".join(str(v) for v in cycle.vertices))
        _emit("\n".join(lines), cfg.output)
    return 0 if free else 1


def _spectrum(cfg: RunConfig) -> int:
    assert cfg.input is not None
    g = read_sg(cfg.input)
    spectrum = eigenvalues(g)
    poly = char_poly(g) if g.n <= settings.CHARPOLY_LIMIT else None
    if cfg.format == "json":
        payload = {"spectrum": spectrum.model_dump(mode="json")}
        if poly is not None:
            payload["charpoly"] = poly.model_dump(mode="json")
        _emit(json.dumps(payload, sort_keys=True, indent=2), cfg.output)
    else:
        text = fmt_spectrum(spectrum)
        if poly is not None:
            text += "\n" + fmt_charpoly(poly)
        _emit(text, cfg.output)
    return 0


def _bounds(cfg: RunConfig) -> int:
    assert cfg.input is not None
    reports = all_bounds(read_sg(cfg.input))
    if cfg.format == "json":
        _emit(json.dumps([r.model_dump(mode="json") for r in reports], sort_keys=True, indent=2), cfg.output)
    else:
        _emit("\n".join(fmt_bound(r) for r in reports), cfg.output)
    return 0 if all(r.satisfied for r in reports) else 1


def _frustration(cfg: RunConfig) -> int:
    assert cfg.input is not None
    value = frustration_index(read_sg(cfg.input))
    if cfg.format == "json":
        _emit(json.dumps({"frustration": value}), cfg.output)
    else:
        _emit(f"frustration: {value}", cfg.output)
    return 0


def _verify(cfg: RunConfig) -> int:
    assert cfg.claim is not None
    report = verify_claim(
        cfg.claim,
        n=cfg.n,
        k=cfg.k,
        a=cfg.a,
        nmax=cfg.nmax,
        trials=cfg.trials,
        seed=cfg.seed,
        budget=cfg.budget,
        restarts=cfg.restarts,
        initial=cfg.initial,
        jobs=cfg.jobs,
        graphs_file=cfg.graphs,
    )
    return _emit_report(report, cfg)


def _search(cfg: RunConfig) -> int:
    assert cfg.n is not None and cfg.k is not None
    budget = 10**6 if cfg.budget is None else cfg.budget
    report = falsify_search(cfg.n, cfg.k, budget, cfg.seed, cfg.restarts, cfg.initial)
    return _emit_report(report, cfg)


HANDLERS = {
    "construct": _construct,
    "check": _check,
    "spectrum": _spectrum,
    "bounds": _bounds,
    "frustration": _frustration,
    "verify": _verify,
    "search": _search,
}


def main(argv: list[str] | None = None) -> int:
    """Ponto de entrada; devolve o código de saída."""
    logging.basicConfig(
        level=settings.LOG_LEVEL,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        cfg = _config(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    except ValidationError as exc:
        print(f"error: {exc.errors()[0]['msg']}", file=sys.stderr)
        return 2
    if cfg.quiet:
        settings.PROGRESS = False

    logger.debug(f"[CLI] {cfg.verb}: {cfg.model_dump(exclude_none=True)}")
    try:
        return HANDLERS[cfg.verb](cfg)
    except (SignedGraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
