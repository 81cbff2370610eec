"""
Funções de formatação de saída do sglab.
"""

from sglab.schemas.schemas import BoundReport, CharPoly, Spectrum, TheoremReport


def fmt_real(x: float) -> str:
    """
    Formata um real com 12 dígitos significativos.

    Exemplo:
        >>> fmt_real(2.23606797749979)
        '2.2360679775'
    """
    return f"{x:.12g}"


def fmt_spectrum(spectrum: Spectrum) -> str:
    valores = " ".join(fmt_real(x) for x in spectrum.eigenvalues)
    return (
        f"eigenvalues: {valores}\n"
        f"lambda_1: {fmt_real(spectrum.lambda_1)}\n"
        f"lambda_n: {fmt_real(spectrum.lambda_n)}\n"
        f"rho: {fmt_real(spectrum.rho)}"
    )


def fmt_charpoly(poly: CharPoly) -> str:
    return f"charpoly: {poly}"


def fmt_bound(report: BoundReport) -> str:
    estado = "ok" if report.satisfied else "VIOLATED"
    return (
        f"{report.name}: bound={fmt_real(report.value)} "
        f"quantity={fmt_real(report.quantity)} slack={fmt_real(report.slack)} [{estado}]"
    )


def fmt_report(report: TheoremReport) -> str:
    """Resumo legível de um TheoremReport (derivado do mesmo conteúdo do JSON)."""
    linhas = [f"claim: {report.claim}", f"status: {report.status}"]
    if report.params:
        linhas.append("params: " + ", ".join(f"{k}={v}" for k, v in sorted(report.params.items())))
    for titulo, dados in (("expected", report.expected), ("observed", report.observed)):
        for chave, valor in sorted(dados.items()):
            if isinstance(valor, float):
                valor = fmt_real(valor)
            linhas.append(f"{titulo}.{chave}: {valor}")
    c = report.counters
    linhas.append(f"counters: classes={c.classes} graphs={c.graphs} pruned={c.pruned}")
    linhas += [f"note: {nota}" for nota in report.notes]
    for w in report.witnesses:
        if w.kind == "cycle":
            linhas.append(f"witness {w.label}: cycle {w.cycle}")
        elif w.kind == "graph":
            linhas.append(f"witness {w.label}: graph n={w.data.get('n')} e={w.data.get('edges')}")
        else:
            linhas.append(f"witness {w.label}: {w.data}")
    return "\n".join(linhas)
