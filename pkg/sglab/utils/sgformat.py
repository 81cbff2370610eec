"""
Leitura e escrita de grafos sinalizados.

Formato .sg (UTF-8, orientado a linhas, '#' inicia comentário):
    n <N>
    e <u> <v> <+|->      com 0 <= u < v < N, uma linha por aresta

graph6 (sem sinais) é lido e escrito pelo networkx; todas as arestas ficam positivas.
"""

from collections.abc import Iterator
from pathlib import Path

import networkx as nx

from sglab.core.exceptions import SgFormatError
from sglab.models.models import SignedGraph


def parse_sg(text: str) -> SignedGraph:
    """
    Converte texto .sg em SignedGraph.

    Raises:
        SgFormatError: com o número da linha (a partir de 1) do primeiro problema
    """
    n: int | None = None
    seen: set[tuple[int, int]] = set()
    edges: list[tuple[int, int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 2 or fields[0] != "n":
                raise SgFormatError("expected header 'n <N>'", lineno)
            try:
                n = int(fields[1])
            except ValueError:
                raise SgFormatError(f"invalid vertex count {fields[1]!r}", lineno) from None
            if n < 0:
                raise SgFormatError("vertex count must be >= 0", lineno)
            continue
        if len(fields) != 4 or fields[0] != "e":
            raise SgFormatError("expected edge line 'e <u> <v> <+|->'", lineno)
        try:
            u, v = int(fields[1]), int(fields[2])
        except ValueError:
            raise SgFormatError("edge endpoints must be integers", lineno) from None
        if fields[3] not in ("+", "-"):
            raise SgFormatError(f"invalid sign {fields[3]!r}", lineno)
        if u == v:
            raise SgFormatError(f"self-loop at vertex {u}", lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise SgFormatError(f"edge ({u},{v}) out of range for n={n}", lineno)
        if u > v:
            raise SgFormatError(f"edge endpoints must satisfy u < v, got ({u},{v})", lineno)
        if (u, v) in seen:
            raise SgFormatError(f"duplicate edge ({u},{v})", lineno)
        seen.add((u, v))
        edges.append((u, v, 1 if fields[3] == "+" else -1))
    if n is None:
        raise SgFormatError("missing header 'n <N>'", 1)
    return SignedGraph.from_edges(n, edges)


def format_sg(g: SignedGraph, comment: str | None = None) -> str:
    """Texto .sg com as arestas ordenadas por (u, v)."""
    lines = [f"# {comment}"] if comment else []
    lines.append(f"n {g.n}")
    lines += [f"e {u} {v} {'+' if s == 1 else '-'}" for u, v, s in g.edges()]
    return "\n".join(lines) + "\n"


def read_sg(path: str | Path) -> SignedGraph:
    return parse_sg(Path(path).read_text(encoding="utf-8"))


def write_sg(g: SignedGraph, path: str | Path, comment: str | None = None) -> None:
    Path(path).write_text(format_sg(g, comment), encoding="utf-8")


def to_graph6(g: SignedGraph) -> str:
    """graph6 do grafo subjacente, sem cabeçalho nem quebra de linha."""
    return nx.to_graph6_bytes(g.to_networkx(), header=False).decode("ascii").strip()


def from_graph6(line: str) -> SignedGraph:
    try:
        graph = nx.from_graph6_bytes(line.strip().encode("ascii"))
    except (ValueError, nx.NetworkXError) as exc:
        raise SgFormatError(f"invalid graph6 string: {exc}") from exc
    return SignedGraph.from_networkx(graph)


def iter_graph6(path: str | Path) -> Iterator[SignedGraph]:
    """Um grafo por linha; linhas vazias e o cabeçalho >>graph6<< são ignorados."""
    with Path(path).open(encoding="ascii") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if line.startswith(">>graph6<<"):
                line = line[len(">>graph6<<"):]
            if not line:
                continue
            try:
                yield from_graph6(line)
            except SgFormatError as exc:
                raise SgFormatError(str(exc), lineno) from exc


def read_graph6(path: str | Path) -> list[SignedGraph]:
    return list(iter_graph6(path))
