from sglab.utils.formatters import fmt_bound, fmt_charpoly, fmt_real, fmt_report, fmt_spectrum
from sglab.utils.sgformat import (
    format_sg,
    from_graph6,
    iter_graph6,
    parse_sg,
    read_graph6,
    read_sg,
    to_graph6,
    write_sg,
)

__all__ = [
    "fmt_bound",
    "fmt_charpoly",
    "fmt_real",
    "fmt_report",
    "fmt_spectrum",
    "format_sg",
    "from_graph6",
    "iter_graph6",
    "parse_sg",
    "read_graph6",
    "read_sg",
    "to_graph6",
    "write_sg",
]
