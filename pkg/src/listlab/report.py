"""Comparison rows and their CSV / plain-table renderings.

The CSV is long form, one line per (input, algorithm) pair, with header
``file,n,list_size,algo,cost_model,total_cost``, UTF-8, LF line endings.
Parsing an emitted document reproduces the rows exactly.
"""

import csv
import io
from dataclasses import dataclass

from .listcore import CostModel

CSV_HEADER = ("file", "n", "list_size", "algo", "cost_model", "total_cost")


@dataclass
class ComparisonRow:
    """Totals for one input: every selected algorithm's cost on the same
    derived list and request sequence."""

    file: str
    n: int
    list_size: int
    cost_model: CostModel
    costs: dict[str, int]


def rows_to_csv(rows: list[ComparisonRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        for algo, total in row.costs.items():
            writer.writerow([row.file, row.n, row.list_size, algo, row.cost_model.value, total])
    return buf.getvalue()


def rows_from_csv(text: str) -> list[ComparisonRow]:
    reader = csv.reader(io.StringIO(text))
    try:
        header = tuple(next(reader))
    except StopIteration:
        raise ValueError("empty CSV document") from None
    if header != CSV_HEADER:
        raise ValueError(f"unexpected CSV header {header!r}")
    rows: list[ComparisonRow] = []
    for line in reader:
        if not line:
            continue
        file, n, list_size, algo, model, total = line
        key = (file, int(n), int(list_size), CostModel(model))
        if not rows or (rows[-1].file, rows[-1].n, rows[-1].list_size, rows[-1].cost_model) != key:
            rows.append(ComparisonRow(file, int(n), int(list_size), CostModel(model), {}))
        rows[-1].costs[algo] = int(total)
    return rows


def format_table(rows: list[ComparisonRow]) -> str:
    """Wide human-readable table: one line per input, one cost column per
    algorithm."""
    if not rows:
        return "(no rows)\n"
    algos = list(rows[0].costs)
    headers = ["file", "requests", "list size"] + [f"{a} cost" for a in algos]
    table = [headers]
    for row in rows:
        table.append(
            [row.file, str(row.n), str(row.list_size)]
            + [str(row.costs.get(a, "-")) for a in algos]
        )
    widths = [max(len(line[i]) for line in table) for i in range(len(headers))]
    out = []
    for idx, line in enumerate(table):
        cells = [line[0].ljust(widths[0])] + [c.rjust(w) for c, w in zip(line[1:], widths[1:])]
        out.append("  ".join(cells).rstrip())
        if idx == 0:
            out.append("  ".join("-" * w for w in widths))
    return "\n".join(out) + "\n"
