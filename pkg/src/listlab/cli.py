"""Benchmark harness.

Subcommands:
  run     serve corpus files, a built-in demo instance, or a generated
          workload with the selected engines; print a comparison table and
          optionally write CSV and an SVG chart
  chart   rebuild the SVG chart from a previously written CSV
  verify  exhaustively cross-check the engines against the oracles on small
          instances

Exit codes: 0 success, 1 configuration or input error, 2 verification found
a violated property, 3 an engine broke an internal invariant.
"""

import argparse
import sys
from dataclasses import dataclass, field
from pathlib import Path

from .algorithms import AlgorithmKind, VfcPolicy, run_algorithm
from .chart import render_bar_chart
from .corpus import (
    DEFAULT_STRIP_BYTES,
    ListOrderPolicy,
    RunLengths,
    Uniform,
    Zipf,
    derive_list,
    generate_sequence,
    load_file,
    preprocess,
)
from .listcore import CostModel, ListLabError, RequestSequence
from .oracle import BoundsExceeded, verify_engines
from .report import ComparisonRow, format_table, rows_from_csv, rows_to_csv

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_VERIFY_FAILED = 2
EXIT_INTERNAL = 3

DEMO_NAME = "demo"
DEMO_SEQUENCE = (1, 2, 2, 3, 3, 3)


@dataclass
class RunConfig:
    inputs: list[tuple[str, RequestSequence]]
    algorithms: list[AlgorithmKind]
    model: CostModel
    policy: VfcPolicy
    list_order: ListOrderPolicy
    limit: int | None = None
    csv_path: Path | None = None
    chart_path: Path | None = None
    trace: bool = False
    wide: bool = True
    extra: dict = field(default_factory=dict)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="listlab", description=__doc__.strip().splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run engines over inputs and compare totals")
    run.add_argument("paths", nargs="*", help="corpus files (raw bytes)")
    run.add_argument("--demo", action="store_true", help="include the built-in 3-element demo instance")
    run.add_argument("--generate", metavar="DIST", help="synthetic workload: uniform, zipf[:EXP] or runs[:MEAN]")
    run.add_argument("--alphabet-size", type=int, default=8, help="alphabet size for --generate")
    run.add_argument("--length", type=int, default=10000, help="request count for --generate")
    run.add_argument("--algos", default="mtf,trans,fc,vfc", help="comma-separated subset of mtf,trans,fc,vfc")
    run.add_argument("--cost-model", choices=["full", "partial"], default="full")
    run.add_argument("--vfc-policy", choices=["literal", "strict"], default="literal")
    run.add_argument("--list-order", choices=["first-occurrence", "byte-value"], default="first-occurrence")
    run.add_argument("--limit", type=int, help="truncate every request sequence to its first N requests")
    run.add_argument("--strip-bytes", default="20,0d,0a", help="hex byte values removed by preprocessing")
    run.add_argument("--csv", metavar="PATH", help="write the long-form CSV here")
    run.add_argument("--chart", metavar="PATH", help="write an SVG comparison chart here")
    run.add_argument("--seed", type=int, default=0, help="seed for --generate")
    run.add_argument("--trace", action="store_true", help="print one line per engine step")

    chart = sub.add_parser("chart", help="render the SVG chart from a long-form CSV")
    chart.add_argument("--from-csv", required=True, metavar="PATH")
    chart.add_argument("--out", required=True, metavar="PATH")

    verify = sub.add_parser("verify", help="cross-check engines against the oracles")
    verify.add_argument("--max-list-size", type=int, default=3)
    verify.add_argument("--max-seq-len", type=int, default=6)
    verify.add_argument("--cost-model", choices=["full", "partial"], default="full")

    return parser


def _parse_algos(spec: str) -> list[AlgorithmKind]:
    names = [token.strip() for token in spec.split(",") if token.strip()]
    if not names:
        raise ValueError("at least one algorithm must be selected")
    return [AlgorithmKind(name) for name in names]


def _parse_strip(spec: str) -> frozenset[int]:
    tokens = [t for t in spec.replace(",", " ").split() if t]
    return frozenset(int(t, 16) for t in tokens) if tokens else frozenset()


def _parse_distribution(spec: str):
    name, _, arg = spec.partition(":")
    if name == "uniform":
        return Uniform()
    if name == "zipf":
        return Zipf(float(arg)) if arg else Zipf()
    if name == "runs":
        return RunLengths(float(arg)) if arg else RunLengths()
    raise ValueError(f"unknown distribution {spec!r} (use uniform, zipf[:EXP], runs[:MEAN])")


def _gather_inputs(args) -> list[tuple[str, RequestSequence]]:
    strip = _parse_strip(args.strip_bytes)
    inputs: list[tuple[str, RequestSequence]] = []
    if args.demo:
        inputs.append((DEMO_NAME, DEMO_SEQUENCE))
    for path in args.paths:
        text = load_file(path)
        inputs.append((text.source_name, preprocess(text, strip)))
    if args.generate:
        dist = _parse_distribution(args.generate)
        alphabet = list(range(args.alphabet_size))
        label = f"{args.generate}-a{args.alphabet_size}-n{args.length}-s{args.seed}"
        inputs.append((label, generate_sequence(alphabet, args.length, dist, args.seed)))
    if not inputs:
        raise ValueError("no inputs: give file paths, --demo, or --generate")
    return inputs


def cmd_run(args) -> int:
    algorithms = _parse_algos(args.algos)
    model = CostModel(args.cost_model)
    policy = VfcPolicy.LITERAL if args.vfc_policy == "literal" else VfcPolicy.STRICT_HOMOGENEOUS
    list_order = ListOrderPolicy(args.list_order)
    if args.limit is not None and args.limit < 1:
        raise ValueError("--limit must be at least 1")

    rows: list[ComparisonRow] = []
    for name, sequence in _gather_inputs(args):
        if args.limit is not None:
            sequence = sequence[: args.limit]
        state = derive_list(sequence, list_order)
        costs: dict[str, int] = {}
        for kind in algorithms:
            report = run_algorithm(
                kind, state, sequence, model, policy, keep_trace=args.trace
            )
            costs[kind.value] = report.total_cost
            if args.trace:
                print(f"# trace file={name} algo={kind.value}")
                for i, step in enumerate(report.steps, start=1):
                    print(
                        f"step={i} request={step.request} pos={step.position_before} "
                        f"cost={step.cost_charged} consumed={step.requests_consumed}"
                    )
        rows.append(ComparisonRow(name, len(sequence), len(state), model, costs))

    if model is CostModel.FULL:
        for row in rows:
            for algo, total in row.costs.items():
                if total < row.n:
                    print(
                        f"internal error: {algo} on {row.file} charged {total} "
                        f"for {row.n} requests (below the full-model lower bound)",
                        file=sys.stderr,
                    )
                    return EXIT_INTERNAL

    print(format_table(rows), end="")
    if args.csv:
        Path(args.csv).write_text(rows_to_csv(rows), encoding="utf-8", newline="")
        print(f"wrote {args.csv}")
    if args.chart:
        Path(args.chart).write_text(render_bar_chart(rows), encoding="utf-8", newline="")
        print(f"wrote {args.chart}")
    return EXIT_OK


def cmd_chart(args) -> int:
    text = Path(args.from_csv).read_text(encoding="utf-8")
    rows = rows_from_csv(text)
    Path(args.out).write_text(render_bar_chart(rows), encoding="utf-8", newline="")
    print(f"wrote {args.out}")
    return EXIT_OK


def cmd_verify(args) -> int:
    model = CostModel(args.cost_model)
    try:
        report = verify_engines(args.max_list_size, args.max_seq_len, model)
    except BoundsExceeded as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_CONFIG
    print(
        "note: the offline optimum is restricted to free exchanges; it upper-bounds "
        "the unrestricted optimum, which keeps every check below one-sided"
    )
    for line in report.summary_lines():
        print(line)
    if report.passed:
        print(f"all checks passed ({report.instances} instances)")
        return EXIT_OK
    print("verification FAILED", file=sys.stderr)
    return EXIT_VERIFY_FAILED


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return EXIT_CONFIG if err.code else EXIT_OK
    handlers = {"run": cmd_run, "chart": cmd_chart, "verify": cmd_verify}
    try:
        return handlers[args.command](args)
    except (ListLabError, ValueError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
