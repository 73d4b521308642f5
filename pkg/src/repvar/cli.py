"""Command-line interface.

Usage::

    repvar count -p 2 -t 3
    repvar enumerate -p 4 -t 6 --format csv
    repvar verify -p 3 -t 3 --samples 10 --seed 7
    repvar table --p-max 30 --t-max 30 --format csv -o table.csv
    repvar genus -p 3 -t 5

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import dataclasses
import math
import os
import sys
from dataclasses import dataclass
from typing import IO, Callable, Iterable, Iterator

from repvar import __version__
from repvar.config import DEFAULT_PROBE, DEFAULT_TOLERANCES
from repvar.counting import (
    GroupParams,
    NotCoprime,
    c4,
    c4_case_expressions,
    c4_oracle,
    decompose_s,
    genus,
)
from repvar.omega import OmegaComponent
from repvar.probe import verify_theorem_a, verify_theorem_b
from repvar.report import ReportDocument, write_csv, write_table

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3
SEED_ENV = "REPVAR_SEED"
TABLE_MAX = 10_000


class UsageError(Exception):
    pass


@dataclass
class Output:
    """A report document plus the row view used by csv/table formats."""

    doc: ReportDocument
    columns: list[str]
    rows: Callable[[], Iterable[dict]]
    rows_key: str | None = None
    exit_code: int = EXIT_OK


def _params(args) -> GroupParams:
    try:
        return GroupParams(args.p, args.t)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _doc(command: str, params: dict, payload: dict, seed: int, tolerances: dict | None = None) -> ReportDocument:
    return ReportDocument(
        tool_version=__version__,
        command=command,
        params=params,
        payload=payload,
        seed=seed,
        tolerances=tolerances if tolerances is not None else DEFAULT_TOLERANCES.as_dict(),
    )


def cmd_count(args) -> Output:
    P = _params(args)
    closed, cases, oracle = c4(P), c4_case_expressions(P), c4_oracle(P)
    row = {
        "p": P.p,
        "t": P.t,
        "case": P.case,
        "c4": closed,
        "c4_case_expressions": cases,
        "c4_oracle": oracle,
        "agree": closed == cases == oracle,
    }
    payload = {k: v for k, v in row.items() if k not in ("p", "t")}
    return Output(_doc("count", {"p": P.p, "t": P.t}, payload, args.seed), list(row), lambda: [row])


def _factor(c: OmegaComponent) -> dict:
    return {
        "kind": c.kind.value,
        "angle": str(c.trace_class),
        "trace": c.trace_class.trace,
        "dim": c.dim,
    }


def cmd_enumerate(args) -> Output:
    P = _params(args)
    comps = decompose_s(P)
    rows = []
    for i, sc in enumerate(comps):
        rows.append({
            "index": i,
            "sign": sc.sign,
            "left_kind": sc.left.kind.value,
            "left_angle": str(sc.left.trace_class),
            "left_trace": sc.left.trace_class.trace,
            "right_kind": sc.right.kind.value,
            "right_angle": str(sc.right.trace_class),
            "right_trace": sc.right.trace_class.trace,
            "dim": sc.dim,
            "maximality": sc.maximality.value,
        })
    payload = {
        "n_components": len(comps),
        "n_dim4": sum(sc.dim == 4 for sc in comps),
        "c4": c4(P),
        "components": [
            {
                "index": r["index"],
                "sign": sc.sign,
                "left": _factor(sc.left),
                "right": _factor(sc.right),
                "dim": sc.dim,
                "maximality": sc.maximality.value,
            }
            for r, sc in zip(rows, comps)
        ],
    }
    columns = list(rows[0])
    return Output(_doc("enumerate", {"p": P.p, "t": P.t}, payload, args.seed), columns, lambda: rows)


_VERIFY_COLUMNS = [
    "theorem", "group", "index", "attempts", "local_dim_estimate", "jacobian_rank",
    "classification", "relator_residual", "gap_ratio",
]


def cmd_verify(args) -> Output:
    P = _params(args)
    if args.samples < 1:
        raise UsageError("--samples must be >= 1")
    if not (args.tol > 0 and math.isfinite(args.tol)):
        raise UsageError("--tol must be a positive number")
    config = dataclasses.replace(DEFAULT_PROBE, rank_tol=args.tol)
    a = verify_theorem_a(P, args.samples, args.seed, config=config)
    b = verify_theorem_b(P, args.samples, args.seed, config=config)
    passed = a.passed and b.passed
    payload = {
        "theorem_a": a.as_dict(),
        "theorem_b": b.as_dict(),
        "passed": passed,
    }
    tolerances = {**DEFAULT_TOLERANCES.as_dict(), **{f"probe_{k}": v for k, v in config.as_dict().items()}}

    def rows() -> Iterator[dict]:
        for summary in (a, b):
            for rec in summary.records:
                yield {"theorem": summary.theorem, **rec.as_dict()}

    doc = _doc("verify", {"p": P.p, "t": P.t, "samples": args.samples}, payload, args.seed, tolerances)
    return Output(doc, _VERIFY_COLUMNS, rows, exit_code=EXIT_OK if passed else EXIT_FAIL)


_TABLE_COLUMNS = ["p", "t", "case", "c4", "gcd", "genus", "genus_match"]


def table_rows(p_max: int, t_max: int) -> Iterator[dict]:
    for p in range(2, p_max + 1):
        for t in range(2, t_max + 1):
            P = GroupParams(p, t)
            n = c4(P)
            g = math.gcd(p, t)
            gen = genus(P) if g == 1 else None
            yield {
                "p": p,
                "t": t,
                "case": P.case,
                "c4": n,
                "gcd": g,
                "genus": gen,
                "genus_match": (gen == n) if gen is not None else None,
            }


def cmd_table(args) -> Output:
    for name in ("p_max", "t_max"):
        v = getattr(args, name)
        if not 2 <= v <= TABLE_MAX:
            raise UsageError(f"--{name.replace('_', '-')} must lie in [2, {TABLE_MAX}]")
    rows = lambda: table_rows(args.p_max, args.t_max)  # noqa: E731
    payload = {"columns": _TABLE_COLUMNS, "rows": rows()}
    doc = _doc("table", {"p_max": args.p_max, "t_max": args.t_max}, payload, args.seed)
    return Output(doc, _TABLE_COLUMNS, rows)


def cmd_genus(args) -> Output:
    P = _params(args)
    try:
        g = genus(P)
    except NotCoprime as exc:
        raise UsageError(str(exc)) from None
    row = {"p": P.p, "t": P.t, "genus": g, "c4": c4(P), "genus_match": g == c4(P)}
    payload = {k: v for k, v in row.items() if k not in ("p", "t")}
    return Output(_doc("genus", {"p": P.p, "t": P.t}, payload, args.seed), list(row), lambda: [row])


def _emit(out: Output, fmt: str, fp: IO[str]) -> None:
    if fmt == "json":
        out.doc.write_json(fp)
    elif fmt == "csv":
        write_csv(fp, out.columns, out.rows())
    else:
        fp.write(f"# repvar {out.doc.tool_version} {out.doc.command} {out.doc.params} seed={out.doc.seed}\n")
        write_table(fp, out.columns, out.rows())


def _default_seed() -> int:
    raw = os.environ.get(SEED_ENV)
    if raw is None or raw == "":
        return 0
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{SEED_ENV}={raw!r} is not an integer") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="repvar",
        description="Components of SL2(C) representation varieties of <a, b | a^p = b^t>.",
    )
    parser.add_argument("--version", action="version", version=f"repvar {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "table"), default="json")
    common.add_argument("-o", "--output", default=None, help="write to this path instead of stdout")
    common.add_argument("--seed", type=int, default=None, help=f"defaults to ${SEED_ENV} or 0")
    pt = argparse.ArgumentParser(add_help=False)
    pt.add_argument("-p", type=int, required=True)
    pt.add_argument("-t", type=int, required=True)

    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("count", parents=[common, pt], help="C4 by three methods").set_defaults(func=cmd_count)
    sub.add_parser("enumerate", parents=[common, pt], help="list product components of S").set_defaults(
        func=cmd_enumerate
    )
    v = sub.add_parser("verify", parents=[common, pt], help="numerical dimension probes")
    v.add_argument("--samples", type=int, default=10)
    v.add_argument("--tol", type=float, default=DEFAULT_PROBE.rank_tol, help="relative singular-value cutoff")
    v.set_defaults(func=cmd_verify)
    tb = sub.add_parser("table", parents=[common], help="sweep C4 and genus over a range")
    tb.add_argument("--p-max", type=int, required=True)
    tb.add_argument("--t-max", type=int, required=True)
    tb.set_defaults(func=cmd_table)
    sub.add_parser("genus", parents=[common, pt], help="torus knot genus").set_defaults(func=cmd_genus)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.seed is None:
            args.seed = _default_seed()
        out = args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"repvar: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        if args.output is None:
            _emit(out, args.format, sys.stdout)
        else:
            with open(args.output, "w", encoding="utf-8", newline="") as fp:
                _emit(out, args.format, fp)
    except OSError as exc:
        print(f"repvar: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    return out.exit_code


if __name__ == "__main__":
    sys.exit(main())
