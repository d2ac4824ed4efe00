"""Command-line interface.

Usage:
    arithmos classify 15
    arithmos prove 2 --degree 3 --verify
    arithmos table --max 25 --format csv -o table.csv
    arithmos x9 8 2
    arithmos audit 8 2
    arithmos oracle root 17 --q-bound 500
    arithmos oracle ratio 2 3 --bound 100

Exit status is 0 on success, 2 on invalid arguments and 1 when two routes
that must agree do not.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import tables
from .classify import classification_table, classify_plane, classify_solid, oblong_factorizations
from .commensurability import (
    Commensurable,
    RationalInteger,
    Surd,
    decide_rationality,
    partition_audit,
    surd_ratio_commensurable,
)
from .errors import ContractViolation, PreconditionError
from .oracle import DEFAULT_RATIO_BOUND, DEFAULT_ROOT_BOUND, oracle_root_rational, oracle_surd_ratio
from .proof import build_trace, replay, root_symbol

__all__ = ["CliConfig", "build_parser", "main", "run_cli"]

FORMATS = ("text", "json", "csv")
COMMANDS = ("classify", "prove", "table", "x9", "audit", "oracle")
EXIT_OK, EXIT_CONTRACT, EXIT_USAGE = 0, 1, 2


@dataclass(frozen=True)
class CliConfig:
    command: str
    numbers: tuple[int, ...] = ()
    degree: int = 2
    bound: int | None = None
    max: int | None = None
    format: str = "text"
    output: str | None = None
    verify: bool = False
    oracle_kind: str | None = None

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise PreconditionError(f"unknown command {self.command!r}")
        if self.format not in FORMATS:
            raise PreconditionError(f"unknown format {self.format!r}")
        if self.format == "csv" and self.command != "table":
            raise PreconditionError("csv output is only available for 'table'")
        for value in (*self.numbers, self.bound, self.max):
            if value is not None and value < 1:
                raise PreconditionError(f"bounds and numbers must be >= 1, got {value}")
        if self.degree not in (2, 3):
            raise PreconditionError(f"degree must be 2 or 3, got {self.degree}")


def _natural_arg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a whole number: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1: {text!r}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", "-f", choices=FORMATS, default="text")
    common.add_argument("--output", "-o", metavar="PATH", help="write here instead of stdout")

    parser = argparse.ArgumentParser(prog="arithmos", description="Book VII arithmetic and root certificates.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="plane and solid class of n")
    p.add_argument("n", type=_natural_arg)

    p = sub.add_parser("prove", parents=[common], help="rationality verdict and proof trace")
    p.add_argument("n", type=_natural_arg)
    p.add_argument("--degree", "-d", type=int, choices=(2, 3), default=2)
    p.add_argument("--verify", action="store_true", help="cross-check against the oracle")
    p.add_argument("--q-bound", dest="bound", type=_natural_arg, default=DEFAULT_ROOT_BOUND)

    p = sub.add_parser("table", parents=[common], help="classification table for 1..max")
    p.add_argument("--max", dest="max", type=_natural_arg, required=True)

    p = sub.add_parser("x9", parents=[common], help="commensurability of sqrt(a) and sqrt(b)")
    p.add_argument("a", type=_natural_arg)
    p.add_argument("b", type=_natural_arg)
    p.add_argument("--verify", action="store_true", help="cross-check against the oracle")
    p.add_argument("--bound", type=_natural_arg, default=DEFAULT_RATIO_BOUND)

    p = sub.add_parser("audit", parents=[common], help="length/power partition audit of a pair")
    p.add_argument("a", type=_natural_arg)
    p.add_argument("b", type=_natural_arg)

    p = sub.add_parser("oracle", help="raw brute-force witness search")
    osub = p.add_subparsers(dest="oracle_kind", required=True)
    o = osub.add_parser("root", parents=[common], help="p^e = n*q^e")
    o.add_argument("n", type=_natural_arg)
    o.add_argument("--degree", "-d", type=int, choices=(2, 3), default=2)
    o.add_argument("--q-bound", dest="bound", type=_natural_arg, default=DEFAULT_ROOT_BOUND)
    o = osub.add_parser("ratio", parents=[common], help="a*q^2 = b*p^2")
    o.add_argument("a", type=_natural_arg)
    o.add_argument("b", type=_natural_arg)
    o.add_argument("--bound", type=_natural_arg, default=DEFAULT_RATIO_BOUND)
    return parser


def config_from_args(args: argparse.Namespace) -> CliConfig:
    numbers = tuple(getattr(args, k) for k in ("n", "a", "b") if hasattr(args, k))
    return CliConfig(
        command=args.command,
        numbers=numbers,
        degree=getattr(args, "degree", 2),
        bound=getattr(args, "bound", None),
        max=getattr(args, "max", None),
        format=args.format,
        output=args.output,
        verify=getattr(args, "verify", False),
        oracle_kind=getattr(args, "oracle_kind", None),
    )


class _Disagreement(Exception):
    pass


def _classify(cfg: CliConfig) -> tuple[dict, str]:
    (n,) = cfg.numbers
    plane, solid = classify_plane(n), classify_solid(n)
    rects = oblong_factorizations(n)
    data = {
        "n": n,
        "plane_class": plane.name,
        "plane_figure": list(plane.figure),
        "solid_class": solid.name,
        "solid_figure": list(solid.figure),
        "factorizations": [list(r) for r in rects],
    }
    fig = tables.figure_text
    text = (
        f"n = {n}\n"
        f"plane: {plane.name} figure {fig(plane.figure)}\n"
        f"solid: {solid.name} figure {fig(solid.figure)}\n"
        f"rectangles: {' '.join(fig(r) for r in rects)}\n"
    )
    return data, text


def _prove(cfg: CliConfig) -> tuple[dict, str]:
    (n,) = cfg.numbers
    e = cfg.degree
    verdict = decide_rationality(Surd(n, e))
    rational = isinstance(verdict, RationalInteger)
    trace = build_trace(n, e) if rational else verdict.trace
    replay(trace)
    name = f"RationalInteger({verdict.k})" if rational else "Irrational"
    data = {"surd": root_symbol(n, e), "verdict": name, "trace": trace.to_dict()}
    text = f"{root_symbol(n, e)}: {name}\n{trace.to_text()}"
    if cfg.verify:
        found = oracle_root_rational(n, e, cfg.bound)
        data["oracle"] = {"found": list(found.found) if found else None, "search_bound": cfg.bound}
        text += f"oracle (q <= {cfg.bound}): {_witness_text(found.found)}\n"
        if bool(found) != rational:
            raise _Disagreement(f"decision {name} but oracle {_witness_text(found.found)} (q <= {cfg.bound})")
    return data, text


def _witness_text(found) -> str:
    return "none" if found is None else f"p={found[0]} q={found[1]}"


def _x9_data(a: int, b: int, verdict) -> tuple[dict, str]:
    pair = f"{root_symbol(a, 2)} : {root_symbol(b, 2)}"
    if isinstance(verdict, Commensurable):
        r = verdict.ratio
        return {"verdict": "Commensurable", "ratio": [r.num, r.den]}, f"{pair} = {r} (Commensurable)"
    w = verdict.witness
    return (
        {"verdict": "Incommensurable", "witness": [w.num, w.den]},
        f"{pair} Incommensurable: {a}/{b} reduces to {w}, not a ratio of squares",
    )


def _x9(cfg: CliConfig) -> tuple[dict, str]:
    a, b = cfg.numbers
    verdict = surd_ratio_commensurable(a, b)
    vdata, line = _x9_data(a, b, verdict)
    data = {"a": a, "b": b, **vdata}
    text = line + "\n"
    if cfg.verify:
        found = oracle_surd_ratio(a, b, cfg.bound)
        data["oracle"] = {"found": list(found.found) if found else None, "search_bound": cfg.bound}
        text += f"oracle (p, q <= {cfg.bound}): {_witness_text(found.found)}\n"
        if bool(found) != isinstance(verdict, Commensurable):
            raise _Disagreement(f"decision {vdata['verdict']} but oracle {_witness_text(found.found)} (bound {cfg.bound})")
    return data, text


def _audit(cfg: CliConfig) -> tuple[dict, str]:
    a, b = cfg.numbers
    report = partition_audit(a, b)
    vdata, line = _x9_data(a, b, report.verdict)
    data = {
        "a": a,
        "b": b,
        "kind_a": report.kind_a.value,
        "kind_b": report.kind_b.value,
        "mutual": vdata,
        "gap": report.gap,
    }
    text = (
        f"{root_symbol(a, 2)}: {report.kind_a.value}\n"
        f"{root_symbol(b, 2)}: {report.kind_b.value}\n"
        f"mutual: {line}\n"
        f"gap: {'yes' if report.gap else 'no'}\n"
    )
    return data, text


def _oracle(cfg: CliConfig) -> tuple[dict, str]:
    if cfg.oracle_kind == "root":
        (n,) = cfg.numbers
        res = oracle_root_rational(n, cfg.degree, cfg.bound)
        head = {"kind": "root", "n": n, "degree": cfg.degree}
        label = f"p^{cfg.degree} = {n}*q^{cfg.degree}, q <= {cfg.bound}"
    else:
        a, b = cfg.numbers
        res = oracle_surd_ratio(a, b, cfg.bound)
        head = {"kind": "ratio", "a": a, "b": b}
        label = f"{a}*q^2 = {b}*p^2, p, q <= {cfg.bound}"
    data = {**head, "found": list(res.found) if res else None, "search_bound": res.search_bound}
    return data, f"{label}: {_witness_text(res.found)}\n"


def _render(cfg: CliConfig) -> str:
    if cfg.command == "table":
        table = classification_table(cfg.max)
        render = {"text": tables.table_to_text, "json": tables.table_to_json, "csv": tables.table_to_csv}
        return render[cfg.format](table)
    handler = {
        "classify": _classify,
        "prove": _prove,
        "x9": _x9,
        "audit": _audit,
        "oracle": _oracle,
    }[cfg.command]
    data, text = handler(cfg)
    if cfg.format == "json":
        return json.dumps(data, indent=2) + "\n"
    return text


def run_cli(cfg: CliConfig, stdout=None, stderr=None) -> int:
    """Execute a validated config; return the exit status."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        out = _render(cfg)
    except _Disagreement as exc:
        print(f"arithmos: decision and oracle disagree: {exc}", file=stderr)
        return EXIT_CONTRACT
    except ContractViolation as exc:
        print(f"arithmos: contract violation: {exc}", file=stderr)
        return EXIT_CONTRACT
    except PreconditionError as exc:
        print(f"arithmos: {exc}", file=stderr)
        return EXIT_USAGE
    if cfg.output:
        with open(cfg.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(out)
    else:
        stdout.write(out)
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = config_from_args(args)
    except PreconditionError as exc:
        print(f"arithmos: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return run_cli(cfg)


if __name__ == "__main__":
    sys.exit(main())
