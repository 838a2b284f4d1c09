"""
Symperiod CLI -- regenerate the tables and check the claims behind them.

Usage:
    symperiod tables 2 --format csv
    symperiod check "group:E8 x HP^3" --c 16
    symperiod classify --c 16 --max-dim 64 --max-param 20
    symperiod codes verify --r-max 3 --m-max 7
    symperiod thresholds --n 1024 --c 16 --rank 27

Exit codes: 0 success (check: Periodic), 1 check Fails or a sweep found
failures, 2 check Undetermined, 64 usage or input syntax, 65 data errors.
"""

import argparse
import os
import sys
from dataclasses import asdict
from typing import Any, Callable, Dict, List, Optional, Sequence

from symperiod import __version__
from symperiod.catalog.spaces import SpaceKind
from symperiod.codes.gf2 import read_matrix
from symperiod.codes.griesmer import alg_lemma_sweep, griesmer_min_length, griesmer_search
from symperiod.codes.involutions import find_sigma, find_tau, run_trials
from symperiod.core.config import load_settings
from symperiod.core.errors import ExpressionSyntaxError, MatrixFormatError, SymperiodError
from symperiod.core.logging import configure_logging, get_logger, set_run_id
from symperiod.symrank.thresholds import ThresholdQuery, hypothesis_report
from symperiod.topology.periodicity import Verdict, check_4periodic, classify_irreducibles
from symperiod.topology.shapes import shape_verdict, soundness_sweep
from symperiod.topology.tables import TABLE_DEGREE, table_rows

from .expressions import parse_expression
from .render import FORMATS, render_json, render_record, render_rows

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_FAILS = 1
EXIT_UNDETERMINED = 2
EXIT_USAGE = 64
EXIT_DATA = 65

_VERDICT_EXIT = {
    Verdict.PERIODIC: EXIT_OK,
    Verdict.FAILS: EXIT_FAILS,
    Verdict.UNDETERMINED: EXIT_UNDETERMINED,
}

_TABLE_TITLES = {
    1: "Dimensions of rational spheres",
    2: "Classical irreducible symmetric spaces",
    3: "Exceptional irreducible symmetric spaces",
}


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _emit(text: str) -> None:
    sys.stdout.write(text)


# ─────────────────────────────────────────────────────────────
# Commands
# ─────────────────────────────────────────────────────────────


def cmd_tables(args: argparse.Namespace) -> int:
    columns, rows = table_rows(args.id)
    _emit(render_rows(args.format, columns, rows, _TABLE_TITLES[args.id]))
    return EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    expr = parse_expression(args.expr)
    report = check_4periodic(expr.betti(args.c), args.c)
    record: Dict[str, Any] = {"dim": expr.dim, **report.to_dict()}
    record["space"] = expr.label
    if args.c >= TABLE_DEGREE and not expr.is_connected_sum:
        record["shape"] = shape_verdict(expr.left, args.c).to_dict()
    logger.info("checked", extra={"space": expr.label, "degree": args.c, "verdict": report.verdict.value})
    _emit(render_record(args.format, record, expr.label))
    return _VERDICT_EXIT[report.verdict]


def _family(s) -> str:
    if s.kind is SpaceKind.REAL_GR:
        return f"RealGr({s.params[0]},*)"
    return s.kind.value


def cmd_classify(args: argparse.Namespace) -> int:
    results = classify_irreducibles(args.c, args.max_dim, args.max_param, args.workers)
    rows: List[Dict[str, Any]] = []
    families: List[str] = []
    for s, report in results:
        rows.append({"dim": s.dim, "source": s.source.value, **report.to_dict(), "space": s.label})
        if report.verdict is Verdict.PERIODIC and _family(s) not in families:
            families.append(_family(s))
    columns = ["space", "dim", "source", "verdict", "branch", "obstruction"]

    if args.format == "json":
        _emit(render_json({"results": rows, "periodic_families": families}))
    elif args.format == "csv":
        _emit(render_rows("csv", columns, rows))
    else:
        _emit(render_rows("text", columns, rows, f"Irreducible spaces at c = {args.c}"))
        _emit(f"Periodic families: {', '.join(families) or 'none'}\n")
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    report = soundness_sweep(args.c, args.max_dim, args.max_param, args.max_factors)
    _emit(render_record(args.format, report.to_dict(), "Soundness sweep"))
    return EXIT_OK if report.sound else EXIT_FAILS


def cmd_griesmer(args: argparse.Namespace) -> int:
    length = griesmer_min_length(args.r, args.w)
    if args.format == "text":
        _emit(f"{length}\n")
    else:
        _emit(render_record(args.format, {"r": args.r, "w": args.w, "min_length": length}))
    return EXIT_OK


def cmd_alg_lemma(args: argparse.Namespace) -> int:
    report = alg_lemma_sweep(args.n_max)
    if args.format == "text":
        _emit(report.summary() + "\n")
    else:
        _emit(render_record(args.format, report.to_dict()))
    return EXIT_OK if not report.violations else EXIT_FAILS


def cmd_verify(args: argparse.Namespace) -> int:
    report = griesmer_search(args.r_max, args.m_max)
    if args.format == "text":
        _emit(report.summary() + "\n")
    else:
        _emit(render_record(args.format, report.to_dict()))
    return EXIT_OK if report.holds else EXIT_FAILS


def cmd_sigma(args: argparse.Namespace) -> int:
    e = read_matrix(args.matrix)
    cert = find_sigma(e, args.n, args.c)
    _emit(render_record(args.format, cert.to_dict(), "sigma"))
    return EXIT_OK


def cmd_tau(args: argparse.Namespace) -> int:
    e = read_matrix(args.matrix)
    sigma = find_sigma(e, args.n, args.c)
    cert = find_tau(e, sigma, args.n, args.c)
    record = {**cert.to_dict(), "sigma_image": sigma.image}
    _emit(render_record(args.format, record, "tau"))
    return EXIT_OK


def cmd_trials(args: argparse.Namespace) -> int:
    report = run_trials(args.kind, args.trials, args.r, args.m, args.n, args.c, args.seed)
    if args.format == "text":
        _emit(report.summary() + "\n")
    else:
        _emit(render_record(args.format, report.to_dict()))
    return EXIT_OK if report.passed else EXIT_FAILS


def cmd_thresholds(args: argparse.Namespace) -> int:
    report = hypothesis_report(ThresholdQuery(args.n, args.c, args.rank))
    if args.format == "json":
        _emit(render_json(report.to_dict()))
        return EXIT_OK

    columns = ["name", "formula", "value", "minimal_rank", "met", "vacuous", "applicable"]
    rows = []
    for check in report.checks + report.informational:
        row = asdict(check)
        row["value"] = f"{check.value:.4f}"
        rows.append(row)
    title = (
        f"n={args.n} c={args.c} rank={args.rank} delta={report.delta} "
        f"max_symrank={report.max_symrank} berger_rank={report.berger_rank}"
    )
    _emit(render_rows(args.format, columns, rows, title))
    if args.format == "text" and report.vacuous:
        _emit("vacuous: a required threshold exceeds the maximal symmetry rank\n")
    return EXIT_OK


# ─────────────────────────────────────────────────────────────
# Parser
# ─────────────────────────────────────────────────────────────


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="text", help="Output format (default: text)")

    parser = _Parser(prog="symperiod", description="Betti-level 4-periodicity obstructions for symmetric spaces.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler: Callable[[argparse.Namespace], int], help_text: str, group=sub):
        p = group.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(handler=handler)
        return p

    p = add("tables", cmd_tables, "Regenerate table 1, 2 or 3")
    p.add_argument("id", type=int, choices=(1, 2, 3))

    p = add("check", cmd_check, "Check a space expression for 4-periodicity up to degree c")
    p.add_argument("expr", help='Product such as "S^17 x S^20", or "CaP2 # CaP2"')
    p.add_argument("--c", type=int, default=TABLE_DEGREE)

    p = add("classify", cmd_classify, "Classify every irreducible catalog space")
    p.add_argument("--c", type=int, default=TABLE_DEGREE)
    p.add_argument("--max-dim", type=_positive, default=64)
    p.add_argument("--max-param", type=_positive, default=20)
    p.add_argument("--workers", type=_positive, default=None)

    p = add("sweep", cmd_sweep, "Check that every periodic product has an allowed shape")
    p.add_argument("--c", type=int, default=TABLE_DEGREE)
    p.add_argument("--max-dim", type=_positive, default=64)
    p.add_argument("--max-param", type=_positive, default=20)
    p.add_argument("--max-factors", type=int, choices=(1, 2), default=2)

    codes = sub.add_parser("codes", help="GF(2) code computations").add_subparsers(dest="codes_command", required=True)

    p = add("griesmer", cmd_griesmer, "Griesmer minimum length", codes)
    p.add_argument("--r", type=_positive, required=True)
    p.add_argument("--w", type=_positive, required=True)

    p = add("alg-lemma", cmd_alg_lemma, "Sweep the counting lemma", codes)
    p.add_argument("--n-max", type=int, default=256)

    p = add("verify", cmd_verify, "Exhaustive Griesmer verification", codes)
    p.add_argument("--r-max", type=_positive, default=3)
    p.add_argument("--m-max", type=_positive, default=7)

    for name, handler in (("sigma", cmd_sigma), ("tau", cmd_tau)):
        p = add(name, handler, f"Find the {name} involution of a generator matrix", codes)
        p.add_argument("--matrix", required=True, help="File of 0/1 rows, one generator per line")
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--c", type=int, required=True)

    p = add("trials", cmd_trials, "Randomized involution trials", codes)
    p.add_argument("--kind", choices=("sigma", "tau"), default="sigma")
    p.add_argument("--trials", type=_positive, default=1000)
    p.add_argument("--r", type=_positive, default=12)
    p.add_argument("--m", type=_positive, default=32)
    p.add_argument("--n", type=int, default=64)
    p.add_argument("--c", type=int, default=2)
    p.add_argument("--seed", type=int, default=None)

    p = add("thresholds", cmd_thresholds, "Symmetry-rank threshold report")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--rank", type=int, required=True)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)

    settings = load_settings()
    level = settings.log_level if os.environ.get("SYMPERIOD_LOG_LEVEL") else "WARNING"
    configure_logging(level=level, fmt=settings.log_format, stream=sys.stderr)
    set_run_id()

    try:
        return args.handler(args)
    except (ExpressionSyntaxError, MatrixFormatError) as exc:
        print(f"symperiod: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"symperiod: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SymperiodError as exc:
        logger.debug("command failed", extra={"error_type": type(exc).__name__})
        print(f"symperiod: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
