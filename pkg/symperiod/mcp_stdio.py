import json
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

# Ensure the project root is on sys.path so 'symperiod' is discoverable
# when an MCP client runs this script directly
_PROJECT_ROOT = str(Path(__file__).resolve().parent.parent)
if _PROJECT_ROOT not in sys.path:
    sys.path.insert(0, _PROJECT_ROOT)

# All logs go to stderr; stdout carries the MCP protocol stream
from symperiod.core.logging import configure_logging, get_logger, set_run_id

configure_logging(level="ERROR", stream=sys.stderr)

from mcp.server.fastmcp import FastMCP

from symperiod.catalog.loader import catalog_summary, load_catalog
from symperiod.cli.expressions import parse_expression
from symperiod.codes.gf2 import parse_matrix
from symperiod.codes.griesmer import alg_lemma_sweep, griesmer_min_length, griesmer_search
from symperiod.codes.involutions import find_sigma, find_tau, run_trials
from symperiod.core.errors import SymperiodError
from symperiod.symrank.thresholds import ThresholdQuery, hypothesis_report
from symperiod.topology.periodicity import check_4periodic, classify_irreducibles
from symperiod.topology.shapes import shape_verdict, soundness_sweep
from symperiod.topology.tables import TABLE_DEGREE, table_rows

logger = get_logger(__name__)

mcp = FastMCP("Symperiod")


def _dumps(payload: Any) -> str:
    return json.dumps(payload, sort_keys=True, default=str)


def _run(tool: str, fn: Callable[[], Any]) -> str:
    """Run one tool call under a fresh run id; package errors come back as JSON."""
    set_run_id()
    try:
        return _dumps(fn())
    except SymperiodError as exc:
        logger.error(f"{tool} failed: {exc}", extra={"error_type": type(exc).__name__})
        return _dumps({"error": str(exc), "error_type": type(exc).__name__})


@mcp.tool()
async def catalog_info() -> str:
    """
    Counts of the embedded catalog: Lie groups, space families and the rows
    of the two classification tables.
    """
    return _run("catalog_info", lambda: catalog_summary(load_catalog()))


@mcp.tool()
async def get_table(table_id: int) -> str:
    """
    Regenerate table 1 (rational sphere dimensions of the compact simple Lie
    groups), 2 (classical spaces) or 3 (exceptional spaces) as a list of rows.
    """

    def build() -> Dict[str, Any]:
        columns, rows = table_rows(table_id)
        return {"columns": columns, "rows": rows}

    return _run("get_table", build)


@mcp.tool()
async def check_space(expr: str, c: int = TABLE_DEGREE) -> str:
    """
    Check a space for 4-periodicity up to degree c at the level of Betti numbers.
    expr is a product such as "group:E8 x HP^3" or a connected sum "CaP2 # CaP2".
    Returns the verdict, the lowest obstruction and every definite violation.
    """

    def build() -> Dict[str, Any]:
        parsed = parse_expression(expr)
        report = check_4periodic(parsed.betti(c), c)
        out: Dict[str, Any] = {"dim": parsed.dim, **report.to_dict(), "space": parsed.label}
        if c >= TABLE_DEGREE and not parsed.is_connected_sum:
            out["shape"] = shape_verdict(parsed.left, c).to_dict()
        return out

    return _run("check_space", build)


@mcp.tool()
async def classify_spaces(c: int = TABLE_DEGREE, max_dim: int = 64, max_param: int = 20) -> str:
    """
    Verdict for every irreducible catalog space of dimension 16..max_dim.
    c must be at least 16.
    """

    def build() -> List[Dict[str, Any]]:
        return [
            {**report.to_dict(), "space": s.label, "dim": s.dim}
            for s, report in classify_irreducibles(c, max_dim, max_param)
        ]

    return _run("classify_spaces", build)


@mcp.tool()
async def shape_sweep(c: int = TABLE_DEGREE, max_dim: int = 64, max_param: int = 20, max_factors: int = 2) -> str:
    """
    Check that every product of up to two catalog spaces that passes the
    periodicity check has one of the allowed shapes.
    """
    return _run("shape_sweep", lambda: soundness_sweep(c, max_dim, max_param, max_factors).to_dict())


@mcp.tool()
async def griesmer_bound(r: int, w: int) -> str:
    """Least length of a binary code of dimension r and minimum weight w."""
    return _run("griesmer_bound", lambda: {"r": r, "w": w, "min_length": griesmer_min_length(r, w)})


@mcp.tool()
async def verify_griesmer(r_max: int = 3, m_max: int = 7) -> str:
    """Exhaustively verify the Griesmer bound on all small generator matrices."""

    def build() -> Dict[str, Any]:
        report = griesmer_search(r_max, m_max)
        return {**report.to_dict(), "summary": report.summary()}

    return _run("verify_griesmer", build)


@mcp.tool()
async def alg_lemma(n_max: int = 256) -> str:
    """Sweep the counting inequality over every 2 <= c <= n <= n_max."""

    def build() -> Dict[str, Any]:
        report = alg_lemma_sweep(n_max)
        return {**report.to_dict(), "summary": report.summary()}

    return _run("alg_lemma", build)


@mcp.tool()
async def find_involution(matrix: str, n: int, c: int, kind: str = "sigma") -> str:
    """
    Find the sigma (or tau) involution of a generator matrix.
    matrix: newline-separated rows of 0/1 characters, floor(n/2) columns each.
    """

    def build() -> Dict[str, Any]:
        e = parse_matrix(matrix)
        sigma = find_sigma(e, n, c)
        if kind == "tau":
            return {**find_tau(e, sigma, n, c).to_dict(), "sigma_image": sigma.image}
        return sigma.to_dict()

    return _run("find_involution", build)


@mcp.tool()
async def involution_trials(
    kind: str = "sigma",
    trials: int = 100,
    r: int = 12,
    m: int = 32,
    n: int = 64,
    c: int = 2,
    seed: Optional[int] = None,
) -> str:
    """Seeded randomized trials of the involution searches. Without a seed, SYMPERIOD_SEED is used."""
    return _run(
        "involution_trials",
        lambda: run_trials(kind, trials, r, m, n, c, seed).to_dict(),  # type: ignore[arg-type]
    )


@mcp.tool()
async def symrank_thresholds(n: int, c: int, rank: int) -> str:
    """
    Compare a symmetry rank against every threshold for an n-manifold that is
    4-periodic up to degree c, with minimal ranks and vacuity flags.
    """
    return _run("symrank_thresholds", lambda: hypothesis_report(ThresholdQuery(n, c, rank)).to_dict())


if __name__ == "__main__":
    # MCP handshake requires clean stdout
    mcp.run(transport="stdio")
