"""
Symperiod Griesmer -- the Griesmer length bound, its exhaustive verification
on small codes, and the counting lemma that turns the bound into a rank threshold.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Tuple

import numpy as np

from symperiod.core.errors import InvalidParameter, PreconditionViolation
from symperiod.core.logging import TimedOperation, get_logger

logger = get_logger(__name__)

MAX_VERIFY_RANK = 4
MAX_VERIFY_LENGTH = 12


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def griesmer_min_length(r: int, w: int) -> int:
    """Least length of a binary [m, r] code with minimum weight w: sum of ceil(w / 2^i), i < r."""
    if r < 1 or w < 1:
        raise InvalidParameter(f"need r >= 1 and w >= 1, got r={r}, w={w}")
    return sum(_ceil_div(w, 1 << i) for i in range(r))


# ─────────────────────────────────────────────────────────────
# Exhaustive verification
# ─────────────────────────────────────────────────────────────


@dataclass(frozen=True)
class EqualityWitness:
    m: int
    r: int
    w: int
    constant_weight: bool

    @property
    def simplex(self) -> bool:
        return self.m == (1 << self.r) - 1 and self.w == 1 << (self.r - 1)

    def render(self) -> str:
        text = f"[{self.m},{self.r},{self.w}]"
        return f"simplex {text}" if self.simplex else text


@dataclass
class GriesmerReport:
    r_max: int
    m_max: int
    codes: int = 0
    violations: List[Tuple[int, int, int]] = field(default_factory=list)
    equality: List[EqualityWitness] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.violations

    def summary(self) -> str:
        if not self.holds:
            return f"bound violated by {len(self.violations)} parameter sets"
        ordered = sorted(self.equality, key=lambda e: (not e.simplex, e.r, e.m, e.w))
        return "bound holds; equality witnesses: " + ", ".join(e.render() for e in ordered)

    def to_dict(self) -> Dict[str, object]:
        return {
            "r_max": self.r_max,
            "m_max": self.m_max,
            "codes": self.codes,
            "holds": self.holds,
            "violations": [list(v) for v in self.violations],
            "equality": [
                {"m": e.m, "r": e.r, "w": e.w, "simplex": e.simplex, "constant_weight": e.constant_weight}
                for e in sorted(self.equality, key=lambda e: (e.r, e.m, e.w))
            ],
        }


def _column_contributions(r: int) -> np.ndarray:
    """Row j: weight added to every nonzero message u by the column vector j + 1."""
    messages = np.arange(1, 1 << r)
    columns = np.arange(1, 1 << r)
    dots = np.bitwise_and(columns[:, None], messages[None, :])
    parity = np.zeros_like(dots)
    while np.any(dots):
        parity ^= dots & 1
        dots >>= 1
    return parity.astype(np.uint8)


def griesmer_search(r_max: int, m_max: int) -> GriesmerReport:
    """
    Every r x m generator matrix (r <= r_max, m <= m_max) up to column order.
    A code is a multiset of nonzero columns; its weight vector W[u] counts
    columns with odd inner product against u. The code is injective iff
    min W > 0, and min W is its minimum weight. Zero columns only lengthen
    a code, so they cannot produce a violation and are skipped.
    """
    if not 1 <= r_max <= MAX_VERIFY_RANK:
        raise InvalidParameter(f"r_max must lie in 1..{MAX_VERIFY_RANK}, got {r_max}")
    if not 1 <= m_max <= MAX_VERIFY_LENGTH:
        raise InvalidParameter(f"m_max must lie in 1..{MAX_VERIFY_LENGTH}, got {m_max}")

    report = GriesmerReport(r_max, m_max)
    found: Dict[Tuple[int, int, int], bool] = {}
    with TimedOperation(logger, "griesmer_search", cases=r_max * m_max) as op:
        for r in range(1, r_max + 1):
            contrib = _column_contributions(r)
            n_cols = contrib.shape[0]
            bound = np.array([0] + [griesmer_min_length(r, w) for w in range(1, m_max + 1)])
            states = np.zeros((1, n_cols), dtype=np.uint8)
            last = np.zeros(1, dtype=np.int64)
            for m in range(1, m_max + 1):
                blocks, lasts = [], []
                for j in range(n_cols):
                    keep = last <= j
                    blocks.append(states[keep] + contrib[j])
                    lasts.append(np.full(int(keep.sum()), j, dtype=np.int64))
                states, last = np.concatenate(blocks), np.concatenate(lasts)

                mins = states.min(axis=1)
                full = mins > 0
                report.codes += int(full.sum())
                w_full = mins[full].astype(np.int64)
                bad = m < bound[w_full]
                for w in np.unique(w_full[bad]):
                    report.violations.append((m, r, int(w)))
                equal = m == bound[w_full]
                constant = states[full][equal].max(axis=1) == w_full[equal]
                for w, const in zip(w_full[equal], constant):
                    key = (m, r, int(w))
                    found[key] = found.get(key, False) or bool(const)
        op.extra["cases"] = report.codes

    report.equality = [EqualityWitness(m, r, w, const) for (m, r, w), const in found.items()]
    return report


def verify_griesmer_exhaustive(r_max: int, m_max: int) -> bool:
    return griesmer_search(r_max, m_max).holds


# ─────────────────────────────────────────────────────────────
# Counting lemma
# ─────────────────────────────────────────────────────────────


def _lemma_terms(n: int, c: int) -> Tuple[int, int]:
    if not n >= c >= 2:
        raise PreconditionViolation(f"need n >= c >= 2, got n={n}, c={c}")
    return _ceil_div(c, 2), _ceil_div(n - c + 1, 2)


def alg_lemma_min_rank(n: int, c: int) -> int:
    """Least integer r with r > ceil(c/2) + log2 ceil((n-c+1)/2)."""
    a, b = _lemma_terms(n, c)
    return a + b.bit_length()


def alg_lemma_sides(n: int, c: int, r: int) -> Tuple[int, int]:
    """(floor(n/2), sum of ceil(ceil((n-c+1)/2) / 2^(i+1)) for i < r)."""
    a, b = _lemma_terms(n, c)
    if r <= a or (1 << (r - a)) <= b:
        raise PreconditionViolation(
            f"r={r} does not exceed ceil(c/2) + log2 ceil((n-c+1)/2) for n={n}, c={c}"
        )
    return n // 2, sum(_ceil_div(b, 1 << (i + 1)) for i in range(r))


def alg_lemma_holds(n: int, c: int, r: int) -> bool:
    lhs, rhs = alg_lemma_sides(n, c, r)
    return lhs < rhs


@dataclass
class AlgLemmaReport:
    n_max: int
    cases: int = 0
    violations: List[Tuple[int, int, int]] = field(default_factory=list)

    def summary(self) -> str:
        return f"{len(self.violations)} violations / {self.cases} cases"

    def to_dict(self) -> Dict[str, object]:
        return {
            "n_max": self.n_max,
            "cases": self.cases,
            "violations": [list(v) for v in self.violations],
        }


def alg_lemma_sweep(n_max: int = 256) -> AlgLemmaReport:
    """Every 2 <= c <= n <= n_max at the least admissible r."""
    if n_max < 2:
        raise InvalidParameter(f"n_max must be >= 2, got {n_max}")
    report = AlgLemmaReport(n_max)
    with TimedOperation(logger, "alg_lemma_sweep") as op:
        for n in range(2, n_max + 1):
            for c in range(2, n + 1):
                r = alg_lemma_min_rank(n, c)
                report.cases += 1
                if not alg_lemma_holds(n, c, r):
                    report.violations.append((n, c, r))
        op.extra["cases"] = report.cases
    return report
