"""
Symperiod Involutions -- involutions of small fixed-point codimension in the
image of a Z_2-torus embedding.

An element x of Z_2^r acts on the isotropy representation through its image
iota(x) in Z_2^m; its fixed set has codimension twice the image weight.
"""

from dataclasses import asdict, dataclass, field
from typing import Dict, List, Literal, Optional, Sequence, Tuple

import numpy as np

from symperiod.core.config import load_settings
from symperiod.core.errors import (
    InvalidParameter,
    NoEvenSubspace,
    NoSupport,
    RankDeficient,
    SubspaceTooSmall,
)
from symperiod.core.logging import TimedOperation, get_logger

from .gf2 import (
    LinearEmbedding,
    bits_of,
    gf2_nullspace,
    image_string,
    parity,
    scan_min_weight,
    weight,
)

logger = get_logger(__name__)

TrialKind = Literal["sigma", "tau"]


@dataclass(frozen=True)
class InvolutionCertificate:
    element: Tuple[int, ...]
    image: str
    weight: int
    codim: int
    even_weight: bool
    within_bound: bool
    subspace_dimension: int
    not_contained: Optional[bool] = None
    complement_even: Optional[bool] = None

    @property
    def flags_hold(self) -> bool:
        flags = [self.even_weight, self.within_bound, self.not_contained, self.complement_even]
        return all(f is not False for f in flags)

    def to_dict(self) -> Dict[str, object]:
        out = asdict(self)
        out["element"] = list(self.element)
        return out


def _within_bound(w: int, n: int, c: int) -> bool:
    # codim = 2w <= (n - c) / 2
    return 4 * w <= n - c


def _check_dimensions(e: LinearEmbedding, n: int, c: int) -> None:
    if e.m != n // 2:
        raise InvalidParameter(f"ambient length {e.m} must equal floor(n/2) = {n // 2}")
    if not n >= c >= 2:
        raise InvalidParameter(f"need n >= c >= 2, got n={n}, c={c}")


def _restricted_minimum(e: LinearEmbedding, functionals: Sequence[int]) -> Tuple[int, int]:
    """Minimal-weight nonzero element of the common kernel of ``functionals``."""
    basis = gf2_nullspace(functionals, e.r)
    sub_gen = np.array([e.image(u) for u in basis], dtype=np.uint8)
    best = scan_min_weight(sub_gen, labels=basis)
    return best.element, len(basis)


def find_sigma(e: LinearEmbedding, n: int, c: int) -> InvolutionCertificate:
    """Minimal image weight over the elements whose image has even weight."""
    _check_dimensions(e, n, c)
    if e.r < 2:
        raise NoEvenSubspace(f"rank {e.r} leaves no nonzero even-weight element guaranteed")
    total_parity = sum(parity(row) << j for j, row in enumerate(e.row_ints))
    element, dim = _restricted_minimum(e, [total_parity])
    image = e.image(element)
    w = weight(image)
    return InvolutionCertificate(
        element=bits_of(element, e.r),
        image=image_string(image),
        weight=w,
        codim=2 * w,
        even_weight=w % 2 == 0,
        within_bound=_within_bound(w, n, c),
        subspace_dimension=dim,
    )


def tau_flags(tau_image: str, sigma_image: str) -> Dict[str, bool]:
    """Flags of a second involution, re-derived from the raw image strings."""
    tau = [ch == "1" for ch in tau_image]
    sigma = [ch == "1" for ch in sigma_image]
    outside = sum(t for t, s in zip(tau, sigma) if not s)
    return {
        "not_contained": any(s and not t for t, s in zip(tau, sigma)),
        "even_weight": sum(tau) % 2 == 0,
        "complement_even": outside % 2 == 0,
    }


def find_tau(e: LinearEmbedding, sigma: InvolutionCertificate, n: int, c: int) -> InvolutionCertificate:
    """
    Minimal image weight over the elements whose image vanishes at the
    lowest support coordinate of sigma and has even weight both in total and
    on the complement of sigma's support.
    """
    _check_dimensions(e, n, c)
    if e.r < 4:
        raise SubspaceTooSmall(f"rank {e.r} is below 4")
    support = [k for k, ch in enumerate(sigma.image) if ch == "1"]
    if not support:
        raise NoSupport("sigma has empty support")
    i = support[0]
    complement = sum(1 << k for k, ch in enumerate(sigma.image) if ch == "0")

    rows = e.row_ints
    at_i = sum(((row >> i) & 1) << j for j, row in enumerate(rows))
    total = sum(parity(row) << j for j, row in enumerate(rows))
    outside = sum(parity(row & complement) << j for j, row in enumerate(rows))
    element, dim = _restricted_minimum(e, [at_i, total, outside])

    image = e.image(element)
    w = weight(image)
    flags = tau_flags(image_string(image), sigma.image)
    return InvolutionCertificate(
        element=bits_of(element, e.r),
        image=image_string(image),
        weight=w,
        codim=2 * w,
        even_weight=flags["even_weight"],
        within_bound=_within_bound(w, n, c),
        subspace_dimension=dim,
        not_contained=flags["not_contained"],
        complement_even=flags["complement_even"],
    )


def subgroup_codim(e: LinearEmbedding, elems: Sequence[Sequence[int]]) -> int:
    """Codimension of the joint fixed set: twice the weight of the OR of the images."""
    joint = np.zeros(e.m, dtype=np.uint8)
    for coeffs in elems:
        if len(coeffs) != e.r:
            raise InvalidParameter(f"element has {len(coeffs)} coefficients, expected {e.r}")
        element = sum(int(b) << j for j, b in enumerate(coeffs))
        joint |= e.image(element)
    return 2 * weight(joint)


# ─────────────────────────────────────────────────────────────
# Randomized trials
# ─────────────────────────────────────────────────────────────


def random_embedding(rng: np.random.Generator, r: int, m: int) -> LinearEmbedding:
    """Uniform full-rank r x m generator matrix (rejection sampling)."""
    if not 1 <= r <= m:
        raise InvalidParameter(f"need 1 <= r <= m, got r={r}, m={m}")
    while True:
        gen = rng.integers(0, 2, size=(r, m), dtype=np.uint8)
        try:
            return LinearEmbedding(gen)
        except RankDeficient:
            continue


@dataclass
class TrialReport:
    kind: str
    trials: int
    r: int
    m: int
    n: int
    c: int
    seed: int
    failures: List[int] = field(default_factory=list)
    max_weight: int = 0

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        return f"{self.kind}: {len(self.failures)} failures / {self.trials} trials (seed {self.seed})"

    def to_dict(self) -> Dict[str, object]:
        return asdict(self)


def run_trials(
    kind: TrialKind,
    trials: int,
    r: int,
    m: int,
    n: int,
    c: int,
    seed: Optional[int] = None,
) -> TrialReport:
    """Search random embeddings and record every trial whose certificate misses a flag."""
    if kind not in ("sigma", "tau"):
        raise InvalidParameter(f"trial kind must be 'sigma' or 'tau', got {kind!r}")
    if seed is None:
        seed = load_settings(dotenv=False).seed
    rng = np.random.default_rng(seed)
    report = TrialReport(kind, trials, r, m, n, c, seed)

    with TimedOperation(logger, f"{kind}_trials", trials=trials, seed=seed):
        for trial in range(trials):
            e = random_embedding(rng, r, m)
            cert = find_sigma(e, n, c)
            if kind == "tau":
                cert = find_tau(e, cert, n, c)
            report.max_weight = max(report.max_weight, cert.weight)
            if not cert.flags_hold:
                report.failures.append(trial)
                logger.warning("Trial certificate missed a flag", extra={"trials": trial, "seed": seed})
    return report
