"""
Symperiod GF(2) -- linear embeddings Z_2^r -> Z_2^m and exhaustive codeword scans.

Generators are stored as an (r, m) uint8 array of 0/1 entries. Message
``u`` (an int, bit j set when generator j is used) maps to the XOR of the
selected rows. Scans enumerate all 2^r messages with a table of the low
messages built by doubling, then sweep the high part.
"""

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from symperiod.core.errors import InvalidParameter, MatrixFormatError, RankDeficient
from symperiod.core.parallel import parallel_map

MAX_LENGTH = 512
MAX_SCAN_RANK = 24
LOW_BITS = 16

_POPCOUNT = np.array([bin(i).count("1") for i in range(256)], dtype=np.uint16)


# ─────────────────────────────────────────────────────────────
# Bit-vector helpers
# ─────────────────────────────────────────────────────────────


def gf2_rank(rows: Iterable[int]) -> int:
    """Rank over GF(2) of row vectors given as int bitmasks."""
    pivots: List[int] = []
    for row in rows:
        for p in pivots:
            row = min(row, row ^ p)
        if row:
            pivots.append(row)
    return len(pivots)


def gf2_nullspace(functionals: Sequence[int], r: int) -> List[int]:
    """
    Basis of {u in Z_2^r : parity(u & a) = 0 for every a in functionals}.
    Vectors are int bitmasks; bit j is coordinate j.
    """
    pivot_rows: List[Tuple[int, int]] = []
    for a in functionals:
        for bit, row in pivot_rows:
            if (a >> bit) & 1:
                a ^= row
        if a:
            bit = a.bit_length() - 1
            pivot_rows = [(b, row ^ a if (row >> bit) & 1 else row) for b, row in pivot_rows]
            pivot_rows.append((bit, a))
    pivots = {bit: row for bit, row in pivot_rows}
    basis = []
    for free in range(r):
        if free in pivots:
            continue
        u = 1 << free
        for bit, row in pivots.items():
            if (row >> free) & 1:
                u |= 1 << bit
        basis.append(u)
    return basis


def parity(x: int) -> int:
    return bin(x).count("1") & 1


def bits_of(x: int, width: int) -> Tuple[int, ...]:
    return tuple((x >> j) & 1 for j in range(width))


# ─────────────────────────────────────────────────────────────
# LinearEmbedding
# ─────────────────────────────────────────────────────────────


@dataclass(frozen=True, eq=False)
class LinearEmbedding:
    """Full-rank r x m generator matrix over GF(2)."""

    gen: np.ndarray

    def __post_init__(self):
        gen = np.asarray(self.gen, dtype=np.uint8)
        if gen.ndim != 2 or gen.shape[0] == 0 or gen.shape[1] == 0:
            raise InvalidParameter(f"generator matrix must be a nonempty 2-D array, got shape {gen.shape}")
        if np.any(gen > 1):
            raise InvalidParameter("generator entries must be 0 or 1")
        if gen.shape[1] > MAX_LENGTH:
            raise InvalidParameter(f"ambient length {gen.shape[1]} exceeds {MAX_LENGTH}")
        gen = gen.copy()
        gen.setflags(write=False)
        object.__setattr__(self, "gen", gen)
        rank = gf2_rank(self.row_ints)
        if rank != self.r:
            raise RankDeficient(f"{self.r} generators span only rank {rank}")

    @classmethod
    def from_rows(cls, rows: Sequence[str]) -> "LinearEmbedding":
        return cls(np.array([[int(ch) for ch in row] for row in rows], dtype=np.uint8))

    @property
    def r(self) -> int:
        return int(self.gen.shape[0])

    @property
    def m(self) -> int:
        return int(self.gen.shape[1])

    @property
    def row_ints(self) -> List[int]:
        """Rows as bitmasks with coordinate k at bit k."""
        weights = 1 << np.arange(self.m, dtype=object)
        return [int((row.astype(object) * weights).sum()) for row in self.gen]

    def image(self, element: int) -> np.ndarray:
        selected = [j for j in range(self.r) if (element >> j) & 1]
        if not selected:
            return np.zeros(self.m, dtype=np.uint8)
        return (self.gen[selected].sum(axis=0) % 2).astype(np.uint8)

    def rows(self) -> List[str]:
        return ["".join(str(int(b)) for b in row) for row in self.gen]

    def __eq__(self, other) -> bool:
        return isinstance(other, LinearEmbedding) and np.array_equal(self.gen, other.gen)

    def __hash__(self) -> int:
        return hash(self.gen.tobytes() + bytes(self.gen.shape))


def image_string(vector: np.ndarray) -> str:
    return "".join(str(int(b)) for b in vector)


def weight(vector: np.ndarray) -> int:
    return int(np.count_nonzero(vector))


# ─────────────────────────────────────────────────────────────
# Codeword scans
# ─────────────────────────────────────────────────────────────


@dataclass(frozen=True)
class ScanResult:
    element: int
    weight: int


def _span_table(packed: np.ndarray, labels: Sequence[int]) -> Tuple[np.ndarray, np.ndarray]:
    """All XOR combinations of ``packed`` rows, with the matching XOR of ``labels``."""
    words = np.zeros((1, packed.shape[1]), dtype=np.uint8)
    tags = np.zeros(1, dtype=np.int64)
    for row, label in zip(packed, labels):
        words = np.concatenate([words, words ^ row])
        tags = np.concatenate([tags, tags ^ label])
    return words, tags


def scan_min_weight(
    gen: np.ndarray,
    labels: Optional[Sequence[int]] = None,
    workers: int = 1,
) -> ScanResult:
    """
    Minimal image weight over the nonzero messages of ``gen``. Ties go to
    the smallest label, where the label of a message is the XOR of the
    labels of its rows (by default the message index itself).
    """
    k = int(gen.shape[0])
    if k == 0:
        raise InvalidParameter("cannot scan an empty generator set")
    if k > MAX_SCAN_RANK:
        raise InvalidParameter(f"exhaustive scans are limited to rank {MAX_SCAN_RANK}, got {k}")
    if labels is None:
        labels = [1 << j for j in range(k)]
    packed = np.packbits(np.asarray(gen, dtype=np.uint8), axis=1)
    low = min(k, LOW_BITS)
    low_words, low_tags = _span_table(packed[:low], labels[:low])
    low_weights = _POPCOUNT[low_words].sum(axis=1, dtype=np.int64)

    high_rows, high_labels = packed[low:], list(labels[low:])

    def best_for(high: int) -> Tuple[int, int]:
        offset = np.zeros(packed.shape[1], dtype=np.uint8)
        tag = 0
        for j in range(len(high_rows)):
            if (high >> j) & 1:
                offset ^= high_rows[j]
                tag ^= high_labels[j]
        if high == 0:
            weights, tags = low_weights[1:], low_tags[1:]
        else:
            weights = _POPCOUNT[low_words ^ offset].sum(axis=1, dtype=np.int64)
            tags = low_tags ^ tag
        w = int(weights.min())
        return w, int(tags[weights == w].min())

    results = parallel_map(best_for, range(1 << len(high_rows)), workers)
    w, element = min(results)
    return ScanResult(element, w)


def weight_distribution(e: LinearEmbedding) -> np.ndarray:
    """Weights of all 2^r codewords, indexed by message (r <= 16)."""
    if e.r > LOW_BITS:
        raise InvalidParameter(f"weight distributions are limited to rank {LOW_BITS}")
    words, _ = _span_table(np.packbits(e.gen, axis=1), [1 << j for j in range(e.r)])
    return _POPCOUNT[words].sum(axis=1, dtype=np.int64)


def min_weight(e: LinearEmbedding, workers: int = 1) -> int:
    return scan_min_weight(e.gen, workers=workers).weight


# ─────────────────────────────────────────────────────────────
# Matrix files
# ─────────────────────────────────────────────────────────────


def parse_matrix(text: str) -> LinearEmbedding:
    rows = [line.strip() for line in text.splitlines() if line.strip()]
    if not rows:
        raise MatrixFormatError("matrix file has no rows")
    width = len(rows[0])
    for number, row in enumerate(rows, start=1):
        if set(row) - {"0", "1"}:
            raise MatrixFormatError(f"row {number} contains characters other than 0 and 1")
        if len(row) != width:
            raise MatrixFormatError(f"row {number} has length {len(row)}, expected {width}")
    try:
        return LinearEmbedding.from_rows(rows)
    except InvalidParameter as exc:
        raise MatrixFormatError(str(exc)) from exc


def read_matrix(path: Union[str, Path]) -> LinearEmbedding:
    return parse_matrix(Path(path).read_text(encoding="ascii"))


def write_matrix(e: LinearEmbedding, path: Union[str, Path]) -> None:
    Path(path).write_text("".join(row + "\n" for row in e.rows()), encoding="ascii")
