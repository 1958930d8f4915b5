"""
Explicit covers that meet every closed-form bound: parity bishop covers,
square and rectangular relaxed queen covers, and the Q_e family of perfect
covers on uniformly spaced grids.
"""

from dataclasses import dataclass, field
import functools
import logging

from relaxq import bounds
from relaxq.board import (
    ArgumentError,
    BoardDims,
    LineKind,
    RangeError,
    RelaxedCover,
    SpacedGrid,
    line_range,
)

LOG = logging.getLogger(__name__)


@dataclass(frozen=True)
class DiagonalCover:
    sums: frozenset = field(default_factory=frozenset)
    diffs: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "sums", frozenset(self.sums))
        object.__setattr__(self, "diffs", frozenset(self.diffs))

    @property
    def size(self):
        return max(len(self.sums), len(self.diffs))

    def sort_key(self):
        return tuple(sorted(self.sums)), tuple(sorted(self.diffs))


def _parity_cover(m, n):
    # odd sums and even differences; on an even board every cell has one
    return DiagonalCover(
        sums=(s for s in line_range(BoardDims(m, n), LineKind.SUM) if s % 2 == 1),
        diffs=(d for d in line_range(BoardDims(m, n), LineKind.DIFF) if d % 2 == 0),
    )


def bishop_cover(m, n):
    """
    Cover an m by n board with alpha_rect(m, n) diagonals of each kind.
    Odd dimensions are rounded up to the next even board and the parity cover
    of that board is restricted back.
    """
    dims = BoardDims(m, n)
    cover = _parity_cover(m + m % 2, n + n % 2)
    return restrict_cover(cover, dims)


def _top_right_cover(m, n, p):
    """
    Choose the top p rows and the right p columns and cover the remaining
    bottom-left block with a bishop cover.
    """
    dims = BoardDims(m, n)
    rows = range(n - p, n)
    cols = range(m - p, m)
    if p >= m or p >= n:
        # the lines alone exhaust the board
        return RelaxedCover(dims, rows=range(max(0, n - p), n), cols=range(max(0, m - p), m))
    diagonals = bishop_cover(m - p, n - p)
    return RelaxedCover(dims, rows=rows, cols=cols, sums=diagonals.sums, diffs=diagonals.diffs)


def square_queen_cover(n):
    return _top_right_cover(n, n, bounds.beta_square(n))


def critical_embedding(m, n):
    """
    Grow a non-trivial board into an easy critical one without changing its
    beta value, adding at most 4 to the combined dimensions.

    Args:
      m (int): Column count.
      n (int): Row count.

    Returns:
      (M, N) with M >= m and N >= n. Easy critical boards map to themselves.
    """
    if bounds.is_trivial(m, n):
        raise ArgumentError("%dx%d is a trivial board and has no critical embedding" % (m, n))
    if bounds.is_easy_critical(m, n):
        return m, n

    step = (2 - (m + n)) % 4 or 4
    target = m + n + step
    # easy critical: even dims with sum 2 mod 8, odd dims with sum 6 mod 8
    parity = 0 if target % 8 == 2 else 1

    candidates = []
    for grow_m in range(step + 1):
        grow_n = step - grow_m
        if (m + grow_m) % 2 != parity or (n + grow_n) % 2 != parity:
            continue
        big_m, big_n = m + grow_m, n + grow_n
        candidates.append((abs(grow_m - grow_n), abs(big_m - big_n), -grow_m, big_m, big_n))

    want = bounds.beta_rect(m, n)
    for *_, big_m, big_n in sorted(candidates):
        if (
            bounds.is_easy_critical(big_m, big_n)
            and not bounds.is_trivial(big_m, big_n)
            and bounds.beta_rect(big_m, big_n) == want
        ):
            LOG.debug("embedding %dx%d into %dx%d", m, n, big_m, big_n)
            return big_m, big_n
    raise RuntimeError("no easy critical embedding found for %dx%d" % (m, n))


def rect_queen_cover(m, n):
    """
    Cover an m by n board with beta_rect(m, n) lines of each kind.
    """
    dims = BoardDims(m, n)
    if bounds.is_trivial(m, n):
        if n <= m:
            return RelaxedCover(dims, rows=range(n))
        return RelaxedCover(dims, cols=range(m))

    big_m, big_n = critical_embedding(m, n)
    p = (big_m + big_n - 2) // 4
    cover = _top_right_cover(big_m, big_n, p)
    if (big_m, big_n) != (m, n):
        cover = restrict_cover(cover, dims)
    return cover


@functools.singledispatch
def restrict_cover(cover, dims):
    """
    Restrict a cover to the sub-board of the given dimensions anchored at the
    origin. Lines that miss the sub-board are dropped; coverage of the
    sub-board is preserved and the size never grows.
    """
    raise TypeError("cannot restrict %s" % type(cover).__name__)


@restrict_cover.register
def _(cover: RelaxedCover, dims):
    if dims.m > cover.dims.m or dims.n > cover.dims.n:
        raise RangeError("cannot restrict a %s cover to a larger %s board" % (cover.dims, dims))
    return RelaxedCover(
        dims,
        rows=(i for i in cover.rows if i in line_range(dims, LineKind.ROW)),
        cols=(i for i in cover.cols if i in line_range(dims, LineKind.COL)),
        sums=(i for i in cover.sums if i in line_range(dims, LineKind.SUM)),
        diffs=(i for i in cover.diffs if i in line_range(dims, LineKind.DIFF)),
    )


@restrict_cover.register
def _(cover: DiagonalCover, dims):
    return DiagonalCover(
        sums=(i for i in cover.sums if i in line_range(dims, LineKind.SUM)),
        diffs=(i for i in cover.diffs if i in line_range(dims, LineKind.DIFF)),
    )


@dataclass(frozen=True)
class QeFamily:
    """
    The symmetric diagonal sets {0, ±d, ..., ±ed, ±(e+2)d, ±(e+4)d, ...,
    ±(2k-e)d} that are exactly the perfect covers of the uniformly spaced
    grid with 2k+2 rows and columns and spacing d.
    """

    k: int
    e: int
    d: int = 2

    def __post_init__(self):
        if self.k < 0 or not 0 <= self.e <= self.k:
            raise ArgumentError("Q_e needs 0 <= e <= k, got k=%d e=%d" % (self.k, self.e))
        if self.d < 1 or self.d % 2:
            raise ArgumentError("Q_e needs an even positive spacing, got d=%d" % self.d)

    @property
    def values(self):
        multiples = list(range(1, self.e + 1)) + list(
            range(self.e + 2, 2 * self.k - self.e + 1, 2)
        )
        values = {0}
        for multiple in multiples:
            values.update((multiple * self.d, -multiple * self.d))
        return frozenset(values)

    def cover(self):
        return DiagonalCover(sums=self.values, diffs=self.values)

    def grid(self):
        return uniform_grid(self.k, self.d)


def uniform_grid(k, d=2):
    return SpacedGrid.uniform(2 * k + 2, d)


def uniform_grid_Qe(k, e, d=2):  # noqa: N802
    return QeFamily(k, e, d).cover()


def tight_square_cover(n, e):
    """
    A size (n-1)/2 cover of an n by n board, n = 4k+3, built from Q_e: the
    rows and columns with even centred coordinate are chosen, which leaves
    the uniform grid of odd centred coordinates for the diagonals.
    """
    if n < 3 or n % 4 != 3:
        raise ArgumentError("tight square covers exist for n = 4k+3, got %d" % n)
    k = (n - 3) // 4
    centre = 2 * k + 1
    family = QeFamily(k, e, 2)
    chosen = [i for i in range(n) if (i - centre) % 2 == 0]
    return RelaxedCover(
        BoardDims(n, n),
        rows=chosen,
        cols=chosen,
        sums={value + 2 * centre for value in family.values},
        diffs=family.values,
    )
