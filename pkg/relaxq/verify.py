"""
Validation of covers and placements, and the mechanical check of the
structure of tight covers on 4k+3 square boards.
"""

from dataclasses import dataclass, field
import logging

import numpy as np

from relaxq.board import BoardError, Cell, Line, hull_boundary, placement_lines

LOG = logging.getLogger(__name__)


class ContractError(BoardError):
    pass


def _board_axes(dims):
    # xs[y, x] == x, ys[y, x] == y
    return np.meshgrid(np.arange(dims.m), np.arange(dims.n))


def _mask(size, indices, offset=0):
    mask = np.zeros(size, dtype=bool)
    if indices:
        mask[np.fromiter(indices, dtype=np.int64) + offset] = True
    return mask


def _line_hits(cover, xs, ys):
    """
    Per-cell number of chosen lines through each cell, as an int array of the
    same shape as xs and ys.
    """
    dims = cover.dims
    rows = _mask(dims.n, cover.rows)
    cols = _mask(dims.m, cover.cols)
    sums = _mask(dims.m + dims.n - 1, cover.sums)
    diffs = _mask(dims.m + dims.n - 1, cover.diffs, offset=dims.n - 1)
    return (
        rows[ys].astype(np.int64)
        + cols[xs]
        + sums[xs + ys]
        + diffs[xs - ys + dims.n - 1]
    )


def uncovered_cells(cover):
    """
    Cells missed by every chosen line, row-major from the bottom row.
    """
    xs, ys = _board_axes(cover.dims)
    missed = _line_hits(cover, xs, ys) == 0
    return [Cell(int(x), int(y)) for x, y in zip(xs[missed], ys[missed])]


def is_relaxed_cover(cover):
    xs, ys = _board_axes(cover.dims)
    return bool((_line_hits(cover, xs, ys) > 0).all())


def _grid_axes(grid):
    return np.meshgrid(np.asarray(grid.cols), np.asarray(grid.rows))


def _diagonal_hits(dc, xs, ys):
    return np.isin(xs + ys, list(dc.sums)) | np.isin(xs - ys, list(dc.diffs))


def uncovered_grid_cells(grid, dc):
    xs, ys = _grid_axes(grid)
    missed = ~_diagonal_hits(dc, xs, ys)
    return [Cell(int(x), int(y)) for x, y in zip(xs[missed], ys[missed])]


def is_diagonal_cover(grid, dc):
    xs, ys = _grid_axes(grid)
    return bool(_diagonal_hits(dc, xs, ys).all())


def is_perfect_cover(grid, dc):
    """
    A diagonal cover using exactly (a+b-2)/2 diagonals of each kind on an
    a-column by b-row grid. Never true when a+b is odd.
    """
    total = grid.width + grid.height
    if total % 2:
        return False
    want = (total - 2) // 2
    if len(dc.sums) != want or len(dc.diffs) != want:
        return False
    return is_diagonal_cover(grid, dc)


def is_dominating_placement(placement):
    if not placement.queens:
        return False
    # queens attack along whole lines, so domination is coverage by their lines
    return is_relaxed_cover(placement_lines(placement))


def hull_hits(grid, dc):
    """
    Count, for every chosen diagonal, the hull boundary cells of the grid it
    passes through. Any diagonal meets the boundary at most twice.

    Returns:
      dict of Line to int, in sum-then-difference index order.
    """
    boundary = hull_boundary(grid)
    hits = {}
    for index in sorted(dc.sums):
        hits[Line.sum(index)] = sum(1 for c in boundary if c.x + c.y == index)
    for index in sorted(dc.diffs):
        hits[Line.diff(index)] = sum(1 for c in boundary if c.x - c.y == index)
    return hits


@dataclass
class TightReport:
    distinct_lines: bool = True
    u_is_square: bool = True
    edge_singly_covered: bool = True
    diagonals_hit_edge_twice: bool = True
    corner_antidiagonal_chosen_and_balanced: bool = True
    details: list = field(default_factory=list)

    FLAGS = (
        "distinct_lines",
        "u_is_square",
        "edge_singly_covered",
        "diagonals_hit_edge_twice",
        "corner_antidiagonal_chosen_and_balanced",
    )

    @property
    def holds(self):
        return all(getattr(self, flag) for flag in self.FLAGS)

    def fail(self, flag, message, *args):
        setattr(self, flag, False)
        self.details.append(message % args)


def _balanced(chosen, pivot):
    above = sum(1 for value in chosen if value > pivot)
    below = sum(1 for value in chosen if value < pivot)
    return above == below, above, below


def tight_analysis(cover, strict=True):
    """
    Evaluate the five structural properties every size (n-1)/2 cover of an
    n by n board, n = 4k+3, is known to have. U is the sub-board bounded by
    the leftmost and rightmost unchosen columns and the lowest and highest
    unchosen rows.

    Args:
      cover (RelaxedCover): The cover to analyse.
      strict (bool): Require the cover to be valid. Analysing a broken cover
        is only meaningful when testing that the properties detect it.
    """
    dims = cover.dims
    n = dims.n
    if dims.m != n or n % 4 != 3:
        raise ContractError("tight analysis needs a 4k+3 square board, got %s" % dims)
    p = (n - 1) // 2
    if cover.size != p:
        raise ContractError("tight analysis needs a size %d cover, got size %d" % (p, cover.size))
    if strict and not is_relaxed_cover(cover):
        raise ContractError("tight analysis needs a valid cover")

    report = TightReport()

    for name in ("rows", "cols", "sums", "diffs"):
        count = len(getattr(cover, name))
        if count != p:
            report.fail("distinct_lines", "%d distinct %s, expected %d", count, name, p)

    free_cols = [x for x in range(n) if x not in cover.cols]
    free_rows = [y for y in range(n) if y not in cover.rows]
    left, right = free_cols[0], free_cols[-1]
    bottom, top = free_rows[0], free_rows[-1]
    LOG.debug("U spans columns %d..%d and rows %d..%d", left, right, bottom, top)

    if right - left != top - bottom:
        report.fail(
            "u_is_square", "U is %d wide and %d tall", right - left + 1, top - bottom + 1
        )

    edge = sorted(
        {Cell(x, y) for x in range(left, right + 1) for y in (bottom, top)}
        | {Cell(x, y) for y in range(bottom, top + 1) for x in (left, right)}
    )
    xs = np.array([c.x for c in edge])
    ys = np.array([c.y for c in edge])
    hits = _line_hits(cover, xs, ys)
    for cell, count in zip(edge, hits):
        if count != 1:
            report.fail(
                "edge_singly_covered", "edge cell (%d, %d) covered %d times", cell.x, cell.y, count
            )

    for index in sorted(cover.sums):
        count = int(np.count_nonzero(xs + ys == index))
        if count != 2:
            report.fail("diagonals_hit_edge_twice", "sum %d meets %d edge cells", index, count)
    for index in sorted(cover.diffs):
        count = int(np.count_nonzero(xs - ys == index))
        if count != 2:
            report.fail("diagonals_hit_edge_twice", "diff %d meets %d edge cells", index, count)

    flag = "corner_antidiagonal_chosen_and_balanced"
    anti = left + top
    if anti != right + bottom:
        report.fail(flag, "no sum diagonal joins the top-left and bottom-right corners")
    elif anti not in cover.sums:
        report.fail(flag, "corner sum %d is not chosen", anti)
    else:
        ok, above, below = _balanced(cover.sums, anti)
        if not ok:
            report.fail(flag, "sums split %d above and %d below %d", above, below, anti)
    main = left - bottom
    if main != right - top:
        report.fail(flag, "no difference diagonal joins the bottom-left and top-right corners")
    elif main not in cover.diffs:
        report.fail(flag, "corner diff %d is not chosen", main)
    else:
        ok, above, below = _balanced(cover.diffs, main)
        if not ok:
            report.fail(flag, "diffs split %d above and %d below %d", above, below, main)

    return report
