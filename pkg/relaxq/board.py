"""
Board geometry: cells, lines, relaxed covers, spaced grids and the hull
boundary set that the counting arguments are built on.

Columns are numbered left to right (x) and rows bottom to top (y). A sum
diagonal fixes x+y, a difference diagonal fixes x-y; difference indices are
kept signed.
"""

from dataclasses import dataclass, field
import enum
import logging
from typing import NamedTuple

LOG = logging.getLogger(__name__)


class BoardError(ValueError):
    pass


class RangeError(BoardError):
    pass


class EmptyGridError(BoardError):
    pass


class ArgumentError(BoardError):
    pass


class LineKind(enum.Enum):
    ROW = "row"
    COL = "col"
    SUM = "sum"
    DIFF = "diff"


class Cell(NamedTuple):
    x: int
    y: int


class Line(NamedTuple):
    kind: LineKind
    index: int

    @classmethod
    def row(cls, index):
        return cls(LineKind.ROW, index)

    @classmethod
    def col(cls, index):
        return cls(LineKind.COL, index)

    @classmethod
    def sum(cls, index):
        return cls(LineKind.SUM, index)

    @classmethod
    def diff(cls, index):
        return cls(LineKind.DIFF, index)


@dataclass(frozen=True, order=True)
class BoardDims:
    """
    An m-column by n-row board.
    """

    m: int
    n: int

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise RangeError("board dimensions must be positive, got %dx%d" % (self.m, self.n))

    def __contains__(self, cell):
        return 0 <= cell[0] < self.m and 0 <= cell[1] < self.n

    def __str__(self):
        return "%dx%d" % (self.m, self.n)

    def cells(self):
        """
        All cells, row-major from the bottom row.
        """
        return [Cell(x, y) for y in range(self.n) for x in range(self.m)]


def line_range(dims, kind):
    """
    The valid index range of a line kind on a board.
    """
    if kind is LineKind.ROW:
        return range(dims.n)
    if kind is LineKind.COL:
        return range(dims.m)
    if kind is LineKind.SUM:
        return range(dims.m + dims.n - 1)
    return range(-(dims.n - 1), dims.m)


def _check_indices(dims, kind, indices):
    valid = line_range(dims, kind)
    for index in indices:
        if index not in valid:
            raise RangeError(
                "%s index %d out of range [%d, %d] on a %s board"
                % (kind.value, index, valid.start, valid.stop - 1, dims)
            )


def line_cells(dims, line):
    """
    All on-board cells of a line, sorted by x (then y).
    """
    kind, index = line
    _check_indices(dims, kind, (index,))
    if kind is LineKind.ROW:
        return [Cell(x, index) for x in range(dims.m)]
    if kind is LineKind.COL:
        return [Cell(index, y) for y in range(dims.n)]
    if kind is LineKind.SUM:
        low = max(0, index - (dims.n - 1))
        high = min(dims.m - 1, index)
        return [Cell(x, index - x) for x in range(low, high + 1)]
    low = max(0, index)
    high = min(dims.m - 1, dims.n - 1 + index)
    return [Cell(x, x - index) for x in range(low, high + 1)]


def covers(line, cell):
    kind, index = line
    x, y = cell
    if kind is LineKind.ROW:
        return y == index
    if kind is LineKind.COL:
        return x == index
    if kind is LineKind.SUM:
        return x + y == index
    return x - y == index


@dataclass(frozen=True)
class RelaxedCover:
    """
    A choice of rows, columns, sum diagonals and difference diagonals on a
    board. The size of a cover is the largest of the four counts, since the
    relaxed problem asks for p lines of each kind.
    """

    dims: BoardDims
    rows: frozenset = field(default_factory=frozenset)
    cols: frozenset = field(default_factory=frozenset)
    sums: frozenset = field(default_factory=frozenset)
    diffs: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        for name, kind in (
            ("rows", LineKind.ROW),
            ("cols", LineKind.COL),
            ("sums", LineKind.SUM),
            ("diffs", LineKind.DIFF),
        ):
            values = frozenset(getattr(self, name))
            _check_indices(self.dims, kind, values)
            object.__setattr__(self, name, values)

    @property
    def size(self):
        return max(len(self.rows), len(self.cols), len(self.sums), len(self.diffs))

    def lines(self):
        """
        Every chosen line, grouped by kind and sorted by index.
        """
        return (
            [Line.row(i) for i in sorted(self.rows)]
            + [Line.col(i) for i in sorted(self.cols)]
            + [Line.sum(i) for i in sorted(self.sums)]
            + [Line.diff(i) for i in sorted(self.diffs)]
        )

    def sort_key(self):
        return (
            tuple(sorted(self.rows)),
            tuple(sorted(self.cols)),
            tuple(sorted(self.sums)),
            tuple(sorted(self.diffs)),
        )

    def replace(self, **changes):
        values = {
            "dims": self.dims,
            "rows": self.rows,
            "cols": self.cols,
            "sums": self.sums,
            "diffs": self.diffs,
        }
        values.update(changes)
        return RelaxedCover(**values)


def _strictly_increasing(values):
    return all(a < b for a, b in zip(values, values[1:]))


@dataclass(frozen=True)
class SpacedGrid:
    """
    The cells lying on one of a set of columns and one of a set of rows.
    Coordinates are arbitrary integers, so a grid may be centred on the
    origin.
    """

    cols: tuple
    rows: tuple

    def __post_init__(self):
        cols = tuple(self.cols)
        rows = tuple(self.rows)
        if not cols or not rows:
            raise EmptyGridError("a spaced grid needs at least one column and one row")
        if not _strictly_increasing(cols) or not _strictly_increasing(rows):
            raise ArgumentError("spaced grid coordinates must be strictly increasing")
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "rows", rows)

    @classmethod
    def consecutive(cls, width, height):
        return cls(tuple(range(width)), tuple(range(height)))

    @classmethod
    def uniform(cls, p, d):
        """
        A p-by-p grid with spacing d, symmetric about both axes.
        """
        if p < 1 or d < 1:
            raise ArgumentError("uniform grid needs p >= 1 and d >= 1")
        if ((p - 1) * d) % 2:
            raise ArgumentError("a %d-line grid with spacing %d has no integral centre" % (p, d))
        coords = tuple((2 * i - p + 1) * d // 2 for i in range(p))
        return cls(coords, coords)

    @property
    def width(self):
        return len(self.cols)

    @property
    def height(self):
        return len(self.rows)

    @property
    def bounds(self):
        """
        (left, right, bottom, top) of the bounding box.
        """
        return self.cols[0], self.cols[-1], self.rows[0], self.rows[-1]

    def cells(self):
        return [Cell(x, y) for y in self.rows for x in self.cols]

    def __len__(self):
        return self.width * self.height

    def __contains__(self, cell):
        return cell[0] in self.cols and cell[1] in self.rows

    def translated(self, dx, dy):
        return SpacedGrid(
            tuple(x + dx for x in self.cols), tuple(y + dy for y in self.rows)
        )

    def recentred(self):
        left, right, bottom, top = self.bounds
        if (left + right) % 2 or (bottom + top) % 2:
            raise ArgumentError("grid %r has no integral centre" % (self,))
        return self.translated(-(left + right) // 2, -(bottom + top) // 2)


def uncovered_grid(dims, rows, cols):
    """
    The spaced grid of cells missed by a choice of rows and columns.
    """
    _check_indices(dims, LineKind.ROW, rows)
    _check_indices(dims, LineKind.COL, cols)
    free_cols = tuple(x for x in range(dims.m) if x not in cols)
    free_rows = tuple(y for y in range(dims.n) if y not in rows)
    if not free_cols or not free_rows:
        raise EmptyGridError("every %s of the %s board is chosen" % (
            "column" if not free_cols else "row", dims))
    return SpacedGrid(free_cols, free_rows)


def hull_boundary(grid):
    """
    The grid cells touching the boundary of the grid's convex hull: those in
    an extreme column or an extreme row. Any diagonal meets at most two of
    them.
    """
    left, right, bottom, top = grid.bounds
    return {
        cell
        for cell in grid.cells()
        if cell.x in (left, right) or cell.y in (bottom, top)
    }


@dataclass(frozen=True)
class QueenPlacement:
    dims: BoardDims
    queens: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        queens = frozenset(Cell(*queen) for queen in self.queens)
        for queen in queens:
            if queen not in self.dims:
                raise RangeError("queen %s is off the %s board" % (tuple(queen), self.dims))
        object.__setattr__(self, "queens", queens)

    def __len__(self):
        return len(self.queens)


def placement_lines(placement):
    """
    The rows, columns and diagonals occupied by a placement's queens.
    """
    queens = placement.queens
    return RelaxedCover(
        placement.dims,
        rows={q.y for q in queens},
        cols={q.x for q in queens},
        sums={q.x + q.y for q in queens},
        diffs={q.x - q.y for q in queens},
    )
