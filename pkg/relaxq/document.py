"""
The CoverDocument text format: one `key: value` line per field, integer
arrays space separated and sorted ascending.
"""

from dataclasses import dataclass
import logging
import sys

from relaxq.board import (
    BoardDims,
    BoardError,
    QueenPlacement,
    RelaxedCover,
    SpacedGrid,
    placement_lines,
)
from relaxq.constructions import DiagonalCover

LOG = logging.getLogger(__name__)

SCHEMA_VERSION = 1

RELAXED_QUEEN = "relaxed-queen"
BISHOP = "bishop"
SPACED_GRID = "spaced-grid"
PLACEMENT = "placement"
KINDS = (RELAXED_QUEEN, BISHOP, SPACED_GRID, PLACEMENT)

_ARRAYS = ("rows", "cols", "sums", "diffs")
_GRID_ARRAYS = ("grid_cols", "grid_rows")
_HEADER = ("schema_version", "kind", "m", "n")
_KIND_FIELDS = {
    RELAXED_QUEEN: _ARRAYS,
    BISHOP: _ARRAYS,
    SPACED_GRID: _ARRAYS + _GRID_ARRAYS,
    PLACEMENT: ("queens",),
}


class DocumentError(ValueError):
    def __init__(self, message, lineno=None, field=None):
        self.lineno = lineno
        self.field = field
        if lineno is not None:
            message = "line %d: %s" % (lineno, message)
        super().__init__(message)


def _parse_ints(value, lineno, name):
    try:
        return [int(token) for token in value.split()]
    except ValueError:
        raise DocumentError("%s must be a list of integers, got %r" % (name, value), lineno, name)


def _parse_queens(value, lineno):
    queens = []
    for token in value.split():
        try:
            x, y = token.split(",")
            queens.append((int(x), int(y)))
        except ValueError:
            raise DocumentError("queens must be x,y pairs, got %r" % token, lineno, "queens")
    return queens


def _canonical(values, name):
    canonical = sorted(set(values))
    if canonical != list(values):
        LOG.warning("%s were not sorted and distinct, normalising", name)
    return tuple(canonical)


@dataclass(frozen=True)
class CoverDocument:
    """
    A serialisable cover, diagonal cover, spaced grid cover or queen
    placement. For spaced-grid documents m and n are the grid's column and
    row counts.
    """

    kind: str
    m: int
    n: int
    rows: tuple = ()
    cols: tuple = ()
    sums: tuple = ()
    diffs: tuple = ()
    grid_cols: tuple = ()
    grid_rows: tuple = ()
    queens: tuple = ()
    schema_version: int = SCHEMA_VERSION

    def __post_init__(self):
        if self.kind not in KINDS:
            raise DocumentError("unknown kind %r" % self.kind, field="kind")
        for name in _ARRAYS + _GRID_ARRAYS:
            object.__setattr__(self, name, tuple(sorted(set(getattr(self, name)))))
        object.__setattr__(self, "queens", tuple(sorted(set(tuple(q) for q in self.queens))))

    @classmethod
    def from_cover(cls, cover):
        return cls(
            RELAXED_QUEEN,
            cover.dims.m,
            cover.dims.n,
            rows=cover.rows,
            cols=cover.cols,
            sums=cover.sums,
            diffs=cover.diffs,
        )

    @classmethod
    def from_diagonals(cls, dims, diagonals):
        return cls(BISHOP, dims.m, dims.n, sums=diagonals.sums, diffs=diagonals.diffs)

    @classmethod
    def from_grid(cls, grid, diagonals):
        return cls(
            SPACED_GRID,
            grid.width,
            grid.height,
            sums=diagonals.sums,
            diffs=diagonals.diffs,
            grid_cols=grid.cols,
            grid_rows=grid.rows,
        )

    @classmethod
    def from_placement(cls, placement):
        return cls(PLACEMENT, placement.dims.m, placement.dims.n, queens=placement.queens)

    @property
    def dims(self):
        return BoardDims(self.m, self.n)

    def to_cover(self):
        """
        The document as a RelaxedCover. Bishop documents have no rows or
        columns; placement documents give the lines through their queens.
        """
        if self.kind == SPACED_GRID:
            raise DocumentError("a spaced-grid document has no board cover", field="kind")
        if self.kind == PLACEMENT:
            return placement_lines(self.to_placement())
        return RelaxedCover(
            self.dims, rows=self.rows, cols=self.cols, sums=self.sums, diffs=self.diffs
        )

    def to_diagonals(self):
        return DiagonalCover(self.sums, self.diffs)

    def to_grid(self):
        return SpacedGrid(self.grid_cols, self.grid_rows)

    def to_placement(self):
        return QueenPlacement(self.dims, self.queens)

    def validate(self):
        """
        Build the domain object the document describes, turning any range or
        shape problem into a DocumentError.
        """
        try:
            if self.kind == SPACED_GRID:
                grid = self.to_grid()
                if (grid.width, grid.height) != (self.m, self.n):
                    raise DocumentError(
                        "grid is %dx%d but the document says %dx%d"
                        % (grid.width, grid.height, self.m, self.n),
                        field="m",
                    )
                return grid
            if self.kind == PLACEMENT:
                return self.to_placement()
            return self.to_cover()
        except BoardError as exc:
            raise DocumentError(str(exc)) from exc

    def to_string(self):
        lines = [
            "schema_version: %d" % self.schema_version,
            "kind: %s" % self.kind,
            "m: %d" % self.m,
            "n: %d" % self.n,
        ]
        if self.kind == SPACED_GRID:
            for name in _GRID_ARRAYS:
                lines.append(_array_line(name, getattr(self, name)))
        if self.kind == PLACEMENT:
            lines.append(
                ("queens: " + " ".join("%d,%d" % q for q in self.queens)).rstrip()
            )
        else:
            for name in _ARRAYS:
                lines.append(_array_line(name, getattr(self, name)))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_string(cls, contents):
        """
        Parse a document. Blank lines and lines starting with # are skipped.
        Array fields may be omitted and default to empty.
        """
        values = {}
        seen = {}
        for lineno, line in enumerate(contents.splitlines(), start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if ":" not in line:
                raise DocumentError("expected 'key: value', got %r" % line, lineno)
            key, value = (part.strip() for part in line.split(":", 1))
            if key in seen:
                raise DocumentError("duplicate field %s" % key, lineno, key)
            seen[key] = lineno

            if key in ("schema_version", "m", "n"):
                try:
                    values[key] = int(value)
                except ValueError:
                    raise DocumentError("%s must be an integer, got %r" % (key, value), lineno, key)
            elif key == "kind":
                if value not in KINDS:
                    raise DocumentError("unknown kind %r" % value, lineno, key)
                values[key] = value
            elif key in _ARRAYS or key in _GRID_ARRAYS:
                values[key] = _canonical(_parse_ints(value, lineno, key), key)
            elif key == "queens":
                values[key] = _parse_queens(value, lineno)
            else:
                raise DocumentError("unknown field %s" % key, lineno, key)

        for key in _HEADER:
            if key not in values:
                raise DocumentError("missing field %s" % key, field=key)
        allowed = _KIND_FIELDS[values["kind"]]
        for key, lineno in seen.items():
            if key not in _HEADER and key not in allowed:
                raise DocumentError(
                    "field %s does not belong to a %s document" % (key, values["kind"]), lineno, key
                )
        if values["schema_version"] != SCHEMA_VERSION:
            raise DocumentError(
                "unsupported schema_version %d" % values["schema_version"],
                seen["schema_version"],
                "schema_version",
            )
        if values["m"] < 1 or values["n"] < 1:
            raise DocumentError("m and n must be positive", seen["m"], "m")

        document = cls(**values)
        document.validate()
        return document


def _array_line(name, values):
    return ("%s: %s" % (name, " ".join(str(v) for v in values))).rstrip()


def read_document(path):
    """
    Read a document from a path, or from standard input when path is "-".
    """
    if path == "-":
        return CoverDocument.from_string(sys.stdin.read())
    with open(path, "rt") as fh:
        return CoverDocument.from_string(fh.read())
