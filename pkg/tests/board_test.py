import pytest

from relaxq.board import (
    ArgumentError,
    BoardDims,
    Cell,
    EmptyGridError,
    Line,
    LineKind,
    QueenPlacement,
    RangeError,
    RelaxedCover,
    SpacedGrid,
    covers,
    hull_boundary,
    line_cells,
    line_range,
    placement_lines,
    uncovered_grid,
)


def test_line_ranges():
    dims = BoardDims(3, 2)
    assert range(2) == line_range(dims, LineKind.ROW)
    assert range(3) == line_range(dims, LineKind.COL)
    assert range(0, 4) == line_range(dims, LineKind.SUM)
    assert range(-1, 3) == line_range(dims, LineKind.DIFF)


def test_line_cells():
    dims = BoardDims(3, 3)
    assert [Cell(0, 2), Cell(1, 1), Cell(2, 0)] == line_cells(dims, Line.sum(2))
    assert [Cell(0, 1), Cell(1, 2)] == line_cells(dims, Line.diff(-1))
    assert [Cell(0, 1), Cell(1, 1), Cell(2, 1)] == line_cells(dims, Line.row(1))
    assert all(covers(Line.diff(-1), cell) for cell in line_cells(dims, Line.diff(-1)))


def test_bad_dims():
    with pytest.raises(RangeError):
        BoardDims(0, 3)


def test_cover_index_out_of_range():
    with pytest.raises(RangeError):
        RelaxedCover(BoardDims(3, 3), sums=[5])
    with pytest.raises(RangeError):
        RelaxedCover(BoardDims(3, 3), diffs=[-3])


def test_cover_size_is_largest_kind():
    cover = RelaxedCover(BoardDims(4, 4), rows=[0, 1], sums=[1, 2, 3])
    assert 3 == cover.size
    assert [Line.row(0), Line.row(1), Line.sum(1), Line.sum(2), Line.sum(3)] == cover.lines()


def test_uniform_grid_is_centred():
    assert (-3, -1, 1, 3) == SpacedGrid.uniform(4, 2).cols
    assert (-1, 0, 1) == SpacedGrid.uniform(3, 1).rows
    with pytest.raises(ArgumentError):
        SpacedGrid.uniform(2, 1)


def test_grid_errors():
    with pytest.raises(EmptyGridError):
        SpacedGrid((), (0, 1))
    with pytest.raises(ArgumentError):
        SpacedGrid((0, 0, 1), (0,))


def test_recentred():
    grid = SpacedGrid((2, 4, 8), (1, 5))
    assert SpacedGrid((-3, -1, 3), (-2, 2)) == grid.recentred()


def test_uncovered_grid():
    grid = uncovered_grid(BoardDims(5, 4), rows={1, 3}, cols={0, 4})
    assert (1, 2, 3) == grid.cols
    assert (0, 2) == grid.rows
    with pytest.raises(EmptyGridError):
        uncovered_grid(BoardDims(2, 2), rows={0, 1}, cols=set())


def test_hull_boundary_of_thin_grid_is_everything():
    grid = SpacedGrid((0,), (0, 3, 4, 9))
    assert set(grid.cells()) == hull_boundary(grid)


def test_hull_boundary_counts(rng):
    for _ in range(1000):
        a = rng.randint(2, 10)
        b = rng.randint(2, 10)
        grid = SpacedGrid(
            sorted(rng.sample(range(-15, 16), a)), sorted(rng.sample(range(-15, 16), b))
        )
        boundary = hull_boundary(grid)
        assert 2 * a + 2 * b - 4 == len(boundary)
        for s in {c.x + c.y for c in grid.cells()}:
            assert sum(1 for c in boundary if c.x + c.y == s) <= 2
        for d in {c.x - c.y for c in grid.cells()}:
            assert sum(1 for c in boundary if c.x - c.y == d) <= 2


def test_placement_lines():
    placement = QueenPlacement(BoardDims(4, 4), [(1, 2), (3, 0)])
    cover = placement_lines(placement)
    assert {2, 0} == cover.rows
    assert {1, 3} == cover.cols
    assert {3} == cover.sums
    assert {-1, 3} == cover.diffs


def test_queen_off_board():
    with pytest.raises(RangeError):
        QueenPlacement(BoardDims(2, 2), [(2, 0)])
