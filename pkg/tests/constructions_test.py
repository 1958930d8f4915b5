import pytest

from relaxq import bounds, constructions
from relaxq.board import ArgumentError, BoardDims, RangeError, RelaxedCover, SpacedGrid
from relaxq.constructions import DiagonalCover, QeFamily
from relaxq.verify import (
    is_diagonal_cover,
    is_perfect_cover,
    is_relaxed_cover,
    tight_analysis,
)


def test_bishop_cover_6x6():
    cover = constructions.bishop_cover(6, 6)
    assert {1, 3, 5, 7, 9} == cover.sums
    assert {-4, -2, 0, 2, 4} == cover.diffs


def test_bishop_cover_3x3():
    cover = constructions.bishop_cover(3, 3)
    assert {1, 3} == cover.sums
    assert {-2, 0, 2} == cover.diffs
    assert 3 == cover.size


def test_bishop_covers_meet_alpha():
    for m in range(1, 25):
        for n in range(1, 25):
            cover = constructions.bishop_cover(m, n)
            assert is_diagonal_cover(SpacedGrid.consecutive(m, n), cover)
            assert bounds.alpha_rect(m, n) == cover.size


@pytest.mark.slow
def test_bishop_covers_meet_alpha_full():
    for m in range(1, 201):
        for n in range(1, 201):
            cover = constructions.bishop_cover(m, n)
            assert is_diagonal_cover(SpacedGrid.consecutive(m, n), cover)
            assert bounds.alpha_rect(m, n) == cover.size


def test_square_queen_cover_11():
    cover = constructions.square_queen_cover(11)
    assert set(range(6, 11)) == cover.rows
    assert set(range(6, 11)) == cover.cols
    assert {1, 3, 5, 7, 9} == cover.sums
    assert {-4, -2, 0, 2, 4} == cover.diffs
    assert is_relaxed_cover(cover)


def test_square_queen_covers():
    for n in range(1, 40):
        cover = constructions.square_queen_cover(n)
        assert is_relaxed_cover(cover)
        assert bounds.beta_square(n) == cover.size


def _check_rect(m, n):
    cover = constructions.rect_queen_cover(m, n)
    assert BoardDims(m, n) == cover.dims
    assert is_relaxed_cover(cover), (m, n)
    assert bounds.beta_rect(m, n) == cover.size, (m, n)


def test_rect_queen_covers_meet_beta():
    for m in range(1, 26):
        for n in range(1, 26):
            _check_rect(m, n)


@pytest.mark.slow
def test_rect_queen_covers_meet_beta_full():
    for m in range(1, 61):
        for n in range(1, 61):
            _check_rect(m, n)


@pytest.mark.parametrize(
    "dims, expected",
    [((13, 9), (13, 9)), ((12, 10), (14, 12)), ((8, 8), (10, 8)), ((2, 2), (3, 3))],
)
def test_critical_embedding(dims, expected):
    assert expected == constructions.critical_embedding(*dims)


def test_critical_embedding_keeps_beta():
    for m in range(1, 40):
        for n in range(1, 40):
            if bounds.is_trivial(m, n):
                continue
            big_m, big_n = constructions.critical_embedding(m, n)
            assert big_m >= m and big_n >= n
            assert big_m + big_n - m - n <= 4
            assert bounds.is_easy_critical(big_m, big_n)
            assert bounds.beta_rect(big_m, big_n) == bounds.beta_rect(m, n)


def test_critical_embedding_rejects_trivial():
    with pytest.raises(ArgumentError):
        constructions.critical_embedding(10, 4)


def test_restrict_cover():
    cover = constructions.rect_queen_cover(14, 12)
    small = constructions.restrict_cover(cover, BoardDims(12, 10))
    assert is_relaxed_cover(small)
    assert small.size <= cover.size
    with pytest.raises(RangeError):
        constructions.restrict_cover(small, BoardDims(13, 10))


def test_restrict_diagonal_cover():
    cover = DiagonalCover(sums={1, 3, 5, 7}, diffs={-2, 0, 4})
    assert DiagonalCover({1, 3}, {-2, 0}) == constructions.restrict_cover(cover, BoardDims(3, 3))


def test_restrict_unknown_type():
    with pytest.raises(TypeError):
        constructions.restrict_cover(object(), BoardDims(2, 2))


def test_qe_values():
    assert {-12, -8, -4, -2, 0, 2, 4, 8, 12} == QeFamily(4, 2, 2).values
    assert {-4, 0, 4} == QeFamily(1, 0).values
    assert {-2, 0, 2} == QeFamily(1, 1).values
    assert {0} == QeFamily(0, 0).values


def test_qe_rejects_bad_parameters():
    with pytest.raises(ArgumentError):
        QeFamily(2, 3)
    with pytest.raises(ArgumentError):
        QeFamily(2, 1, 3)
    with pytest.raises(ArgumentError):
        constructions.uniform_grid_Qe(1, 2, 2)


def test_qe_covers_are_perfect():
    for k in range(0, 5):
        for e in range(0, k + 1):
            for d in (2, 4):
                family = QeFamily(k, e, d)
                assert 2 * k + 1 == len(family.values)
                assert is_perfect_cover(family.grid(), family.cover()), (k, e, d)


def test_uniform_grid():
    assert SpacedGrid.uniform(10, 2) == constructions.uniform_grid(4, 2)


@pytest.mark.parametrize("n", [3, 7, 11, 15])
def test_tight_square_covers(n):
    k = (n - 3) // 4
    for e in range(k + 1):
        cover = constructions.tight_square_cover(n, e)
        assert isinstance(cover, RelaxedCover)
        assert is_relaxed_cover(cover)
        assert (n - 1) // 2 == cover.size
        assert tight_analysis(cover).holds


def test_tight_square_cover_needs_4k_plus_3():
    with pytest.raises(ArgumentError):
        constructions.tight_square_cover(9, 0)
