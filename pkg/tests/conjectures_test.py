import itertools

import pytest

from relaxq import conjectures
from relaxq.board import ArgumentError
from relaxq.conjectures import GridSolution, SubsetSolution


def _brute_q2(p, e):
    found = []
    for cols in itertools.combinations(range(1, e), p - 1):
        for rows in itertools.combinations(range(1, e), p - 1):
            full_cols = (0,) + cols + (e,)
            full_rows = (0,) + rows + (e,)
            if conjectures.q2_condition(full_cols, full_rows, e):
                found.append(GridSolution(full_cols, full_rows))
    return found


def test_q2_odd_listing():
    lines = [conjectures.format_q2(s) for s in conjectures.q2_solutions(5, 8)]
    assert [
        "C':0 1 2 6 7 8  R':0 1 2 6 7 8",
        "C':0 2 3 5 6 8  R':0 2 3 5 6 8",
    ] == lines


def test_q2_even_listing():
    lines = [conjectures.format_q2(s) for s in conjectures.q2_solutions(4, 6)]
    assert [
        "C':0 1 2 5 6  R':0 1 2 5 6",
        "C':0 1 2 5 6  R':0 1 4 5 6",
        "C':0 1 3 4 6  R':0 1 3 4 6",
        "C':0 1 3 4 6  R':0 2 3 5 6",
        "C':0 1 4 5 6  R':0 1 2 5 6",
        "C':0 1 4 5 6  R':0 1 4 5 6",
        "C':0 2 3 5 6  R':0 1 3 4 6",
        "C':0 2 3 5 6  R':0 2 3 5 6",
    ] == lines


def test_q2_smallest():
    assert GridSolution((0, 1, 2), (0, 1, 2)) in conjectures.q2_solutions(2, 2)


def test_q2_matches_brute_force():
    for e in range(2, 7):
        for p in range(2, e + 1):
            assert _brute_q2(p, e) == conjectures.q2_solutions(p, e)


def test_q2_closed_under_reflection_and_swap():
    for p, e in [(3, 5), (4, 6), (3, 7)]:
        solutions = set(conjectures.q2_solutions(p, e))
        for s in solutions:
            reflected = GridSolution(
                tuple(sorted(e - c for c in s.cols)), tuple(sorted(e - r for r in s.rows))
            )
            assert reflected in solutions
            assert GridSolution(s.rows, s.cols) in solutions


def test_q2_errors():
    with pytest.raises(ArgumentError):
        conjectures.q2_solutions(5, 4)
    with pytest.raises(ArgumentError):
        conjectures.q2_solutions(1, 4)


def test_q1_uniform_grid():
    assert GridSolution((0, 2, 4, 6), (0, 2, 4, 6)) in conjectures.q1_solutions(3, 6)


def test_q1_consecutive_grid():
    assert [GridSolution((0, 1, 2, 3), (0, 1, 2, 3))] == conjectures.q1_solutions(3, 3)


@pytest.mark.parametrize("p, e", [(2, 2), (2, 5), (4, 6), (4, 4)])
def test_q1_even_p_has_no_solutions(p, e):
    assert [] == conjectures.q1_solutions(p, e)


def test_q1_solutions_are_q2_solutions():
    for e in range(3, 8):
        for p in range(2, min(e, 5) + 1):
            q1 = set(conjectures.q1_solutions(p, e))
            assert q1 <= set(conjectures.q2_solutions(p, e))


def test_q1_closed_under_swap():
    solutions = set(conjectures.q1_solutions(3, 7))
    for s in solutions:
        assert GridSolution(s.rows, s.cols) in solutions


def test_q1_errors():
    with pytest.raises(ArgumentError):
        conjectures.q1_solutions(5, 4)
    with pytest.raises(ArgumentError):
        conjectures.q1_solutions(1, 4)


def test_check_q1_within_q2():
    report = conjectures.check_q1_within_q2(3, 8)
    assert report.holds
    assert report.solutions > 0


def test_q3_odd_listing():
    lines = [conjectures.format_q3(s) for s in conjectures.q3_solutions(6, parity="odd")]
    assert [
        "S u {e}: 0 6",
        "S u {e}: 0 2 4 6",
        "S u {e}: 0 1 5 6",
        "S u {e}: 0 1 2 4 5 6",
    ] == lines


def test_q3_even_listing():
    solutions = conjectures.q3_solutions(6, parity="even")
    assert 13 == len(solutions)
    assert "S u {e}: 6" == conjectures.format_q3(solutions[0])
    assert SubsetSolution(6, {2, 4}) in solutions
    assert "S u {e}: 0 1 2 3 4 5 6" == conjectures.format_q3(solutions[-1])


def test_q3_smallest():
    assert [SubsetSolution(1, set()), SubsetSolution(1, {0})] == conjectures.q3_solutions(1)


def test_q3_parities_partition():
    for e in range(1, 9):
        both = conjectures.q3_solutions(e)
        odd = conjectures.q3_solutions(e, parity="odd")
        even = conjectures.q3_solutions(e, parity="even")
        assert len(both) == len(odd) + len(even)
        assert set(both) == set(odd) | set(even)


def test_q3_errors():
    with pytest.raises(ArgumentError):
        conjectures.q3_solutions(0)
    with pytest.raises(ArgumentError):
        conjectures.q3_solutions(4, parity="prime")
    with pytest.raises(ArgumentError):
        SubsetSolution(3, {3})


def test_symmetry_predicates():
    same = GridSolution((0, 1, 4, 5, 6), (0, 1, 4, 5, 6))
    assert conjectures.is_self_symmetric(same)
    assert not conjectures.is_complement_symmetric(same)
    paired = GridSolution((0, 1, 2, 5, 6), (0, 1, 4, 5, 6))
    assert not conjectures.is_self_symmetric(paired)
    assert conjectures.is_complement_symmetric(paired)
    assert 4 == paired.p
    assert 6 == paired.e


@pytest.mark.parametrize("p_max, e_max", [(5, 10), (4, 6), (2, 2)])
def test_check_conjecture_q2(p_max, e_max):
    report = conjectures.check_conjecture_q2(p_max, e_max)
    assert report.holds
    assert report.solutions > 0


@pytest.mark.parametrize("e_max", [12, 6, 1])
def test_check_conjecture_q3(e_max):
    report = conjectures.check_conjecture_q3(e_max)
    assert report.holds
    assert [] == report.violations
