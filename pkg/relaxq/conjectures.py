"""
Enumeration and conjecture checks for the open questions about which
spaced grids a tight cover can leave uncovered.

The residue tests work modulo e, so the endpoints 0 and e of a grid are the
same residue.
"""

from dataclasses import dataclass, field
import itertools
import logging

from relaxq.board import ArgumentError, SpacedGrid
from relaxq.search import DiagonalSearch

LOG = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class GridSolution:
    """
    Unchosen column and row coordinates translated so that both run from 0
    to e.
    """

    cols: tuple
    rows: tuple

    @property
    def e(self):
        return self.cols[-1]

    @property
    def p(self):
        return len(self.cols) - 1


@dataclass(frozen=True)
class SubsetSolution:
    e: int
    s: frozenset

    def __post_init__(self):
        s = frozenset(self.s)
        if any(not 0 <= x < self.e for x in s):
            raise ArgumentError("subset %s is not inside [0, %d)" % (sorted(s), self.e))
        object.__setattr__(self, "s", s)


@dataclass
class ConjectureReport:
    checked: str
    violations: list = field(default_factory=list)
    solutions: int = 0

    @property
    def holds(self):
        return not self.violations


def _residues(values, e):
    return {v % e for v in values}


def q2_condition(cols, rows, e):
    """
    Check the sum test or the difference test on every cell of the grid
    with a plain double loop.
    """
    col_set = _residues(cols, e)
    row_set = _residues(rows, e)
    both = col_set & row_set
    for c in cols:
        for r in rows:
            if (c + r) % e in both:
                continue
            if (c - r) % e in col_set and (r - c) % e in row_set:
                continue
            return False
    return True


def _member(value, chosen, last):
    """
    Membership of a residue in a partially built coordinate set: True, False,
    or None while coordinates above the last chosen one are still open.
    """
    if value == 0 or value in chosen:
        return True
    if value <= last:
        return False
    return None


def _cell_state(c, r, e, col_set, row_set, row_last):
    total = (c + r) % e
    by_sum = _member(total, row_set, row_last) if total in col_set else False
    if (c - r) % e in col_set:
        by_diff = _member((r - c) % e, row_set, row_last)
    else:
        by_diff = False
    if by_sum or by_diff:
        return True
    if by_sum is False and by_diff is False:
        return False
    return None


def _rows_for(cols, p, e):
    """
    Depth-first search over interior rows for a fixed set of columns, in
    increasing lexicographic order, pruning on any cell already decided bad.
    """
    col_set = _residues(cols, e)

    def viable(rows):
        row_set = set(rows) | {0}
        last = rows[-1] if rows else 0
        for c in cols:
            for r in list(rows) + [0, e]:
                if _cell_state(c, r, e, col_set, row_set, last) is False:
                    return False
        return True

    def extend(rows):
        if len(rows) == p - 1:
            full = (0,) + rows + (e,)
            if q2_condition(cols, full, e):
                yield full
            return
        start = rows[-1] + 1 if rows else 1
        # leave room for the remaining interior rows below e
        for y in range(start, e - (p - 1 - len(rows)) + 1):
            candidate = rows + (y,)
            if viable(candidate):
                yield from extend(candidate)

    yield from extend(())


def _coordinate_sets(p, e, question):
    if p < 2:
        raise ArgumentError("%s needs p >= 2, got %d" % (question, p))
    if p > e:
        raise ArgumentError("%s needs p <= e, got p=%d e=%d" % (question, p, e))
    for interior in itertools.combinations(range(1, e), p - 1):
        yield (0,) + interior + (e,)


def q1_solutions(p, e):
    """
    All grids 0 = C'_0 < ... < C'_p = e and 0 = R'_0 < ... < R'_p = e that p
    sum diagonals and p difference diagonals cover, found by exact search on
    every candidate. Ordered by columns then rows.

    Even p leaves an odd by odd grid, which needs one more diagonal, so only
    odd p has solutions.
    """
    found = []
    candidates = list(_coordinate_sets(p, e, "q1"))
    for cols in candidates:
        for rows in candidates:
            if DiagonalSearch(SpacedGrid(cols, rows), p, p).find() is not None:
                found.append(GridSolution(cols, rows))
    LOG.debug("q1 p=%d e=%d: %d solutions", p, e, len(found))
    return found


def q2_solutions(p, e):
    """
    All grids 0 = C'_0 < ... < C'_p = e and 0 = R'_0 < ... < R'_p = e in which
    every cell passes the sum or difference test, ordered by columns then
    rows.
    """
    found = []
    for cols in _coordinate_sets(p, e, "q2"):
        for rows in _rows_for(cols, p, e):
            found.append(GridSolution(cols, rows))
    LOG.debug("q2 p=%d e=%d: %d solutions", p, e, len(found))
    return found


def q3_condition(s, e):
    return all((x + y) % e in s or (x - y) % e in s for x in s for y in s)


def q3_solutions(e, parity=None):
    """
    All subsets S of {0, ..., e-1} such that x+y or x-y is in S modulo e for
    every ordered pair from S, in binary counting order.

    Args:
      e (int): The modulus.
      parity (str): "odd" or "even" to keep only subsets of that size parity.
    """
    if e < 1:
        raise ArgumentError("q3 needs e >= 1, got %d" % e)
    if parity not in (None, "odd", "even"):
        raise ArgumentError("unknown parity %r" % (parity,))
    found = []
    for bits in range(1 << e):
        s = frozenset(i for i in range(e) if bits >> i & 1)
        if parity == "odd" and len(s) % 2 == 0:
            continue
        if parity == "even" and len(s) % 2 == 1:
            continue
        if q3_condition(s, e):
            found.append(SubsetSolution(e, s))
    return found


def format_q2(solution):
    return "C':%s  R':%s" % (
        " ".join(str(c) for c in solution.cols),
        " ".join(str(r) for r in solution.rows),
    )


def format_q3(solution):
    return "S u {e}: %s" % " ".join(str(x) for x in sorted(solution.s) + [solution.e])


def is_self_symmetric(solution):
    return solution.cols == solution.rows


def is_complement_symmetric(solution):
    p = solution.p
    return all(solution.cols[i] + solution.rows[p - i] == solution.e for i in range(p + 1))


def check_conjecture_q2(p_max, e_max):
    """
    For odd p every solution has equal columns and rows and pairs C'_i with
    R'_{p-i} to sum to e; for even p every solution has at least one of the
    two.
    """
    report = ConjectureReport("p <= %d, e <= %d" % (p_max, e_max))
    for p in range(2, p_max + 1):
        for e in range(p, e_max + 1):
            for solution in q2_solutions(p, e):
                report.solutions += 1
                same = is_self_symmetric(solution)
                paired = is_complement_symmetric(solution)
                ok = same and paired if p % 2 else same or paired
                if not ok:
                    LOG.info("q2 violation: %s", format_q2(solution))
                    report.violations.append(solution)
    return report


def check_conjecture_q3(e_max):
    """
    Every odd-sized solution contains 0 and S u {e} is symmetric about e/2.
    """
    report = ConjectureReport("e <= %d" % e_max)
    for e in range(1, e_max + 1):
        for solution in q3_solutions(e, parity="odd"):
            report.solutions += 1
            closed = set(solution.s) | {e}
            if 0 not in solution.s or {e - x for x in closed} != closed:
                LOG.info("q3 violation: %s", format_q3(solution))
                report.violations.append(solution)
    return report


def check_q1_within_q2(p_max, e_max):
    """
    Every grid that p sum and p difference diagonals cover has no obviously
    uncoverable cell.
    """
    report = ConjectureReport("p <= %d, e <= %d" % (p_max, e_max))
    for p in range(2, p_max + 1):
        for e in range(p, e_max + 1):
            for solution in q1_solutions(p, e):
                report.solutions += 1
                if not q2_condition(solution.cols, solution.rows, e):
                    LOG.info("q1 solution outside q2: %s", format_q2(solution))
                    report.violations.append(solution)
    return report
