"""
Closed-form values of the relaxed queen (beta) and relaxed bishop (alpha)
problems, the lower bounds they imply, and the board classification of the
rectangular summary grid. All arithmetic is integral.
"""

from dataclasses import dataclass
import enum

from relaxq.board import RangeError


def _check_positive(*values):
    for value in values:
        if value < 1:
            raise RangeError("board dimensions must be positive, got %r" % (value,))


def is_trivial(m, n):
    _check_positive(m, n)
    return max(m, n) >= 3 * min(m, n) - 2


def is_critical(m, n):
    _check_positive(m, n)
    return (m + n) % 4 == 2


def is_hard_critical(m, n):
    if not is_critical(m, n):
        return False
    if m % 2 == 0 and n % 2 == 0:
        return (m + n) % 8 == 6
    return m % 2 == 1 and n % 2 == 1 and (m + n) % 8 == 2


def is_easy_critical(m, n):
    return is_critical(m, n) and not is_hard_critical(m, n)


def _ceil_div(a, b):
    return -(-a // b)


def counting_lower(m, n):
    """
    The bound obtained from the hull-boundary count alone: min{m,n} on
    trivial boards and ceil((m+n-2)/4) otherwise.
    """
    if is_trivial(m, n):
        return min(m, n)
    return _ceil_div(m + n - 2, 4)


def beta_square(n):
    _check_positive(n)
    k, r = divmod(n, 4)
    if r == 0:
        return 2 * k
    return 2 * k + 1


def beta_rect(m, n):
    if is_trivial(m, n):
        return min(m, n)
    if is_hard_critical(m, n):
        return (m + n - 2) // 4 + 1
    return _ceil_div(m + n - 2, 4)


def alpha_square(n):
    _check_positive(n)
    if n % 2 == 0:
        return n - 1
    return n


def _odd_aware_half(a, b):
    if a % 2 == 1 and b % 2 == 1:
        return (a + b - 2) // 2 + 1
    return _ceil_div(a + b - 2, 2)


def alpha_rect(m, n):
    _check_positive(m, n)
    return _odd_aware_half(m, n)


def gamma_lower(m, n):
    """
    The lower bound on the queen domination number given by the relaxation.
    """
    return beta_rect(m, n)


def spaced_grid_diag_lower(a, b):
    """
    Fewest diagonals of each kind that can cover an a-column by b-row spaced
    grid, whatever its spacing.
    """
    _check_positive(a, b)
    return _odd_aware_half(a, b)


class BoardTag(enum.Enum):
    TRIVIAL = "trivial"
    IMPROVED = "improved"
    MATCHED = "matched"
    SQUARE_KNOWN = "square-known"


@dataclass(frozen=True)
class BoardClass:
    tag: BoardTag
    value: int

    @property
    def improvement(self):
        """
        The summary-grid cell value: -1 trivial, +1 improved, 0 matched.
        """
        if self.tag is BoardTag.TRIVIAL:
            return -1
        if self.tag is BoardTag.MATCHED:
            return 0
        return 1

    def __str__(self):
        return "%s %s" % (self.tag.value, "%+d" % self.improvement if self.improvement else "0")


def classify_board(m, n):
    value = beta_rect(m, n)
    if is_trivial(m, n):
        return BoardClass(BoardTag.TRIVIAL, value)
    if is_hard_critical(m, n):
        if m == n:
            return BoardClass(BoardTag.SQUARE_KNOWN, value)
        return BoardClass(BoardTag.IMPROVED, value)
    return BoardClass(BoardTag.MATCHED, value)


@dataclass(frozen=True)
class SquareHistory:
    """
    One row of the square-board lower-bound history.
    """

    n: int
    case: str
    bound_1987: int
    bound_1995: int
    bound_2007: int
    beta: int


def square_history(n):
    _check_positive(n)
    r = n % 4
    bound_1987 = _ceil_div(n - 1, 2)
    bound_1995 = bound_1987 + (1 if r == 1 else 0)
    bound_2007 = bound_1995 + (1 if r == 3 and n > 11 else 0)
    case = "4k" if r == 0 else "4k+%d" % r
    return SquareHistory(n, case, bound_1987, bound_1995, bound_2007, beta_square(n))
