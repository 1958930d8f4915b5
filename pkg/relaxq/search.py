"""
Exhaustive solvers for the relaxed queen, relaxed bishop and queen
domination problems, and the enumerations built on them.

Every solver picks rows and columns first and hands the residual spaced grid
to DiagonalSearch, a branch-and-bound over sum and difference diagonals on
bitmask cell sets. Node limits, not wall-clock time, bound a search, so runs
are reproducible.
"""

from dataclasses import dataclass
import enum
import itertools
import logging
from multiprocessing import Pool

from relaxq import bounds
from relaxq.board import (
    ArgumentError,
    BoardDims,
    LineKind,
    QueenPlacement,
    RelaxedCover,
    SpacedGrid,
    hull_boundary,
    line_range,
    uncovered_grid,
)
from relaxq.constructions import DiagonalCover

LOG = logging.getLogger(__name__)


class SearchStatus(enum.Enum):
    OPTIMAL = "Optimal"
    CUTOFF = "CutoffReached"


@dataclass(frozen=True)
class SearchResult:
    """
    The outcome of a search. With status CUTOFF, value is the budget that was
    being tried when the node limit was hit (every smaller budget has been
    refuted) and witness is None.
    """

    value: int
    witness: object
    nodes: int
    status: SearchStatus = SearchStatus.OPTIMAL

    @property
    def optimal(self):
        return self.status is SearchStatus.OPTIMAL


class _Cutoff(Exception):
    pass


class NodeCounter:
    def __init__(self, limit=None):
        self.limit = limit
        self.count = 0

    def tick(self):
        self.count += 1
        if self.limit is not None and self.count > self.limit:
            raise _Cutoff()


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _popcount(mask):
    return bin(mask).count("1")


def _top_sum(values, count):
    if count <= 0:
        return 0
    return sum(sorted(values, reverse=True)[:count])


class DiagonalSearch:
    """
    Cover a spaced grid with at most sum_budget sum diagonals and at most
    diff_budget difference diagonals.

    The branching cell is taken from the hull boundary while any of it is
    uncovered. Every diagonal meets the boundary at most twice, so a node is
    refuted as soon as the uncovered boundary outnumbers twice the remaining
    diagonals.

    Args:
      grid (SpacedGrid): The grid to cover.
      sum_budget (int): Most sum diagonals to use.
      diff_budget (int): Most difference diagonals to use.
      counter (NodeCounter): Shared node counter; a fresh unlimited one by
        default.
    """

    def __init__(self, grid, sum_budget, diff_budget, counter=None):
        self.grid = grid
        self.sum_budget = sum_budget
        self.diff_budget = diff_budget
        self.counter = counter or NodeCounter()

        self.cells = grid.cells()
        self.index = {cell: i for i, cell in enumerate(self.cells)}
        self.full = (1 << len(self.cells)) - 1
        self.cell_sum = [c.x + c.y for c in self.cells]
        self.cell_diff = [c.x - c.y for c in self.cells]
        self.sum_masks = {}
        self.diff_masks = {}
        for i, cell in enumerate(self.cells):
            self.sum_masks[cell.x + cell.y] = self.sum_masks.get(cell.x + cell.y, 0) | 1 << i
            self.diff_masks[cell.x - cell.y] = self.diff_masks.get(cell.x - cell.y, 0) | 1 << i
        self.sum_masks = dict(sorted(self.sum_masks.items()))
        self.diff_masks = dict(sorted(self.diff_masks.items()))
        self.hull = 0
        for cell in hull_boundary(grid):
            self.hull |= 1 << self.index[cell]

    def _degrees(self, masks, excluded, uncovered):
        return {
            line: _popcount(mask & uncovered)
            for line, mask in masks.items()
            if line not in excluded and mask & uncovered
        }

    def _propagate(self, uncovered, sums, diffs, no_sums, no_diffs, rs, rd):
        """
        Apply forced choices until nothing changes. Returns the new state or
        None when the node is refuted.
        """
        while uncovered:
            if rs + rd == 0:
                return None
            if _popcount(uncovered & self.hull) > 2 * (rs + rd):
                return None

            forced_sums = set()
            forced_diffs = set()
            for i in _bits(uncovered):
                sum_ok = rs > 0 and self.cell_sum[i] not in no_sums
                diff_ok = rd > 0 and self.cell_diff[i] not in no_diffs
                if not sum_ok and not diff_ok:
                    return None
                if not sum_ok:
                    forced_diffs.add(self.cell_diff[i])
                elif not diff_ok:
                    forced_sums.add(self.cell_sum[i])

            sum_degrees = self._degrees(self.sum_masks, no_sums, uncovered)
            diff_degrees = self._degrees(self.diff_masks, no_diffs, uncovered)
            if not forced_sums and not forced_diffs:
                # cells of one sum diagonal lie on distinct differences
                forced_sums = {s for s, degree in sum_degrees.items() if degree > rd}
                forced_diffs = {d for d, degree in diff_degrees.items() if degree > rs}

            if not forced_sums and not forced_diffs:
                reach = _top_sum(sum_degrees.values(), rs) + _top_sum(diff_degrees.values(), rd)
                if reach < _popcount(uncovered):
                    return None
                break

            if len(forced_sums) > rs or len(forced_diffs) > rd:
                return None
            for s in forced_sums:
                uncovered &= ~self.sum_masks[s]
            for d in forced_diffs:
                uncovered &= ~self.diff_masks[d]
            sums = sums | forced_sums
            diffs = diffs | forced_diffs
            rs -= len(forced_sums)
            rd -= len(forced_diffs)

        return uncovered, sums, diffs, no_sums, no_diffs, rs, rd

    def _search(self, uncovered, sums, diffs, no_sums, no_diffs, rs, rd):
        self.counter.tick()
        state = self._propagate(uncovered, sums, diffs, no_sums, no_diffs, rs, rd)
        if state is None:
            return
        uncovered, sums, diffs, no_sums, no_diffs, rs, rd = state
        if not uncovered:
            yield sums, diffs, no_sums, no_diffs
            return

        boundary = uncovered & self.hull
        pivot = boundary or uncovered
        i = (pivot & -pivot).bit_length() - 1
        s, d = self.cell_sum[i], self.cell_diff[i]
        sum_degree = _popcount(self.sum_masks[s] & uncovered)
        diff_degree = _popcount(self.diff_masks[d] & uncovered)

        if sum_degree >= diff_degree:
            yield from self._search(
                uncovered & ~self.sum_masks[s], sums | {s}, diffs, no_sums, no_diffs, rs - 1, rd
            )
            yield from self._search(uncovered, sums, diffs, no_sums | {s}, no_diffs, rs, rd)
        else:
            yield from self._search(
                uncovered & ~self.diff_masks[d], sums, diffs | {d}, no_sums, no_diffs, rs, rd - 1
            )
            yield from self._search(uncovered, sums, diffs, no_sums, no_diffs | {d}, rs, rd)

    def leaves(self):
        """
        Yield disjoint families of covers as (sums, diffs, excluded_sums,
        excluded_diffs). Every cover of the grid within budget contains the
        chosen lines of exactly one family and avoids its excluded lines.
        """
        empty = frozenset()
        yield from self._search(
            self.full, empty, empty, empty, empty, self.sum_budget, self.diff_budget
        )

    def find(self):
        for sums, diffs, _, _ in self.leaves():
            return DiagonalCover(sums, diffs)
        return None


def _hull_lower(grid):
    return max(1, -(-len(hull_boundary(grid)) // 4))


def grid_min_diagonals(grid, cutoff=None):
    """
    The fewest p such that p sum and p difference diagonals cover the grid.
    Every budget below the result is refuted by search, starting from the
    hull boundary count.
    """
    counter = NodeCounter(cutoff)
    p = _hull_lower(grid)
    while True:
        LOG.debug("trying %d diagonals of each kind on a %dx%d grid", p, grid.width, grid.height)
        try:
            cover = DiagonalSearch(grid, p, p, counter).find()
        except _Cutoff:
            LOG.warning("node limit %d reached at p=%d", cutoff, p)
            return SearchResult(p, None, counter.count, SearchStatus.CUTOFF)
        if cover is not None:
            return SearchResult(p, cover, counter.count)
        p += 1


def alpha_exact(m, n, cutoff=None):
    BoardDims(m, n)
    return grid_min_diagonals(SpacedGrid.consecutive(m, n), cutoff=cutoff)


def _residual_too_large(m, n, p):
    """
    True when no choice of p rows and p columns can leave a grid that p
    diagonals of each kind might cover.
    """
    a, b = m - p, n - p
    if a < 2 or b < 2:
        return False
    return 2 * a + 2 * b - 4 > 4 * p


def _frontier(m, n, p):
    return itertools.product(
        itertools.combinations(range(n), p), itertools.combinations(range(m), p)
    )


def _reflections(m, n, rows, cols):
    flip_rows = tuple(sorted(n - 1 - y for y in rows))
    flip_cols = tuple(sorted(m - 1 - x for x in cols))
    images = [(rows, flip_cols), (flip_rows, cols), (flip_rows, flip_cols)]
    if m == n:
        images += [(c, r) for r, c in images + [(rows, cols)]]
    return images


def _is_canonical(m, n, rows, cols):
    key = (rows, cols)
    return all(image >= key for image in _reflections(m, n, rows, cols))


def _solve_residual(dims, rows, cols, p, counter):
    """
    Cover the cells missed by the given rows and columns with p diagonals of
    each kind. Returns a RelaxedCover or None.
    """
    counter.tick()
    if len(rows) == dims.n or len(cols) == dims.m:
        return RelaxedCover(dims, rows=rows, cols=cols)
    grid = uncovered_grid(dims, rows, cols)
    diagonals = DiagonalSearch(grid, p, p, counter).find()
    if diagonals is None:
        return None
    return RelaxedCover(dims, rows=rows, cols=cols, sums=diagonals.sums, diffs=diagonals.diffs)


def _scan_chunk(item):
    """
    Worker for the parallel frontier: the first feasible position in a chunk
    of row and column choices, with the nodes spent reaching it.
    """
    m, n, p, combos, budget = item
    dims = BoardDims(m, n)
    counter = NodeCounter(budget)
    try:
        for rows, cols in combos:
            cover = _solve_residual(dims, rows, cols, p, counter)
            if cover is not None:
                return cover, counter.count, False
    except _Cutoff:
        return None, counter.count, True
    return None, counter.count, False


def _beta_parallel(m, n, p, combos, budget, workers):
    """
    Scan the frontier in chunks over a process pool. Every chunk may spend
    the whole remaining budget; chunk results are then replayed in frontier
    order so that the nodes counted, the witness and any cutoff are those of
    the serial scan.

    Returns:
      (cover or None, nodes spent up to the witness or over the whole frontier).
    """
    chunk_size = max(1, -(-len(combos) // (workers * 4)))
    items = [
        (m, n, p, combos[start:start + chunk_size], budget)
        for start in range(0, len(combos), chunk_size)
    ]
    LOG.debug("splitting %d frontier entries into %d chunks over %d workers",
              len(combos), len(items), workers)
    if not items:
        return None, 0
    with Pool(processes=min(workers, len(items))) as pool:
        results = pool.map(_scan_chunk, items)

    nodes = 0
    for cover, used, cut in results:
        nodes += used
        if cut or (budget is not None and nodes > budget):
            raise _Cutoff()
        if cover is not None:
            return cover, nodes
    return None, nodes


def _first_budget(lower, m, n):
    """
    The first budget to try. Starting above the closed-form bound could
    skip the optimum and is rejected.
    """
    bound = bounds.gamma_lower(m, n)
    if lower is None:
        return bound
    if lower > bound:
        raise ArgumentError(
            "lower=%d is above the proven bound %d for %dx%d; the result would not be minimal"
            % (lower, bound, m, n)
        )
    return max(1, lower)


def beta_exact(m, n, cutoff=None, lower=None, symmetry=True, workers=1):
    """
    The relaxed queen domination number with a witness cover.

    Args:
      m (int): Column count.
      n (int): Row count.
      cutoff (int): Node limit; None searches to completion.
      lower (int): First budget to try instead of the closed-form bound, so
        that smaller budgets can be refuted by search. Must not exceed the
        closed-form bound.
      symmetry (bool): Skip row and column choices that a reflection or
        transposition of the board maps to an earlier choice.
      workers (int): Processes to split the row and column frontier over.
        The result, node count included, is the same as with one worker.
    """
    dims = BoardDims(m, n)
    p = _first_budget(lower, m, n)
    counter = NodeCounter(cutoff)
    nodes = 0
    while True:
        if p >= min(m, n):
            # every row (or column) alone is a cover
            rows = range(n) if n <= m else ()
            cols = range(m) if m < n else ()
            return SearchResult(p, RelaxedCover(dims, rows=rows, cols=cols), nodes + counter.count)
        if _residual_too_large(m, n, p):
            LOG.debug("p=%d refuted by the hull count", p)
            p += 1
            continue

        combos = _frontier(m, n, p)
        if symmetry:
            combos = (c for c in combos if _is_canonical(m, n, *c))
        LOG.debug("trying p=%d on %s", p, dims)
        try:
            if workers > 1:
                budget = None if cutoff is None else cutoff - nodes
                cover, used = _beta_parallel(m, n, p, list(combos), budget, workers)
                nodes += used
            else:
                cover = None
                for rows, cols in combos:
                    cover = _solve_residual(dims, rows, cols, p, counter)
                    if cover is not None:
                        break
        except _Cutoff:
            LOG.warning("node limit %d reached at p=%d on %s", cutoff, p, dims)
            # the limit is crossed by exactly one node
            return SearchResult(p, None, cutoff + 1, SearchStatus.CUTOFF)
        if cover is not None:
            return SearchResult(p, cover, nodes + counter.count)
        p += 1


def _attack_masks(dims):
    cells = dims.cells()
    masks = []
    for q in cells:
        mask = 0
        for i, c in enumerate(cells):
            if c.x == q.x or c.y == q.y or c.x + c.y == q.x + q.y or c.x - c.y == q.x - q.y:
                mask |= 1 << i
        masks.append(mask)
    return cells, masks


class _QueenSearch:
    def __init__(self, dims, counter):
        self.dims = dims
        self.counter = counter
        self.cells, self.attacks = _attack_masks(dims)
        # the attack relation is symmetric, so attackers of a cell are its own mask
        self.degree = [_popcount(mask) for mask in self.attacks]

    def solve(self, undominated, queens, forbidden):
        self.counter.tick()
        if not undominated:
            return list(queens)
        if len(queens) == self.target:
            return None
        left = self.target - len(queens)
        gains = [
            _popcount(self.attacks[i] & undominated)
            for i in range(len(self.cells))
            if not forbidden >> i & 1
        ]
        if _top_sum(gains, left) < _popcount(undominated):
            return None

        pick = min(_bits(undominated), key=lambda i: (self.degree[i], i))
        candidates = [i for i in _bits(self.attacks[pick]) if not forbidden >> i & 1]
        candidates.sort(key=lambda i: (-_popcount(self.attacks[i] & undominated), i))
        tried = forbidden
        for i in candidates:
            found = self.solve(undominated & ~self.attacks[i], queens + [i], tried)
            if found is not None:
                return found
            tried |= 1 << i
        return None

    def run(self, target):
        self.target = target
        if target == 0:
            return None
        return self.solve((1 << len(self.cells)) - 1, [], 0)


def gamma_exact(m, n, cutoff=None, lower=None):
    """
    The queen domination number with a witness placement, by iterative
    deepening from the relaxed bound.
    """
    dims = BoardDims(m, n)
    counter = NodeCounter(cutoff)
    search = _QueenSearch(dims, counter)
    q = _first_budget(lower, m, n)
    while True:
        LOG.debug("trying %d queens on %s", q, dims)
        try:
            found = search.run(q)
        except _Cutoff:
            LOG.warning("node limit %d reached at %d queens on %s", cutoff, q, dims)
            return SearchResult(q, None, counter.count, SearchStatus.CUTOFF)
        if found is not None:
            placement = QueenPlacement(dims, [search.cells[i] for i in found])
            return SearchResult(q, placement, counter.count)
        q += 1


def _padded(chosen, excluded, universe, size):
    """
    Every way to grow a set of chosen lines to exactly size lines from the
    universe, skipping excluded ones.
    """
    spare = sorted(set(universe) - chosen - excluded)
    for extra in itertools.combinations(spare, size - len(chosen)):
        yield chosen | frozenset(extra)


def _expand_leaves(search, sum_universe, diff_universe, size):
    for sums, diffs, no_sums, no_diffs in search.leaves():
        for padded_sums in _padded(sums, no_sums, sum_universe, size):
            for padded_diffs in _padded(diffs, no_diffs, diff_universe, size):
                yield padded_sums, padded_diffs


def enumerate_perfect_covers(grid):
    """
    All perfect diagonal covers of a grid in sort order, or an empty list when
    its row and column counts have odd sum.
    """
    total = grid.width + grid.height
    if total % 2:
        return []
    size = (total - 2) // 2
    search = DiagonalSearch(grid, size, size)
    covers = {
        DiagonalCover(sums, diffs)
        for sums, diffs in _expand_leaves(
            search, search.sum_masks.keys(), search.diff_masks.keys(), size
        )
    }
    LOG.debug("%d perfect covers after %d nodes", len(covers), search.counter.count)
    return sorted(covers, key=DiagonalCover.sort_key)


def enumerate_beta_optima(m, n):
    """
    Yield every relaxed cover of the board with exactly beta lines of each
    kind, ordered by (rows, cols, sums, diffs).
    """
    dims = BoardDims(m, n)
    p = beta_exact(m, n).value
    sum_universe = line_range(dims, LineKind.SUM)
    diff_universe = line_range(dims, LineKind.DIFF)
    for rows, cols in _frontier(m, n, p):
        if p == n or p == m:
            families = _padded_pairs(frozenset(), frozenset(), sum_universe, diff_universe, p)
        else:
            search = DiagonalSearch(uncovered_grid(dims, rows, cols), p, p)
            families = _expand_leaves(search, sum_universe, diff_universe, p)
        covers = [
            RelaxedCover(dims, rows=rows, cols=cols, sums=sums, diffs=diffs)
            for sums, diffs in families
        ]
        yield from sorted(covers, key=RelaxedCover.sort_key)


def _padded_pairs(sums, diffs, sum_universe, diff_universe, size):
    for padded_sums in _padded(sums, frozenset(), sum_universe, size):
        for padded_diffs in _padded(diffs, frozenset(), diff_universe, size):
            yield padded_sums, padded_diffs
