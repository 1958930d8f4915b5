"""
Summary tables: the square-board lower-bound history and the rectangular
board classification grid.
"""

import logging

import numpy as np
import pandas as pd

from relaxq import bounds
from relaxq.board import RangeError

LOG = logging.getLogger(__name__)

HISTORY_COLUMNS = ["n", "case", "bound_1987", "bound_1995", "bound_2007", "beta"]

TRIVIAL_MARK = "-1"
IMPROVED_MARK = "+1"
MATCHED_MARK = "0"
SQUARE_MARK = "S"


class TableGenerator:
    def __init__(self, limit):
        if limit < 1:
            raise RangeError("table limit must be positive, got %d" % limit)
        self.limit = limit

    def get_history_frame(self):
        rows = [
            [
                h.n,
                h.case,
                h.bound_1987,
                h.bound_1995,
                h.bound_2007,
                h.beta,
            ]
            for h in map(bounds.square_history, range(1, self.limit + 1))
        ]
        return pd.DataFrame(rows, columns=HISTORY_COLUMNS)

    def get_class_arrays(self):
        """
        Boolean (trivial, hard critical) masks over m, n in [1, limit], indexed
        [m-1, n-1].
        """
        dims = np.arange(1, self.limit + 1)
        m, n = np.meshgrid(dims, dims, indexing="ij")
        trivial = np.vectorize(bounds.is_trivial, otypes=[bool])(m, n)
        hard = np.vectorize(bounds.is_hard_critical, otypes=[bool])(m, n)
        return m, n, trivial, hard & ~trivial

    def get_class_frame(self):
        m, n, trivial, hard = self.get_class_arrays()
        marks = np.full(m.shape, MATCHED_MARK, dtype=object)
        marks[hard] = IMPROVED_MARK
        marks[hard & (m == n)] = SQUARE_MARK
        marks[trivial] = TRIVIAL_MARK
        labels = range(1, self.limit + 1)
        frame = pd.DataFrame(marks, index=pd.Index(labels, name="m"), columns=list(labels))
        return frame

    def get_improved_fraction(self):
        """
        The share of boards on which the relaxation beats the counting bound,
        among non-trivial boards with m != n.
        """
        m, n, trivial, hard = self.get_class_arrays()
        eligible = ~trivial & (m != n)
        count = int(eligible.sum())
        if not count:
            return 0.0
        fraction = float((hard & eligible).sum()) / count
        LOG.debug("%d of %d eligible boards improved", int((hard & eligible).sum()), count)
        return fraction


def history_table(max_n, fmt="csv"):
    frame = TableGenerator(max_n).get_history_frame()
    if fmt == "csv":
        return frame.to_csv(index=False)
    return frame.to_string(index=False) + "\n"


def classification_grid(max_dim, fmt="csv"):
    generator = TableGenerator(max_dim)
    frame = generator.get_class_frame()
    footer = "improved fraction: %.4f" % generator.get_improved_fraction()
    if fmt == "csv":
        return frame.to_csv() + "# " + footer + "\n"
    return frame.to_string() + "\n" + footer + "\n"
