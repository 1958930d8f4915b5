"""
Plain-text rendering of boards, verification reports, search results and
conjecture reports through jinja2 templates shipped with the package.
"""

import logging
import os.path

import jinja2

from relaxq.board import Cell
from relaxq.verify import TightReport

LOG = logging.getLogger(__name__)

LINE_GLYPH = "="
DIAGONAL_GLYPH = "x"
UNCOVERED_GLYPH = "."
QUEEN_GLYPH = "Q"
GAP_GLYPH = " "


def board_lines(cover, queens=()):
    """
    One string per board row, top row first, one glyph per cell: queens,
    then cells on a chosen row or column, then cells on a chosen diagonal,
    then uncovered cells.
    """
    queens = {Cell(*q) for q in queens}
    lines = []
    for y in reversed(range(cover.dims.n)):
        glyphs = []
        for x in range(cover.dims.m):
            if (x, y) in queens:
                glyphs.append(QUEEN_GLYPH)
            elif y in cover.rows or x in cover.cols:
                glyphs.append(LINE_GLYPH)
            elif x + y in cover.sums or x - y in cover.diffs:
                glyphs.append(DIAGONAL_GLYPH)
            else:
                glyphs.append(UNCOVERED_GLYPH)
        lines.append("".join(glyphs))
    return lines


def grid_lines(grid, diagonals):
    """
    The bounding box of a spaced grid, top row first. Positions that are not
    grid cells are blank.
    """
    left, right, bottom, top = grid.bounds
    lines = []
    for y in range(top, bottom - 1, -1):
        glyphs = []
        for x in range(left, right + 1):
            if (x, y) not in grid:
                glyphs.append(GAP_GLYPH)
            elif x + y in diagonals.sums or x - y in diagonals.diffs:
                glyphs.append(DIAGONAL_GLYPH)
            else:
                glyphs.append(UNCOVERED_GLYPH)
        lines.append("".join(glyphs).rstrip())
    return lines


class TextRenderer:
    def __init__(self, template_dir=None):
        """
        Args:
          template_dir (str): Directory to load templates from. Defaults to
            the templates bundled with the package.
        """
        if template_dir is None:
            template_dir = os.path.join(os.path.dirname(__file__), "templates")
        self.jinja = jinja2.Environment(
            loader=jinja2.FileSystemLoader(template_dir),
            trim_blocks=True,
            lstrip_blocks=True,
            keep_trailing_newline=True,
        )

    def render(self, template, **kwargs):
        LOG.debug("rendering %s", template)
        return self.jinja.get_template(template).render(**kwargs)

    def render_board(self, title, lines):
        return self.render("board.txt.jinja", title=title, lines=lines)

    def render_verify(self, valid, size, uncovered=None, tight=None):
        flags = []
        if tight is not None:
            flags = [(name, getattr(tight, name)) for name in TightReport.FLAGS]
        return self.render(
            "verify.txt.jinja",
            valid=valid,
            size=size,
            uncovered=uncovered,
            tight=tight,
            flags=flags,
        )

    def render_search(self, result):
        return self.render("search.txt.jinja", result=result)

    def render_report(self, report, formatter):
        return self.render(
            "report.txt.jinja",
            report=report,
            violations=[formatter(v) for v in report.violations],
        )
