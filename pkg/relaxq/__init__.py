# ruff: noqa: F401
from relaxq.board import BoardDims, RelaxedCover, SpacedGrid
from relaxq.bounds import alpha_rect, beta_rect, classify_board
from relaxq.constructions import DiagonalCover, bishop_cover, rect_queen_cover
