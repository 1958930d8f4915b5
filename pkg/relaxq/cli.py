import argparse
import functools
import logging
import os
import os.path
import sys

import slugify

from relaxq import bounds, conjectures, constructions, search, tables, verify
from relaxq.board import BoardDims, BoardError, SpacedGrid
from relaxq.document import (
    PLACEMENT,
    RELAXED_QUEEN,
    SPACED_GRID,
    CoverDocument,
    DocumentError,
    read_document,
)
from relaxq.render import TextRenderer, board_lines, grid_lines

LOG = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2
EXIT_CUTOFF = 3

LOG_FORMAT = "%(asctime)s %(levelname)8s [%(name)s] %(message)s"

BOUND_FUNCTIONS = {
    "beta": bounds.beta_rect,
    "alpha": bounds.alpha_rect,
    "gamma-lower": bounds.gamma_lower,
    "grid-lower": bounds.spaced_grid_diag_lower,
}


class UsageError(Exception):
    pass


def _dims(args):
    m = args.m if args.m is not None else args.m_pos
    n = args.n if args.n is not None else args.n_pos
    if m is None or n is None:
        raise UsageError("%s needs board dimensions m and n" % args.command)
    return m, n


def _int_list(value):
    try:
        return [int(part) for part in value.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError("expected comma separated integers, got %r" % value)


def _write_document(document, out=None, default_name=None):
    """
    Print a document, or write it to a file. When out is a directory the
    file is named after default_name.
    """
    text = document.to_string()
    if out is None:
        print(text, end="")
        return
    path = out
    if os.path.isdir(out):
        path = os.path.join(out, slugify.slugify(default_name) + ".cover")
    with open(path, "wt") as fh:
        fh.write(text)
    print("wrote", path, file=sys.stderr)


def cmd_bound(problem, m, n):
    if problem == "classify":
        print(bounds.classify_board(m, n))
    else:
        print(BOUND_FUNCTIONS[problem](m, n))
    return EXIT_OK


def cmd_construct(kind, m=None, n=None, k=None, e=None, d=2, out=None):
    if kind == "queen":
        cover = constructions.rect_queen_cover(m, n)
        if not verify.is_relaxed_cover(cover) or cover.size != bounds.beta_rect(m, n):
            raise RuntimeError("queen construction failed verification on %dx%d" % (m, n))
        document = CoverDocument.from_cover(cover)
    elif kind == "bishop":
        diagonals = constructions.bishop_cover(m, n)
        grid = SpacedGrid.consecutive(m, n)
        valid = verify.is_diagonal_cover(grid, diagonals)
        if not valid or diagonals.size != bounds.alpha_rect(m, n):
            raise RuntimeError("bishop construction failed verification on %dx%d" % (m, n))
        document = CoverDocument.from_diagonals(BoardDims(m, n), diagonals)
    elif kind == "qe":
        family = constructions.QeFamily(k, e, d)
        grid = family.grid()
        if not verify.is_perfect_cover(grid, family.cover()):
            raise RuntimeError("Q_e construction failed verification for k=%d e=%d" % (k, e))
        document = CoverDocument.from_grid(grid, family.cover())
    else:
        cover = constructions.tight_square_cover(n, e)
        if not verify.is_relaxed_cover(cover):
            raise RuntimeError("tight construction failed verification for n=%d e=%d" % (n, e))
        document = CoverDocument.from_cover(cover)
    _write_document(document, out, "%s %dx%d" % (kind, document.m, document.n))
    return EXIT_OK


def _verify_board_document(document):
    if document.kind == PLACEMENT:
        placement = document.to_placement()
        cover = document.to_cover()
        valid = verify.is_dominating_placement(placement)
        return valid, len(placement), cover, placement.queens
    cover = document.to_cover()
    return verify.is_relaxed_cover(cover), cover.size, cover, ()


def cmd_verify(path, render=False):
    document = read_document(path)
    renderer = TextRenderer()
    tight = None

    if document.kind == SPACED_GRID:
        grid = document.to_grid()
        diagonals = document.to_diagonals()
        valid = verify.is_diagonal_cover(grid, diagonals)
        size = diagonals.size
        missed = verify.uncovered_grid_cells(grid, diagonals)
        picture = grid_lines(grid, diagonals)
    else:
        valid, size, cover, queens = _verify_board_document(document)
        missed = verify.uncovered_cells(cover)
        picture = board_lines(cover, queens)
        n = document.n
        if (
            valid
            and document.kind == RELAXED_QUEEN
            and document.m == n
            and n % 4 == 3
            and size == (n - 1) // 2
        ):
            tight = verify.tight_analysis(cover)

    print(
        renderer.render_verify(valid, size, uncovered=missed[0] if missed else None, tight=tight),
        end="",
    )
    if render:
        print(renderer.render_board("%s %dx%d" % (document.kind, document.m, document.n), picture),
              end="")
    return EXIT_OK if valid else EXIT_INVALID


def cmd_search(problem, m=None, n=None, cols=None, rows=None, cutoff=None, lower=None,
               symmetry=True, workers=1, out=None):
    if problem == "grid":
        if not cols or not rows:
            raise UsageError("search grid needs --cols and --rows")
        grid = SpacedGrid(sorted(set(cols)), sorted(set(rows)))
        result = search.grid_min_diagonals(grid, cutoff=cutoff)
        m, n = grid.width, grid.height
        to_document = functools.partial(CoverDocument.from_grid, grid)
    elif problem == "beta":
        result = search.beta_exact(
            m, n, cutoff=cutoff, lower=lower, symmetry=symmetry, workers=workers
        )
        to_document = CoverDocument.from_cover
    elif problem == "alpha":
        result = search.alpha_exact(m, n, cutoff=cutoff)
        to_document = functools.partial(CoverDocument.from_diagonals, BoardDims(m, n))
    else:
        result = search.gamma_exact(m, n, cutoff=cutoff, lower=lower)
        to_document = CoverDocument.from_placement

    print(TextRenderer().render_search(result), end="")
    if not result.optimal:
        return EXIT_CUTOFF
    _write_document(to_document(result.witness), out, "%s %dx%d" % (problem, m, n))
    return EXIT_OK


def cmd_conjecture(question, p=None, e=None, parity=None, check=False):
    renderer = TextRenderer()
    if question in ("q1", "q2"):
        if p is None or e is None:
            raise UsageError("%s needs --p and --e" % question)
        if check:
            if question == "q1":
                report = conjectures.check_q1_within_q2(p, e)
            else:
                report = conjectures.check_conjecture_q2(p, e)
            print(renderer.render_report(report, conjectures.format_q2), end="")
            return EXIT_OK if report.holds else EXIT_INVALID
        solutions = conjectures.q1_solutions if question == "q1" else conjectures.q2_solutions
        for solution in solutions(p, e):
            print(conjectures.format_q2(solution))
        return EXIT_OK

    if e is None:
        raise UsageError("q3 needs --e")
    if check:
        report = conjectures.check_conjecture_q3(e)
        print(renderer.render_report(report, conjectures.format_q3), end="")
        return EXIT_OK if report.holds else EXIT_INVALID
    for solution in conjectures.q3_solutions(e, parity=parity):
        print(conjectures.format_q3(solution))
    return EXIT_OK


def cmd_table(max_n, fmt="csv"):
    print(tables.history_table(max_n, fmt), end="")
    return EXIT_OK


def cmd_figure(max_dim, fmt="csv"):
    print(tables.classification_grid(max_dim, fmt), end="")
    return EXIT_OK


def _add_dims(parser):
    parser.add_argument("m_pos", metavar="m", type=int, nargs="?")
    parser.add_argument("n_pos", metavar="n", type=int, nargs="?")
    parser.add_argument("--m", type=int)
    parser.add_argument("--n", type=int)


def get_parser():
    parser = argparse.ArgumentParser("relaxq")
    parser.add_argument("-v", "--verbose", action="store_true")

    cmd_subparsers = parser.add_subparsers(dest="command")

    bound_parser = cmd_subparsers.add_parser("bound")
    bound_parser.add_argument("problem", choices=sorted(BOUND_FUNCTIONS) + ["classify"])
    _add_dims(bound_parser)

    construct_parser = cmd_subparsers.add_parser("construct")
    construct_parser.add_argument("kind", choices=["queen", "bishop", "qe", "tight"])
    _add_dims(construct_parser)
    construct_parser.add_argument("--k", type=int)
    construct_parser.add_argument("--e", type=int)
    construct_parser.add_argument("--d", type=int, default=2)
    construct_parser.add_argument("-o", "--out")

    verify_parser = cmd_subparsers.add_parser("verify")
    verify_parser.add_argument("path", nargs="?", default="-")
    verify_parser.add_argument("--render", action="store_true")

    search_parser = cmd_subparsers.add_parser("search")
    search_parser.add_argument("problem", choices=["beta", "alpha", "gamma", "grid"])
    _add_dims(search_parser)
    search_parser.add_argument("--cols", type=_int_list)
    search_parser.add_argument("--rows", type=_int_list)
    search_parser.add_argument("--cutoff", type=int)
    search_parser.add_argument("--lower", type=int)
    search_parser.add_argument(
        "--no-symmetry", action="store_false", dest="symmetry", default=True
    )
    search_parser.add_argument("--workers", type=int, default=1)
    search_parser.add_argument("-o", "--out")

    conjecture_parser = cmd_subparsers.add_parser("conjecture")
    conjecture_parser.add_argument("question", choices=["q1", "q2", "q3"])
    conjecture_parser.add_argument("--p", type=int)
    conjecture_parser.add_argument("--e", type=int)
    conjecture_parser.add_argument("--parity", choices=["odd", "even"])
    conjecture_parser.add_argument("--check", action="store_true")

    table_parser = cmd_subparsers.add_parser("table")
    table_parser.add_argument("--max-n", type=int, default=13)
    table_parser.add_argument("--format", choices=["csv", "ascii"], default="csv")

    figure_parser = cmd_subparsers.add_parser("figure")
    figure_parser.add_argument("--max-dim", type=int, default=18)
    figure_parser.add_argument("--format", choices=["csv", "ascii"], default="csv")

    return parser


def dispatch(args):
    if args.command == "bound":
        return cmd_bound(args.problem, *_dims(args))
    if args.command == "construct":
        if args.kind in ("queen", "bishop"):
            m, n = _dims(args)
            return cmd_construct(args.kind, m, n, out=args.out)
        if args.kind == "qe":
            if args.k is None or args.e is None:
                raise UsageError("construct qe needs --k and --e")
            return cmd_construct("qe", k=args.k, e=args.e, d=args.d, out=args.out)
        n = args.n if args.n is not None else args.m_pos
        if n is None or args.e is None:
            raise UsageError("construct tight needs n and --e")
        return cmd_construct("tight", n=n, e=args.e, out=args.out)
    if args.command == "verify":
        return cmd_verify(args.path, render=args.render)
    if args.command == "search":
        m = n = None
        if args.problem != "grid":
            m, n = _dims(args)
        return cmd_search(
            args.problem,
            m,
            n,
            cols=args.cols,
            rows=args.rows,
            cutoff=args.cutoff,
            lower=args.lower,
            symmetry=args.symmetry,
            workers=args.workers,
            out=args.out,
        )
    if args.command == "conjecture":
        return cmd_conjecture(
            args.question, p=args.p, e=args.e, parity=args.parity, check=args.check
        )
    if args.command == "table":
        return cmd_table(args.max_n, args.format)
    if args.command == "figure":
        return cmd_figure(args.max_dim, args.format)
    raise UsageError("unknown command %r" % args.command)


def main(args=None):
    parser = get_parser()
    args = parser.parse_args(args)

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format=LOG_FORMAT,
        stream=sys.stderr,
    )

    if not args.command:
        parser.print_help()
        return EXIT_USAGE

    try:
        return dispatch(args)
    except (UsageError, DocumentError, BoardError) as exc:
        print("relaxq %s: error: %s" % (args.command, exc), file=sys.stderr)
        return EXIT_USAGE
    except RuntimeError:
        LOG.exception("internal check failed")
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
