# -*- coding: utf-8 -*-
"""
Command-line interface.

Subcommands:
    add      elementwise ⊕ / ⊕′ of two matrices
    mul      matrix product under a min / max / plus fold
    scale    scalar action α ⊗ A
    power    k-th matrix power
    closure  Kleene closure (CYCLE-WARNING on the error stream when flagged)
    paths    all-pairs shortest paths of a graph file
    sched    max-plus schedule trace
    axioms   semiring law check

Matrix results go to -o OUT or standard output; diagnostics go to the error
stream through logging. Exit codes are defined in config.py.
"""

import argparse
import logging
import re
import sys

from config import (
    DEFAULT_MODE,
    DEFAULT_RANGE,
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    EXIT_AXIOM_FAILURE,
    EXIT_DIMENSION,
    EXIT_DOMAIN,
    EXIT_OK,
    EXIT_PARSE,
    EXIT_USAGE,
)
from src.algebra import AlgebraMode, InfinityPolicy
from src.axioms import AxiomConfig, check_axioms
from src.errors import DimensionMismatch, DomainError, ParseError
from src.formatting import format_matrix, format_trace
from src.matrix import ReductionOp, mat_add, mat_closure, mat_mul, mat_power, scalar_mul
from src.parser import parse_nn, read_graph, read_matrix
from src.solver import schedule_recurrence, shortest_paths

logger = logging.getLogger(__name__)

MODES = {'min': AlgebraMode.MIN, 'max': AlgebraMode.MAX}
REDUCTIONS = {
    'min': ReductionOp.TROPICAL_MIN,
    'max': ReductionOp.TROPICAL_MAX,
    'plus': ReductionOp.PLUS_FOLD,
}
# mode implied by --reduce when --mode is omitted
REDUCE_DEFAULT_MODE = {'min': 'min', 'max': 'max', 'plus': 'min'}
# leading "-" followed by a digit, ".", "I" or "inf" starts a literal
NEGATIVE_LITERAL = re.compile(r"^-(\d|\.\d|I|inf)")


class UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    """argparse exits with status 2 on bad usage; raise instead so we can exit with 1."""

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # "-8+I", "-I", "-inf" are values, not flags
        self._negative_number_matcher = NEGATIVE_LITERAL

    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _emit(text, out):
    if out:
        with open(out, 'w', encoding='utf-8') as f:
            f.write(text)
        logger.info("✓ Output saved to %s", out)
    else:
        sys.stdout.write(text)


def _policy(args):
    return InfinityPolicy.STRICT if args.strict else InfinityPolicy.RESOLVE


def _nonnegative_int(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def _positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _cmd_add(args):
    A, B = read_matrix(args.A), read_matrix(args.B)
    _emit(format_matrix(mat_add(A, B, MODES[args.mode])), args.out)
    return EXIT_OK


def _cmd_mul(args):
    A, B = read_matrix(args.A), read_matrix(args.B)
    mode = MODES[args.mode or REDUCE_DEFAULT_MODE[args.reduce]]
    _emit(format_matrix(mat_mul(A, B, mode, REDUCTIONS[args.reduce], _policy(args))), args.out)
    return EXIT_OK


def _cmd_scale(args):
    alpha = parse_nn(args.alpha)
    A = read_matrix(args.A)
    _emit(format_matrix(scalar_mul(alpha, A, MODES[args.mode], policy=_policy(args))), args.out)
    return EXIT_OK


def _cmd_power(args):
    A = read_matrix(args.A)
    result = mat_power(A, args.k, MODES[args.mode], REDUCTIONS[args.reduce], _policy(args))
    _emit(format_matrix(result), args.out)
    return EXIT_OK


def _report_cycle(result):
    if result.cycle_warning:
        logger.warning("CYCLE-WARNING: closure has a cycle improving on the identity")


def _cmd_closure(args):
    result = mat_closure(read_matrix(args.A), MODES[args.mode], _policy(args))
    _report_cycle(result)
    _emit(format_matrix(result.matrix), args.out)
    return EXIT_OK


def _cmd_paths(args):
    result = shortest_paths(read_graph(args.graph), _policy(args))
    _report_cycle(result)
    _emit(format_matrix(result.matrix), args.out)
    return EXIT_OK


def _cmd_sched(args):
    A, x0 = read_matrix(args.A), read_matrix(args.X0)
    trace = schedule_recurrence(A, x0, args.k, _policy(args))
    _emit(format_trace(trace), args.out)
    if args.plot:
        from src.visualization import plot_schedule
        plot_schedule(trace, save_filename=args.plot)
    return EXIT_OK


def _cmd_axioms(args):
    low, high = args.range
    config = AxiomConfig(
        mode=MODES[args.mode],
        sample_count=args.samples,
        seed=args.seed,
        component_range=(low, high),
        include_infinities=args.infinities,
        infinity_policy=_policy(args),
    )
    report = check_axioms(config)
    _emit(report.to_json() if args.json else report.to_text(), args.out)
    return EXIT_OK if report.passed else EXIT_AXIOM_FAILURE


def build_parser():
    parser = _ArgumentParser(
        prog="neutro",
        description="Neutrosophic min-plus / max-plus algebra on matrix files",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    sub = parser.add_subparsers(dest="command", parser_class=_ArgumentParser)
    sub.required = True

    def command(name, handler, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(handler=handler)
        return p

    def out(p):
        p.add_argument("-o", "--out", help="output file (default: standard output)")

    def strict(p):
        p.add_argument("--strict", action="store_true",
                       help="reject (+inf) + (-inf) instead of resolving it")

    p = command("add", _cmd_add, "elementwise tropical sum")
    p.add_argument("--mode", choices=MODES, required=True)
    p.add_argument("A")
    p.add_argument("B")
    out(p)

    p = command("mul", _cmd_mul, "matrix product")
    p.add_argument("--reduce", choices=REDUCTIONS, required=True)
    p.add_argument("--mode", choices=MODES, default=None)
    p.add_argument("A")
    p.add_argument("B")
    out(p)
    strict(p)

    p = command("scale", _cmd_scale, "scalar action alpha ⊗ A")
    p.add_argument("--alpha", required=True, help="neutrosophic literal, e.g. 2+I")
    p.add_argument("--mode", choices=MODES, required=True)
    p.add_argument("A")
    out(p)
    strict(p)

    p = command("power", _cmd_power, "k-th matrix power")
    p.add_argument("--k", type=_nonnegative_int, required=True)
    p.add_argument("--mode", choices=MODES, required=True)
    p.add_argument("--reduce", choices=['min', 'max'], required=True)
    p.add_argument("A")
    out(p)
    strict(p)

    p = command("closure", _cmd_closure, "Kleene closure")
    p.add_argument("--mode", choices=MODES, default=DEFAULT_MODE)
    p.add_argument("A")
    out(p)
    strict(p)

    p = command("paths", _cmd_paths, "all-pairs shortest paths")
    p.add_argument("graph", metavar="GRAPHFILE")
    out(p)
    strict(p)

    p = command("sched", _cmd_sched, "max-plus schedule recurrence")
    p.add_argument("--k", type=_nonnegative_int, required=True)
    p.add_argument("--plot", metavar="PNG", help="also plot the trace to this image")
    p.add_argument("A")
    p.add_argument("X0")
    out(p)
    strict(p)

    p = command("axioms", _cmd_axioms, "check the semiring laws")
    p.add_argument("--mode", choices=MODES, required=True)
    p.add_argument("--samples", type=_positive_int, default=DEFAULT_SAMPLES)
    p.add_argument("--seed", type=_nonnegative_int, default=DEFAULT_SEED)
    p.add_argument("--range", type=int, nargs=2, metavar=("LO", "HI"), default=list(DEFAULT_RANGE))
    p.add_argument("--infinities", action="store_true", help="also sample -inf and +inf")
    strict(p)
    p.add_argument("--json", action="store_true", help="structured report instead of the text summary")
    out(p)

    return parser


def cli_main(argv=None):
    """
    Run one CLI invocation.

    Parameters
    ----------
    argv : argument list without the program name (default: sys.argv[1:])

    Returns
    -------
    Process exit code.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        logger.error("%s", exc)
        return EXIT_USAGE

    if args.verbose:
        logging.getLogger().setLevel(logging.DEBUG)

    try:
        return args.handler(args)
    except ParseError as exc:
        logger.error("parse error: %s", exc)
        return EXIT_PARSE
    except DimensionMismatch as exc:
        logger.error("dimension mismatch: %s", exc)
        return EXIT_DIMENSION
    except DomainError as exc:
        logger.error("domain error: %s", exc)
        return EXIT_DOMAIN
    except (ValueError, OSError) as exc:
        logger.error("%s", exc)
        return EXIT_USAGE
