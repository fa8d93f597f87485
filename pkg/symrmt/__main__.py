"""Entrypoint for use from the console
"""
import argparse
import logging
import sys
import typing as ty

import symrmt.exceptions
import symrmt.handlers
from symrmt import algebra, mops, partitions, symfun, verify, wick

DESC = """Exact moments of Gaussian, Laguerre and Jacobi unitary ensembles."""

USAGE_ERROR = 64


class Parser(argparse.ArgumentParser):
    "Argument parser that exits with status 64 on malformed input"

    def error(self, message: str) -> ty.NoReturn:
        self.print_usage(sys.stderr)
        self.exit(USAGE_ERROR, f"{self.prog}: error: {message}\n")


def _typed(
    parse: ty.Callable[[str], ty.Any]
) -> ty.Callable[[str], ty.Any]:
    "Turn a ParsingError into an argparse type error"

    def convert(text: str) -> ty.Any:
        try:
            return parse(text)
        except symrmt.exceptions.ParsingError as err:
            raise argparse.ArgumentTypeError(err.msg)

    convert.__name__ = parse.__name__
    return convert


partition_arg = _typed(partitions.parse_partition)
rational_arg = _typed(algebra.parse_rational)
points_arg = _typed(symfun.parse_points)


def int_list_arg(text: str) -> ty.List[int]:
    try:
        values = [int(piece) for piece in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected integers, got {text!r}")
    if any(v <= 0 for v in values):
        raise argparse.ArgumentTypeError("entries must be positive")
    return values


def _ensemble_args(
    sub: argparse.ArgumentParser, flag: str = "--ensemble"
) -> None:
    sub.add_argument(
        flag,
        dest="ensemble",
        default="gue",
        choices=sorted(mops.ALIASES),
        help="Ensemble or polynomial family (default: gue)",
    )
    sub.add_argument(
        "--gamma", type=rational_arg, default=0, help="Laguerre parameter"
    )
    sub.add_argument(
        "--gamma1", type=rational_arg, default=0, help="Jacobi parameter"
    )
    sub.add_argument(
        "--gamma2", type=rational_arg, default=0, help="Jacobi parameter"
    )


def _mode_args(sub: argparse.ArgumentParser) -> None:
    mode = sub.add_mutually_exclusive_group()
    mode.add_argument(
        "--symbolic",
        action="store_true",
        help="Polynomial in N (the default for gue and lue)",
    )
    mode.add_argument("--n", type=int, help="Evaluate at a fixed matrix size")


def _json_flag(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--json", action="store_true", help="Print JSON")


def _text_flag(sub: argparse.ArgumentParser) -> None:
    sub.add_argument(
        "--text",
        action="store_true",
        help="Print rendered text instead of JSON",
    )


parser = Parser(prog="symrmt", description=DESC)
parser.set_defaults(handler=lambda _: parser.print_help())
parser.add_argument(
    "--verbose", "-v", action="store_true", help="Enable verbose logging"
)
parser.add_argument(
    "--config",
    help="Read size bounds from a .conf file (see symrmt.config)",
)

subparsers = parser.add_subparsers(title="commands")

trace_moment = subparsers.add_parser(
    name="trace-moment", help="Joint moment of traces E[prod Tr M^mu_j]"
)
_ensemble_args(trace_moment)
trace_moment.add_argument(
    "--mu", type=partition_arg, required=True, help='Partition, e.g. "4,2"'
)
_mode_args(trace_moment)
_json_flag(trace_moment)
trace_moment.set_defaults(handler=symrmt.handlers.trace_moment)

schur_moment = subparsers.add_parser(
    name="schur-moment", help="Moment of a Schur polynomial E[S_lambda]"
)
_ensemble_args(schur_moment)
schur_moment.add_argument(
    "--lambda",
    dest="partition",
    type=partition_arg,
    required=True,
    help='Partition, e.g. "2,2"',
)
_mode_args(schur_moment)
_json_flag(schur_moment)
schur_moment.set_defaults(handler=symrmt.handlers.schur_moment)

charpoly = subparsers.add_parser(
    name="charpoly",
    help="Moments of products of characteristic polynomials",
)
_ensemble_args(charpoly)
charpoly.add_argument("--n", type=int, required=True, help="Matrix size")
charpoly_points = charpoly.add_mutually_exclusive_group(required=True)
charpoly_points.add_argument(
    "--points", type=points_arg, help='Distinct points, e.g. "2,5"'
)
charpoly_points.add_argument(
    "--power",
    type=int,
    help="Coefficients in t of E[det(t - M)^P] instead",
)
_json_flag(charpoly)
charpoly.set_defaults(handler=symrmt.handlers.charpoly)

mop_eval = subparsers.add_parser(
    name="mop-eval", help="Evaluate a multivariate orthogonal polynomial"
)
_ensemble_args(mop_eval, flag="--family")
mop_eval.add_argument(
    "--lambda", dest="partition", type=partition_arg, required=True
)
mop_eval.add_argument("--points", type=points_arg, required=True)
_json_flag(mop_eval)
mop_eval.set_defaults(handler=symrmt.handlers.mop_eval)

schur_eval = subparsers.add_parser(
    name="schur-eval", help="Evaluate a Schur polynomial"
)
schur_eval.add_argument(
    "--lambda", dest="partition", type=partition_arg, required=True
)
schur_eval.add_argument("--points", type=points_arg, required=True)
_json_flag(schur_eval)
schur_eval.set_defaults(handler=symrmt.handlers.schur_eval)

char_table = subparsers.add_parser(
    name="char-table", help="Character table of the symmetric group S_n"
)
char_table.add_argument("--n", type=int, required=True)
_json_flag(char_table)
char_table.set_defaults(handler=symrmt.handlers.char_table)

xk_moment = subparsers.add_parser(
    name="xk-moment",
    help="Joint central moment of Chebyshev linear statistics X_k",
)
xk_moment.add_argument(
    "--ks", type=int_list_arg, required=True, help='Degrees, e.g. "3,3"'
)
_mode_args(xk_moment)
_text_flag(xk_moment)
xk_moment.set_defaults(handler=symrmt.handlers.xk_moment)

cumulant = subparsers.add_parser(name="cumulant", help="Cumulant of X_k")
cumulant.add_argument("--k", type=int, required=True)
cumulant.add_argument("--order", type=int, required=True)
_text_flag(cumulant)
cumulant.set_defaults(handler=symrmt.handlers.cumulant)

connected = subparsers.add_parser(
    name="connected", help="Connected correlator of rescaled traces"
)
connected.add_argument("--mu", type=partition_arg, required=True)
_text_flag(connected)
connected.set_defaults(handler=symrmt.handlers.connected)

oracle = subparsers.add_parser(name="oracle", help="Brute-force oracles")
oracle.set_defaults(handler=lambda _: oracle.print_help())
oracles = oracle.add_subparsers(title="oracles")
oracle_wick = oracles.add_parser(
    name="wick", help="GUE trace moments by summing Wick pairings"
)
oracle_wick.add_argument("--mu", type=partition_arg, required=True)
oracle_wick.add_argument(
    "--convention", choices=wick.CONVENTIONS, default=wick.UNRESCALED
)
_json_flag(oracle_wick)
oracle_wick.set_defaults(handler=symrmt.handlers.oracle_wick)

check = subparsers.add_parser(name="check", help="Check an identity")
check.set_defaults(handler=lambda _: check.print_help())
checks = check.add_subparsers(title="identities")
dual_cauchy = checks.add_parser(
    name="dual-cauchy",
    help="prod(t_i - x_j) as a sum over a rectangle of polynomial pairs",
)
_ensemble_args(dual_cauchy, flag="--family")
dual_cauchy.add_argument("--p", type=int, default=2)
dual_cauchy.add_argument("--q", type=int, default=2)
dual_cauchy.add_argument(
    "--seed", type=int, default=0, help="Seed for random rational points"
)
dual_cauchy.add_argument("--t", type=points_arg, help="Explicit t points")
dual_cauchy.add_argument("--x", type=points_arg, help="Explicit x points")
dual_cauchy.set_defaults(handler=symrmt.handlers.check_dual_cauchy)
genfun = checks.add_parser(
    name="genfun",
    help="Schur expansion of prod exp(-t_j^2 / 2) up to a total degree",
)
genfun.add_argument("--vars", type=int, default=2)
genfun.add_argument("--degree", type=int, default=6)
genfun.set_defaults(handler=symrmt.handlers.check_genfun)

verify_cmd = subparsers.add_parser(
    name="verify", help="Run the golden-table verification suites"
)
verify_cmd.add_argument(
    "suite_name",
    nargs="?",
    choices=verify.SUITES,
    metavar="SUITE",
    help=f"One of {', '.join(verify.SUITES)}",
)
verify_cmd.add_argument(
    "--suite", choices=verify.SUITES, help="Same as the positional SUITE"
)
verify_cmd.add_argument(
    "--skip-mc", action="store_true", help="Leave out Monte Carlo checks"
)
verify_cmd.add_argument("--samples", type=int, default=100000)
verify_cmd.add_argument("--seed", type=int, default=42)
verify_cmd.add_argument("--workers", type=int, default=1)
_ensemble_args(verify_cmd)
verify_cmd.add_argument(
    "--n", type=int, default=8, help="Matrix size of a custom estimate"
)
verify_cmd.add_argument(
    "--mu",
    type=partition_arg,
    help="With the mc suite: estimate a single trace moment as JSON",
)
verify_cmd.set_defaults(handler=symrmt.handlers.verify)


def main(argv: ty.Optional[ty.List[str]] = None) -> None:
    args = parser.parse_args(argv)
    if args.verbose:
        logging.basicConfig(level="INFO")
    logging.info(f"Using handler {args.handler} with args: {args}")
    symrmt.handlers.run(args)


if __name__ == "__main__":
    main()
