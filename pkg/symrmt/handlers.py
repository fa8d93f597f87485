"""Functions that perform CLI tasks, one per subcommand"""
import argparse
import json
import logging
import sys
import typing as ty

import numpy as np
import tabulate

import symrmt.config
import symrmt.exceptions
import symrmt.report
from symrmt import (
    algebra,
    characters,
    fluctuations,
    moments,
    montecarlo,
    mops,
    symfun,
    verify as suites,
    wick,
)
from symrmt.mops import EnsembleSpec
from symrmt.partitions import render_partition

log = logging.getLogger(__name__)

PRECONDITION_FAILED = 1
VERIFICATION_FAILED = 2


def run(args: argparse.Namespace) -> None:
    "Install the configured bounds and dispatch to the selected handler"
    try:
        symrmt.config.install(symrmt.config.parse(args.config))
        args.handler(args)
    except symrmt.exceptions.SymRmtException as err:
        _halt_with(err)


def _halt_with(err: Exception) -> None:
    log.error(err)
    body = {"error": type(err).__name__, "message": str(err)}
    for field in ("operation", "detail", "bound", "limit", "value"):
        if hasattr(err, field):
            body[field] = str(getattr(err, field))
    print(json.dumps(body), file=sys.stderr)
    sys.exit(PRECONDITION_FAILED)


def _ensemble(args: argparse.Namespace) -> EnsembleSpec:
    return EnsembleSpec.from_name(
        args.ensemble, args.gamma, args.gamma1, args.gamma2
    )


def _json(obj: ty.Any) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _emit(value: ty.Any, as_json: bool) -> None:
    "Print a polynomial, Laurent polynomial or rational"
    if isinstance(value, (algebra.PolyN, algebra.LaurentPolyN)):
        if as_json:
            print(_json(algebra.poly_to_json(value)))
        else:
            print(algebra.render_poly(value))
    elif as_json:
        print(_json({"value": str(value)}))
    else:
        print(value)


def _mode(args: argparse.Namespace, ensemble: EnsembleSpec) -> ty.Any:
    if args.n is None and not args.symbolic:
        if ensemble.kind == mops.JACOBI:
            raise symrmt.exceptions.PreconditionError(
                "cli", "Jacobi moments need --n"
            )
    return args.n


def trace_moment(args: argparse.Namespace) -> None:
    ensemble = _ensemble(args)
    result = moments.trace_joint_moment(
        ensemble, args.mu, _mode(args, ensemble)
    )
    _emit(result.value, args.json)


def schur_moment(args: argparse.Namespace) -> None:
    ensemble = _ensemble(args)
    result = moments.schur_moment(
        ensemble, args.partition, _mode(args, ensemble)
    )
    _emit(result.value, args.json)


def charpoly(args: argparse.Namespace) -> None:
    ensemble = _ensemble(args)
    if args.power is not None:
        coeffs = moments.charpoly_power_moment(ensemble, args.n, args.power)
        if args.json:
            body = {"var": "t", "coeffs": [str(c) for c in coeffs]}
            print(_json(body))
        else:
            poly = algebra.PolyN.from_coeffs(coeffs)
            print(algebra.render_poly(poly, var="t"))
        return
    _emit(moments.charpoly_moment(ensemble, args.n, args.points), args.json)


def mop_eval(args: argparse.Namespace) -> None:
    family = _ensemble(args)
    _emit(mops.mop_eval(family, args.partition, args.points), args.json)


def schur_eval(args: argparse.Namespace) -> None:
    _emit(symfun.schur_eval(args.partition, args.points), args.json)


def char_table(args: argparse.Namespace) -> None:
    table = characters.character_table(args.n)
    if args.json:
        print(_json(table.to_json()))
        return
    rows = [[render_partition(lam)] + table.row(lam) for lam in table.classes]
    headers = ["lambda \\ mu"] + [render_partition(mu) for mu in table.classes]
    print(tabulate.tabulate(rows, headers=headers))


def xk_moment(args: argparse.Namespace) -> None:
    value = fluctuations.xk_joint_central_moment(args.ks, args.n)
    _emit(value, not args.text)


def cumulant(args: argparse.Namespace) -> None:
    _emit(fluctuations.xk_cumulant(args.k, args.order), not args.text)


def connected(args: argparse.Namespace) -> None:
    correlator = fluctuations.connected_correlator(args.mu)
    _emit(correlator.value, not args.text)


def oracle_wick(args: argparse.Namespace) -> None:
    _emit(wick.wick_trace_moment(args.mu, args.convention), args.json)


def check_dual_cauchy(args: argparse.Namespace) -> None:
    family = _ensemble(args)
    rng = np.random.default_rng(args.seed)
    t = args.t if args.t is not None else suites.random_points(rng, args.p)
    x = args.x if args.x is not None else suites.random_points(rng, args.q)
    lhs, rhs = mops.verify_dual_cauchy(family, t, x)
    print(f"t = {[str(v) for v in t]}, x = {[str(v) for v in x]}")
    print(f"product: {lhs}\nexpansion: {rhs}")
    if lhs != rhs:
        sys.exit(VERIFICATION_FAILED)


def check_genfun(args: argparse.Namespace) -> None:
    passed = mops.verify_genfun_truncated(args.vars, args.degree)
    print("passed" if passed else "failed")
    if not passed:
        sys.exit(VERIFICATION_FAILED)


def _custom_estimate(args: argparse.Namespace) -> None:
    ensemble = _ensemble(args)
    config = montecarlo.SamplerConfig(
        ensemble=ensemble,
        n=args.n,
        samples=args.samples,
        seed=args.seed,
        workers=args.workers,
    )
    target = moments.trace_joint_moment(ensemble, args.mu, args.n).at(args.n)
    estimate = montecarlo.estimate_trace_moment(config, args.mu)
    z = estimate.z_score(target)
    print(
        json.dumps(
            {
                "target": str(target),
                "estimate": estimate.mean,
                "se": estimate.standard_error,
                "z": z,
            }
        )
    )
    if abs(z) > 5:
        sys.exit(VERIFICATION_FAILED)


def verify(args: argparse.Namespace) -> None:
    suite = args.suite or args.suite_name or suites.ALL
    if suite == suites.MC and args.mu is not None:
        _custom_estimate(args)
        return
    log.info(f"Running verification suite {suite}")
    passed = suites.run(
        suite,
        skip_mc=args.skip_mc,
        samples=args.samples,
        seed=args.seed,
        workers=args.workers,
    )
    symrmt.report.print_report()
    if not passed:
        sys.exit(VERIFICATION_FAILED)
