"""Golden-table suites checked by `symrmt verify`

Every check is recorded in `symrmt.report`; a suite passes when none of its
checks fail. The exact suites are deterministic; the Monte Carlo suite is
reproducible for a fixed seed and worker count.
"""
import fractions
import itertools
import logging
import math
import typing as ty

import numpy as np

from symrmt import (
    characters,
    fluctuations,
    moments,
    montecarlo,
    mops,
    partitions,
    report,
    wick,
)
from symrmt.algebra import N, LaurentPolyN, Rational
from symrmt.mops import EnsembleSpec
from symrmt.report import CheckResult, record

log = logging.getLogger(__name__)

GOLDEN_TABLES = "paper-tables"
WICK = "wick"
MC = "mc"
ALL = "all"
SUITES = (GOLDEN_TABLES, WICK, MC, ALL)

HERMITE = EnsembleSpec.hermite()

TRACE_TABLE = {
    (6,): 5 * N ** 2 * (N ** 2 + 2),
    (5, 1): 5 * N * (2 * N ** 2 + 1),
    (4, 2): N * (2 * N ** 2 + 1) * (N ** 2 + 4),
    (4, 1, 1): N ** 2 * (2 * N ** 2 + 13),
    (3, 3): 3 * N * (4 * N ** 2 + 1),
    (3, 2, 1): 3 * N ** 2 * (N ** 2 + 4),
    (3, 1, 1, 1): 3 * N * (3 * N ** 2 + 2),
    (2, 2, 2): N ** 2 * (N ** 2 + 2) * (N ** 2 + 4),
    (2, 2, 1, 1): N * (N ** 2 + 2) * (N ** 2 + 4),
    (2, 1, 1, 1, 1): 3 * N ** 2 * (N ** 2 + 4),
    (1, 1, 1, 1, 1, 1): 15 * N ** 3,
}

SCHUR_TABLE = {
    (4,): N * (N + 1) * (N + 2) * (N + 3) / 8,
    (3, 1): -(N - 1) * N * (N + 1) * (N + 2) / 8,
    (2, 2): (N - 1) * N ** 2 * (N + 1) / 4,
    (2, 1, 1): -(N - 2) * (N - 1) * N * (N + 1) / 8,
    (1, 1, 1, 1): (N - 3) * (N - 2) * (N - 1) * N / 8,
}


def _inverse_n(power: int, coeff: ty.Union[int, Rational]) -> LaurentPolyN:
    "coeff / N^power"
    return LaurentPolyN.monomial(-power, coeff)


XK_TABLE = {
    (6,): LaurentPolyN(),
    (5, 1): _inverse_n(2, fractions.Fraction(5, 4)),
    (4, 2): _inverse_n(2, 1),
    (4, 1, 1): _inverse_n(1, fractions.Fraction(1, 2)),
    (3, 3): fractions.Fraction(3, 4) + _inverse_n(2, fractions.Fraction(3, 4)),
    (3, 2, 1): _inverse_n(1, fractions.Fraction(3, 4)),
    (3, 1, 1, 1): _inverse_n(2, fractions.Fraction(3, 8)),
    (2, 2, 2): _inverse_n(1, 1),
    (2, 2, 1, 1): fractions.Fraction(1, 8)
    + _inverse_n(2, fractions.Fraction(1, 2)),
    (2, 1, 1, 1, 1): _inverse_n(1, fractions.Fraction(3, 8)),
    (1, 1, 1, 1, 1, 1): LaurentPolyN.constant(fractions.Fraction(15, 64)),
}

# Families of the dual Cauchy and inverse-matrix checks
IDENTITY_FAMILIES = (
    HERMITE,
    EnsembleSpec.laguerre(fractions.Fraction(1, 2)),
    EnsembleSpec.jacobi(fractions.Fraction(1, 3), fractions.Fraction(1, 4)),
)


def _check(suite: str, name: str, expected: ty.Any, computed: ty.Any) -> bool:
    result = CheckResult(
        suite=suite,
        name=name,
        passed=bool(expected == computed),
        expected=str(expected),
        computed=str(computed),
    )
    record(result)
    if not result.passed:
        log.warning(f"{suite}: {name} failed: {expected} != {computed}")
    return result.passed


def _label(mu: partitions.Partition) -> str:
    return f"({partitions.render_partition(mu)})"


def _trace_table(suite: str) -> None:
    for mu, expected in TRACE_TABLE.items():
        computed = moments.trace_joint_moment(HERMITE, mu).value
        _check(suite, f"E[p{_label(mu)}]", expected, computed)


def _schur_table(suite: str) -> None:
    for lam, expected in SCHUR_TABLE.items():
        computed = moments.schur_moment(HERMITE, lam).value
        _check(suite, f"E[S{_label(lam)}]", expected, computed)


def _xk_table(suite: str) -> None:
    for ks, expected in XK_TABLE.items():
        computed = fluctuations.xk_joint_central_moment(ks)
        _check(suite, f"E[X{_label(ks)}]", expected, computed)


def _closed_forms(suite: str) -> None:
    for n in range(1, 6):
        _check(
            suite,
            f"E[(Tr M_R)^{2 * n}]",
            LaurentPolyN.constant(fluctuations.prop_k1_moment(n)),
            fluctuations.xk_joint_central_moment((1,) * (2 * n)),
        )
    for n in range(1, 7):
        _check(
            suite,
            f"E[(Tr M_R^2)^{n}]",
            fluctuations.tr_m2_power_closed_form(n),
            fluctuations.rescaled_trace_moment((2,) * n),
        )
    for n in range(2, 7):
        _check(
            suite,
            f"kappa_{n}(X_2)",
            fluctuations.x2_cumulant_closed_form(n),
            fluctuations.xk_cumulant(2, n),
        )
    for j in range(1, 7):
        _check(
            suite,
            f"E[p({2 * j})] hypergeometric",
            moments.even_trace_polynomial(j),
            moments.trace_joint_moment(HERMITE, (2 * j,)).value,
        )
    for k in range(1, 6):
        for n in range(1, 7):
            _check(
                suite,
                f"E[p({2 * k - 1},1)] = {2 * k - 1} E[p({2 * k - 2})] N={n}",
                True,
                moments.gue_odd_pair_identity(k, n),
            )


def random_points(
    rng: np.random.Generator, count: int
) -> ty.List[Rational]:
    "count distinct rationals with small numerators and denominators"
    points: ty.List[Rational] = []
    while len(points) < count:
        value = fractions.Fraction(
            int(rng.integers(-20, 21)), int(rng.integers(1, 7))
        )
        if value not in points:
            points.append(value)
    return points


def _dual_cauchy(suite: str, seed: int = 1) -> None:
    rng = np.random.default_rng(seed)
    for family in IDENTITY_FAMILIES:
        for p, q in itertools.product((1, 2, 3), repeat=2):
            for _ in range(20):
                t = random_points(rng, p)
                x = random_points(rng, q)
                lhs, rhs = mops.verify_dual_cauchy(family, t, x)
                _check(suite, f"dual Cauchy {family} p={p} q={q}", lhs, rhs)


def _character_invariants(suite: str) -> None:
    for n in range(1, 9):
        table = characters.character_table(n)
        classes = table.classes
        rows_ok = all(
            sum(
                fractions.Fraction(
                    table.value(lam, mu) * table.value(nu, mu),
                    partitions.z_centralizer(mu),
                )
                for mu in classes
            )
            == (1 if lam == nu else 0)
            for lam in classes
            for nu in classes
        )
        _check(suite, f"S_{n} row orthogonality", True, rows_ok)
        columns_ok = all(
            sum(table.value(lam, mu) * table.value(lam, nu) for lam in classes)
            == (partitions.z_centralizer(mu) if mu == nu else 0)
            for mu in classes
            for nu in classes
        )
        _check(suite, f"S_{n} column orthogonality", True, columns_ok)
        conjugation_ok = all(
            table.value(partitions.conjugate(lam), mu)
            == (-1) ** (n - len(mu)) * table.value(lam, mu)
            for lam in classes
            for mu in classes
        )
        _check(suite, f"S_{n} conjugation sign", True, conjugation_ok)
        _check(
            suite,
            f"S_{n} sum of squared dimensions",
            math.factorial(n),
            sum(characters.dim_irrep(lam) ** 2 for lam in classes),
        )


def _generating_function(suite: str) -> None:
    for n_vars in (1, 2):
        for degree in (2, 4, 6):
            _check(
                suite,
                f"exp(-t^2/2) expansion vars={n_vars} degree={degree}",
                True,
                mops.verify_genfun_truncated(n_vars, degree),
            )


def _inverse_matrices(suite: str, n: int = 5) -> None:
    for family in IDENTITY_FAMILIES:
        for weight in range(0, 7):
            for lam in partitions.partitions_of(weight):
                if len(lam) > n:
                    continue
                ok = all(
                    mops.psi_kappa_product(family, lam, nu, n)
                    == (1 if nu == lam else 0)
                    for nu in partitions.subpartitions(lam)
                )
                name = f"psi kappa = 1 {family} {_label(lam)}"
                _check(suite, name, True, ok)


def _chebyshev_structure(suite: str) -> None:
    for k, n in itertools.product(range(1, 9), range(1, 13)):
        if n * k > 12:
            continue
        if k % 2 and not n % 2:
            value = fluctuations.xk_joint_central_moment((k,) * n)
            _check(suite, f"[N^-1] E[X_{k}^{n}]", 0, value.coefficient(-1))
            _check(
                suite,
                f"[N^0] E[X_{k}^{n}]",
                fluctuations.szego_constant(k, n),
                value.coefficient(0),
            )
        elif not k % 2 and n % 2:
            value = fluctuations.xk_joint_central_moment((k,) * n)
            _check(suite, f"[N^0] E[X_{k}^{n}]", 0, value.coefficient(0))


def golden_tables() -> None:
    suite = GOLDEN_TABLES
    log.info("Checking trace, Schur and X-moment tables")
    _trace_table(suite)
    _schur_table(suite)
    _xk_table(suite)
    log.info("Checking closed forms")
    _closed_forms(suite)
    log.info("Checking the dual Cauchy identity")
    _dual_cauchy(suite)
    log.info("Checking character tables")
    _character_invariants(suite)
    _generating_function(suite)
    log.info("Checking change-of-basis inverses")
    _inverse_matrices(suite)
    _chebyshev_structure(suite)


def wick_oracle() -> None:
    suite = WICK
    shapes = [
        mu
        for weight in range(0, 9, 2)
        for mu in partitions.partitions_of(weight)
    ]
    for mu in shapes + [(10,), (6, 4)]:
        log.info(f"Wick pairings of {mu}")
        _check(
            suite,
            f"wick E[p{_label(mu)}]",
            moments.trace_joint_moment(HERMITE, mu).value,
            wick.wick_trace_moment(mu),
        )
        if mu:
            _check(
                suite,
                f"wick connected {_label(mu)}",
                fluctuations.connected_correlator(mu).value,
                wick.wick_connected(mu),
            )


class McTarget(ty.NamedTuple):
    name: str
    config: montecarlo.SamplerConfig
    estimate: ty.Callable[[montecarlo.SamplerConfig], montecarlo.Estimate]
    target: ty.Union[Rational, float]


def _mc_targets(
    samples: int, seed: int, workers: int
) -> ty.List[McTarget]:
    def config(
        ensemble: EnsembleSpec, n: int, count: int = samples
    ) -> montecarlo.SamplerConfig:
        return montecarlo.SamplerConfig(
            ensemble=ensemble,
            n=n,
            samples=count,
            seed=seed,
            workers=workers,
        )

    def trace(mu: partitions.Partition) -> ty.Callable[..., ty.Any]:
        return lambda c: montecarlo.estimate_trace_moment(c, mu)

    def charpoly(t: ty.List[Rational]) -> ty.Callable[..., ty.Any]:
        return lambda c: montecarlo.estimate_charpoly_product(c, t)

    laguerre = EnsembleSpec.laguerre(1)
    jacobi = EnsembleSpec.jacobi(0, 0)
    targets = []
    for mu in ((2,), (4,), (6,)):
        targets.append(
            McTarget(
                name=f"GUE E[p{_label(mu)}] N=8",
                config=config(HERMITE, 8),
                estimate=trace(mu),
                target=moments.trace_joint_moment(HERMITE, mu, 8).at(8),
            )
        )
    for t in ([fractions.Fraction(1, 2)], [fractions.Fraction(0), 1]):
        points = [fractions.Fraction(v) for v in t]
        targets.append(
            McTarget(
                name=f"GUE charpoly at {points} N=8",
                config=config(HERMITE, 8),
                estimate=charpoly(points),
                target=moments.charpoly_moment(HERMITE, 8, points),
            )
        )
    for mu in ((1,), (2,)):
        targets.append(
            McTarget(
                name=f"LUE(1) E[p{_label(mu)}] N=8",
                config=config(laguerre, 8),
                estimate=trace(mu),
                target=moments.trace_joint_moment(laguerre, mu, 8).at(8),
            )
        )
    targets.append(
        McTarget(
            name="JUE(0,0) E[p(1)] N=2",
            config=config(jacobi, 2),
            estimate=trace((1,)),
            target=moments.trace_joint_moment(jacobi, (1,), 2).at(2),
        )
    )
    targets.append(
        McTarget(
            name="GUE semicircle mass on [-1/2, 1/2] N=64",
            config=config(HERMITE, 64, min(samples, 200)),
            estimate=montecarlo.semicircle_fraction,
            target=montecarlo.SEMICIRCLE_CENTRAL,
        )
    )
    return targets


def monte_carlo(
    samples: int = 100000, seed: int = 42, workers: int = 1, limit: float = 5
) -> None:
    """Every exact value checked here must lie within `limit` SE"""
    suite = MC
    for target in _mc_targets(samples, seed, workers):
        log.info(f"Sampling {target.name}")
        estimate = target.estimate(target.config)
        z = estimate.z_score(target.target)
        record(
            CheckResult(
                suite=suite,
                name=target.name,
                passed=abs(z) <= limit,
                expected=f"{float(target.target):.6g}",
                computed=(
                    f"{estimate.mean:.6g} +- {estimate.standard_error:.3g}"
                    f" (z={z:.2f})"
                ),
            )
        )


def run(
    suite: str,
    skip_mc: bool = False,
    samples: int = 100000,
    seed: int = 42,
    workers: int = 1,
) -> bool:
    "Run one suite (or all of them); True iff nothing failed"
    if suite not in SUITES:
        raise ValueError(f"Unknown suite {suite}")
    if suite in (GOLDEN_TABLES, ALL):
        golden_tables()
    if suite in (WICK, ALL):
        wick_oracle()
    if suite == MC or (suite == ALL and not skip_mc):
        monte_carlo(samples=samples, seed=seed, workers=workers)
    return not report.failures()
