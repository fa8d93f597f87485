"""Joint trace moments, Schur moments and characteristic polynomials

Moments of power sums are character sums over partitions of |mu| of the
Schur-polynomial moments, which have closed forms for every ensemble:

  - Hermite: E[S_lam] = C_lam(N) chi^lam_(2^m) / (2^m m!), |lam| = 2m;
  - Laguerre: E[S_lam] = G-ratio(gamma) C_lam(N) dim(lam) / |lam|!;
  - Jacobi: E[S_lam] = G-ratio(gamma1) C_lam(N) D^J_{lam,0}(N).

Hermite and Laguerre results are polynomials in N ("symbolic" mode, with
`n=None`); Jacobi results are computed at a fixed N only.
"""
import fractions
import logging
import math
import typing as ty

import symrmt.config
from symrmt import algebra, characters, mops, partitions, symfun
from symrmt.algebra import PolyN, Rational
from symrmt.exceptions import PreconditionError
from symrmt.mops import EnsembleSpec
from symrmt.partitions import Partition

log = logging.getLogger(__name__)

Value = ty.Union[PolyN, Rational]


class MomentResult(ty.NamedTuple):
    value: Value
    ensemble: EnsembleSpec
    index: Partition

    @property
    def symbolic(self) -> bool:
        return isinstance(self.value, PolyN)

    def at(self, n: int) -> Rational:
        "The value at matrix size n"
        if isinstance(self.value, PolyN):
            return self.value.evaluate(n)
        return self.value


def _check_mode(
    operation: str, ensemble: EnsembleSpec, n: ty.Optional[int]
) -> None:
    if n is None and ensemble.kind == mops.JACOBI:
        raise PreconditionError(
            operation, "Jacobi moments are only available at a fixed N"
        )
    if n is not None and n < 1:
        raise PreconditionError(operation, f"N={n} must be positive")


def _finish(value: PolyN, n: ty.Optional[int]) -> Value:
    return value if n is None else value.evaluate(n)


def _hermite_schur(lam: Partition) -> PolyN:
    weight = partitions.weight(lam)
    if weight % 2:
        return PolyN()
    if weight == 0:
        return PolyN.constant(1)
    half = weight // 2
    chi = characters.character(lam, (2,) * half)
    if chi == 0:
        return PolyN()
    scale = fractions.Fraction(chi, 2 ** half * math.factorial(half))
    return symfun.c_lambda(lam) * scale


def _laguerre_schur(lam: Partition, gamma: Rational) -> PolyN:
    scale = fractions.Fraction(
        characters.dim_irrep(lam), math.factorial(partitions.weight(lam))
    )
    return symfun.g_ratio(lam, gamma) * symfun.c_lambda(lam) * scale


def _jacobi_schur(ensemble: EnsembleSpec, lam: Partition, n: int) -> Rational:
    if len(lam) > n:
        return fractions.Fraction(0)
    g = symfun.g_ratio(lam, ensemble.gamma1).evaluate(n)
    if g == 0:
        return fractions.Fraction(0)
    return (
        g
        * symfun.c_lambda(lam).evaluate(n)
        * mops.det_D(ensemble, lam, (), n)
    )


def _schur_value(
    ensemble: EnsembleSpec, lam: Partition, n: ty.Optional[int]
) -> Value:
    if ensemble.kind == mops.HERMITE:
        return _finish(_hermite_schur(lam), n)
    if ensemble.kind == mops.LAGUERRE:
        return _finish(_laguerre_schur(lam, ensemble.gamma), n)
    assert n is not None
    return _jacobi_schur(ensemble, lam, n)


def schur_moment(
    ensemble: EnsembleSpec, lam: Partition, n: ty.Optional[int] = None
) -> MomentResult:
    """E[S_lam(x)] over the eigenvalues of an N x N matrix"""
    lam = partitions.make(lam)
    _check_mode("schur_moment", ensemble, n)
    symrmt.config.check(
        "schur_moment", "max_char_weight", partitions.weight(lam)
    )
    value = _schur_value(ensemble, lam, n)
    return MomentResult(value=value, ensemble=ensemble, index=lam)


def trace_joint_moment(
    ensemble: EnsembleSpec, mu: Partition, n: ty.Optional[int] = None
) -> MomentResult:
    """E[prod_j Tr M^{mu_j}] as a character sum of Schur moments

    Terms whose character vanishes are skipped before the content product
    is formed; for Hermite this also discards every lam with
    chi^lam_(2^m) = 0.
    """
    mu = partitions.make(mu)
    _check_mode("trace_joint_moment", ensemble, n)
    weight = partitions.weight(mu)
    symrmt.config.check("trace_joint_moment", "max_char_weight", weight)

    def result(value: Value) -> MomentResult:
        return MomentResult(value=value, ensemble=ensemble, index=mu)

    if weight == 0:
        return result(_finish(PolyN.constant(1), n))
    if ensemble.kind == mops.HERMITE and weight % 2:
        return result(_finish(PolyN(), n))
    table = characters.character_table(weight)
    total: ty.Any = PolyN() if n is None else fractions.Fraction(0)
    for lam in table.classes:
        chi = table.value(lam, mu)
        if chi == 0:
            continue
        if ensemble.kind == mops.JACOBI and n is not None and len(lam) > n:
            continue
        total = total + chi * _schur_value(ensemble, lam, n)
    log.debug(f"E[p_{mu}] for {ensemble}: {total}")
    return result(total)


def _power_trace(ensemble: EnsembleSpec, j: int, n: int) -> Rational:
    "E[Tr M^j] at N=n, with Tr M^0 = N"
    if j == 0:
        return fractions.Fraction(n)
    return trace_joint_moment(ensemble, (j,), n).at(n)


def _check_points(operation: str, t: symfun.PointList, limit: int) -> None:
    if not 1 <= len(t) <= limit:
        raise PreconditionError(
            operation, f"between 1 and {limit} points are required"
        )
    if len(set(fractions.Fraction(v) for v in t)) != len(t):
        raise PreconditionError(operation, "coincident points")


def charpoly_moment(
    ensemble: EnsembleSpec, n: int, t: symfun.PointList
) -> Rational:
    """E[prod_j det(t_j - M)] at distinct points t

    Equal to the multivariate polynomial of the p x N rectangle at t, scaled
    by the reciprocal leading coefficients of phi_N, ..., phi_{N+p-1}.
    """
    _check_points("charpoly_moment", t, 5)
    if n < 1:
        raise PreconditionError("charpoly_moment", f"N={n} must be positive")
    p = len(t)
    symrmt.config.check("charpoly_moment", "max_charpoly_degree", p * n)
    prefactor = mops.inverse_leading_product(ensemble, range(n, n + p))
    return prefactor * mops.mop_eval(ensemble, (n,) * p, t)


def charpoly_power_moment(
    ensemble: EnsembleSpec, n: int, p: int
) -> ty.List[Rational]:
    """Ascending coefficients in t of E[det(t - M)^p]

    Expands the rectangle polynomial in Schur polynomials of p variables
    and sets them all equal to t.
    """
    if n < 1 or p < 1:
        raise PreconditionError(
            "charpoly_power_moment", "N and p must be positive"
        )
    symrmt.config.check(
        "charpoly_power_moment", "max_charpoly_degree", p * n
    )
    rect = (n,) * p
    prefactor = mops.inverse_leading_product(ensemble, range(n, n + p))
    coeffs = [fractions.Fraction(0)] * (n * p + 1)
    for nu in partitions.subpartitions(rect):
        kappa = mops.coefficient_or_zero(
            mops.kappa_coeff, ensemble, rect, nu, p
        )
        if kappa:
            ones = symfun.schur_at_ones(nu).evaluate(p)
            coeffs[partitions.weight(nu)] += prefactor * kappa * ones
    return coeffs


def double_factorial(k: int) -> int:
    "k!! with (-1)!! = 0!! = 1"
    if k < -1:
        raise PreconditionError("double_factorial", f"{k} is below -1")
    return math.prod(range(k, 0, -2))


def hypergeometric_2f1(
    a: algebra.Scalar, b: algebra.Scalar, c: algebra.Scalar, z: algebra.Scalar
) -> Rational:
    """Terminating 2F1(a, b; c; z) for a non-positive integer a"""
    ra = algebra.to_rational(a)
    if ra.denominator != 1 or ra > 0:
        raise PreconditionError(
            "hypergeometric_2f1", "a must be a non-positive integer"
        )
    total = fractions.Fraction(0)
    for i in range(int(-ra) + 1):
        denominator = algebra.rising(c, i) * math.factorial(i)
        if denominator == 0:
            raise PreconditionError("hypergeometric_2f1", "c hits a pole")
        total += algebra.rising(ra, i) * algebra.rising(b, i) * (
            fractions.Fraction(z) ** i
        ) / denominator
    return total


def gue_even_trace_hypergeom(j: int, n: int) -> Rational:
    "E[Tr M^{2j}] = N (2j-1)!! 2F1(-j, 1-N; 2; 2)"
    if not 1 <= j <= 12:
        raise PreconditionError("gue_even_trace_hypergeom", "1 <= j <= 12")
    return n * double_factorial(2 * j - 1) * hypergeometric_2f1(
        -j, 1 - n, 2, 2
    )


def even_trace_polynomial(j: int) -> PolyN:
    """The terminating hypergeometric sum for E[Tr M^{2j}] with symbolic N"""
    if j < 0:
        raise PreconditionError("even_trace_polynomial", "negative order")
    total = PolyN()
    for i in range(j + 1):
        scale = (
            algebra.rising(-j, i)
            * 2 ** i
            / (algebra.rising(2, i) * math.factorial(i))
        )
        # (1 - N)_i is (N + 1)_i with N -> -N
        total = total + algebra.rising_factorial_poly(1, i).reflect() * scale
    return algebra.N * total * double_factorial(2 * j - 1)


def gue_odd_pair_identity(k: int, n: int) -> bool:
    "E[Tr M^{2k-1} Tr M] = (2k-1) E[Tr M^{2k-2}] at N=n"
    if not 1 <= k <= 6:
        raise PreconditionError("gue_odd_pair_identity", "1 <= k <= 6")
    hermite = EnsembleSpec.hermite()
    lhs = trace_joint_moment(hermite, (2 * k - 1, 1), n).at(n)
    rhs = (2 * k - 1) * _power_trace(hermite, 2 * k - 2, n)
    return lhs == rhs
