"""Multivariate Hermite, Laguerre and Jacobi polynomials

The multivariate polynomial attached to a partition lam in N variables is
det[phi_{lam_i + N - i}(x_j)] / Vandermonde(x), where phi_n are the
classical univariate orthogonal polynomials:

  - Hermite: monic, H_{n+1} = x H_n - n H_{n-1}, weight exp(-x^2/2);
  - Laguerre: leading coefficient (-1)^n / n!, weight x^gamma exp(-x);
  - Jacobi: weight x^gamma1 (1-x)^gamma2 on [0, 1].

This module also provides the D-determinants, the change-of-basis
coefficients between Schur and multivariate polynomials (psi: Schur in
terms of multivariate, kappa: the inverse) and the identity checks built on
them. Every Gamma-function ratio that appears has an integer argument
difference and is evaluated exactly (see `symrmt.algebra.gamma_ratio`).
"""
import fractions
import functools
import logging
import math
import typing as ty

import sympy

import symrmt.config
import symrmt.wick
from symrmt import algebra, partitions, symfun
from symrmt.algebra import PolyN, Rational
from symrmt.exceptions import PreconditionError
from symrmt.partitions import Partition

log = logging.getLogger(__name__)

HERMITE = "hermite"
LAGUERRE = "laguerre"
JACOBI = "jacobi"

ALIASES = {
    "gue": HERMITE,
    "hermite": HERMITE,
    "lue": LAGUERRE,
    "laguerre": LAGUERRE,
    "jue": JACOBI,
    "jacobi": JACOBI,
}

Coefficient = ty.Union[PolyN, Rational]


class EnsembleSpec(ty.NamedTuple):
    kind: str
    gamma: Rational = fractions.Fraction(0)
    gamma1: Rational = fractions.Fraction(0)
    gamma2: Rational = fractions.Fraction(0)

    @classmethod
    def hermite(cls) -> "EnsembleSpec":
        return cls(kind=HERMITE)

    @classmethod
    def laguerre(cls, gamma: algebra.Scalar) -> "EnsembleSpec":
        return cls(kind=LAGUERRE, gamma=algebra.to_rational(gamma)).validate()

    @classmethod
    def jacobi(
        cls, gamma1: algebra.Scalar, gamma2: algebra.Scalar
    ) -> "EnsembleSpec":
        return cls(
            kind=JACOBI,
            gamma1=algebra.to_rational(gamma1),
            gamma2=algebra.to_rational(gamma2),
        ).validate()

    @classmethod
    def from_name(
        cls,
        name: str,
        gamma: algebra.Scalar = 0,
        gamma1: algebra.Scalar = 0,
        gamma2: algebra.Scalar = 0,
    ) -> "EnsembleSpec":
        kind = ALIASES.get(name.lower())
        if kind is None:
            raise PreconditionError("EnsembleSpec", f"unknown ensemble {name}")
        if kind == LAGUERRE:
            return cls.laguerre(gamma)
        if kind == JACOBI:
            return cls.jacobi(gamma1, gamma2)
        return cls.hermite()

    def validate(self) -> "EnsembleSpec":
        if self.kind not in (HERMITE, LAGUERRE, JACOBI):
            raise PreconditionError("EnsembleSpec", f"unknown {self.kind}")
        for name in ("gamma", "gamma1", "gamma2"):
            if getattr(self, name) <= -1:
                raise PreconditionError(
                    "EnsembleSpec", f"{name} must exceed -1"
                )
        return self

    @property
    def gamma_sum(self) -> Rational:
        return self.gamma1 + self.gamma2

    def __str__(self) -> str:
        if self.kind == LAGUERRE:
            return f"laguerre(gamma={self.gamma})"
        if self.kind == JACOBI:
            return f"jacobi(gamma1={self.gamma1}, gamma2={self.gamma2})"
        return "hermite"


class UnivariateOP(ty.NamedTuple):
    family: EnsembleSpec
    degree: int
    coeffs: ty.Tuple[Rational, ...]

    @property
    def leading(self) -> Rational:
        return self.coeffs[-1]

    def evaluate(self, x: algebra.Scalar) -> Rational:
        value = fractions.Fraction(0)
        for coeff in reversed(self.coeffs):
            value = value * x + coeff
        return value


def univariate_coeffs(family: EnsembleSpec, n: int) -> UnivariateOP:
    if n < 0:
        raise PreconditionError("univariate_coeffs", "negative degree")
    symrmt.config.check("univariate_coeffs", "max_degree", n)
    return _univariate(family, n)


@functools.lru_cache(maxsize=None)
def _univariate(family: EnsembleSpec, n: int) -> UnivariateOP:
    if family.kind == HERMITE:
        coeffs = [_hermite_coeff(n, j) for j in range(n + 1)]
    elif family.kind == LAGUERRE:
        coeffs = [_laguerre_coeff(family.gamma, n, j) for j in range(n + 1)]
    else:
        coeffs = [
            _jacobi_coeff(family.gamma1, family.gamma_sum, n, j)
            for j in range(n + 1)
        ]
    return UnivariateOP(family=family, degree=n, coeffs=tuple(coeffs))


def _hermite_coeff(n: int, j: int) -> Rational:
    if (n - j) % 2:
        return fractions.Fraction(0)
    half = (n - j) // 2
    return fractions.Fraction(
        (-1) ** half * math.factorial(n),
        2 ** half * math.factorial(half) * math.factorial(j),
    )


def _laguerre_coeff(gamma: Rational, n: int, j: int) -> Rational:
    ratio = algebra.gamma_ratio(n + gamma + 1, j + gamma + 1)
    return (-1) ** j * ratio / (math.factorial(n - j) * math.factorial(j))


def _jacobi_coeff(
    gamma1: Rational, gsum: Rational, n: int, j: int
) -> Rational:
    ratio = algebra.gamma_ratio(n + gamma1 + 1, j + gamma1 + 1)
    ratio *= algebra.gamma_ratio(n + j + gsum + 1, n + gsum + 1)
    return (-1) ** j * ratio / (math.factorial(j) * math.factorial(n - j))


def univariate_moment(family: EnsembleSpec, k: int) -> Rational:
    """k-th moment of the normalised one-variable weight"""
    if family.kind == HERMITE:
        return fractions.Fraction(symrmt.wick.gaussian_moment(k))
    if family.kind == LAGUERRE:
        return algebra.rising(family.gamma + 1, k)
    return algebra.rising(family.gamma1 + 1, k) / algebra.rising(
        family.gamma_sum + 2, k
    )


def _row_degrees(lam: Partition, size: int) -> ty.List[int]:
    padded = list(lam) + [0] * (size - len(lam))
    return [part + size - 1 - i for i, part in enumerate(padded)]


def mop_eval(
    family: EnsembleSpec, lam: Partition, x: symfun.PointList
) -> Rational:
    "det[phi_{lam_i + N - i}(x_j)] / Vandermonde(x)"
    lam = partitions.make(lam)
    size = len(x)
    if size < 1:
        raise PreconditionError("mop_eval", "no evaluation points")
    if len(lam) > size:
        raise PreconditionError(
            "mop_eval", f"{lam} has more parts than the {size} points"
        )
    denominator = symfun.vandermonde(x)
    if denominator == 0:
        raise PreconditionError("mop_eval", "coincident points")
    rows = [univariate_coeffs(family, d) for d in _row_degrees(lam, size)]
    numerator = algebra.det([[row.evaluate(xj) for xj in x] for row in rows])
    return numerator / denominator


def _check_pair(operation: str, lam: Partition, nu: Partition) -> None:
    if not partitions.contains(nu, lam):
        raise PreconditionError(operation, f"{nu} is not contained in {lam}")


def _check_fixed_n(
    operation: str, lam: Partition, n: ty.Optional[int]
) -> int:
    if n is None:
        raise PreconditionError(
            operation, "Laguerre and Jacobi coefficients need a fixed N"
        )
    if n < len(lam):
        raise PreconditionError(
            operation, f"N={n} is smaller than the length of {lam}"
        )
    return n


def _padded(lam: Partition, size: int) -> ty.List[int]:
    return list(lam) + [0] * (size - len(lam))


def det_D(
    family: EnsembleSpec,
    lam: Partition,
    nu: Partition,
    n: ty.Optional[int] = None,
) -> Rational:
    """The determinants entering the change-of-basis coefficients

    Hermite: det[1/((lam_j - nu_k - j + k)/2)!] over even nonnegative
    offsets, size l(lam). Laguerre: det[1/(lam_j - nu_k - j + k)!], size
    l(lam). Jacobi (size N): entries 1/a! times
    Gamma(2N - 2j + g + 2) / Gamma(2N + lam_j + nu_k - j - k + g + 2),
    a = lam_j - nu_k - j + k, g = gamma1 + gamma2.
    """
    lam, nu = partitions.make(lam), partitions.make(nu)
    _check_pair("det_D", lam, nu)
    if family.kind == HERMITE:
        if (partitions.weight(lam) - partitions.weight(nu)) % 2:
            raise PreconditionError(
                "det_D", f"|{lam}| - |{nu}| must be even for Hermite"
            )
        size = len(lam)
    elif family.kind == LAGUERRE:
        size = len(lam)
    else:
        size = _check_fixed_n("det_D", lam, n)
    big, small = _padded(lam, size), _padded(nu, size)
    gsum = family.gamma_sum

    def entry(j: int, k: int) -> Rational:
        offset = big[j - 1] - small[k - 1] - j + k
        if offset < 0:
            return fractions.Fraction(0)
        if family.kind == HERMITE:
            if offset % 2:
                return fractions.Fraction(0)
            return fractions.Fraction(1, math.factorial(offset // 2))
        if family.kind == LAGUERRE:
            return fractions.Fraction(1, math.factorial(offset))
        ratio = algebra.gamma_ratio(
            2 * size - 2 * j + gsum + 2,
            2 * size + big[j - 1] + small[k - 1] - j - k + gsum + 2,
        )
        return ratio / math.factorial(offset)

    return algebra.det(
        [[entry(j, k) for k in range(1, size + 1)] for j in range(1, size + 1)]
    )


def _g_quotient(
    lam: Partition, nu: Partition, n: int, gamma: Rational
) -> Rational:
    "G_lam(N, gamma) / G_nu(N, gamma)"
    big, small = _padded(lam, n), _padded(nu, n)
    return algebra.product(
        (
            algebra.gamma_ratio(b + n - j + gamma + 1, s + n - j + gamma + 1)
            for j, (b, s) in enumerate(zip(big, small), 1)
        ),
        fractions.Fraction(1),
    )


def _g_zero(lam: Partition, n: int) -> int:
    "G_lam(N, 0) = prod_j (lam_j + N - j)!"
    return math.prod(
        math.factorial(part + n - j)
        for j, part in enumerate(_padded(lam, n), 1)
    )


def _basis_sign(nu: Partition, n: int) -> int:
    return -1 if (partitions.weight(nu) + n * (n - 1) // 2) % 2 else 1


def _hermite_half_gap(lam: Partition, nu: Partition, operation: str) -> int:
    gap = partitions.weight(lam) - partitions.weight(nu)
    if gap % 2:
        raise PreconditionError(
            operation, f"|{lam}| - |{nu}| must be even for Hermite"
        )
    return gap // 2


def _finish(value: PolyN, n: ty.Optional[int]) -> Coefficient:
    return value if n is None else value.evaluate(n)


def psi_coeff(
    family: EnsembleSpec,
    lam: Partition,
    nu: Partition,
    n: ty.Optional[int] = None,
) -> Coefficient:
    """Coefficient of the multivariate polynomial nu in S_lam

    `n=None` asks for the Hermite coefficient as a polynomial in N.
    """
    return _psi(family, partitions.make(lam), partitions.make(nu), n)


@functools.lru_cache(maxsize=None)
def _psi(
    family: EnsembleSpec, lam: Partition, nu: Partition, n: ty.Optional[int]
) -> Coefficient:
    _check_pair("psi_coeff", lam, nu)
    if family.kind == HERMITE:
        half = _hermite_half_gap(lam, nu, "psi_coeff")
        value = (
            symfun.skew_content_product(lam, nu)
            * det_D(family, lam, nu)
            / 2 ** half
        )
        return _finish(value, n)
    size = _check_fixed_n("psi_coeff", lam, n)
    sign = _basis_sign(nu, size)
    if family.kind == LAGUERRE:
        return (
            sign
            * _g_quotient(lam, nu, size, family.gamma)
            * _g_zero(lam, size)
            * det_D(family, lam, nu)
        )
    gsum = family.gamma_sum
    columns = algebra.product(
        (
            algebra.gamma_ratio(
                part + size - k + gsum + 1, 2 * size - 2 * k + gsum + 2
            )
            * (2 * part + 2 * size - 2 * k + gsum + 1)
            for k, part in enumerate(_padded(nu, size), 1)
        ),
        fractions.Fraction(1),
    )
    return (
        sign
        * _g_quotient(lam, nu, size, family.gamma1)
        * _g_zero(lam, size)
        * columns
        * det_D(family, lam, nu, size)
    )


def kappa_coeff(
    family: EnsembleSpec,
    lam: Partition,
    nu: Partition,
    n: ty.Optional[int] = None,
) -> Coefficient:
    """Coefficient of S_nu in the multivariate polynomial lam"""
    return _kappa(family, partitions.make(lam), partitions.make(nu), n)


@functools.lru_cache(maxsize=None)
def _kappa(
    family: EnsembleSpec, lam: Partition, nu: Partition, n: ty.Optional[int]
) -> Coefficient:
    _check_pair("kappa_coeff", lam, nu)
    if family.kind == HERMITE:
        half = _hermite_half_gap(lam, nu, "kappa_coeff")
        value = (
            symfun.skew_content_product(lam, nu)
            * det_D(family, lam, nu)
            * fractions.Fraction(-1, 2) ** half
        )
        return _finish(value, n)
    size = _check_fixed_n("kappa_coeff", lam, n)
    sign = _basis_sign(nu, size)
    if family.kind == LAGUERRE:
        return (
            sign
            * _g_quotient(lam, nu, size, family.gamma)
            * det_D(family, lam, nu)
            / _g_zero(nu, size)
        )
    gsum = family.gamma_sum
    big, small = _padded(lam, size), _padded(nu, size)

    def entry(j: int, k: int) -> Rational:
        offset = big[j - 1] - small[k - 1] - j + k
        if offset < 0:
            return fractions.Fraction(0)
        ratio = algebra.gamma_ratio(
            2 * size + big[j - 1] + small[k - 1] - j - k + gsum + 1,
            big[j - 1] + size - j + gsum + 1,
        )
        return ratio / math.factorial(offset)

    dtilde = algebra.det(
        [[entry(j, k) for k in range(1, size + 1)] for j in range(1, size + 1)]
    )
    return (
        sign
        * _g_quotient(lam, nu, size, family.gamma1)
        * dtilde
        / _g_zero(nu, size)
    )


def kappa_by_expansion(
    family: EnsembleSpec, lam: Partition, nu: Partition, n: int
) -> Rational:
    """kappa from the univariate coefficients directly (Cauchy-Binet)

    det[a_{lam_i + N - i, nu_l + N - l}] where a_{r,m} is the coefficient
    of x^m in phi_r.
    """
    lam, nu = partitions.make(lam), partitions.make(nu)
    _check_fixed_n("kappa_by_expansion", lam, n)
    if len(nu) > n:
        return fractions.Fraction(0)
    rows = [univariate_coeffs(family, d) for d in _row_degrees(lam, n)]
    cols = _row_degrees(nu, n)

    def entry(row: UnivariateOP, m: int) -> Rational:
        return row.coeffs[m] if m <= row.degree else fractions.Fraction(0)

    return algebra.det([[entry(row, m) for m in cols] for row in rows])


def coefficient_or_zero(
    coeff: ty.Callable[..., Coefficient],
    family: EnsembleSpec,
    lam: Partition,
    nu: Partition,
    n: int,
) -> Rational:
    "psi or kappa at fixed N, zero across the Hermite parity gap"
    if family.kind == HERMITE and (sum(lam) - sum(nu)) % 2:
        return fractions.Fraction(0)
    value = coeff(family, lam, nu, n)
    assert isinstance(value, fractions.Fraction)
    return value


def psi_kappa_product(
    family: EnsembleSpec, lam: Partition, nu: Partition, n: int
) -> Rational:
    "sum over nu <= rho <= lam of psi_{lam rho} kappa_{rho nu}"
    lam, nu = partitions.make(lam), partitions.make(nu)
    total = fractions.Fraction(0)
    for rho in partitions.subpartitions(lam):
        if not partitions.contains(nu, rho):
            continue
        total += coefficient_or_zero(
            psi_coeff, family, lam, rho, n
        ) * coefficient_or_zero(kappa_coeff, family, rho, nu, n)
    return total


def expansion_in_mops(
    family: EnsembleSpec, lam: Partition, n: int
) -> symfun.BasisExpansion:
    "S_lam = sum_nu psi_{lam nu} Phi_nu at fixed N"
    lam = partitions.make(lam)
    coeffs = {
        nu: coefficient_or_zero(psi_coeff, family, lam, nu, n)
        for nu in partitions.subpartitions(lam)
    }
    return symfun.BasisExpansion.build(f"mop-{family.kind}", coeffs)


def inverse_leading_product(
    family: EnsembleSpec, degrees: ty.Iterable[int]
) -> Rational:
    "1 / prod of the leading coefficients of phi_d over the given degrees"
    leading = algebra.product(
        (univariate_coeffs(family, d).leading for d in degrees),
        fractions.Fraction(1),
    )
    return 1 / leading


def _distinct(values: symfun.PointList) -> bool:
    return len(set(fractions.Fraction(v) for v in values)) == len(values)


def verify_dual_cauchy(
    family: EnsembleSpec, t: symfun.PointList, x: symfun.PointList
) -> ty.Tuple[Rational, Rational]:
    """Both sides of prod(t_i - x_j) expanded over the p x q rectangle

    prod_{i,j}(t_i - x_j) = c * sum_{lam in (q^p)} (-1)^{|lam~|}
    Phi_lam(t) Phi_lam~(x), lam~ the rectangle complement and c the
    reciprocal product of the leading coefficients of phi_0..phi_{p+q-1}.
    """
    p, q = len(t), len(x)
    if not (1 <= p <= 4 and 1 <= q <= 4):
        raise PreconditionError(
            "verify_dual_cauchy", "between 1 and 4 points are required"
        )
    if not (_distinct(t) and _distinct(x)):
        raise PreconditionError("verify_dual_cauchy", "coincident points")
    lhs = algebra.product(
        (fractions.Fraction(ti) - xj for ti in t for xj in x),
        fractions.Fraction(1),
    )
    total = fractions.Fraction(0)
    for lam in partitions.subpartitions((q,) * p):
        dual = partitions.rect_complement(lam, p, q)
        sign = -1 if partitions.weight(dual) % 2 else 1
        total += sign * mop_eval(family, lam, t) * mop_eval(family, dual, x)
    rhs = inverse_leading_product(family, range(p + q)) * total
    log.debug(f"dual Cauchy {family} p={p} q={q}: {lhs} vs {rhs}")
    return lhs, rhs


def _sympy_rational(value: Rational) -> sympy.Rational:
    return sympy.Rational(value.numerator, value.denominator)


def _sympy_schur(lam: Partition, symbols: ty.Sequence[sympy.Symbol]) -> ty.Any:
    "Jacobi-Trudi with complete functions from Newton's identities"
    if len(lam) > len(symbols):
        return sympy.Integer(0)
    if not lam:
        return sympy.Integer(1)
    top = lam[0] + len(lam)
    power = [sum(s ** k for s in symbols) for k in range(top + 1)]
    h = [sympy.Integer(1)]
    for r in range(1, top + 1):
        h.append(
            sympy.expand(sum(power[i] * h[r - i] for i in range(1, r + 1)) / r)
        )
    size = len(lam)
    matrix = sympy.Matrix(
        size,
        size,
        lambda i, j: h[lam[i] - i + j] if lam[i] - i + j >= 0 else 0,
    )
    return sympy.expand(matrix.det())


def _nonzero_terms(
    expr: ty.Any, symbols: ty.Sequence[sympy.Symbol]
) -> ty.Dict:
    poly = sympy.Poly(sympy.expand(expr), *symbols)
    return {monom: c for monom, c in poly.terms() if c != 0}


def verify_genfun_truncated(n_vars: int, max_degree: int) -> bool:
    """Check the Schur expansion of prod_j exp(-t_j^2 / 2) up to max_degree

    The truncation equals sum over even |nu| <= max_degree of
    (-1)^{|nu|/2} 2^{-|nu|/2} D^H_{nu,0} S_nu(t).
    """
    if n_vars < 1 or max_degree < 0:
        raise PreconditionError(
            "verify_genfun_truncated", "need n_vars >= 1 and max_degree >= 0"
        )
    symrmt.config.check("verify_genfun_truncated", "max_genfun_vars", n_vars)
    symrmt.config.check(
        "verify_genfun_truncated", "max_genfun_degree", max_degree
    )
    symbols = sympy.symbols(f"t0:{n_vars}")
    lhs = sympy.Integer(1)
    for s in symbols:
        lhs *= sum(
            (-s ** 2 / 2) ** k / sympy.factorial(k)
            for k in range(max_degree // 2 + 1)
        )
    expected = {
        monom: c
        for monom, c in _nonzero_terms(lhs, symbols).items()
        if sum(monom) <= max_degree
    }
    rhs = sympy.Integer(0)
    hermite = EnsembleSpec.hermite()
    for weight in range(0, max_degree + 1, 2):
        for nu in partitions.partitions_of(weight):
            if len(nu) > n_vars:
                continue
            coeff = (
                fractions.Fraction(-1, 2) ** (weight // 2)
                * det_D(hermite, nu, ())
            )
            if coeff:
                rhs += _sympy_rational(coeff) * _sympy_schur(nu, symbols)
    return _nonzero_terms(rhs, symbols) == expected


def _sympy_mop(
    family: EnsembleSpec, lam: Partition, symbols: ty.Sequence[sympy.Symbol]
) -> ty.Any:
    size = len(symbols)
    rows = [univariate_coeffs(family, d) for d in _row_degrees(lam, size)]
    matrix = sympy.Matrix(
        size,
        size,
        lambda i, j: sum(
            _sympy_rational(c) * symbols[j] ** m
            for m, c in enumerate(rows[i].coeffs)
        ),
    )
    vandermonde = algebra.product(
        (
            symbols[i] - symbols[j]
            for i in range(size)
            for j in range(i + 1, size)
        ),
        sympy.Integer(1),
    )
    return sympy.cancel(matrix.det() / vandermonde)


def hermite_inner_product(
    lam: Partition, mu: Partition, n_vars: int
) -> Rational:
    """<H_lam, H_mu> under Delta^2(x) prod exp(-x_i^2 / 2), normalised

    The integral factorises over monomials into univariate Gaussian moments.
    """
    lam, mu = partitions.make(lam), partitions.make(mu)
    if max(len(lam), len(mu)) > n_vars:
        raise PreconditionError(
            "hermite_inner_product", "more parts than variables"
        )
    symbols = sympy.symbols(f"x0:{n_vars}")
    hermite = EnsembleSpec.hermite()
    delta_sq = algebra.product(
        (
            (symbols[i] - symbols[j]) ** 2
            for i in range(n_vars)
            for j in range(i + 1, n_vars)
        ),
        sympy.Integer(1),
    )

    def integrate(expr: ty.Any) -> Rational:
        total = fractions.Fraction(0)
        for monom, c in _nonzero_terms(expr, symbols).items():
            weight = math.prod(symrmt.wick.gaussian_moment(e) for e in monom)
            total += fractions.Fraction(int(c.p), int(c.q)) * weight
        return total

    integrand = (
        _sympy_mop(hermite, lam, symbols)
        * _sympy_mop(hermite, mu, symbols)
        * delta_sq
    )
    return integrate(integrand) / integrate(delta_sq)
