"""Classical symmetric functions evaluated at rational points

Schur polynomials are evaluated with the Jacobi-Trudi determinant over
complete symmetric functions, which are themselves obtained from power sums
through Newton's identities. This stays well defined at coincident points;
the bialternant quotient is kept only as a cross-check at distinct points.
"""
import fractions
import logging
import math
import typing as ty

from symrmt import algebra, characters, partitions
from symrmt.algebra import PolyN, Rational
from symrmt.exceptions import ArgumentLocation, ParsingError, PreconditionError
from symrmt.partitions import Partition

log = logging.getLogger(__name__)

PointList = ty.Sequence[Rational]

SCHUR = "schur"
POWER = "power"
BASES = (SCHUR, POWER, "mop-hermite", "mop-laguerre", "mop-jacobi")


class BasisExpansion(ty.NamedTuple):
    basis: str
    coeffs: ty.Dict[Partition, ty.Any]

    @classmethod
    def build(
        cls, basis: str, coeffs: ty.Mapping[Partition, ty.Any]
    ) -> "BasisExpansion":
        if basis not in BASES:
            raise PreconditionError("BasisExpansion", f"unknown basis {basis}")
        return cls(basis=basis, coeffs={k: v for k, v in coeffs.items() if v})

    def evaluate(self, element: ty.Callable[[Partition], ty.Any]) -> ty.Any:
        "Sum of coefficient times element(index) over the support"
        return sum(
            (c * element(lam) for lam, c in self.coeffs.items()),
            fractions.Fraction(0),
        )


def parse_points(text: str, argument: str = "points") -> ty.List[Rational]:
    if not text.strip():
        raise ParsingError(
            ArgumentLocation(argument=argument, text=text), "No points given"
        )
    return [algebra.parse_rational(p, argument) for p in text.split(",")]


def power_sums(x: PointList, upto: int) -> ty.List[Rational]:
    "p_0, ..., p_upto at x, with p_0 = len(x)"
    return [
        sum((fractions.Fraction(v) ** k for v in x), fractions.Fraction(0))
        for k in range(upto + 1)
    ]


def complete_h_sequence(x: PointList, upto: int) -> ty.List[Rational]:
    """h_0, ..., h_upto at x via r h_r = sum_{i=1}^r p_i h_{r-i}"""
    p = power_sums(x, upto)
    h = [fractions.Fraction(1)]
    for r in range(1, upto + 1):
        h.append(sum(p[i] * h[r - i] for i in range(1, r + 1)) / r)
    return h


def complete_h(r: int, x: PointList) -> Rational:
    if r < 0:
        return fractions.Fraction(0)
    return complete_h_sequence(x, r)[r]


def elementary_e(r: int, x: PointList) -> Rational:
    """e_r at x via r e_r = sum_{i=1}^r (-1)^{i-1} p_i e_{r-i}"""
    if r < 0:
        return fractions.Fraction(0)
    p = power_sums(x, r)
    e = [fractions.Fraction(1)]
    for k in range(1, r + 1):
        e.append(
            sum((-1) ** (i - 1) * p[i] * e[k - i] for i in range(1, k + 1))
            / k
        )
    return e[r]


def schur_eval(lam: Partition, x: PointList) -> Rational:
    "Jacobi-Trudi: S_lam = det[h_{lam_i - i + j}]"
    lam = partitions.make(lam)
    if len(lam) > len(x):
        return fractions.Fraction(0)
    if not lam:
        return fractions.Fraction(1)
    size = len(lam)
    h = complete_h_sequence(x, lam[0] + size - 1)

    def entry(i: int, j: int) -> Rational:
        index = lam[i] - i + j
        return h[index] if index >= 0 else fractions.Fraction(0)

    return algebra.det(
        [[entry(i, j) for j in range(size)] for i in range(size)]
    )


def vandermonde(x: PointList) -> Rational:
    "prod_{i<j} (x_i - x_j)"
    return algebra.product(
        (
            fractions.Fraction(x[i]) - x[j]
            for i in range(len(x))
            for j in range(i + 1, len(x))
        ),
        fractions.Fraction(1),
    )


def schur_bialternant(lam: Partition, x: PointList) -> Rational:
    "det[x_j^{lam_i + N - i}] / det[x_j^{N - i}], distinct points only"
    lam = partitions.make(lam)
    size = len(x)
    if len(lam) > size:
        return fractions.Fraction(0)
    denominator = vandermonde(x)
    if denominator == 0:
        raise PreconditionError("schur_bialternant", "coincident points")
    padded = list(lam) + [0] * (size - len(lam))
    numerator = algebra.det(
        [
            [fractions.Fraction(xj) ** (padded[i] + size - 1 - i) for xj in x]
            for i in range(size)
        ]
    )
    return numerator / denominator


def power_eval(mu: Partition, x: PointList) -> Rational:
    mu = partitions.make(mu)
    p = power_sums(x, mu[0] if mu else 0)
    return algebra.product((p[part] for part in mu), fractions.Fraction(1))


def power_to_schur(mu: Partition) -> BasisExpansion:
    "P_mu = sum_lam chi^lam_mu S_lam"
    mu = partitions.make(mu)
    n = partitions.weight(mu)
    if n == 0:
        return BasisExpansion.build(SCHUR, {(): 1})
    table = characters.character_table(n)
    return BasisExpansion.build(
        SCHUR, {lam: table.value(lam, mu) for lam in table.classes}
    )


def c_lambda(lam: Partition) -> PolyN:
    "C_lam(N) = prod over boxes of (N + content)"
    return algebra.product(
        (algebra.N + c for c in partitions.contents(partitions.make(lam))),
        PolyN.constant(1),
    )


def skew_content_product(lam: Partition, nu: Partition) -> PolyN:
    "C_lam(N) / C_nu(N), the content product over the skew diagram"
    return algebra.product(
        (algebra.N + (j - i) for i, j in partitions.skew_boxes(lam, nu)),
        PolyN.constant(1),
    )


def schur_at_ones(lam: Partition) -> PolyN:
    "S_lam(1^N) = C_lam(N) / prod of hook lengths"
    lam = partitions.make(lam)
    return c_lambda(lam) / math.prod(partitions.hook_lengths(lam))


def schur_at_ones_by_characters(lam: Partition) -> PolyN:
    "S_lam(1^N) = sum_mu chi^lam_mu N^{l(mu)} / z_mu"
    lam = partitions.make(lam)
    n = partitions.weight(lam)
    if n == 0:
        return PolyN.constant(1)
    table = characters.character_table(n)
    return sum(
        (
            PolyN.monomial(
                len(mu),
                fractions.Fraction(
                    table.value(lam, mu), partitions.z_centralizer(mu)
                ),
            )
            for mu in table.classes
        ),
        PolyN.constant(0),
    )


def g_ratio(lam: Partition, gamma: Rational) -> PolyN:
    "G_lam(N, gamma) / G_0(N, gamma) = prod_j (N - j + gamma + 1)_{lam_j}"
    gamma = algebra.to_rational(gamma)
    if gamma <= -1:
        raise PreconditionError("g_ratio", f"gamma={gamma} must exceed -1")
    return algebra.product(
        (
            algebra.rising_factorial_poly(gamma + 1 - j, part)
            for j, part in enumerate(partitions.make(lam), 1)
        ),
        PolyN.constant(1),
    )
