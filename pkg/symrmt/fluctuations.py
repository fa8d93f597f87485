"""Linear statistics of the rescaled GUE

M_R is the GUE matrix with propagator <M_ij M_kl> = delta_il delta_jk / (4N),
whose spectrum fills [-1, 1]. Everything here is an exact Laurent
polynomial in N built from `rescaled_trace_moment`:

  - X_k = Tr T_k(M_R) - E[Tr T_k(M_R)], T_k the Chebyshev polynomials, and
    the joint central moments of the X_k;
  - connected correlators (joint cumulants of power sums) and the genus
    coefficients they encode;
  - cumulants of a single X_k.
"""
import fractions
import functools
import logging
import math
import typing as ty

import symrmt.config
from symrmt import algebra, moments, partitions
from symrmt.algebra import LaurentPolyN, PolyN, Rational
from symrmt.exceptions import PreconditionError
from symrmt.mops import EnsembleSpec
from symrmt.partitions import Partition

log = logging.getLogger(__name__)

LinearForm = ty.Dict[Partition, LaurentPolyN]


def _rescale(value: PolyN, half: int) -> LaurentPolyN:
    "value / (4N)^half"
    result: LaurentPolyN = value / PolyN.monomial(half, 4 ** half)
    return result


@functools.lru_cache(maxsize=None)
def _rescaled(mu: Partition) -> LaurentPolyN:
    weight = partitions.weight(mu)
    if weight % 2:
        return LaurentPolyN()
    exact = moments.trace_joint_moment(EnsembleSpec.hermite(), mu).value
    return _rescale(exact, weight // 2)


def rescaled_trace_moment(mu: Partition) -> LaurentPolyN:
    """E[prod_j Tr M_R^{mu_j}]"""
    return _rescaled(partitions.make(mu))


class ChebyshevCoeffs(ty.NamedTuple):
    k: int
    coeffs: ty.Dict[int, Rational]

    @property
    def leading(self) -> Rational:
        return self.coeffs[self.k]

    def evaluate(self, x: Rational) -> Rational:
        return sum(
            (c * fractions.Fraction(x) ** d for d, c in self.coeffs.items()),
            fractions.Fraction(0),
        )


def chebyshev_coeffs(k: int) -> ChebyshevCoeffs:
    """Monomial coefficients of T_k

    T_k(x) = (k/2) sum_j (-1)^j (k-j-1)! / (j! (k-2j)!) (2x)^{k-2j}.
    """
    if not 0 <= k <= 16:
        raise PreconditionError("chebyshev_coeffs", "0 <= k <= 16")
    if k == 0:
        return ChebyshevCoeffs(k=0, coeffs={0: fractions.Fraction(1)})
    coeffs = {}
    for j in range(k // 2 + 1):
        value = fractions.Fraction(
            (-1) ** j * math.factorial(k - j - 1) * k * 2 ** (k - 2 * j),
            2 * math.factorial(j) * math.factorial(k - 2 * j),
        )
        coeffs[k - 2 * j] = value
    return ChebyshevCoeffs(k=k, coeffs=coeffs)


def chebyshev_mean(k: int) -> LaurentPolyN:
    "E[Tr T_k(M_R)], Tr M_R^0 being N"
    total = LaurentPolyN()
    for degree, coeff in chebyshev_coeffs(k).coeffs.items():
        if degree == 0:
            total = total + PolyN.monomial(1, coeff)
        else:
            total = total + rescaled_trace_moment((degree,)) * coeff
    return total


def _centering(k: int) -> LaurentPolyN:
    "E of the non-constant part of Tr T_k(M_R)"
    total = LaurentPolyN()
    for degree, coeff in chebyshev_coeffs(k).coeffs.items():
        if degree:
            total = total + rescaled_trace_moment((degree,)) * coeff
    return total


def _centered_form(k: int) -> LinearForm:
    "X_k as a linear form in power sums; () carries the constant"
    form: LinearForm = {}
    for degree, coeff in chebyshev_coeffs(k).coeffs.items():
        if degree:
            form[(degree,)] = LaurentPolyN.constant(coeff)
    centering = _centering(k)
    if centering:
        form[()] = -centering
    return form


def _multiply(left: LinearForm, right: LinearForm) -> LinearForm:
    product: LinearForm = {}
    for lkey, lcoeff in left.items():
        for rkey, rcoeff in right.items():
            key = partitions.merge(lkey, rkey)
            product[key] = product.get(key, LaurentPolyN()) + lcoeff * rcoeff
    return {key: value for key, value in product.items() if value}


def _expectation(form: LinearForm) -> LaurentPolyN:
    total = LaurentPolyN()
    for key, coeff in sorted(form.items()):
        total = total + coeff * rescaled_trace_moment(key)
    return total


def xk_joint_central_moment(
    ks: ty.Sequence[int], n: ty.Optional[int] = None
) -> ty.Union[LaurentPolyN, Rational]:
    """E[prod_i X_{k_i}], exactly, symbolic in N unless n is given"""
    if not ks or any(not 1 <= k <= 8 for k in ks):
        raise PreconditionError(
            "xk_joint_central_moment", "every k must lie in 1..8"
        )
    symrmt.config.check("xk_joint_central_moment", "max_xk_weight", sum(ks))
    form: LinearForm = {(): LaurentPolyN.constant(1)}
    for k in ks:
        form = _multiply(form, _centered_form(k))
    value = _expectation(form)
    log.debug(f"E[X_{tuple(ks)}] = {value}")
    return value if n is None else value.evaluate(n)


def xk_moment_coefficient(k: int, n: int, exponent: int) -> Rational:
    "Coefficient of N^exponent in E[X_k^n]"
    value = xk_joint_central_moment((k,) * n)
    assert isinstance(value, LaurentPolyN)
    return value.coefficient(exponent)


def szego_constant(k: int, n: int) -> Rational:
    """Large-N limit of E[X_k^n]: Gaussian moments of variance k/4"""
    if n % 2:
        return fractions.Fraction(0)
    half = n // 2
    return fractions.Fraction(k, 4) ** half * fractions.Fraction(
        math.factorial(n), 2 ** half * math.factorial(half)
    )


def prop_k1_moment(n: int) -> Rational:
    "E[(Tr M_R)^{2n}] = (2n)! / (2^{3n} n!), for every N"
    if not 1 <= n <= 12:
        raise PreconditionError("prop_k1_moment", "1 <= n <= 12")
    return fractions.Fraction(
        math.factorial(2 * n), 2 ** (3 * n) * math.factorial(n)
    )


class ConnectedCorrelator(ty.NamedTuple):
    mu: Partition
    value: LaurentPolyN

    def exponents(self) -> ty.List[int]:
        return [e for e, _ in self.value.terms]

    def genus(self, exponent: int) -> int:
        "The g with N^{2 - 2g - l(mu)} = N^exponent"
        return (2 - len(self.mu) - exponent) // 2


def _sub_multisets(
    freq: ty.Mapping[int, int], head: int
) -> ty.Iterator[ty.Tuple[Partition, Partition, int]]:
    """(T, rest, multiplicity) for sub-multisets T holding one fixed head

    The multiplicity counts the index subsets with that multiset of parts
    that contain a designated index of part `head`.
    """
    sizes = sorted(freq)

    def extend(
        index: int, chosen: ty.Dict[int, int]
    ) -> ty.Iterator[ty.Tuple[Partition, Partition, int]]:
        if index == len(sizes):
            taken = {s: c for s, c in chosen.items() if c}
            left = {s: freq[s] - chosen.get(s, 0) for s in sizes}
            mult = 1
            for s in sizes:
                if s == head:
                    mult *= math.comb(freq[s] - 1, chosen[s] - 1)
                else:
                    mult *= math.comb(freq[s], chosen[s])
            yield (
                partitions.from_frequency(taken),
                partitions.from_frequency(left),
                mult,
            )
            return
        size = sizes[index]
        low = 1 if size == head else 0
        for count in range(low, freq[size] + 1):
            yield from extend(index + 1, {**chosen, size: count})

    yield from extend(0, {})


@functools.lru_cache(maxsize=None)
def _connected(mu: Partition) -> LaurentPolyN:
    # kappa(S) = m(S) - sum over proper T containing the head of
    # kappa(T) m(S \ T)
    value = rescaled_trace_moment(mu)
    head = mu[0]
    for block, rest, mult in _sub_multisets(partitions.frequency(mu), head):
        if not rest:
            continue
        value = value - _connected(block) * rescaled_trace_moment(rest) * mult
    return value


def connected_correlator(mu: Partition) -> ConnectedCorrelator:
    """Joint cumulant of Tr M_R^{mu_1}, ..., Tr M_R^{mu_l}

    Moebius inversion of the full correlators over set partitions of the
    index set, with index subsets grouped by their multiset of parts.
    """
    mu = partitions.make(mu)
    if not mu:
        raise PreconditionError("connected_correlator", "empty partition")
    symrmt.config.check(
        "connected_correlator", "max_cumulant_weight", partitions.weight(mu)
    )
    return ConnectedCorrelator(mu=mu, value=_connected(mu))


def connected_by_set_partitions(mu: Partition) -> LaurentPolyN:
    """sum_pi (-1)^{|pi|-1} (|pi|-1)! prod_B E[prod_{i in B} p_{mu_i}]

    Enumerates every set partition of the indices; use for short mu only.
    """
    mu = partitions.make(mu)
    total = LaurentPolyN()
    for blocks in partitions.set_partitions(list(range(len(mu)))):
        term = LaurentPolyN.constant(
            (-1) ** (len(blocks) - 1) * math.factorial(len(blocks) - 1)
        )
        for block in blocks:
            term = term * rescaled_trace_moment(
                partitions.merge(tuple(mu[i] for i in block))
            )
        total = total + term
    return total


def genus_coefficient(mu: Partition, g: int) -> Rational:
    "a_g = 2^{|mu|} times the coefficient of N^{2-2g-l(mu)}"
    if g < 0:
        raise PreconditionError("genus_coefficient", "negative genus")
    correlator = connected_correlator(mu)
    exponent = 2 - 2 * g - len(correlator.mu)
    weight = partitions.weight(correlator.mu)
    return 2 ** weight * correlator.value.coefficient(exponent)


def _multisets(
    values: ty.Sequence[int], size: int
) -> ty.Iterator[ty.Tuple[int, ...]]:
    if size == 0:
        yield ()
        return
    for index, value in enumerate(values):
        for rest in _multisets(values[index:], size - 1):
            yield (value,) + rest


def xk_cumulant(k: int, n: int) -> LaurentPolyN:
    """n-th cumulant of X_k

    By multilinearity, a sum over multisets of monomial degrees d_i of the
    Chebyshev coefficients times the connected correlator of (d_1..d_n).
    """
    if k < 1 or n < 1:
        raise PreconditionError("xk_cumulant", "k and n must be positive")
    symrmt.config.check("xk_cumulant", "max_cumulant_weight", n * k)
    if n == 1:
        return LaurentPolyN()
    coeffs = chebyshev_coeffs(k).coeffs
    degrees = sorted(d for d in coeffs if d)
    total = LaurentPolyN()
    for chosen in _multisets(degrees, n):
        arrangements = math.factorial(n)
        for count in partitions.frequency(chosen).values():
            arrangements //= math.factorial(count)
        weight = math.prod(coeffs[d] for d in chosen) * arrangements
        mu = partitions.merge(chosen)
        total = total + connected_correlator(mu).value * weight
    return total


def _chi_square_moment(start: int, stop: int) -> PolyN:
    "prod_{j=start}^{stop-1} (N^2 + 2j)"
    square = PolyN.monomial(2)
    return algebra.product(
        (square + 2 * j for j in range(start, stop)), PolyN.constant(1)
    )


def tr_m2_power_closed_form(
    n: int, mixed_k: ty.Optional[int] = None
) -> LaurentPolyN:
    """E[(Tr M_R^2)^n], or E[(Tr M_R^2)^k Tr M_R^{2n-2k}] with k = mixed_k

    Tr M^2 is a chi-square variable with N^2 degrees of freedom, independent
    of M / |M|, which factorises the mixed moment. At mixed_k == n the
    remaining trace is Tr M^0 = Tr I = N, so the result is N times the pure
    power.
    """
    if not 1 <= n <= 10:
        raise PreconditionError("tr_m2_power_closed_form", "1 <= n <= 10")
    if mixed_k is not None and not 0 <= mixed_k <= n:
        raise PreconditionError("tr_m2_power_closed_form", "0 <= k <= n")
    if mixed_k is None:
        return _rescale(_chi_square_moment(0, n), n)
    rest = n - mixed_k
    radial = _chi_square_moment(rest, n)
    angular = _rescale(moments.even_trace_polynomial(rest), rest)
    return angular * _rescale(radial, mixed_k)


def cumulants_from_moments(values: ty.Sequence[ty.Any]) -> ty.List[ty.Any]:
    """kappa_n = m_n - sum_{j<n} C(n-1, j-1) kappa_j m_{n-j}

    values[i] holds m_{i+1}; the result holds kappa_{i+1}.
    """
    kappas: ty.List[ty.Any] = []
    for n in range(1, len(values) + 1):
        kappa = values[n - 1]
        for j in range(1, n):
            weight = math.comb(n - 1, j - 1)
            kappa = kappa - weight * kappas[j - 1] * values[n - j - 1]
        kappas.append(kappa)
    return kappas


def moments_from_cumulants(kappas: ty.Sequence[ty.Any]) -> ty.List[ty.Any]:
    "Inverse of `cumulants_from_moments`"
    values: ty.List[ty.Any] = []
    for n in range(1, len(kappas) + 1):
        value = kappas[n - 1]
        for j in range(1, n):
            weight = math.comb(n - 1, j - 1)
            value = value + weight * kappas[j - 1] * values[n - j - 1]
        values.append(value)
    return values


def x2_cumulant_closed_form(n: int) -> LaurentPolyN:
    "(n-1)! / (2 N^{n-2}) for n >= 2"
    if n < 1:
        raise PreconditionError("x2_cumulant_closed_form", "n >= 1")
    if n == 1:
        return LaurentPolyN()
    return LaurentPolyN.monomial(
        2 - n, fractions.Fraction(math.factorial(n - 1), 2)
    )
