"""Exact scalar and polynomial arithmetic in the matrix size N

Scalars are `fractions.Fraction` throughout. Polynomials in N are sparse
maps from exponent to nonzero coefficient; `PolyN` only admits nonnegative
exponents while `LaurentPolyN` admits any integer exponent. Mixed
arithmetic promotes to `LaurentPolyN`. All values are immutable.
"""
import fractions
import math
import typing as ty

import symrmt.exceptions
from symrmt.exceptions import ArgumentLocation, PreconditionError

Rational = fractions.Fraction
Scalar = ty.Union[int, fractions.Fraction]
T = ty.TypeVar("T")


def to_rational(value: Scalar) -> Rational:
    if isinstance(value, bool) or not isinstance(
        value, (int, fractions.Fraction)
    ):
        raise TypeError(f"Expected an exact scalar, got {value!r}")
    return fractions.Fraction(value)


def parse_rational(text: str, argument: str = "value") -> Rational:
    "Parse 'p/q' or 'p' (surrounding whitespace allowed) into a Rational"
    loc = ArgumentLocation(argument=argument, text=text)
    cleaned = text.strip()
    if not cleaned:
        raise symrmt.exceptions.ParsingError(loc, "Empty rational literal")
    try:
        return fractions.Fraction(cleaned)
    except (ValueError, ZeroDivisionError) as err:
        msg = f"Expected a rational of the form p/q: {err}"
        raise symrmt.exceptions.ParsingError(loc, msg)


PolyLike = ty.Union["PolyN", "LaurentPolyN"]
Operand = ty.Union["PolyN", "LaurentPolyN", int, fractions.Fraction]


class _SparsePoly:
    "Shared implementation of PolyN and LaurentPolyN"

    __slots__ = ("_terms",)
    _negative_exponents = True

    def __init__(
        self, terms: ty.Optional[ty.Mapping[int, Scalar]] = None
    ) -> None:
        clean: ty.Dict[int, Rational] = {}
        for exponent, coeff in (terms or {}).items():
            value = to_rational(coeff)
            if value != 0:
                clean[int(exponent)] = value
        if not self._negative_exponents and any(e < 0 for e in clean):
            raise PreconditionError(
                type(self).__name__, "negative exponent in a polynomial"
            )
        self._terms = clean

    # Construction helpers

    @classmethod
    def constant(cls, value: Scalar) -> ty.Any:
        return cls({0: value})

    @classmethod
    def monomial(cls, exponent: int, coeff: Scalar = 1) -> ty.Any:
        return cls({exponent: coeff})

    # Inspection

    @property
    def terms(self) -> ty.Tuple[ty.Tuple[int, Rational], ...]:
        "(exponent, coefficient) pairs in descending exponent order"
        return tuple(sorted(self._terms.items(), reverse=True))

    @property
    def degree(self) -> ty.Optional[int]:
        return max(self._terms) if self._terms else None

    @property
    def low_degree(self) -> ty.Optional[int]:
        return min(self._terms) if self._terms else None

    def coefficient(self, exponent: int) -> Rational:
        return self._terms.get(exponent, fractions.Fraction(0))

    def is_constant(self) -> bool:
        return all(e == 0 for e in self._terms)

    def parity(self) -> ty.Optional[int]:
        "0 for an even polynomial, 1 for odd, None if mixed or zero"
        parities = {e % 2 for e in self._terms}
        return parities.pop() if len(parities) == 1 else None

    def evaluate(self, n: Scalar) -> Rational:
        value = to_rational(n)
        if value == 0 and any(e < 0 for e in self._terms):
            raise PreconditionError(
                "poly_eval", "N=0 substituted into a negative power of N"
            )
        return sum(
            (c * value ** e for e, c in self._terms.items()),
            fractions.Fraction(0),
        )

    # Arithmetic

    def _coerce(self, other: ty.Any) -> ty.Optional["_SparsePoly"]:
        if isinstance(other, _SparsePoly):
            return other
        if isinstance(other, (int, fractions.Fraction)) and not isinstance(
            other, bool
        ):
            return type(self).constant(other)
        return None

    @staticmethod
    def _wrap(
        a: "_SparsePoly", b: "_SparsePoly", terms: ty.Mapping[int, Scalar]
    ) -> ty.Any:
        laurent = isinstance(a, LaurentPolyN) or isinstance(b, LaurentPolyN)
        cls = LaurentPolyN if laurent else PolyN
        return cls(terms)

    def __add__(self, other: ty.Any) -> ty.Any:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        terms = dict(self._terms)
        for e, c in rhs._terms.items():
            terms[e] = terms.get(e, 0) + c
        return self._wrap(self, rhs, terms)

    __radd__ = __add__

    def __neg__(self) -> ty.Any:
        return type(self)({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: ty.Any) -> ty.Any:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: ty.Any) -> ty.Any:
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs + (-self)

    def __mul__(self, other: ty.Any) -> ty.Any:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        terms: ty.Dict[int, Rational] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in rhs._terms.items():
                terms[e1 + e2] = terms.get(e1 + e2, 0) + c1 * c2
        return self._wrap(self, rhs, terms)

    __rmul__ = __mul__

    def __truediv__(self, other: ty.Any) -> ty.Any:
        if isinstance(other, _SparsePoly):
            if len(other._terms) != 1:
                return NotImplemented
            ((exponent, coeff),) = other._terms.items()
            return LaurentPolyN(
                {e - exponent: c / coeff for e, c in self._terms.items()}
            )
        if isinstance(other, (int, fractions.Fraction)):
            if other == 0:
                raise ZeroDivisionError("polynomial division by zero")
            return type(self)(
                {e: c / other for e, c in self._terms.items()}
            )
        return NotImplemented

    def __pow__(self, power: int) -> ty.Any:
        if power < 0:
            raise ValueError("negative powers are not supported")
        result = type(self).constant(1)
        for _ in range(power):
            result = result * self
        return result

    def shift(self, exponent: int) -> "LaurentPolyN":
        "Multiply by N^exponent"
        return LaurentPolyN(
            {e + exponent: c for e, c in self._terms.items()}
        )

    def reflect(self) -> ty.Any:
        "Substitute N -> -N"
        return type(self)(
            {e: c if e % 2 == 0 else -c for e, c in self._terms.items()}
        )

    # Comparison and display

    def __eq__(self, other: object) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self._terms == rhs._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __str__(self) -> str:
        return render_poly(self)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({render_poly(self)})"


class PolyN(_SparsePoly):
    """Polynomial in N with Rational coefficients"""

    __slots__ = ()
    _negative_exponents = False

    @classmethod
    def from_coeffs(cls, coeffs: ty.Sequence[Scalar]) -> "PolyN":
        "Build from an ascending coefficient sequence"
        return cls({e: c for e, c in enumerate(coeffs)})

    @property
    def coeffs(self) -> ty.List[Rational]:
        "Ascending coefficient sequence; empty for the zero polynomial"
        if not self._terms:
            return []
        top = max(self._terms)
        return [self.coefficient(e) for e in range(top + 1)]

    def to_laurent(self) -> "LaurentPolyN":
        return LaurentPolyN(self._terms)


class LaurentPolyN(_SparsePoly):
    """Laurent polynomial in N with Rational coefficients"""

    __slots__ = ()

    def to_poly(self) -> PolyN:
        return PolyN(self._terms)


N = PolyN.monomial(1)


def poly_eval(p: PolyLike, n: Scalar) -> Rational:
    return p.evaluate(n)


def render_poly(p: _SparsePoly, var: str = "N") -> str:
    "Descending powers with explicit rational coefficients, e.g. 5*N^4 - N"
    if not p:
        return "0"
    text = ""
    for exponent, coeff in p.terms:
        magnitude = abs(coeff)
        if exponent == 0:
            body = str(magnitude)
        else:
            power = var if exponent == 1 else f"{var}^{exponent}"
            body = power if magnitude == 1 else f"{magnitude}*{power}"
        if not text:
            text = body if coeff > 0 else f"-{body}"
        else:
            text += f" {'+' if coeff > 0 else '-'} {body}"
    return text


def poly_to_json(p: _SparsePoly, var: str = "N") -> ty.Dict[str, ty.Any]:
    coeffs = {str(e): str(c) for e, c in p.terms}
    return {"var": var, "coeffs": coeffs}


def poly_from_json(obj: ty.Mapping[str, ty.Any]) -> PolyLike:
    loc = ArgumentLocation(argument="json", text=str(obj))
    if obj.get("var") != "N" or not isinstance(obj.get("coeffs"), dict):
        raise symrmt.exceptions.ParsingError(
            loc, 'Expected {"var": "N", "coeffs": {...}}'
        )
    try:
        terms = {
            int(e): fractions.Fraction(c) for e, c in obj["coeffs"].items()
        }
    except (ValueError, ZeroDivisionError) as err:
        raise symrmt.exceptions.ParsingError(loc, f"Bad coefficient: {err}")
    if any(e < 0 for e in terms):
        return LaurentPolyN(terms)
    return PolyN(terms)


def rising_factorial_poly(offset: Scalar, count: int) -> PolyN:
    "prod_{m=0}^{count-1} (N + offset + m)"
    result = PolyN.constant(1)
    for m in range(count):
        result = result * (N + (to_rational(offset) + m))
    return result


def rising(x: Scalar, count: int) -> Rational:
    "Pochhammer symbol (x)_count"
    result = fractions.Fraction(1)
    for m in range(count):
        result *= x + m
    return result


def _is_pole(x: Rational) -> bool:
    return x.denominator == 1 and x <= 0


def gamma_ratio(a: Scalar, b: Scalar) -> Rational:
    """Gamma(a)/Gamma(b), exact, for a - b an integer"""
    ra, rb = to_rational(a), to_rational(b)
    diff = ra - rb
    if diff.denominator != 1:
        raise PreconditionError(
            "gamma_ratio", f"Gamma({ra})/Gamma({rb}) is not rational"
        )
    if ra == rb:
        return fractions.Fraction(1)
    if _is_pole(ra) or _is_pole(rb):
        raise PreconditionError(
            "gamma_ratio", f"Gamma({ra})/Gamma({rb}) hits a pole"
        )
    steps = int(diff)
    if steps > 0:
        return rising(rb, steps)
    return 1 / rising(ra, -steps)


def factorial(n: int) -> int:
    return math.factorial(n)


def det(matrix: ty.Sequence[ty.Sequence[Scalar]]) -> Rational:
    """Exact determinant by Gaussian elimination over the rationals"""
    rows = [[to_rational(v) for v in row] for row in matrix]
    size = len(rows)
    if any(len(row) != size for row in rows):
        raise PreconditionError("det", "matrix is not square")
    result = fractions.Fraction(1)
    for col in range(size):
        pivot = next(
            (r for r in range(col, size) if rows[r][col] != 0), None
        )
        if pivot is None:
            return fractions.Fraction(0)
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            result = -result
        head = rows[col][col]
        result *= head
        for r in range(col + 1, size):
            factor = rows[r][col] / head
            if factor:
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[col])]
    return result


def product(values: ty.Iterable[T], start: T) -> T:
    "start times every value, left to right"
    result: ty.Any = start
    for value in values:
        result = result * value
    return ty.cast(T, result)
