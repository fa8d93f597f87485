"""Integer partitions and the combinatorial maps indexed by them

A partition is a plain tuple of weakly decreasing positive integers; the
empty tuple is the empty partition. Functions accept any sequence and
normalise it with `make`.
"""
import collections
import logging
import math
import typing as ty

import symrmt.config
from symrmt.exceptions import ArgumentLocation, ParsingError, PreconditionError

log = logging.getLogger(__name__)

Partition = ty.Tuple[int, ...]
Frequency = ty.Dict[int, int]
Box = ty.Tuple[int, int]

T = ty.TypeVar("T")


def make(parts: ty.Iterable[int]) -> Partition:
    "Validate a weakly decreasing sequence, dropping trailing zeros"
    values = [int(p) for p in parts]
    while values and values[-1] == 0:
        values.pop()
    if any(p <= 0 for p in values):
        raise PreconditionError("partition", f"non-positive part in {values}")
    if any(a < b for a, b in zip(values, values[1:])):
        raise PreconditionError("partition", f"{values} is not decreasing")
    return tuple(values)


def parse_partition(text: str, argument: str = "partition") -> Partition:
    """Parse "4,2,1"; the empty string and "0" denote the empty partition"""
    loc = ArgumentLocation(argument=argument, text=text)
    cleaned = text.strip()
    if cleaned in ("", "0"):
        return ()
    try:
        parts = [int(piece) for piece in cleaned.split(",")]
    except ValueError:
        raise ParsingError(loc, "Expected comma-separated integers")
    try:
        return make(parts)
    except PreconditionError as err:
        raise ParsingError(loc, err.detail)


def render_partition(lam: Partition) -> str:
    return ",".join(str(p) for p in lam)


def weight(lam: Partition) -> int:
    return sum(lam)


def length(lam: Partition) -> int:
    return len(lam)


def frequency(lam: Partition) -> Frequency:
    return dict(collections.Counter(lam))


def from_frequency(freq: ty.Mapping[int, int]) -> Partition:
    parts: ty.List[int] = []
    for size in sorted(freq, reverse=True):
        parts.extend([size] * freq[size])
    return make(parts)


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def partitions_of(n: int) -> ty.List[Partition]:
    """All partitions of n in reverse lexicographic order"""
    symrmt.config.check("partitions_of", "max_weight", n)
    if n < 0:
        raise PreconditionError("partitions_of", f"negative weight {n}")
    return list(_partitions(n, n))


def _partitions(n: int, largest: int) -> ty.Iterator[Partition]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def contains(mu: Partition, lam: Partition) -> bool:
    "True iff the diagram of mu fits inside the diagram of lam"
    if len(mu) > len(lam):
        return False
    return all(small <= big for small, big in zip(mu, lam))


def subpartitions(lam: Partition) -> ty.List[Partition]:
    "Every nu contained in lam, in reverse lexicographic order"
    if not lam:
        return [()]
    found: ty.List[Partition] = []

    def extend(prefix: ty.List[int], row: int) -> None:
        if row == len(lam):
            found.append(make(prefix))
            return
        cap = lam[row] if row == 0 else min(lam[row], prefix[-1])
        for part in range(cap, -1, -1):
            extend(prefix + [part], row + 1)

    extend([], 0)
    return found


def rect_complement(lam: Partition, p: int, q: int) -> Partition:
    """Complement of lam inside the p-row, q-column rectangle

    Returns (p - lam'_q, ..., p - lam'_1), which fits in q rows and p
    columns.
    """
    if p <= 0 or q <= 0:
        raise PreconditionError("rect_complement", "p and q must be positive")
    if len(lam) > p or (lam and lam[0] > q):
        raise PreconditionError(
            "rect_complement", f"{lam} does not fit in the {p}x{q} rectangle"
        )
    conj = conjugate(lam)
    padded = list(conj) + [0] * (q - len(conj))
    return make(p - padded[j] for j in reversed(range(q)))


def boxes(lam: Partition) -> ty.List[Box]:
    "(row, column) pairs, 1-indexed"
    return [
        (i, j) for i, part in enumerate(lam, 1) for j in range(1, part + 1)
    ]


def contents(lam: Partition) -> ty.List[int]:
    return [j - i for i, j in boxes(lam)]


def hook_lengths(lam: Partition) -> ty.List[int]:
    conj = conjugate(lam)
    return [lam[i - 1] - j + conj[j - 1] - i + 1 for i, j in boxes(lam)]


def skew_boxes(lam: Partition, nu: Partition) -> ty.List[Box]:
    if not contains(nu, lam):
        raise PreconditionError("skew_boxes", f"{nu} is not inside {lam}")
    padded = list(nu) + [0] * (len(lam) - len(nu))
    return [(i, j) for i, j in boxes(lam) if j > padded[i - 1]]


def z_centralizer(mu: Partition) -> int:
    result = 1
    for size, mult in frequency(mu).items():
        result *= size ** mult * math.factorial(mult)
    return result


def class_size(mu: Partition) -> int:
    return math.factorial(weight(mu)) // z_centralizer(mu)


def merge(*parts: Partition) -> Partition:
    "The partition whose parts are the union of all given parts"
    return tuple(sorted((p for lam in parts for p in lam), reverse=True))


def set_partitions(
    items: ty.Sequence[T]
) -> ty.Iterator[ty.List[ty.List[T]]]:
    """Every set partition of items, in a fixed order

    The first item either forms a singleton block or joins one of the
    blocks of a partition of the remaining items.
    """
    if not items:
        yield []
        return
    head, rest = items[0], items[1:]
    for smaller in set_partitions(rest):
        yield [[head]] + smaller
        for index in range(len(smaller)):
            yield (
                smaller[:index]
                + [[head] + smaller[index]]
                + smaller[index + 1:]
            )
