"""Brute-force GUE trace moments from Wick pairings

A product of traces Tr M^{mu_1} ... Tr M^{mu_l} is a word of m = |mu|
letters split into l cycles. Each perfect matching of the letters glues the
cycles into a surface; the index sum then contributes N to the power of the
number of faces, which is the number of cycles of gamma . pi where gamma
rotates each trace cycle and pi is the matching.

The unrescaled convention uses <M_ij M_kl> = delta_il delta_jk, the
rescaled one divides every propagator by 4N.
"""
import collections
import fractions
import logging
import math
import typing as ty

import symrmt.config
from symrmt import partitions
from symrmt.algebra import LaurentPolyN, PolyN
from symrmt.exceptions import OracleInconsistency, PreconditionError
from symrmt.partitions import Partition

log = logging.getLogger(__name__)

UNRESCALED = "unrescaled"
RESCALED = "rescaled"
CONVENTIONS = (UNRESCALED, RESCALED)

Pairing = ty.Tuple[ty.Tuple[int, int], ...]


class TraceWord(ty.NamedTuple):
    mu: Partition
    rotation: ty.Tuple[int, ...]
    vertex: ty.Tuple[int, ...]

    @property
    def letters(self) -> int:
        return len(self.rotation)

    @classmethod
    def build(cls, mu: Partition) -> "TraceWord":
        mu = partitions.make(mu)
        rotation: ty.List[int] = []
        vertex: ty.List[int] = []
        start = 0
        for index, part in enumerate(mu):
            for offset in range(part):
                rotation.append(start + (offset + 1) % part)
                vertex.append(index)
            start += part
        return cls(mu=mu, rotation=tuple(rotation), vertex=tuple(vertex))


def gaussian_moment(k: int) -> int:
    "E[x^k] for a standard normal x: (k-1)!! for even k, else 0"
    if k < 0:
        raise PreconditionError("gaussian_moment", "negative order")
    if k % 2:
        return 0
    return math.prod(range(k - 1, 0, -2))


def pairings(m: int) -> ty.Iterator[Pairing]:
    """Perfect matchings of 0..m-1

    The smallest unmatched letter is paired with each later letter in
    increasing order.
    """
    if m % 2:
        return
    yield from _match(tuple(range(m)))


def _match(letters: ty.Tuple[int, ...]) -> ty.Iterator[Pairing]:
    if not letters:
        yield ()
        return
    first = letters[0]
    for index in range(1, len(letters)):
        rest = letters[1:index] + letters[index + 1:]
        for tail in _match(rest):
            yield ((first, letters[index]),) + tail


def _involution(pairing: Pairing, m: int) -> ty.List[int]:
    partner = [0] * m
    for a, b in pairing:
        partner[a], partner[b] = b, a
    return partner


def count_faces(word: TraceWord, pairing: Pairing) -> int:
    "Number of cycles of i -> rotation(partner(i))"
    partner = _involution(pairing, word.letters)
    seen = [False] * word.letters
    faces = 0
    for start in range(word.letters):
        if seen[start]:
            continue
        faces += 1
        i = start
        while not seen[i]:
            seen[i] = True
            i = word.rotation[partner[i]]
    return faces


def is_connected(word: TraceWord, pairing: Pairing) -> bool:
    "True iff the gluing joins every trace cycle into one surface"
    parent = list(range(len(word.mu)))

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for a, b in pairing:
        ra, rb = find(word.vertex[a]), find(word.vertex[b])
        if ra != rb:
            parent[ra] = rb
    return len({find(v) for v in range(len(word.mu))}) == 1


def _face_histogram(
    mu: Partition, connected_only: bool
) -> ty.Dict[int, int]:
    mu = partitions.make(mu)
    m = partitions.weight(mu)
    symrmt.config.check("wick_trace_moment", "max_wick_weight", m)
    word = TraceWord.build(mu)
    counts: ty.Dict[int, int] = collections.Counter()
    total = 0
    for pairing in pairings(m):
        total += 1
        if connected_only and not is_connected(word, pairing):
            continue
        faces = count_faces(word, pairing)
        if (faces - m // 2 - len(mu)) % 2:
            raise OracleInconsistency(
                f"{faces} faces for pairing {pairing} of {mu} breaks the "
                "Euler characteristic parity"
            )
        counts[faces] += 1
    log.debug(f"{total} pairings of {mu}, face histogram {dict(counts)}")
    return dict(counts)


def _assemble(
    histogram: ty.Mapping[int, int], m: int, convention: str
) -> ty.Any:
    if convention == UNRESCALED:
        return PolyN(histogram)
    scale = fractions.Fraction(1, 4 ** (m // 2))
    return LaurentPolyN(
        {faces - m // 2: scale * n for faces, n in histogram.items()}
    )


def _check_convention(convention: str) -> None:
    if convention not in CONVENTIONS:
        raise PreconditionError(
            "wick_trace_moment", f"unknown convention {convention}"
        )


def wick_trace_moment(mu: Partition, convention: str = UNRESCALED) -> ty.Any:
    """E[prod_j Tr M^{mu_j}] by summing over every Wick pairing

    Returns a PolyN for the unrescaled convention and a LaurentPolyN for
    the rescaled one. Odd weights give zero.
    """
    _check_convention(convention)
    m = partitions.weight(partitions.make(mu))
    if m % 2:
        zero = PolyN() if convention == UNRESCALED else LaurentPolyN()
        return zero
    return _assemble(_face_histogram(mu, False), m, convention)


def wick_connected(mu: Partition) -> LaurentPolyN:
    "Rescaled pairing sum restricted to gluings that connect every trace"
    mu = partitions.make(mu)
    if not mu:
        raise PreconditionError("wick_connected", "empty trace word")
    m = partitions.weight(mu)
    if m % 2:
        return LaurentPolyN()
    value: LaurentPolyN = _assemble(_face_histogram(mu, True), m, RESCALED)
    return value


def genus_counts(mu: Partition) -> ty.Dict[int, int]:
    """Connected labelled gluings of mu grouped by genus"""
    mu = partitions.make(mu)
    m = partitions.weight(mu)
    if m % 2:
        return {}
    result: ty.Dict[int, int] = {}
    for faces, n in _face_histogram(mu, True).items():
        genus = (2 - len(mu) + m // 2 - faces) // 2
        result[genus] = result.get(genus, 0) + n
    return dict(sorted(result.items()))
