"""Irreducible characters of the symmetric group

Characters are computed with the Murnaghan-Nakayama rule on beta-sets:
removing a border strip of length r is moving one bead r places down its
runner, with sign given by the number of beads jumped over.
"""
import functools
import logging
import math
import typing as ty

import symrmt.config
from symrmt import partitions
from symrmt.exceptions import PreconditionError
from symrmt.partitions import Partition

log = logging.getLogger(__name__)


def _beta_set(lam: Partition) -> ty.List[int]:
    size = len(lam)
    return [part + size - 1 - i for i, part in enumerate(lam)]


def _from_beta_set(beta: ty.Sequence[int]) -> Partition:
    ordered = sorted(beta, reverse=True)
    size = len(ordered)
    return partitions.make(b - (size - 1 - i) for i, b in enumerate(ordered))


@functools.lru_cache(maxsize=None)
def _murnaghan_nakayama(lam: Partition, mu: Partition) -> int:
    if not mu:
        return 1
    strip, rest = mu[0], mu[1:]
    beta = _beta_set(lam)
    occupied = set(beta)
    total = 0
    for bead in beta:
        target = bead - strip
        if target < 0 or target in occupied:
            continue
        jumped = sum(1 for other in beta if target < other < bead)
        moved = [b for b in beta if b != bead] + [target]
        sign = -1 if jumped % 2 else 1
        total += sign * _murnaghan_nakayama(_from_beta_set(moved), rest)
    return total


def character(lam: Partition, mu: Partition) -> int:
    "chi^lam evaluated on the conjugacy class of cycle type mu"
    lam, mu = partitions.make(lam), partitions.make(mu)
    if partitions.weight(lam) != partitions.weight(mu):
        raise PreconditionError(
            "character", f"weight mismatch between {lam} and {mu}"
        )
    symrmt.config.check("character", "max_char_weight", sum(mu))
    return _murnaghan_nakayama(lam, mu)


def dim_irrep(lam: Partition) -> int:
    "Hook length formula"
    lam = partitions.make(lam)
    hooks = math.prod(partitions.hook_lengths(lam))
    return math.factorial(partitions.weight(lam)) // hooks


class CharacterTable(ty.NamedTuple):
    n: int
    classes: ty.List[Partition]
    entries: ty.Dict[ty.Tuple[Partition, Partition], int]

    def value(self, lam: Partition, mu: Partition) -> int:
        return self.entries[(lam, mu)]

    def row(self, lam: Partition) -> ty.List[int]:
        return [self.entries[(lam, mu)] for mu in self.classes]

    def column(self, mu: Partition) -> ty.List[int]:
        return [self.entries[(lam, mu)] for lam in self.classes]

    def to_json(self) -> ty.Dict[str, ty.Any]:
        render = partitions.render_partition
        return {
            "n": self.n,
            "classes": [render(mu) for mu in self.classes],
            "rows": {render(lam): self.row(lam) for lam in self.classes},
        }


def character_table(n: int) -> CharacterTable:
    if n < 1:
        raise PreconditionError("character_table", "n must be positive")
    symrmt.config.check("character_table", "max_char_weight", n)
    return _character_table(n)


@functools.lru_cache(maxsize=None)
def _character_table(n: int) -> CharacterTable:
    log.info(f"Building character table of S_{n}")
    classes = partitions.partitions_of(n)
    entries = {
        (lam, mu): _murnaghan_nakayama(lam, mu)
        for lam in classes
        for mu in classes
    }
    return CharacterTable(n=n, classes=classes, entries=entries)
