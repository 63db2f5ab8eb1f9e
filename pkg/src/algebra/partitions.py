"""Partitions, (p,q)-hooks and the natural coordinates of a hook"""

import logging
from dataclasses import dataclass
from typing import Dict, Iterator, List, Tuple

from sympy.utilities.iterables import partitions as _integer_partitions

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing sequence of nonnegative integers, trailing zeros trimmed"""
    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts)
        if any(x < 0 for x in parts):
            raise ValueError(f"Partition parts must be nonnegative: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"Partition parts must be weakly decreasing: {parts}")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, 'parts', parts)

    @classmethod
    def parse(cls, text: str) -> 'Partition':
        """
        Parse a comma separated partition

        Example:
            Partition.parse("3,1,1")  # (3,1,1)
            Partition.parse("")       # empty partition
        """
        text = text.strip().strip('()[]')
        if text in ('', '∅', '0'):
            return cls(())
        return cls(tuple(int(x) for x in text.split(',') if x.strip()))

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def part(self, i: int) -> int:
        """1-indexed part, zero beyond the length"""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def transpose(self) -> 'Partition':
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for x in self.parts if x >= j) for j in range(1, self.parts[0] + 1)))

    def boxes(self) -> Iterator[Tuple[int, int]]:
        """Boxes (i, j) of the Young diagram, 1-indexed, row by row"""
        for i, row in enumerate(self.parts, start=1):
            for j in range(1, row + 1):
                yield i, j

    def arm(self, i: int, j: int) -> int:
        return self.part(i) - j

    def leg(self, i: int, j: int) -> int:
        return self.transpose().part(j) - i

    def contains(self, other: 'Partition') -> bool:
        """True iff the diagram of self contains the diagram of other"""
        return all(self.part(i) >= x for i, x in enumerate(other.parts, start=1))

    def to_json(self) -> List[int]:
        return list(self.parts)

    def __str__(self) -> str:
        if not self.parts:
            return "∅"
        return "(" + ",".join(str(x) for x in self.parts) + ")"


EMPTY = Partition(())


@dataclass(frozen=True)
class HookProfile:
    """Sizes (p, q) of the bosonic and fermionic blocks"""
    p: int
    q: int

    def __post_init__(self):
        if self.p < 1 or self.q < 1:
            raise ValueError(f"Hook profile needs p >= 1 and q >= 1, got ({self.p},{self.q})")


@dataclass(frozen=True)
class NaturalCoords:
    """The pair (λ_1..λ_p | ⟨λ'_1-p⟩..⟨λ'_q-p⟩)"""
    bosonic: Tuple[int, ...]
    fermionic: Tuple[int, ...]

    @property
    def values(self) -> Tuple[int, ...]:
        return self.bosonic + self.fermionic

    def to_json(self) -> Dict[str, List[int]]:
        return {"b": list(self.bosonic), "f": list(self.fermionic)}

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.bosonic)) + " | " + ",".join(map(str, self.fermionic)) + ")"


def is_hook(lam: Partition, prof: HookProfile) -> bool:
    return lam.part(prof.p + 1) <= prof.q


def lambda_natural(lam: Partition, prof: HookProfile) -> NaturalCoords:
    """
    Natural coordinates of a hook partition

    Args:
        lam: Partition with lam_{p+1} <= q
        prof: Hook profile

    Returns:
        NaturalCoords padded to p bosonic and q fermionic entries
    """
    if not is_hook(lam, prof):
        raise ValueError(f"{lam} is not a ({prof.p},{prof.q})-hook")
    conj = lam.transpose()
    bosonic = tuple(lam.part(i) for i in range(1, prof.p + 1))
    fermionic = tuple(max(conj.part(j) - prof.p, 0) for j in range(1, prof.q + 1))
    return NaturalCoords(bosonic, fermionic)


def hook_order_key(lam: Partition) -> Tuple[int, Tuple[int, ...]]:
    """Size first, then parts in descending lexicographic order"""
    return lam.size, tuple(-x for x in lam.parts)


def _partitions_of(n: int) -> Iterator[Partition]:
    if n == 0:
        yield EMPTY
        return
    for mult in _integer_partitions(n):
        parts: List[int] = []
        for value in sorted(mult, reverse=True):
            parts.extend([value] * mult[value])
        yield Partition(tuple(parts))


def enumerate_hooks(prof: HookProfile, d: int, mode: str = "up-to") -> List[Partition]:
    """
    All (p,q)-hooks of size d (mode "exact") or size <= d (mode "up-to")

    The result is sorted by hook_order_key, which refines size.
    """
    if mode not in ("exact", "up-to"):
        raise ValueError(f"Unknown enumeration mode: {mode}")
    sizes = [d] if mode == "exact" else range(d + 1)
    result = [lam for n in sizes for lam in _partitions_of(n) if is_hook(lam, prof)]
    return sorted(result, key=hook_order_key)


def contains(mu: Partition, lam: Partition) -> bool:
    """True iff lam_i >= mu_i for all i, i.e. the diagram of lam contains mu"""
    return lam.contains(mu)


def hooks_not_containing(mu: Partition, prof: HookProfile, lo: int, hi: int) -> List[Partition]:
    """Hooks lam with lo <= |lam| <= hi whose diagram does not contain mu"""
    found = []
    for n in range(max(lo, 0), hi + 1):
        found.extend(lam for lam in enumerate_hooks(prof, n, "exact") if not contains(mu, lam))
    return found
