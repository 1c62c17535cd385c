"""Exact integer combinatorics and the canonical k-subset type.

A k-subset of ``{1..n}`` is stored twice: as a sorted tuple (used for
text serialization) and as a bit mask with bit ``e - 1`` set for every
element ``e`` (used for intersection tests).  For subsets of equal size,
numeric order of the masks is exactly colexicographic order.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import total_ordering
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Sequence

MAX_N = 64


def binomial(a: int, b: int) -> int:
    """C(a, b) over exact integers; 0 when ``b > a``."""
    if a < 0 or b < 0:
        raise ValueError(f"binomial needs nonnegative arguments, got ({a}, {b})")
    return comb(a, b)


def mask_of(elements: Iterable[int]) -> int:
    m = 0
    for e in elements:
        m |= 1 << (e - 1)
    return m


def elements_of(mask: int) -> tuple[int, ...]:
    out = []
    e = 1
    while mask:
        if mask & 1:
            out.append(e)
        mask >>= 1
        e += 1
    return tuple(out)


@total_ordering
@dataclass(frozen=True)
class KSubset:
    """A subset of ``{1..n}``, sorted ascending.

    Ordering between subsets of the same size is colex.
    """

    elements: tuple[int, ...]
    n: int
    mask: int = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        elements = tuple(self.elements)
        if not 1 <= self.n <= MAX_N:
            raise ValueError(f"ground set size must be in [1, {MAX_N}], got {self.n}")
        if any(b <= a for a, b in zip(elements, elements[1:])):
            raise ValueError(f"elements must be strictly increasing: {elements}")
        if elements and (elements[0] < 1 or elements[-1] > self.n):
            raise ValueError(f"elements must lie in [1, {self.n}]: {elements}")
        object.__setattr__(self, "elements", elements)
        object.__setattr__(self, "mask", mask_of(elements))

    @classmethod
    def of(cls, elements: Iterable[int], n: int) -> "KSubset":
        """Build from any iterable of distinct elements (sorted here)."""
        items = sorted(elements)
        if len(set(items)) != len(items):
            raise ValueError(f"duplicate elements in {items}")
        return cls(tuple(items), n)

    @classmethod
    def from_mask(cls, mask: int, n: int) -> "KSubset":
        return cls(elements_of(mask), n)

    @classmethod
    def parse(cls, text: str, n: int) -> "KSubset":
        """Parse the ``2,4,7`` encoding (ascending, no spaces)."""
        if not text or text.strip() != text or " " in text:
            raise ValueError(f"malformed set text {text!r}")
        try:
            items = tuple(int(tok) for tok in text.split(","))
        except ValueError:
            raise ValueError(f"malformed set text {text!r}") from None
        return cls(items, n)

    @property
    def k(self) -> int:
        return len(self.elements)

    def intersects(self, other: "KSubset") -> bool:
        return bool(self.mask & other.mask)

    def __lt__(self, other: "KSubset") -> bool:
        if not isinstance(other, KSubset):
            return NotImplemented
        return (len(self.elements), self.mask) < (len(other.elements), other.mask)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __str__(self) -> str:
        return ",".join(map(str, self.elements))


def colex_rank(S: KSubset) -> int:
    """0-based rank of ``S`` among all ``|S|``-subsets in colex order."""
    return sum(comb(a - 1, j) for j, a in enumerate(S.elements, start=1))


def colex_unrank(rank: int, n: int, k: int) -> KSubset:
    total = comb(n, k)
    if not 0 <= rank < total:
        raise ValueError(f"rank {rank} out of range [0, {total}) for n={n}, k={k}")
    out = []
    c = n
    for j in range(k, 0, -1):
        # largest c with C(c, j) <= rank
        c -= 1
        while comb(c, j) > rank:
            c -= 1
        out.append(c + 1)
        rank -= comb(c, j)
    return KSubset(tuple(reversed(out)), n)


def colex_sorted(subsets: Iterable[KSubset]) -> list[KSubset]:
    return sorted(subsets)


def ksubsets(n: int, k: int, ground: Sequence[int] | None = None) -> list[KSubset]:
    """All k-subsets of ``ground`` (default ``1..n``) in colex order."""
    if ground is None:
        ground = range(1, n + 1)
    combos = sorted(combinations(ground, k), key=lambda c: c[::-1])
    return [KSubset(c, n) for c in combos]


def enumerate_Ai(n: int, k: int, i: int) -> list[KSubset]:
    """The k-subsets with minimum element ``i``, colex order of the rest."""
    if not 1 <= i <= n - k + 1:
        raise ValueError(f"i must lie in [1, {n - k + 1}], got {i}")
    rest = range(i + 1, n + 1)
    combos = sorted(combinations(rest, k - 1), key=lambda c: c[::-1])
    return [KSubset((i, *c), n) for c in combos]
