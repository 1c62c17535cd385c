"""The Kneser graph K(n,k) and its complement.

Vertices are k-subsets of ``{1..n}``.  In the complement two distinct
vertices are adjacent exactly when they intersect.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from ._packing import pack_groups
from .exceptions import SearchExhausted
from .subsets import KSubset, binomial, ksubsets

# Direct vertex enumeration is only used as a cross-check up to this size.
DIRECT_DOMINATION_LIMIT = 5000


@dataclass(frozen=True)
class Params:
    """The pair (n, k) with n >= 2k >= 4.

    Any n is accepted for the formula layer; anything that materializes
    vertices is limited to n <= 64 by :class:`KSubset`.
    """

    n: int
    k: int

    def __post_init__(self) -> None:
        if not (isinstance(self.n, int) and isinstance(self.k, int)):
            raise TypeError("n and k must be integers")
        if self.k < 2 or self.n < 2 * self.k:
            raise ValueError(f"need n >= 2k >= 4, got n={self.n}, k={self.k}")

    @property
    def s(self) -> int:
        return self.n // self.k

    @property
    def r(self) -> int:
        return self.n - self.s * self.k

    @property
    def order(self) -> int:
        """Number of vertices, C(n, k)."""
        return binomial(self.n, self.k)

    def vertices(self) -> list[KSubset]:
        return ksubsets(self.n, self.k)


def _check_vertex(S: KSubset, p: Params | None = None) -> None:
    if p is not None and (S.n != p.n or S.k != p.k):
        raise ValueError(f"{S} is not a vertex of K({p.n},{p.k})")


def adjacent_complement(S: KSubset, T: KSubset) -> bool:
    if S.n != T.n or S.k != T.k:
        raise ValueError(f"mismatched ambient parameters: {S!r} vs {T!r}")
    return S.mask != T.mask and bool(S.mask & T.mask)


def is_dominating(F: Iterable[KSubset], p: Params, *, cross_check: bool = True) -> bool:
    """Whether every vertex outside ``F`` meets some member of ``F``.

    The union test ``|U F| >= n - k + 1`` is exact for non-empty ``F``: a
    smaller union leaves room for a k-subset that misses it.  On small
    graphs the answer is also recomputed by enumerating all vertices and
    the two must agree.
    """
    F = list(F)
    if not F:
        raise ValueError("family must be non-empty")
    for S in F:
        _check_vertex(S, p)
    union = 0
    for S in F:
        union |= S.mask
    by_union = bin(union).count("1") >= p.n - p.k + 1
    if cross_check and p.order <= DIRECT_DOMINATION_LIMIT:
        members = {S.mask for S in F}
        direct = all(
            v.mask in members or any(v.mask & m for m in members) for v in p.vertices()
        )
        if direct != by_union:
            raise AssertionError(
                f"domination tests disagree for {[str(S) for S in F]} in K({p.n},{p.k})"
            )
    return by_union


def complement_degree(p: Params) -> int:
    """Degree of every vertex of the complement graph."""
    return p.order - 1 - binomial(p.n - p.k, p.k)


def max_independent_sets_disjoint(
    p: Params,
    count: int,
    forbidden: Iterable[KSubset] = (),
    *,
    budget: int = 10**6,
) -> list[list[KSubset]]:
    """``count`` vertex-disjoint families of ``s`` pairwise disjoint k-subsets of {2..n}.

    Each family is a maximum independent set of the complement graph on
    ground ``{2..n}``.  Families are built one after another; inside a
    family members are taken lowest-colex first with backtracking.  If
    that gets stuck, all families are packed at once with the group search.
    Raises :class:`SearchExhausted` when no further family can be formed.
    """
    if count < 0:
        raise ValueError("count must be nonnegative")
    s, k = p.s, p.k
    if s > k:
        raise ValueError(f"need s <= k, got s={s}, k={k}")
    if p.r == 0:
        raise ValueError("the ground set {2..n} holds only s-1 disjoint k-subsets when r = 0")
    forbidden_masks = {S.mask for S in forbidden}
    if count * s + len(forbidden_masks) > binomial(p.n - 1, k):
        raise ValueError("not enough vertices for the requested families")
    if count == 0:
        return []

    pool = [v for v in ksubsets(p.n, k, range(2, p.n + 1)) if v.mask not in forbidden_masks]
    used = [False] * len(pool)
    nodes = 0
    families: list[list[KSubset]] = []

    def extend(chosen: list[int], union: int, start: int) -> list[int] | None:
        nonlocal nodes
        if len(chosen) == s:
            return chosen
        for j in range(start, len(pool)):
            if used[j] or pool[j].mask & union:
                continue
            nodes += 1
            if nodes > budget:
                return None
            found = extend(chosen + [j], union | pool[j].mask, j + 1)
            if found is not None:
                return found
        return None

    for _ in range(count):
        if nodes > budget:
            break
        found = None
        for first in range(len(pool)):
            if used[first]:
                continue
            found = extend([first], pool[first].mask, first + 1)
            if found is not None:
                break
        if found is None:
            break
        for j in found:
            used[j] = True
        families.append([pool[j] for j in found])
    if len(families) == count:
        return families

    # the family-by-family greedy got stuck; pack all families at once
    try:
        groups, _, _ = pack_groups([v.mask >> 1 for v in pool], p.n - 1, s, count)
    except SearchExhausted:
        raise SearchExhausted(
            f"could not form {count} disjoint families for K({p.n},{k})"
        ) from None
    return sorted(([pool[j] for j in g] for g in groups), key=lambda fam: fam[0])


def families_are_disjoint(families: Sequence[Sequence[KSubset]]) -> bool:
    seen: set[int] = set()
    for fam in families:
        for S in fam:
            if S.mask in seen:
                return False
            seen.add(S.mask)
    return True
