"""Explicit strongly 1-shallow complete-minor certificates in the complement graph.

Every bag is a single vertex or a star.  The constructions:

* clique: all of A_1(n,k) as single bags;
* k2-odd: for k = 2 and odd n, the clique on ``{1,j}`` plus one star;
* C1: A_1 as single bags plus stars from l-groups of A_i, 2 <= i <= k;
* C2: stars only, from l-groups of A_i, 1 <= i <= ceil(n/2);
* C3: A_1 as single bags plus stars whose leaves are disjoint maximum
  independent sets on ``{2..n}`` and whose centers meet every leaf.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from . import bounds
from .bounds import Construction
from ._packing import pack_groups
from .exceptions import BuildCapExceeded, SDRInfeasible, SearchExhausted
from .kneser import Params, max_independent_sets_disjoint
from .partition import partition_Ai
from .subsets import KSubset, enumerate_Ai, ksubsets

DEFAULT_BUILD_CAP = 20000
FULL_PARTITION_BUDGET = 3000


class BagKind(str, Enum):
    SINGLE = "single"
    STAR = "star"


@dataclass(frozen=True)
class Bag:
    kind: BagKind
    vertex: KSubset | None = None
    center: KSubset | None = None
    leaves: tuple[KSubset, ...] = ()

    @classmethod
    def single(cls, vertex: KSubset) -> "Bag":
        return cls(BagKind.SINGLE, vertex=vertex)

    @classmethod
    def star(cls, center: KSubset, leaves: Iterable[KSubset]) -> "Bag":
        return cls(BagKind.STAR, center=center, leaves=tuple(sorted(leaves)))

    @property
    def vertices(self) -> tuple[KSubset, ...]:
        if self.kind is BagKind.SINGLE:
            return (self.vertex,)
        return (self.center, *self.leaves)

    @property
    def endpoints(self) -> tuple[KSubset, ...]:
        """Vertices allowed to carry an edge to another bag."""
        if self.kind is BagKind.SINGLE:
            return (self.vertex,)
        return self.leaves

    def sort_key(self) -> tuple[int, KSubset]:
        if self.kind is BagKind.SINGLE:
            return (0, self.vertex)
        return (1, self.center)


@dataclass(frozen=True)
class MinorCertificate:
    params: Params
    bags: tuple[Bag, ...]
    claimed_t: int

    @property
    def t(self) -> int:
        return len(self.bags)


def canonical(p: Params, bags: Iterable[Bag]) -> MinorCertificate:
    ordered = tuple(sorted(bags, key=Bag.sort_key))
    return MinorCertificate(p, ordered, len(ordered))


def build_cap() -> int:
    raw = os.environ.get("KMINOR_BUILD_CAP")
    if raw is None:
        return DEFAULT_BUILD_CAP
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"KMINOR_BUILD_CAP must be an integer, got {raw!r}") from None


def check_cap(p: Params, cap: int | None = None) -> None:
    cap = build_cap() if cap is None else cap
    if p.order > cap:
        raise BuildCapExceeded(f"C({p.n},{p.k}) = {p.order} exceeds the build cap {cap}")


def build_clique(p: Params) -> MinorCertificate:
    return canonical(p, (Bag.single(v) for v in enumerate_Ai(p.n, p.k, 1)))


def build_k2_odd(n: int) -> MinorCertificate:
    if n % 2 == 0 or n < 5:
        raise ValueError(f"needs odd n >= 5, got {n}")
    p = Params(n, 2)
    bags = [Bag.single(KSubset((1, j), n)) for j in range(2, n + 1)]
    leaves = [KSubset((2, 3), n), KSubset((3, 4), n)]
    leaves += [KSubset((2, j), n) for j in range(5, n + 1)]
    bags.append(Bag.star(KSubset((2, 4), n), leaves))
    return canonical(p, bags)


def _leaf_groups(p: Params, i: int, l: int, d: int) -> list[list[KSubset]]:
    """``d`` disjoint l-groups of A_i meeting the union bound.

    Taken from the full partition when the search finds one within a modest
    budget.  Otherwise only ``d`` groups are packed: the stars never use the
    rest, and the spare members leave the search plenty of slack.
    """
    try:
        return partition_Ai(p, i, l, budget=FULL_PARTITION_BUDGET).groups[:d]
    except SearchExhausted:
        pass
    members = enumerate_Ai(p.n, p.k, i)
    index_groups, _, _ = pack_groups([S.mask >> i for S in members], p.n - i, l, d)
    return sorted((sorted(members[a] for a in g) for g in index_groups), key=lambda g: g[0])


def _stars_from_groups(p: Params, i: int, l: int, d: int) -> list[Bag]:
    """``d`` stars: leaves are ``d`` l-groups of A_i, centers the
    lowest-colex members of A_i left outside those groups."""
    if d == 0:
        return []
    groups = _leaf_groups(p, i, l, d)
    in_groups = {S for g in groups for S in g}
    centers = [S for S in enumerate_Ai(p.n, p.k, i) if S not in in_groups][:d]
    return [Bag.star(c, g) for c, g in zip(centers, groups)]


def build_c1(p: Params) -> MinorCertificate:
    l = bounds.l_construction1(p)
    bags = [Bag.single(v) for v in enumerate_Ai(p.n, p.k, 1)]
    for i, d in bounds.star_counts_c1(p).items():
        bags += _stars_from_groups(p, i, l, d)
    return canonical(p, bags)


def build_c2(p: Params) -> MinorCertificate:
    l = bounds.l_construction2(p)
    bags: list[Bag] = []
    for i, d in bounds.star_counts_c2(p).items():
        bags += _stars_from_groups(p, i, l, d)
    return canonical(p, bags)


def _match_centers(candidates: Sequence[Sequence[int]]) -> list[int]:
    """Injective choice of one candidate per bag, by augmenting paths.

    Candidates are tried in the given (colex) order.
    """
    owner: dict[int, int] = {}
    choice: list[int | None] = [None] * len(candidates)
    for bag in range(len(candidates)):
        # iterative DFS for an augmenting path from ``bag``
        parent: dict[int, tuple[int, int | None]] = {}
        stack = [(bag, iter(candidates[bag]))]
        seen: set[int] = set()
        end = None
        while stack and end is None:
            b, it = stack[-1]
            for v in it:
                if v in seen:
                    continue
                seen.add(v)
                parent[v] = (b, choice[b])
                if v not in owner:
                    end = v
                    break
                stack.append((owner[v], iter(candidates[owner[v]])))
                break
            else:
                stack.pop()
        if end is None:
            raise SDRInfeasible(f"no distinct center available for star bag {bag + 1}")
        v = end
        while True:
            b, _ = parent[v]
            previous = choice[b]
            choice[b] = v
            owner[v] = b
            if b == bag:
                break
            v = previous
    return [c for c in choice if c is not None]


def build_c3(p: Params) -> MinorCertificate:
    m, _ = bounds.t3(p)
    bags = [Bag.single(v) for v in enumerate_Ai(p.n, p.k, 1)]
    families = max_independent_sets_disjoint(p, m)
    taken = {S.mask for fam in families for S in fam}
    pool = [v for v in ksubsets(p.n, p.k, range(2, p.n + 1)) if v.mask not in taken]
    candidates = [
        [j for j, v in enumerate(pool) if all(v.mask & S.mask for S in fam)] for fam in families
    ]
    centers = _match_centers(candidates)
    bags += [Bag.star(pool[c], fam) for c, fam in zip(centers, families)]
    return canonical(p, bags)


BUILDERS = {
    Construction.CLIQUE: build_clique,
    Construction.K2ODD: lambda p: build_k2_odd(p.n),
    Construction.C1: build_c1,
    Construction.C2: build_c2,
    Construction.C3: build_c3,
}


def build(p: Params, construction: Construction, *, cap: int | None = None) -> MinorCertificate:
    check_cap(p, cap)
    return BUILDERS[Construction(construction)](p)


def build_best(p: Params, *, cap: int | None = None) -> MinorCertificate:
    """Certificate for the construction chosen by :func:`bounds.best_bound`."""
    check_cap(p, cap)
    report = bounds.best_bound(p)
    cert = BUILDERS[report.chosen_construction](p)
    if cert.claimed_t != report.best or cert.claimed_t < report.chi:
        raise AssertionError(
            f"K({p.n},{p.k}): built {cert.claimed_t} bags, expected {report.best} >= {report.chi}"
        )
    return cert
