"""Partition of A_i(n,k) into l-groups with large unions.

Every member of A_i(n,k) is ``{i}`` plus a (k-1)-subset ("tail") of
``{i+1..n}``.  A full group of l members must have union of size at least
``min(n - i + 1, l(k-1) + 1)``; on the tails this reads: when
``l(k-1) <= n - i`` the tails of a group are pairwise disjoint, otherwise
they cover ``{i+1..n}``.

The lemma guarantees such a partition exists but gives no method; the
search is done by :func:`kminor._packing.pack_groups`.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from ._packing import DEFAULT_BUDGET, pack_groups
from .kneser import Params
from .subsets import KSubset, binomial, enumerate_Ai


@dataclass(frozen=True)
class GroupPartition:
    params: Params
    i: int
    l: int
    c_i: int
    groups: list[list[KSubset]]
    remainder: list[KSubset]
    phase: str = field(default="", compare=False)
    nodes: int = field(default=0, compare=False)

    @property
    def bound(self) -> int:
        return union_bound(self.params, self.i, self.l)


def union_bound(p: Params, i: int, l: int) -> int:
    return min(p.n - i + 1, l * (p.k - 1) + 1)


def partition_Ai(p: Params, i: int, l: int, *, budget: int = DEFAULT_BUDGET) -> GroupPartition:
    """Split A_i(n,k) into floor(C(n-i,k-1)/l) groups of size l plus a remainder.

    Deterministic for fixed inputs.  Raises :class:`SearchExhausted` if no
    partition is found within ``budget`` search nodes; existence is
    guaranteed, so that signals an engine defect.
    """
    if not 1 <= i <= p.n - p.k + 1:
        raise ValueError(f"i must lie in [1, {p.n - p.k + 1}], got {i}")
    if l < 1:
        raise ValueError(f"l must be positive, got {l}")
    members = enumerate_Ai(p.n, p.k, i)
    size = binomial(p.n - i, p.k - 1)
    c_i = size // l
    # tails as masks over the ground {i+1..n}, bit 0 = element i+1
    tails = [S.mask >> i for S in members]
    index_groups, phase, nodes = pack_groups(tails, p.n - i, l, c_i, budget)

    # canonical order: members of a group by colex, groups by their first member
    groups = sorted((sorted(members[a] for a in g) for g in index_groups), key=lambda g: g[0])
    used = {a for g in index_groups for a in g}
    remainder = [members[a] for a in range(size) if a not in used]
    return GroupPartition(p, i, l, c_i, groups, remainder, phase=phase, nodes=nodes)


def verify_partition(gp: GroupPartition) -> bool:
    """Recheck every GroupPartition invariant from scratch."""
    p, i, l = gp.params, gp.i, gp.l
    if not 1 <= i <= p.n - p.k + 1 or l < 1:
        return False
    size = binomial(p.n - i, p.k - 1)
    if gp.c_i != size // l:
        return False
    if len(gp.groups) != gp.c_i or any(len(g) != l for g in gp.groups):
        return False
    if len(gp.remainder) != size - gp.c_i * l:
        return False
    seen: set[tuple[int, ...]] = set()
    for S in [m for g in gp.groups for m in g] + list(gp.remainder):
        key = tuple(S.elements)
        if key in seen:
            return False
        seen.add(key)
        if S.n != p.n or len(key) != p.k or key[0] != i:
            return False
        if key[-1] > p.n or any(b <= a for a, b in zip(key, key[1:])):
            return False
    if len(seen) != size:
        return False
    need = min(p.n - i + 1, l * (p.k - 1) + 1)
    for g in gp.groups:
        union: set[int] = set()
        for S in g:
            union.update(S.elements)
        if len(union) < need:
            return False
    return True
