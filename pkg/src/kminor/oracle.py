"""Brute-force references for cross-checking the formula layer.

Only the test suite uses these; they are deliberately naive and share no
code paths with :mod:`kminor.bounds` or :mod:`kminor.partition`.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .kneser import Params
from .subsets import binomial


class OracleTimeout(Exception):
    """The node budget ran out before the search finished."""


@dataclass(frozen=True)
class TinyGraph:
    """Graph on ``0..size-1`` with adjacency rows stored as bit masks."""

    size: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.size > 64 or len(self.rows) != self.size:
            raise ValueError("TinyGraph holds at most 64 vertices")
        for u in range(self.size):
            if self.rows[u] >> u & 1:
                raise ValueError(f"loop at vertex {u}")
            for v in range(self.size):
                if (self.rows[u] >> v & 1) != (self.rows[v] >> u & 1):
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)


def complement_kneser_graph(n: int, k: int) -> TinyGraph:
    # colex vertex order
    verts = sorted(combinations(range(1, n + 1), k), key=lambda c: c[::-1])
    sets = [set(v) for v in verts]
    rows = []
    for a in range(len(verts)):
        row = 0
        for b in range(len(verts)):
            if a != b and sets[a] & sets[b]:
                row |= 1 << b
        rows.append(row)
    return TinyGraph(len(verts), tuple(rows))


def _greedy_clique(g: TinyGraph) -> int:
    best = 0
    for start in range(g.size):
        clique = [start]
        for v in range(g.size):
            if v != start and all(g.adjacent(v, u) for u in clique):
                clique.append(v)
        best = max(best, len(clique))
    return best


def _dsatur_upper(g: TinyGraph) -> int:
    color = [-1] * g.size
    for _ in range(g.size):
        v = max(
            (u for u in range(g.size) if color[u] < 0),
            key=lambda u: (
                len({color[w] for w in range(g.size) if g.adjacent(u, w) and color[w] >= 0}),
                bin(g.rows[u]).count("1"),
                -u,
            ),
        )
        used = {color[w] for w in range(g.size) if g.adjacent(v, w)}
        color[v] = next(c for c in range(g.size) if c not in used)
    return max(color) + 1 if g.size else 0


def brute_chi(g: TinyGraph, budget: int = 10**6) -> int:
    """Exact chromatic number by DSATUR branch and bound.

    Raises :class:`OracleTimeout` when ``budget`` nodes are exceeded.
    """
    if g.size > 40:
        raise ValueError("brute_chi is limited to 40 vertices")
    if g.size == 0:
        return 0
    lower = _greedy_clique(g)
    best = _dsatur_upper(g)
    if lower == best:
        return best
    color = [-1] * g.size
    nodes = 0

    def pick() -> int:
        return max(
            (u for u in range(g.size) if color[u] < 0),
            key=lambda u: (
                len({color[w] for w in range(g.size) if g.adjacent(u, w) and color[w] >= 0}),
                bin(g.rows[u]).count("1"),
                -u,
            ),
        )

    def search(colored: int, used: int) -> None:
        nonlocal best, nodes
        nodes += 1
        if nodes > budget:
            raise OracleTimeout(f"brute_chi exceeded {budget} nodes")
        if used >= best:
            return
        if colored == g.size:
            best = used
            return
        v = pick()
        forbidden = {color[w] for w in range(g.size) if g.adjacent(v, w)}
        for c in range(min(used + 1, best - 1)):
            if c in forbidden:
                continue
            color[v] = c
            search(colored + 1, max(used, c + 1))
            color[v] = -1
            if best == lower:
                return

    search(0, 0)
    return best


def brute_dbar(p: Params) -> int:
    """Count k-subsets of {2..n} disjoint from at least one member of a fixed
    family of s pairwise disjoint k-subsets (the lowest-colex such family)."""
    n, k, s = p.n, p.k, p.s
    if p.r == 0:
        raise ValueError("brute_dbar needs r >= 1")
    if binomial(n - 1, k) > 3000:
        raise ValueError("brute_dbar is limited to C(n-1,k) <= 3000")
    ground = list(range(2, n + 1))
    family = [set(ground[j * k:(j + 1) * k]) for j in range(s)]
    count = 0
    for v in combinations(ground, k):
        vs = set(v)
        if any(not vs & A for A in family):
            count += 1
    return count


def brute_partition_exists(p: Params, i: int, l: int) -> bool:
    """Exhaustive search for an l-group partition of A_i(n,k) meeting the union bound."""
    size = binomial(p.n - i, p.k - 1)
    if size > 30:
        raise ValueError("brute_partition_exists is limited to C(n-i,k-1) <= 30")
    if not 1 <= i <= p.n - p.k + 1 or l < 1:
        raise ValueError("i or l out of range")
    members = [frozenset((i, *c)) for c in combinations(range(i + 1, p.n + 1), p.k - 1)]
    need = min(p.n - i + 1, l * (p.k - 1) + 1)
    groups_needed = size // l

    def solve(rest: tuple[int, ...], groups_left: int) -> bool:
        if groups_left == 0:
            return True
        if len(rest) < groups_left * l:
            return False
        first, others = rest[0], rest[1:]
        for mates in combinations(others, l - 1):
            union = members[first].union(*(members[j] for j in mates))
            if len(union) >= need:
                left = tuple(j for j in others if j not in mates)
                if solve(left, groups_left - 1):
                    return True
        # ``first`` goes to the remainder
        return solve(others, groups_left)

    return solve(tuple(range(size)), groups_needed)
