"""Packing k-subsets into groups of a fixed size under a union constraint.

Shared engine for the A_i partitions and for the disjoint independent-set
families.  Items are bit masks over a ground of ``width`` elements, all of
the same size q.  A group of l items is valid when its items are pairwise
disjoint (``l * q <= width``) or, otherwise, when they cover the ground.

Phases, tried in order: a plain colex greedy (disjoint regime only), a
maximum matching when l = 2, constructions from an edge colouring when
the items are pairs, and a depth-first search that anchors each
new group at the hardest remaining item, may park items while slack is
left, and prunes with element-degree counting arguments.
"""
from __future__ import annotations

import networkx as nx

from .exceptions import SearchExhausted

DEFAULT_BUDGET = 10**7


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _greedy_colex(tails: list[int], l: int, groups_needed: int) -> list[list[int]] | None:
    used = [False] * len(tails)
    slack = len(tails) - groups_needed * l
    groups: list[list[int]] = []
    for a in range(len(tails)):
        if len(groups) == groups_needed:
            break
        if used[a]:
            continue
        group, union = [a], tails[a]
        for b in range(a + 1, len(tails)):
            if len(group) == l:
                break
            if not used[b] and not tails[b] & union:
                group.append(b)
                union |= tails[b]
        if len(group) == l:
            for b in group:
                used[b] = True
            groups.append(group)
        elif slack > 0:
            used[a] = True
            slack -= 1
        else:
            return None
    return groups if len(groups) == groups_needed else None


def _pairs_by_matching(
    tails: list[int], width: int, disjoint: bool, groups_needed: int
) -> list[list[int]] | None:
    full = (1 << width) - 1
    g = nx.Graph()
    g.add_nodes_from(range(len(tails)))
    for a in range(len(tails)):
        for b in range(a + 1, len(tails)):
            ok = not tails[a] & tails[b] if disjoint else tails[a] | tails[b] == full
            if ok:
                g.add_edge(a, b)
    matching = nx.max_weight_matching(g, maxcardinality=True)
    if len(matching) < groups_needed:
        return None
    pairs = sorted(tuple(sorted(e)) for e in matching)
    return [list(e) for e in pairs[:groups_needed]]


def _round_robin_color(u: int, v: int, width: int) -> int:
    """Colour of edge uv (u < v) in the standard 1-factorization of K_w for
    even w, or of K_(w+1) with one vertex deleted for odd w."""
    m = width if width % 2 == 0 else width + 1
    if v == m - 1:
        return u
    # round r on the circle 0..m-2 pairs r + j with r - j
    return (u + v) * (m // 2) % (m - 1)


def _edge_ends(tails: list[int]) -> list[tuple[int, int]]:
    ends = []
    for t in tails:
        u = (t & -t).bit_length() - 1
        ends.append((u, (t ^ (1 << u)).bit_length() - 1))
    return ends


def _color_classes(ends: list[tuple[int, int]], width: int) -> list[list[int]]:
    by_color: dict[int, list[int]] = {}
    for a, (u, v) in enumerate(ends):
        by_color.setdefault(_round_robin_color(u, v, width), []).append(a)
    return [c for _, c in sorted(by_color.items())]


def _covers_by_coloring(
    tails: list[int], width: int, l: int, groups_needed: int
) -> list[list[int]] | None:
    """Items are edges and 2l > width: find edge covers of size ``l``.

    Each group is one (near-)perfect matching of the colouring, plus for odd
    width an edge at its uncovered vertex, plus arbitrary edges to reach l.
    The edges at uncovered vertices are assigned by bipartite matching.
    """
    ends = _edge_ends(tails)
    half = width // 2
    full = [c for c in _color_classes(ends, width) if len(c) == half]
    if len(full) < groups_needed:
        return None
    base = full[:groups_needed]
    in_base = {a for c in base for a in c}
    donors = [a for a in range(len(tails)) if a not in in_base]
    groups = [sorted(c) for c in base]
    if width % 2:
        g = nx.Graph()
        g.add_nodes_from(("g", j) for j in range(groups_needed))
        for j, c in enumerate(base):
            covered = {x for a in c for x in ends[a]}
            (r,) = set(range(width)) - covered
            for a in donors:
                if r in ends[a]:
                    g.add_edge(("g", j), ("e", a))
        top = [("g", j) for j in range(groups_needed)]
        match = nx.bipartite.hopcroft_karp_matching(g, top_nodes=top)
        if any(node not in match for node in top):
            return None
        for j in range(groups_needed):
            groups[j].append(match[("g", j)][1])
        used = {match[node][1] for node in top}
        donors = [a for a in donors if a not in used]
    for group in groups:
        extra = l - len(group)
        if extra < 0 or extra > len(donors):
            return None
        group.extend(donors[:extra])
        donors = donors[extra:]
    return [sorted(g) for g in groups]


def _matchings_by_coloring(
    tails: list[int], width: int, l: int, groups_needed: int
) -> list[list[int]] | None:
    """Items are edges: split them into ``groups_needed`` matchings of size ``l``.

    A proper edge colouring with at most ``groups_needed`` classes is made
    equitable by swapping alternating paths between the largest and the
    smallest class; every class then has at least ``l`` edges.
    """
    ends = _edge_ends(tails)
    classes = [set(c) for c in _color_classes(ends, width)]
    if len(classes) > groups_needed:
        return None
    classes += [set() for _ in range(groups_needed - len(classes))]
    color = {a: j for j, c in enumerate(classes) for a in c}

    while True:
        big = max(range(len(classes)), key=lambda j: (len(classes[j]), -j))
        small = min(range(len(classes)), key=lambda j: (len(classes[j]), j))
        if len(classes[big]) - len(classes[small]) <= 1:
            break
        at: dict[int, list[int]] = {}
        for a in classes[big] | classes[small]:
            for x in ends[a]:
                at.setdefault(x, []).append(a)
        seen: set[int] = set()
        for a in sorted(classes[big]):
            if a in seen:
                continue
            comp, todo = [], [a]
            seen.add(a)
            while todo:
                b = todo.pop()
                comp.append(b)
                for x in ends[b]:
                    for c in at[x]:
                        if c not in seen:
                            seen.add(c)
                            todo.append(c)
            # paths with a surplus edge of the big class; cycles are balanced
            if 2 * sum(1 for b in comp if color[b] == big) > len(comp):
                for b in comp:
                    new = small if color[b] == big else big
                    classes[color[b]].discard(b)
                    classes[new].add(b)
                    color[b] = new
                break
        else:  # pragma: no cover
            return None

    groups = [sorted(c)[:l] for c in classes]
    if any(len(g) < l for g in groups):
        return None
    return groups


class _Search:
    """Depth-first search over group assignments with an explicit stack."""

    def __init__(self, tails: list[int], width: int, l: int, groups_needed: int, budget: int):
        self.tails = tails
        self.width = width  # number of ground elements, n - i
        self.full = (1 << width) - 1
        self.l = l
        self.disjoint = l * _popcount(tails[0]) <= width
        self.groups_needed = groups_needed
        self.budget = budget
        self.nodes = 0
        self.alive = set(range(len(tails)))
        self.degree = [0] * width
        for t in tails:
            for e in self._bits(t):
                self.degree[e] += 1

    @staticmethod
    def _bits(mask: int) -> list[int]:
        out, e = [], 0
        while mask:
            if mask & 1:
                out.append(e)
            mask >>= 1
            e += 1
        return out

    def _weight(self, a: int) -> int:
        return sum(self.degree[e] for e in self._bits(self.tails[a]))

    def _remove(self, a: int) -> None:
        self.alive.discard(a)
        for e in self._bits(self.tails[a]):
            self.degree[e] -= 1

    def _restore(self, a: int) -> None:
        self.alive.add(a)
        for e in self._bits(self.tails[a]):
            self.degree[e] += 1

    def _feasible(self, groups_left: int, slack: int) -> bool:
        if self.disjoint:
            # tails through one element sit in distinct groups or the remainder
            return max(self.degree, default=0) <= groups_left + slack
        # every later group must cover every element
        return min(self.degree, default=0) >= groups_left

    def _anchor(self) -> int:
        return min(self.alive, key=lambda a: (-self._weight(a), self.tails[a]))

    def _completions(self, anchor: int):
        """Yield the other l-1 members of a group containing ``anchor``."""
        if self.disjoint:
            yield from self._disjoint_completions(anchor)
        else:
            yield from self._covering_completions(anchor)

    def _disjoint_completions(self, anchor: int):
        # Walk elements from highest to lowest remaining degree; each is either
        # covered by a tail or skipped.  Skips are limited so the group keeps
        # exactly l tails, and the first completion covers the busiest elements.
        base = self.tails[anchor]
        need = self.l - 1
        q = _popcount(base)
        skips = self.width - self.l * q
        order = sorted(
            (e for e in range(self.width) if not base >> e & 1),
            key=lambda e: (-self.degree[e], e),
        )
        by_element: dict[int, list[int]] = {e: [] for e in order}
        for a in self.alive:
            t = self.tails[a]
            if a == anchor or t & base:
                continue
            low = min(self._bits(t), key=lambda e: (-self.degree[e], e))
            by_element[low].append(a)
        for e in order:
            by_element[e].sort(key=lambda a: (-self._weight(a), self.tails[a]))

        stack = [(0, base, 0, ())]
        while stack:
            idx, blocked, skipped, chosen = stack.pop()
            if len(chosen) == need:
                yield list(chosen)
                continue
            while idx < len(order) and blocked >> order[idx] & 1:
                idx += 1
            if idx == len(order):
                continue
            e = order[idx]
            children = []
            for a in by_element[e]:
                t = self.tails[a]
                if t & blocked:
                    continue
                children.append((idx + 1, blocked | t, skipped, chosen + (a,)))
            if skipped < skips:
                children.append((idx + 1, blocked | (1 << e), skipped + 1, chosen))
            stack.extend(reversed(children))

    def _covering_completions(self, anchor: int):
        # Cover the element with the fewest usable tails first.
        need = self.l - 1
        q = _popcount(self.tails[anchor])
        pool = [a for a in self.alive if a != anchor]
        pool.sort(key=lambda a: (-self._weight(a), self.tails[a]))
        stack = [(self.tails[anchor], (), frozenset())]
        while stack:
            union, chosen, taken = stack.pop()
            left = need - len(chosen)
            if left == 0:
                if union == self.full:
                    yield list(chosen)
                continue
            missing = self.width - _popcount(union)
            if missing > left * q:
                continue
            if missing == 0:
                extra = [a for a in pool if a not in taken][:left]
                if len(extra) == left:
                    yield list(chosen) + extra
                continue
            uncovered = [e for e in range(self.width) if not union >> e & 1]
            best_opts = None
            for e in uncovered:
                opts = [a for a in pool if a not in taken and self.tails[a] >> e & 1]
                if best_opts is None or len(opts) < len(best_opts):
                    best_opts = opts
                    if not opts:
                        break
            best_opts.sort(key=lambda a: -_popcount(self.tails[a] & ~union))
            stack.extend(
                (union | self.tails[a], chosen + (a,), taken | {a}) for a in reversed(best_opts)
            )

    def run(self) -> list[list[int]]:
        groups: list[list[int]] = []
        slack = len(self.tails) - self.groups_needed * self.l
        # each frame: (kind, payload, iterator)
        frames: list[tuple[str, object, object]] = []
        pending = self._open_frame(groups, slack)
        while True:
            if len(groups) == self.groups_needed:
                return groups
            if pending is not None:
                frames.append(pending)
                pending = None
            if not frames:
                raise SearchExhausted("partition search space exhausted")
            anchor, it, parked = frames[-1]
            # undo whatever this frame applied last time
            if parked is not None:
                kind, data = parked
                if kind == "group":
                    groups.pop()
                    for a in data:
                        self._restore(a)
                else:
                    self._restore(data)
                    slack += 1
                frames[-1] = (anchor, it, None)
            choice = next(it, None)
            if choice is None:
                frames.pop()
                continue
            self.nodes += 1
            if self.nodes > self.budget:
                raise SearchExhausted(f"node budget {self.budget} exhausted")
            if choice == "park":
                self._remove(anchor)
                slack -= 1
                frames[-1] = (anchor, it, ("park", anchor))
            else:
                group = [anchor, *choice]
                for a in group:
                    self._remove(a)
                groups.append(group)
                frames[-1] = (anchor, it, ("group", group))
            if self._feasible(self.groups_needed - len(groups), slack):
                pending = self._open_frame(groups, slack)

    def _open_frame(self, groups, slack):
        if len(groups) == self.groups_needed:
            return None
        anchor = self._anchor()

        def choices():
            yield from self._completions(anchor)
            if slack > 0:
                yield "park"

        return (anchor, choices(), None)


def pack_groups(
    tails: list[int], width: int, l: int, groups_needed: int, budget: int = DEFAULT_BUDGET
) -> tuple[list[list[int]], str, int]:
    """Find ``groups_needed`` valid groups of ``l`` item indices.

    Returns ``(groups, phase, nodes)`` where ``phase`` names the method that
    succeeded.  Raises :class:`SearchExhausted` on failure.
    """
    if groups_needed == 0:
        return [], "trivial", 0
    if groups_needed * l > len(tails):
        raise ValueError("not enough items for the requested groups")
    if l == 1:
        return [[a] for a in range(groups_needed)], "trivial", 0
    disjoint = l * _popcount(tails[0]) <= width
    if disjoint:
        groups = _greedy_colex(tails, l, groups_needed)
        if groups is not None:
            return groups, "greedy", 0
    if l == 2:
        groups = _pairs_by_matching(tails, width, disjoint, groups_needed)
        if groups is not None:
            return groups, "matching", 0
    if _popcount(tails[0]) == 2:
        by_coloring = _matchings_by_coloring if disjoint else _covers_by_coloring
        groups = by_coloring(tails, width, l, groups_needed)
        if groups is not None:
            return groups, "edge-coloring", 0
    search = _Search(tails, width, l, groups_needed, budget)
    return search.run(), "search", search.nodes
