"""Construction-independent checks for minor certificates.

Nothing here reuses builder state or cached adjacency: every edge test is a
fresh intersection of element sets.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .builder import BagKind, MinorCertificate


@dataclass
class Check:
    name: str
    passed: bool
    diagnostic: str = ""


@dataclass
class VerificationReport:
    valid: bool
    t: int
    checks: list[Check]
    failed_pair: tuple[int, int] | None = None
    # bag pair -> (endpoint in first bag, endpoint in second bag)
    witnesses: dict[tuple[int, int], tuple[tuple[int, ...], tuple[int, ...]]] = field(
        default_factory=dict, repr=False
    )

    def text(self) -> str:
        lines = [f"t={self.t}"]
        for c in self.checks:
            status = "ok" if c.passed else "FAILED"
            lines.append(f"check {c.name}: {status}" + (f" ({c.diagnostic})" if c.diagnostic else ""))
        lines.append(("PASS" if self.valid else "FAIL") + f" t={self.t}")
        return "\n".join(lines)


def _elements(v) -> tuple[int, ...]:
    return tuple(v.elements)


def _meets(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    return a != b and not set(a).isdisjoint(b)


def _check_vertices(cert: MinorCertificate) -> Check:
    n, k = cert.params.n, cert.params.k
    for idx, bag in enumerate(cert.bags):
        if bag.kind is BagKind.SINGLE and (bag.vertex is None or bag.leaves or bag.center):
            return Check("vertices", False, f"bag {idx} is a malformed single bag")
        if bag.kind is BagKind.STAR and (bag.center is None or bag.vertex is not None):
            return Check("vertices", False, f"bag {idx} is a malformed star bag")
        for v in bag.vertices:
            e = _elements(v)
            ok = (
                len(e) == k
                and all(1 <= x <= n for x in e)
                and all(a < b for a, b in zip(e, e[1:]))
                and v.n == n
            )
            if not ok:
                return Check("vertices", False, f"bag {idx}: {v} is not a {k}-subset of [{n}]")
    return Check("vertices", True)


def _check_disjoint(cert: MinorCertificate) -> tuple[Check, tuple[int, int] | None]:
    owner: dict[tuple[int, ...], int] = {}
    for idx, bag in enumerate(cert.bags):
        for v in bag.vertices:
            e = _elements(v)
            if e in owner:
                other = owner[e]
                return (
                    Check("disjoint", False, f"vertex {v} appears in bags {other} and {idx}"),
                    (other, idx),
                )
            owner[e] = idx
    return Check("disjoint", True), None


def _check_stars(cert: MinorCertificate) -> Check:
    for idx, bag in enumerate(cert.bags):
        if bag.kind is not BagKind.STAR:
            continue
        if not bag.leaves:
            return Check("stars", False, f"bag {idx} is a star without leaves")
        c = _elements(bag.center)
        for leaf in bag.leaves:
            if not _meets(c, _elements(leaf)):
                return Check("stars", False, f"bag {idx}: center {bag.center} misses leaf {leaf}")
    return Check("stars", True)


def _first_witness(a: list, b: list):
    for eu, su in a:
        for ev, sv in b:
            if eu != ev and not su.isdisjoint(sv):
                return eu, ev
    return None


def _check_connections(cert: MinorCertificate):
    ends = [[(_elements(v), frozenset(_elements(v))) for v in bag.endpoints] for bag in cert.bags]
    witnesses = {}
    for x, y in combinations(range(len(cert.bags)), 2):
        w = _first_witness(ends[x], ends[y])
        if w is None:
            return (
                Check("connections", False, f"no leaf/single edge between bags {x} and {y}"),
                (x, y),
                witnesses,
            )
        witnesses[(x, y)] = w
    return Check("connections", True), None, witnesses


def verify(cert: MinorCertificate) -> VerificationReport:
    """Check that ``cert`` is a strongly 1-shallow K_t-minor of the complement graph.

    Checks run in order and stop at the first failure: vertices are valid
    k-subsets, bags are vertex-disjoint, every star center meets each of
    its leaves, every pair of bags is joined by an edge between leaves or
    single vertices, and the bag count equals ``claimed_t``.
    """
    t = len(cert.bags)
    checks: list[Check] = []

    def report(failed_pair=None, witnesses=None) -> VerificationReport:
        return VerificationReport(
            all(c.passed for c in checks), t, checks, failed_pair, witnesses or {}
        )

    checks.append(_check_vertices(cert))
    if not checks[-1].passed:
        return report()
    check, pair = _check_disjoint(cert)
    checks.append(check)
    if not check.passed:
        return report(pair)
    checks.append(_check_stars(cert))
    if not checks[-1].passed:
        return report()
    check, pair, witnesses = _check_connections(cert)
    checks.append(check)
    if not check.passed:
        return report(pair)
    ok = t == cert.claimed_t
    checks.append(Check("count", ok, "" if ok else f"claimed t={cert.claimed_t}, found {t} bags"))
    return report(None, witnesses)


def verify_odd_witness(cert: MinorCertificate, report: VerificationReport | None = None) -> bool:
    """Replay the signed-graph argument on a verified certificate.

    All edges start negative.  Switching at every star center flips the
    center-leaf edges to positive; inter-bag witness edges avoid centers and
    stay negative.  Returns whether the positive edges span each bag
    connectedly and every witness edge is negative.
    """
    if report is None:
        report = verify(cert)
    if not report.valid:
        raise ValueError("verify_odd_witness needs a certificate that passes verify")

    switched = {
        _elements(bag.center) for bag in cert.bags if bag.kind is BagKind.STAR
    }

    def sign(u: tuple[int, ...], v: tuple[int, ...]) -> int:
        s = -1
        if u in switched:
            s = -s
        if v in switched:
            s = -s
        return s

    for bag in cert.bags:
        verts = [_elements(v) for v in bag.vertices]
        # union-find over positive edges inside the bag
        root = {v: v for v in verts}

        def find(v):
            while root[v] != v:
                root[v] = root[root[v]]
                v = root[v]
            return v

        for u, v in combinations(verts, 2):
            if _meets(u, v) and sign(u, v) > 0:
                root[find(u)] = find(v)
        if len({find(v) for v in verts}) != 1:
            return False
        if bag.kind is BagKind.STAR:
            c = _elements(bag.center)
            if any(sign(c, _elements(leaf)) < 0 for leaf in bag.leaves):
                return False

    for (x, y), (u, v) in report.witnesses.items():
        if not _meets(u, v) or sign(u, v) > 0:
            return False
    return len(report.witnesses) == len(cert.bags) * (len(cert.bags) - 1) // 2
