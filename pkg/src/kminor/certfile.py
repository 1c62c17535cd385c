"""The ``KMINOR v1`` certificate text format.

::

    KMINOR v1
    n=<int> k=<int> t=<int>
    bag <idx> single <set>
    bag <idx> star center=<set> leaves=<set>;<set>;...
    end

Bag indices count from 0.  Sets are ascending, comma separated.  Lines end
with LF, including the final ``end``.
"""
from __future__ import annotations

import re

from .builder import Bag, BagKind, MinorCertificate
from .exceptions import CertificateParseError
from .kneser import Params
from .subsets import KSubset

HEADER = "KMINOR v1"
_PARAMS = re.compile(r"n=(\d+) k=(\d+) t=(\d+)")
_SINGLE = re.compile(r"bag (\d+) single (\S+)")
_STAR = re.compile(r"bag (\d+) star center=(\S+) leaves=(\S+)")


def serialize(cert: MinorCertificate) -> str:
    p = cert.params
    lines = [HEADER, f"n={p.n} k={p.k} t={cert.claimed_t}"]
    for idx, bag in enumerate(cert.bags):
        if bag.kind is BagKind.SINGLE:
            lines.append(f"bag {idx} single {bag.vertex}")
        else:
            leaves = ";".join(str(v) for v in bag.leaves)
            lines.append(f"bag {idx} star center={bag.center} leaves={leaves}")
    lines.append("end")
    return "\n".join(lines) + "\n"


def _subset(text: str, n: int, lineno: int) -> KSubset:
    try:
        return KSubset.parse(text, n)
    except ValueError as exc:
        raise CertificateParseError(f"line {lineno}: {exc}") from None


def parse(text: str) -> MinorCertificate:
    """Parse certificate text; raises :class:`CertificateParseError`.

    Only syntax is checked here.  Whether the bags form a minor, and whether
    ``t`` matches the bag count, is for the verifier to decide.
    """
    if not text.endswith("\n"):
        raise CertificateParseError("missing final newline")
    lines = text[:-1].split("\n")
    if len(lines) < 3:
        raise CertificateParseError("certificate is truncated")
    if lines[0] != HEADER:
        raise CertificateParseError(f"line 1: expected {HEADER!r}")
    m = _PARAMS.fullmatch(lines[1])
    if not m:
        raise CertificateParseError("line 2: expected 'n=<int> k=<int> t=<int>'")
    n, k, t = (int(g) for g in m.groups())
    try:
        p = Params(n, k)
    except (ValueError, TypeError) as exc:
        raise CertificateParseError(f"line 2: {exc}") from None
    if lines[-1] != "end":
        raise CertificateParseError("certificate is truncated: no 'end' line")
    bags = []
    for lineno, line in enumerate(lines[2:-1], start=3):
        if m := _SINGLE.fullmatch(line):
            idx, body = int(m.group(1)), m.group(2)
            bag = Bag.single(_subset(body, n, lineno))
        elif m := _STAR.fullmatch(line):
            idx = int(m.group(1))
            center = _subset(m.group(2), n, lineno)
            leaves = [_subset(s, n, lineno) for s in m.group(3).split(";")]
            bag = Bag(BagKind.STAR, center=center, leaves=tuple(leaves))
        else:
            raise CertificateParseError(f"line {lineno}: unrecognized bag line {line!r}")
        if idx != len(bags):
            raise CertificateParseError(f"line {lineno}: expected bag index {len(bags)}, got {idx}")
        bags.append(bag)
    return MinorCertificate(p, tuple(bags), t)
