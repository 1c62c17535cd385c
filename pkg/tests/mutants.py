"""Certificate mutation generators shared by the verifier tests and the
acceptance suite."""
from __future__ import annotations

import random
from dataclasses import replace
from functools import lru_cache

from kminor import builder
from kminor.builder import Bag, BagKind, MinorCertificate
from kminor.kneser import Params
from kminor.subsets import binomial

MUTANTS_PER_CLASS = 60


@lru_cache(maxsize=None)
def base_certificates() -> tuple[MinorCertificate, ...]:
    certs = []
    for k in (2, 3, 4):
        n = 2 * k
        while binomial(n, k) <= 220:
            certs.append(builder.build_best(Params(n, k)))
            n += 1
    certs += [
        builder.build_c1(Params(10, 3)),
        builder.build_c2(Params(14, 3)),
        builder.build_c2(Params(11, 4)),
        builder.build_c3(Params(8, 3)),
        builder.build_c3(Params(11, 4)),
        builder.build_k2_odd(9),
    ]
    return tuple(certs)


def with_star_certificates():
    return [c for c in base_certificates() if any(b.kind is BagKind.STAR for b in c.bags)]


def _swap_vertex(bag: Bag, old, new) -> Bag:
    if bag.kind is BagKind.SINGLE:
        return Bag.single(new)
    if bag.center == old:
        return Bag(BagKind.STAR, center=new, leaves=bag.leaves)
    return Bag(BagKind.STAR, center=bag.center, leaves=tuple(new if v == old else v for v in bag.leaves))


def _set_bag(cert: MinorCertificate, idx: int, bag: Bag) -> MinorCertificate:
    bags = list(cert.bags)
    bags[idx] = bag
    return replace(cert, bags=tuple(bags))


def duplicate_vertex(rng: random.Random) -> tuple[MinorCertificate, str]:
    """Class (i): a vertex of one bag also appears in another bag."""
    cert = rng.choice(base_certificates())
    x, y = rng.sample(range(len(cert.bags)), 2)
    v = rng.choice(cert.bags[x].vertices)
    target = cert.bags[y]
    if target.kind is BagKind.STAR and rng.random() < 0.5:
        bag = Bag(BagKind.STAR, center=target.center, leaves=target.leaves + (v,))
    else:
        bag = _swap_vertex(target, rng.choice(target.vertices), v)
    return _set_bag(cert, y, bag), f"vertex {v} from bag {x} into bag {y}"


def bad_center(rng: random.Random) -> tuple[MinorCertificate, str]:
    """Class (ii): a star center replaced by a vertex disjoint from one of its leaves."""
    cert = rng.choice(with_star_certificates())
    idx = rng.choice([j for j, b in enumerate(cert.bags) if b.kind is BagKind.STAR])
    bag = cert.bags[idx]
    p = cert.params
    leaf = rng.choice(bag.leaves)
    candidates = [v for v in p.vertices() if not v.mask & leaf.mask]
    center = rng.choice(candidates)
    return _set_bag(cert, idx, Bag(BagKind.STAR, center=center, leaves=bag.leaves)), (
        f"bag {idx} center {center} misses leaf {leaf}"
    )


def disconnect_pair(rng: random.Random) -> tuple[MinorCertificate, tuple[int, int]]:
    """Class (iii): delete leaves of one star until it has no edge to some other bag.

    Returns the mutant and the disconnected pair.
    """
    while True:
        cert = rng.choice(with_star_certificates())
        x = rng.choice([j for j, b in enumerate(cert.bags) if b.kind is BagKind.STAR])
        y = rng.choice([j for j in range(len(cert.bags)) if j != x])
        ends_y = cert.bags[y].endpoints
        keep = tuple(
            v for v in cert.bags[x].leaves if not any(v.mask & u.mask and v != u for u in ends_y)
        )
        if not keep:
            continue
        star = cert.bags[x]
        mutant = _set_bag(cert, x, Bag(BagKind.STAR, center=star.center, leaves=keep))
        return mutant, (min(x, y), max(x, y))


def inflate_t(rng: random.Random) -> tuple[MinorCertificate, str]:
    """Class (iv): claimed_t one larger than the bag count."""
    cert = rng.choice(base_certificates())
    return replace(cert, claimed_t=cert.claimed_t + 1), f"claimed {cert.claimed_t + 1}"


MUTATION_CLASSES = {
    "duplicate-vertex": duplicate_vertex,
    "bad-center": bad_center,
    "disconnect-pair": disconnect_pair,
    "inflate-t": inflate_t,
}


def generate(name: str, count: int = MUTANTS_PER_CLASS, seed: int = 2024):
    rng = random.Random(f"{name}:{seed}")
    return [MUTATION_CLASSES[name](rng)[0] for _ in range(count)]
