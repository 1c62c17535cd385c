from __future__ import annotations

import random
from dataclasses import replace

import pytest

from kminor import builder
from kminor.builder import Bag, BagKind, MinorCertificate
from kminor.kneser import Params
from kminor.subsets import KSubset
from kminor.verifier import verify, verify_odd_witness

import mutants


def ks(text: str, n: int) -> KSubset:
    return KSubset.parse(text, n)


SOUNDNESS = {
    "clique": [builder.build_clique(Params(n, k)) for n, k in [(8, 4), (6, 3), (10, 3)]],
    "k2-odd": [builder.build_k2_odd(n) for n in (5, 7, 9)],
    "C1": [builder.build_c1(Params(n, k)) for n, k in [(10, 3), (11, 3), (11, 4)]],
    "C2": [builder.build_c2(Params(n, k)) for n, k in [(14, 3), (10, 3), (11, 4)]],
    "C3": [builder.build_c3(Params(n, k)) for n, k in [(8, 3), (11, 4), (10, 4)]],
}


@pytest.mark.parametrize("name", sorted(SOUNDNESS))
def test_soundness(name):
    for cert in SOUNDNESS[name]:
        report = verify(cert)
        assert report.valid, report.text()
        assert report.t == cert.claimed_t
        assert verify_odd_witness(cert, report)


def test_k2_odd_report():
    report = verify(builder.build_k2_odd(5))
    assert report.valid and report.t == 5
    assert report.text().splitlines()[-1] == "PASS t=5"
    assert [c.name for c in report.checks] == ["vertices", "disjoint", "stars", "connections", "count"]


def test_clique_odd_witness_needs_no_switching():
    cert = builder.build_clique(Params(7, 3))
    assert verify_odd_witness(cert)


def test_shared_vertex_fails_disjointness():
    n = 7
    bags = (Bag.single(ks("1,2,3", n)), Bag.star(ks("1,4,5", n), [ks("1,2,3", n)]))
    report = verify(MinorCertificate(Params(n, 3), bags, 2))
    assert not report.valid
    assert report.checks[-1].name == "disjoint" and not report.checks[-1].passed
    assert report.failed_pair == (0, 1)


def test_center_only_connection_fails():
    # the only edge between the bags touches the star center
    n = 7
    star = Bag.star(ks("1,2,3", n), [ks("3,4,5", n)])
    single = Bag.single(ks("1,6,7", n))
    cert = MinorCertificate(Params(n, 3), (single, star), 2)
    report = verify(cert)
    assert not report.valid and report.failed_pair == (0, 1)
    assert report.checks[-1].name == "connections"
    with pytest.raises(ValueError):
        verify_odd_witness(cert, report)


def test_connection_mutant_names_the_pair():
    cert = builder.build_c1(Params(10, 3))
    a2 = [j for j, b in enumerate(cert.bags) if b.kind is BagKind.STAR and b.center.elements[0] == 2]
    # delete leaves from the A_2 stars one at a time until a pair disconnects
    bags = list(cert.bags)
    for j in a2:
        while len(bags[j].leaves) > 1:
            star = bags[j]
            bags[j] = Bag(BagKind.STAR, center=star.center, leaves=star.leaves[:-1])
            report = verify(replace(cert, bags=tuple(bags)))
            if not report.valid:
                x, y = report.failed_pair
                assert j in (x, y)
                assert f"bags {x} and {y}" in report.checks[-1].diagnostic
                return
    pytest.fail("no leaf deletion disconnected a pair")


def test_malformed_vertex_rejected():
    n = 7
    bad = KSubset((1, 2), n)  # wrong size
    cert = MinorCertificate(Params(n, 3), (Bag.single(bad),), 1)
    report = verify(cert)
    assert not report.valid and report.checks[-1].name == "vertices"


def test_starless_leaves_rejected():
    n = 7
    cert = MinorCertificate(Params(n, 3), (Bag(BagKind.STAR, center=ks("1,2,3", n)),), 1)
    assert not verify(cert).valid


def test_verify_is_pure():
    cert = SOUNDNESS["C1"][0]
    a, b = verify(cert), verify(cert)
    assert a.text() == b.text() and a.witnesses == b.witnesses


def test_witnesses_avoid_centers():
    cert = SOUNDNESS["C2"][0]
    report = verify(cert)
    centers = {b.center.elements for b in cert.bags if b.kind is BagKind.STAR}
    assert len(report.witnesses) == len(cert.bags) * (len(cert.bags) - 1) // 2
    for u, v in report.witnesses.values():
        assert u not in centers and v not in centers
        assert set(u) & set(v)


@pytest.mark.parametrize("name", sorted(mutants.MUTATION_CLASSES))
def test_mutants_rejected(name):
    generated = mutants.generate(name)
    assert len(generated) >= 50
    rejected = sum(not verify(m).valid for m in generated)
    assert rejected == len(generated)


def test_disconnect_mutants_name_the_pair():
    rng = random.Random(7)
    for _ in range(20):
        mutant, pair = mutants.disconnect_pair(rng)
        report = verify(mutant)
        assert not report.valid
        if report.checks[-1].name == "connections":
            # the first failing pair in order is reported; it is never later
            # than the pair we broke
            assert report.failed_pair <= pair
