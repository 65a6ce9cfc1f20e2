from itertools import combinations, permutations

import pytest
from hypothesis import given, strategies as st

from ternops.constructions import example1_pair, natural_ternary
from ternops.iso import Bijection, automorphisms, brute_force_iso, canonical_form, iso_search
from ternops.structure import OpTable, Structure, default_names
from ternops.suite import Atlas, atlas3, key_of

from conftest import groupoids


def _from_entries(n, entries, op="mul", arity=2):
    return Structure("S", default_names(n), {op: OpTable(arity, n, tuple(entries))})


@given(groupoids(max_n=5), st.randoms(use_true_random=False))
def test_permuted_copy_is_found(s, rnd):
    perm = list(range(s.n))
    rnd.shuffle(perm)
    t = s.permuted(perm)
    cert = iso_search(s, t)
    assert cert is not None
    assert cert == brute_force_iso(s, t)


@given(groupoids(min_n=2, max_n=5), groupoids(min_n=2, max_n=5))
def test_verdict_matches_brute_force(s, t):
    if s.n != t.n:
        assert iso_search(s, t) is None
        return
    assert iso_search(s, t) == brute_force_iso(s, t)


def test_ternary_kind():
    left, right = example1_pair(3)
    a = left.with_op("t", natural_ternary(left))
    b = right.with_op("t", natural_ternary(right))
    cert = iso_search(a, b, kind="ternary")
    assert cert.is_identity
    assert cert.format(a, b) == "x1->x1 x2->x2 x3->x3"


def test_bijection_algebra():
    p = Bijection((1, 2, 0))
    assert p.compose(p.inverse()).is_identity
    assert p(2) == 0


def test_automorphisms_of_cyclic(z3):
    autos = [a.forward for a in automorphisms(z3)]
    assert autos == [(0, 1, 2), (0, 2, 1)]


def test_atlas_keys_match_reference_order2():
    at = Atlas(2)
    for i in range(len(at)):
        assert at.bkey[i] == key_of(at.tables[i].tolist(), 2, 2)
        assert at.tkey[i] == key_of(at.ternary[i].tolist(), 3, 2)


def test_atlas_keys_decide_isomorphism_order2():
    at = Atlas(2)
    structs = [at.structure(i) for i in range(len(at))]
    for i, j in combinations(range(len(at)), 2):
        same = iso_search(structs[i], structs[j]) is not None
        assert same == (at.bkey[i] == at.bkey[j])


def test_atlas_order3_sample():
    at = atlas3()
    assert len(at) == 3 ** 9
    for i in range(0, len(at), 997):
        entries = at.tables[i].tolist()
        assert at.bkey[i] == key_of(entries, 2, 3)
        assert at.tkey[i] == key_of(at.ternary[i].tolist(), 3, 3)
        assert at.index(entries) == i
        s = _from_entries(3, entries)
        assert tuple(at.ternary[i].tolist()) == natural_ternary(s).entries


def test_canonical_form_is_invariant():
    entries = (0, 1, 1, 2, 0, 1, 1, 2, 2)
    forms = set()
    for p in permutations(range(3)):
        t = _from_entries(3, entries).permuted(p)
        forms.add(canonical_form(3, [(2, t.ops["mul"].entries)]))
    assert len(forms) == 1


@pytest.mark.parametrize("n", [2, 3])
def test_binary_isos_lists_lex_least_certificate(n):
    at = Atlas(n) if n == 2 else atlas3()
    i = at.index([0] * (n * n - 1) + [1])
    s = at.structure(i)
    for j, cert in at.binary_isos(at.tables[i].tolist()).items():
        assert Bijection(cert) == brute_force_iso(s, at.structure(j))
