from itertools import product

import numpy as np
import pytest
from hypothesis import given, strategies as st

from ternops import corpus
from ternops.constructions import (
    PERMUTATIONS3, alpha_map, beta_map, cyclic_group, dual_groupoid, example1_pair,
    gamma_from_semiheap, gamma_wq, group_identity, lambda_map, natural_ternary, omega, parse_perm,
    phi_g, pi_map, pi_ternary, psi, reconstruct, sigma, star_ternary, theta,
)
from ternops.enumeration import enumerate_models, groups, rm_left_identity
from ternops.errors import AlgebraError, PreconditionViolated
from ternops.iso import is_isomorphism, iso_search
from ternops.properties import check_property

from conftest import as_array, groupoids


@given(groupoids())
def test_natural_ternary_is_left_bracketed_product(s):
    m = as_array(s)
    t = np.asarray(natural_ternary(s).entries).reshape((s.n,) * 3)
    for a, b, c in product(range(s.n), repeat=3):
        assert t[a, b, c] == m[m[a, b], c]


@given(groupoids(), st.data())
def test_star_ternary(s, data):
    n = s.n
    star = data.draw(st.lists(st.integers(0, n - 1), min_size=n, max_size=n))
    from ternops.structure import OpTable
    s = s.with_op("p", OpTable(1, n, tuple(star)))
    t = np.asarray(star_ternary(s, "p").entries).reshape((n,) * 3)
    m = as_array(s)
    for a, b, c in product(range(n), repeat=3):
        assert t[a, b, c] == m[m[a, star[b]], c]


@given(groupoids(max_n=3), st.sampled_from(PERMUTATIONS3))
def test_pi_ternary_permutes_arguments(s, perm):
    nat = natural_ternary(s)
    pt = pi_ternary(nat, perm)
    for args in product(range(s.n), repeat=3):
        assert pt(*args) == nat(*(args[p - 1] for p in perm))
    assert pi_ternary(nat, (1, 2, 3)) == nat


def test_parse_perm():
    assert parse_perm("132") == (1, 3, 2)
    assert parse_perm("(2,1,3)") == (2, 1, 3)
    with pytest.raises(AlgebraError):
        parse_perm("112")


@given(groupoids())
def test_dual_is_involutive(s):
    d = dual_groupoid(s)
    assert (as_array(d) == as_array(s).T).all()
    assert dual_groupoid(d).ops["mul"] == s.ops["mul"]


@given(groupoids(), st.randoms(use_true_random=False))
def test_isomorphism_transfers_to_natural_ternaries(s, rnd):
    perm = list(range(s.n))
    rnd.shuffle(perm)
    t = s.permuted(perm)
    assert is_isomorphism(perm, s.n, [(2, s.ops["mul"].entries)], [(2, t.ops["mul"].entries)])
    assert is_isomorphism(perm, s.n, [(3, natural_ternary(s).entries)],
                          [(3, natural_ternary(t).entries)])


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_example1_pair(n):
    left, right = example1_pair(n)
    assert natural_ternary(left) == natural_ternary(right)
    assert left.ops["mul"] != right.ops["mul"]
    assert iso_search(left, right) is None


@pytest.mark.parametrize("n", [2, 3])
def test_gamma_inverts_natural_ternary(n):
    for s in enumerate_models(rm_left_identity(n)):
        t = s.with_op("t", natural_ternary(s))
        assert gamma_from_semiheap(t, 0).ops["mul"] == s.ops["mul"]


def test_gamma_rejects_non_semiheap():
    s = corpus.prop2()
    with pytest.raises(PreconditionViolated):
        gamma_from_semiheap(s.with_op("t", natural_ternary(s)), 0)


def test_reconstruct_rejects_bad_input():
    s = corpus.prop2()
    t = s.with_op("t", natural_ternary(s))
    with pytest.raises(PreconditionViolated):
        reconstruct(t, "star-bi-unital", 0)
    with pytest.raises(AlgebraError):
        reconstruct(t, "no-such-scheme", 0)


def test_reconstruct_aliases_match():
    s = corpus.prop39()
    l = s.element("l")
    t = s.with_op("t", natural_ternary(s))
    assert reconstruct(t, "thm67", l).ops["mul"] == s.ops["mul"]
    d = dual_groupoid(s)
    dt = d.with_op("t", natural_ternary(d))
    assert reconstruct(dt, "thm68", l).ops["mul"] == d.ops["mul"]


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_group_heap_ward_maps(n):
    for g in enumerate_models(groups(n)):
        e = group_identity(g)
        h = psi(g)
        assert check_property(h, "heap").holds
        w = phi_g(g)
        assert check_property(w, "ward-quasigroup").holds
        m = as_array(g)
        inv = [int(np.nonzero(m[a] == e)[0][0]) for a in range(n)]
        for a, b, c in product(range(n), repeat=3):
            assert h.eval("t", a, b, c) == m[m[a, inv[b]], c]
        for a, b in product(range(n), repeat=2):
            assert w.eval("mul", a, b) == m[a, inv[b]]
        assert omega(h, e).ops["mul"] == g.ops["mul"]
        assert gamma_wq(w).ops["mul"] == g.ops["mul"]
        assert lambda_map(w).ops["t"] == h.ops["t"]
        assert pi_map(h, e).ops["mul"] == w.ops["mul"]
        assert sigma(theta(g), e).ops["mul"] == g.ops["mul"]
        assert alpha_map(beta_map(h, e), e).ops["t"] == h.ops["t"]


def test_maps_check_their_input():
    s = corpus.prop2()
    with pytest.raises(PreconditionViolated):
        psi(s)
    with pytest.raises(PreconditionViolated):
        gamma_wq(s)
    assert cyclic_group(4).eval("mul", 3, 3) == 2
