from itertools import product

import numpy as np
import pytest

from ternops import corpus
from ternops.constructions import cyclic_group, natural_ternary
from ternops.enumeration import enumerate_models, inverse_semigroups
from ternops.errors import NotClifford, NotInverse, PreconditionViolated
from ternops.inverse import (
    admissible_automorphisms, admissible_pairs, alpha_determined, brandt5, clifford_decompose,
    gh_inverse_failures, gh_to_inverse_semigroup, group_with_zero, idempotent_maps, inverse_cert,
    inverse_triple, involutions, is_clifford, is_inverse_semigroup, standard_ternary,
)
from ternops.properties import check_property
from ternops.structure import groupoid

from conftest import as_array


def test_group_inverses(z3):
    cert = inverse_cert(z3)
    assert cert.inv.entries == (0, 2, 1)
    assert cert.idempotents == {0}
    m = as_array(z3)
    t = standard_ternary(z3)
    for a, b, c in product(range(3), repeat=3):
        assert t(a, b, c) == m[m[a, (-b) % 3], c]


def test_brandt_semigroup():
    b = brandt5()
    assert is_inverse_semigroup(b)
    assert not is_clifford(b)
    tri = inverse_triple(b)
    assert check_property(tri, "generalised-heap").holds
    assert gh_to_inverse_semigroup(tri).ops["mul"] == b.ops["mul"]
    with pytest.raises(NotClifford):
        clifford_decompose(b)


def test_not_inverse():
    s = groupoid([[0, 0], [0, 1]])
    assert not is_inverse_semigroup(groupoid([[1, 1], [1, 1]]))
    with pytest.raises(NotInverse):
        inverse_cert(groupoid([[0, 1], [0, 1]]))
    with pytest.raises(PreconditionViolated):
        inverse_triple(groupoid([[0, 1], [0, 1]]))
    assert is_inverse_semigroup(s)


def test_clifford_components():
    s = group_with_zero(cyclic_group(3))
    dec = clifford_decompose(s)
    assert dec.identities == [0, 1]
    assert sorted(len(e) for e, _ in dec.components.values()) == [1, 3]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_standard_ternary_roundtrip(n):
    for s in enumerate_models(inverse_semigroups(n)):
        tri = inverse_triple(s)
        assert not gh_inverse_failures(tri)
        assert gh_to_inverse_semigroup(tri).ops["mul"] == s.ops["mul"]


def test_recovery_needs_its_hypotheses():
    s = corpus.example3()
    assert check_property(s, "generalised-heap").holds
    assert admissible_pairs(s) == []
    assert len(list(involutions(3))) == 4
    assert len(list(idempotent_maps(3))) == 10
    with pytest.raises(PreconditionViolated):
        gh_to_inverse_semigroup(s.with_op("star", s.op("t").__class__(1, 3, (0, 1, 2)))
                                .with_op("hat", s.op("t").__class__(1, 3, (0, 1, 2))))


def test_alpha_determined_group():
    z3 = cyclic_group(3)
    assert admissible_automorphisms(z3) == [(0, 1, 2), (0, 2, 1)]
    s = alpha_determined(z3, (0, 2, 1))
    m = as_array(z3)
    for x, y in product(range(3), repeat=2):
        assert s.eval("mul", x, y) == m[(-x) % 3, y]
    assert check_property(s, "right-modular").holds
    with pytest.raises(PreconditionViolated):
        alpha_determined(z3, (1, 2, 0))


def test_natural_ternary_of_inverse_semigroup_is_associative():
    for s in enumerate_models(inverse_semigroups(3)):
        t = s.with_op("t", natural_ternary(s))
        assert check_property(t, "ternary-associative").holds


def test_group_with_zero_is_clifford():
    for g in (cyclic_group(2), cyclic_group(4)):
        s = group_with_zero(g)
        assert is_clifford(s)
        assert np.array_equal(as_array(s)[0], np.zeros(s.n, dtype=int))
