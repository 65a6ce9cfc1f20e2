import pytest
from hypothesis import given

from ternops import corpus
from ternops.clauses import Binding, brute_force_check, reproduces
from ternops.constructions import natural_ternary
from ternops.enumeration import rm_left_identity, enumerate_models
from ternops.errors import AlgebraError
from ternops.properties import (
    CATALOG, applicable, check_property, check_unit_characterizations, classify, find_elements,
    left_identities,
)

from conftest import groupoids


def _oracle(s, name):
    prop = CATALOG[name]
    if prop.role:
        return any(all(brute_force_check(s, c, Binding(consts={"l": l})).holds for c in prop.clauses)
                   for l in range(s.n))
    return all(brute_force_check(s, c).holds for c in prop.clauses)


@given(groupoids(max_n=3))
def test_classify_matches_clause_oracle(s):
    s = s.with_op("t", natural_ternary(s))
    got = classify(s)
    assert got == sorted(got)
    for name in applicable(s):
        if CATALOG[name].builtin is None:
            assert (name in got) == _oracle(s, name), name


@given(groupoids(max_n=3))
def test_counterexamples_reproduce(s):
    for name in ("right-modular", "medial", "associative", "ward-quasigroup"):
        rep = check_property(s, name)
        if not rep.holds and rep.counterexample:
            assert any(reproduces(s, c, rep.counterexample) for c in CATALOG[name].clauses)


def test_reference_tables():
    assert check_property(corpus.prop2(), "right-modular").holds
    assert "right-modular" in classify(corpus.prop39())
    assert "ag-star" not in classify(corpus.prop39())
    ex2 = corpus.example2()
    assert check_property(ex2, "star-unary", Binding(star="star")).holds
    assert not check_property(ex2, "right-modular").holds
    assert check_property(corpus.example3(), "generalised-heap").holds


def test_role_pinned_and_existential():
    s = corpus.prop39()
    l = s.element("l")
    rep = check_property(s, "left-identity")
    assert rep.holds and rep.witness == l
    assert not check_property(s, "left-identity", Binding(consts={"l": 0})).holds
    assert left_identities(s) == [l]
    assert find_elements(s, "left-identity") == {l}


def test_unknown_property():
    with pytest.raises(AlgebraError):
        check_property(corpus.prop2(), "no-such-property")


def test_builtins_on_groups(z3):
    for name in ("group", "inverse-semigroup", "globally-idempotent", "right-solvable"):
        assert check_property(z3, name).holds, name


@pytest.mark.parametrize("n", [1, 2, 3])
def test_unit_closed_forms(n):
    for s in enumerate_models(rm_left_identity(n)):
        rep = check_unit_characterizations(s)
        assert rep.first_discrepancy is None
        for label, brute, closed in rep.rows:
            assert brute == closed, label
