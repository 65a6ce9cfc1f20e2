import pytest
from hypothesis import given, strategies as st

from ternops import corpus
from ternops.clauses import (
    Binding, brute_force_check, check_clause, format_assignment, parse_clause, reproduces,
)
from ternops.errors import ClauseSyntaxError, UnboundSymbol
from ternops.properties import CATALOG
from ternops.structure import OpTable

from conftest import groupoids, ternaries

BINARY = [c for p in CATALOG.values() for c in p.clauses
          if "[" not in c and "'" not in c and "^" not in c and "l" not in c]
TERNARY = [c for p in CATALOG.values() for c in p.clauses
           if "[" in c and "*" not in c and "'" not in c and "^" not in c and "l" not in c]
EXTRA = [
    "x*y = x*z & y*x = z*x => y = z",
    "x*y = z => z*y = x",
    "(x*(y*z))*w = x*((y*z)*w)",
    "x*x = y*y => x = y",
]


def test_parse_and_print():
    c = parse_clause("(x*y)*z = (z*y)*x")
    assert c.is_identity
    assert c.variables == ("x", "y", "z")
    assert str(parse_clause(str(c))) == str(c)
    q = parse_clause("x*y = x*z => y = z")
    assert not q.is_identity and len(q.premises) == 1


@pytest.mark.parametrize("text", ["x*", "x*y", "(x*y = y", "[x y] = x", "x % y = x", "x*y = y =>"])
def test_syntax_errors(text):
    with pytest.raises(ClauseSyntaxError):
        parse_clause(text)


def test_missing_table_and_constant():
    s = corpus.prop2()
    with pytest.raises(UnboundSymbol, match="'t'"):
        check_clause(s, "[x y z] = x")
    with pytest.raises(UnboundSymbol):
        check_clause(s, "e*x = x")


def test_example2_witness():
    s = corpus.example2()
    res = check_clause(s, "(x*y)*z = (z*y)*x")
    assert not res.holds
    assert format_assignment(s, res.counterexample) == "x,x,y"


def test_constants_come_from_structure_or_binding():
    s = corpus.prop39()
    assert check_clause(s, "l*x = x").holds
    assert not check_clause(s, "l*x = x", Binding(consts={"l": s.element("a")})).holds


def test_unary_binding():
    s = corpus.example2()
    assert check_clause(s, "x'' = x", Binding(star="star")).holds
    renamed = s.replace(ops={"mul": s.ops["mul"], "inv": s.ops["star"]})
    assert check_clause(renamed, "x'*y = y'*x", Binding(star="inv")).holds


@given(groupoids(max_n=4), st.sampled_from(BINARY + EXTRA))
def test_compiled_checker_matches_reference(s, text):
    fast = check_clause(s, text)
    slow = brute_force_check(s, text)
    assert fast.holds == slow.holds
    if not fast.holds:
        assert fast.counterexample == slow.counterexample
        assert reproduces(s, text, fast.counterexample)


@given(ternaries(max_n=3), st.sampled_from(TERNARY))
def test_compiled_checker_matches_reference_ternary(t, text):
    fast = check_clause(t, text)
    slow = brute_force_check(t, text)
    assert fast.holds == slow.holds
    if not fast.holds:
        assert reproduces(t, text, fast.counterexample)


@given(groupoids(max_n=3), st.data())
def test_premises_mixing_unary_and_constants(s, data):
    n = s.n
    star = OpTable(1, n, tuple(data.draw(st.lists(st.integers(0, n - 1), min_size=n, max_size=n))))
    l = data.draw(st.integers(0, n - 1))
    s = s.with_op("star", star).with_const("l", l)
    for text in ("x' = y => x*l = y*l", "x*y = l => y*x = l", "(x*y)' = x'*y'"):
        fast = check_clause(s, text)
        assert fast.holds == brute_force_check(s, text).holds
        if not fast.holds:
            assert reproduces(s, text, fast.counterexample)
