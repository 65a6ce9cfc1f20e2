from pathlib import Path

import pytest
from hypothesis import given

from ternops import corpus
from ternops.errors import ArityMismatch, IndexOutOfRange, ParseError, UnknownOp
from ternops.structure import (
    OpTable, adjoin_identity, groupoid, parse_structures, serialize, serialize_all,
)

from conftest import groupoids

ROOT = Path(__file__).resolve().parents[1]


@pytest.mark.parametrize("key", sorted(corpus.TEXTS))
def test_corpus_files_match_compiled_texts(key):
    assert (ROOT / "corpus" / corpus.FILES[key]).read_text(encoding="utf-8") == corpus.TEXTS[key]


@pytest.mark.parametrize("key", sorted(corpus.TEXTS))
def test_corpus_serializes_back(key):
    s = corpus.get(key)
    assert parse_structures(serialize(s)) == [s]


@given(groupoids())
def test_serialize_roundtrip(s):
    assert parse_structures(serialize(s)) == [s]


def test_several_structures_in_one_file():
    a = groupoid([[0, 1], [1, 0]], name="A")
    b = groupoid([[0, 0], [0, 0]], name="B")
    assert [x.name for x in parse_structures(serialize_all([a, b]))] == ["A", "B"]


@pytest.mark.parametrize("text, line", [
    ("structure s\nelements a b\nop mul arity 2\na b\nb c\nend\n", 5),
    ("structure s\nelements a b\nop mul arity 2\na b\nend\n", 4),
    ("structure s\nelements a a\nend\n", 2),
    ("structure s\nelements a\nend\nstructure s\nelements a\nend\n", 4),
    ("elements a\n", 1),
])
def test_parse_errors_carry_line(text, line):
    with pytest.raises(ParseError) as exc:
        parse_structures(text)
    assert exc.value.line == line


def test_comments_and_blank_lines_are_ignored():
    text = "# header\nstructure s  # trailing\n\nelements a b\nop mul arity 2\na b\nb a\nend\n"
    (s,) = parse_structures(text)
    assert s.eval("mul", 1, 1) == 0


def test_op_table_errors():
    t = OpTable.from_rows([[0, 1], [1, 0]])
    assert t(1, 0) == 1
    with pytest.raises(ArityMismatch):
        t(1)
    with pytest.raises(IndexOutOfRange):
        t(0, 2)
    with pytest.raises(UnknownOp):
        groupoid([[0]]).op("t")


@given(groupoids(max_n=3))
def test_adjoin_identity(s):
    s1 = adjoin_identity(s)
    one = s1.consts["1"]
    assert s1.n == s.n + 1
    for x in range(s1.n):
        assert s1.eval("mul", one, x) == x == s1.eval("mul", x, one)
    for x in range(s.n):
        for y in range(s.n):
            assert s1.eval("mul", x, y) == s.eval("mul", x, y)
