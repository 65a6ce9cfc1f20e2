"""The four reference tables, compiled in so the regression suite needs no files.

The same texts live under ``corpus/`` at the project root; a golden test
keeps the two byte-identical.
"""

from __future__ import annotations

from functools import lru_cache

from .structure import Structure, parse_structures

TEXTS = {
    # right modular, natural ternary not a semiheap
    "prop2": """\
structure prop2
elements a b ab ba
op mul arity 2
a ab ba b
ba b a ab
b ba ab a
ab a b ba
end
""",
    # right modular with left identity l, not AG*
    "prop39": """\
structure prop39
elements a b c l
op mul arity 2
l c b a
b l a c
c a l b
a b c l
const l = l
end
""",
    # star-unary with left identity l (star = identity map), not right modular
    "example2": """\
structure ex2
elements x y l
op mul arity 2
y x x
x x y
x y l
op star arity 1
x y l
const l = l
end
""",
    # generalised heap that is not a standard ternary of an inverse semigroup
    "example3": """\
structure ex3
elements 0 a b
op t arity 3
0 0 0
0 0 0
0 0 0

0 0 0
0 a 0
0 0 a

0 0 0
0 b 0
0 0 b
end
""",
}

FILES = {key: key + ".alg" for key in TEXTS}


@lru_cache(maxsize=None)
def get(key: str) -> Structure:
    """Compiled-in structure by corpus key (``prop2``, ``prop39``, ``example2``, ``example3``)."""
    (s,) = parse_structures(TEXTS[key])
    return s


def prop2() -> Structure:
    return get("prop2")


def prop39() -> Structure:
    return get("prop39")


def example2() -> Structure:
    return get("example2")


def example3() -> Structure:
    return get("example3")
