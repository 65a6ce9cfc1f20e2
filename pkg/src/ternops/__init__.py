"""Finite groupoids and the ternary operations they induce.

Tables are small and flat; every property is a clause over them.  The
modules are layered: ``structure`` and ``clauses`` at the bottom, then
``properties``, ``constructions``, ``inverse``, ``iso`` and ``enumeration``,
with ``suite`` and ``cli`` on top.
"""

from .clauses import Binding, check_clause, parse_clause
from .constructions import (
    dual_groupoid, example1_pair, gamma_from_semiheap, natural_ternary, pi_ternary,
    reconstruct, star_ternary,
)
from .enumeration import EnumSpec, count_models, enumerate_models, enumerate_tables
from .errors import AlgebraError
from .iso import Bijection, iso_search
from .properties import CATALOG, check_property, classify
from .structure import OpTable, Structure, groupoid, load, parse_structures, serialize

__version__ = "0.1.0"

__all__ = [
    "AlgebraError", "Bijection", "Binding", "CATALOG", "EnumSpec", "OpTable", "Structure",
    "check_clause", "check_property", "classify", "count_models", "dual_groupoid",
    "enumerate_models", "enumerate_tables", "example1_pair", "gamma_from_semiheap", "groupoid",
    "iso_search", "load", "natural_ternary", "parse_clause", "parse_structures", "pi_ternary",
    "reconstruct", "serialize", "star_ternary",
]
