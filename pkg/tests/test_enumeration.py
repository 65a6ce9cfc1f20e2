import itertools

import numpy as np
import pytest

from ternops.enumeration import (
    EnumSpec, count_models, enumerate_tables, groups, inverse_semigroups, parse_signature,
    rm_left_identity, search_space,
)
from ternops.errors import AlgebraError, CapExceeded
from ternops.iso import automorphisms
from ternops.naive import naive_models
from ternops.structure import OpTable, Structure, default_names

from oracle_specs import label, specs

SPECS = specs()


@pytest.mark.parametrize("spec", SPECS, ids=[label(s) for s in SPECS])
def test_enumerator_matches_naive_filter(spec):
    assert search_space(spec) <= 10 ** 7
    assert list(enumerate_tables(spec)) == naive_models(spec)


def test_signature_words():
    assert parse_signature("binary,unary") == (("mul", 2), ("star", 1))
    assert parse_signature("ternary, inv:1") == (("t", 3), ("inv", 1))
    with pytest.raises(AlgebraError):
        parse_signature("quaternary")


def test_spec_validation():
    with pytest.raises(AlgebraError):
        EnumSpec(0)
    with pytest.raises(AlgebraError):
        EnumSpec(2, pins={"l": 2})
    with pytest.raises(CapExceeded):
        EnumSpec(17, (("t", 3),))


def test_group_counts():
    # numbers of groups of order 1..6 up to isomorphism
    assert [count_models(groups(n)) for n in range(1, 7)] == [1, 1, 1, 2, 1, 2]


def _orbit_total(spec):
    total = 0
    for model in enumerate_tables(spec):
        n = spec.order
        s = Structure("S", default_names(n), {"mul": OpTable(2, n, model[0])})
        total += len(list(itertools.permutations(range(n)))) // len(automorphisms(s))
    return total


def test_inverse_semigroup_counts():
    # up to isomorphism: 1, 2, 5, 16 (the classical table); labelled counts
    # follow from orbit sizes and are then frozen
    iso = [count_models(inverse_semigroups(n, up_to_iso=True)) for n in range(1, 5)]
    assert iso == [1, 2, 5, 16]
    labelled = [count_models(inverse_semigroups(n)) for n in range(1, 5)]
    assert labelled == [_orbit_total(inverse_semigroups(n, up_to_iso=True)) for n in range(1, 5)]
    assert labelled == [1, 4, 24, 272]


def _rm_left_identity_order4_by_array():
    """Every order-4 table with row 0 the identity, checked with numpy."""
    n = 4
    codes = np.arange(4 ** 10, dtype=np.int64)
    low = np.empty((codes.size, 10), dtype=np.int8)
    for i in range(9, -1, -1):
        low[:, i] = codes % 4
        codes //= 4
    rows = np.arange(low.shape[0])
    total = 0
    for a, b in itertools.product(range(n), repeat=2):
        tab = np.empty((low.shape[0], 16), dtype=np.int8)
        tab[:, :4] = np.arange(4)
        tab[:, 4], tab[:, 5] = a, b
        tab[:, 6:] = low
        ok = np.ones(low.shape[0], dtype=bool)
        for x, y, z in itertools.product(range(n), repeat=3):
            lhs = tab[rows, tab[:, x * 4 + y].astype(np.int64) * 4 + z]
            ok &= lhs == tab[rows, tab[:, z * 4 + y].astype(np.int64) * 4 + x]
            if not ok.any():
                break
        total += int(ok.sum())
    return total


@pytest.mark.slow
def test_right_modular_order4_count_by_array():
    assert count_models(rm_left_identity(4)) == _rm_left_identity_order4_by_array() == 112
