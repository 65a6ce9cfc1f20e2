"""Filter-everything reference for the enumerator.

Every table assignment in the search space is materialised as a row of a
numpy array and each constraint is evaluated on all rows at once by walking
the clause syntax tree.  Deliberately shares nothing with the compiled
checker or the depth-first search.
"""

from __future__ import annotations

from itertools import product

import numpy as np

from .clauses import Clause, Const, SYMBOLS, Var, parse_clause
from .enumeration import EnumSpec, LATIN, search_space
from .errors import CapExceeded
from .iso import canonical_form
from .properties import CATALOG, canonical_name, check_property
from .structure import OpTable, Structure, default_names

LIMIT = 10 ** 7


def all_tables(spec: EnumSpec) -> list[np.ndarray]:
    """One ``(N, n**arity)`` array per op; row ``i`` is the ``i``-th model in lexicographic order."""
    n = spec.order
    total = search_space(spec)
    if total > LIMIT:
        raise CapExceeded(f"search space {total} exceeds {LIMIT}")
    cells = sum(n ** a for _, a in spec.signature)
    codes = np.arange(total, dtype=np.int64)
    digits = np.empty((total, cells), dtype=np.int64)
    for c in range(cells - 1, -1, -1):
        digits[:, c] = codes % n
        codes //= n
    out = []
    pos = 0
    for _, a in spec.signature:
        out.append(digits[:, pos:pos + n ** a])
        pos += n ** a
    return out


def _eval(term, env, arrays, n, rows):
    if isinstance(term, Var):
        return env[term.name]
    if isinstance(term, Const):
        return env["#" + term.name]
    args = [_eval(a, env, arrays, n, rows) for a in term.args]
    idx = 0
    for a in args:
        idx = idx * n + a
    table = arrays[term.op]
    if np.isscalar(idx):
        return table[:, idx]
    return table[rows, idx]


def clause_mask(clause: Clause, arrays: dict, n: int, consts: dict) -> np.ndarray:
    """Boolean mask of the rows on which ``clause`` holds."""
    size = next(iter(arrays.values())).shape[0]
    rows = np.arange(size)
    ok = np.ones(size, dtype=bool)
    env = {"#" + k: v for k, v in consts.items()}
    for values in product(range(n), repeat=len(clause.variables)):
        env.update(zip(clause.variables, values))
        prem = np.ones(size, dtype=bool)
        for lhs, rhs in clause.premises:
            prem &= np.asarray(_eval(lhs, env, arrays, n, rows) == _eval(rhs, env, arrays, n, rows))
        lhs, rhs = clause.conclusion
        concl = np.asarray(_eval(lhs, env, arrays, n, rows) == _eval(rhs, env, arrays, n, rows))
        ok &= ~prem | concl
    return ok


def naive_models(spec: EnumSpec) -> list[tuple]:
    """All models of ``spec`` as tuples of entry tuples, in lexicographic order."""
    n = spec.order
    tables = all_tables(spec)
    by_name = {name: t for (name, _), t in zip(spec.signature, tables)}
    b = spec.binding
    arrays = {}
    for sym, (field_name, _) in SYMBOLS.items():
        op = getattr(b, field_name)
        if op in by_name:
            arrays[sym] = by_name[op]
    consts = dict(spec.pins)
    consts.update(b.consts)
    size = tables[0].shape[0]
    mask = np.ones(size, dtype=bool)
    leaf = []
    for c in spec.constraints:
        if isinstance(c, Clause) or any(ch in c for ch in "=*[]'^") or " " in c.strip():
            cl = c if isinstance(c, Clause) else parse_clause(c)
            mask &= clause_mask(cl, arrays, n, consts)
            continue
        name = canonical_name(c.strip())
        prop = CATALOG[name]
        if prop.builtin is not None:
            leaf.append(name)
        elif prop.role and "l" not in consts:
            some = np.zeros(size, dtype=bool)
            for l in range(n):
                m = np.ones(size, dtype=bool)
                for cl in prop.parsed:
                    m &= clause_mask(cl, arrays, n, {**consts, "l": l})
                some |= m
            mask &= some
        else:
            for cl in prop.parsed:
                mask &= clause_mask(cl, arrays, n, consts)
    out = []
    for i in np.nonzero(mask)[0]:
        model = tuple(tuple(int(v) for v in t[i]) for t in tables)
        if leaf:
            s = Structure("M", default_names(n),
                          {op: OpTable(a, n, e) for (op, a), e in zip(spec.signature, model)},
                          dict(spec.pins))
            if not all(check_property(s, p, b).holds for p in leaf):
                continue
        out.append(model)
    if spec.up_to_iso:
        fixed = sorted(set(spec.pins.values()))
        kept = []
        for model in out:
            tabs = [(a, e) for (_, a), e in zip(spec.signature, model)]
            flat = tuple(v for e in model for v in e)
            if canonical_form(n, tabs, fixed) == flat:
                kept.append(model)
        out = kept
    return out


__all__ = ["all_tables", "clause_mask", "naive_models", "LATIN"]
