"""Exhaustive generation of small models.

Cells of the tables in the signature are filled depth first in lexicographic
order, values ascending, so models come out in lexicographic table order.
After every assignment each clause mentioning the touched op is re-checked
on the cells filled so far and the branch is cut as soon as a violation is
visible.  Left and right cancellativity are enforced as Latin row/column
constraints while filling; other non-clausal properties are checked once a
table is complete.

Equations of the shape ``f(a, b, ...) = c`` whose sides are single
applications over variables and constants (``l*x = x``, ``[x l l] = x``,
``x*x = x``) fix cells before the search starts.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Iterator

import numpy as np

from .clauses import App, Binding, Clause, Const, SYMBOLS, Var, compile_clause, parse_clause
from .errors import AlgebraError, CapExceeded
from .properties import CATALOG, canonical_name, check_property
from .structure import MAX_TERNARY_ORDER, OpTable, Structure, default_names

SIGNATURE_WORDS = {"binary": ("mul", 2), "ternary": ("t", 3), "unary": ("star", 1),
                   "hat": ("hat", 1)}
LATIN = {"left-cancellative": "row", "right-cancellative": "col"}
MAX_CELLS = 4096
IMPLIED = {
    "group": ("associative", "left-cancellative", "right-cancellative"),
    "inverse-semigroup": ("associative",),
}


@dataclass(frozen=True)
class EnumSpec:
    order: int
    signature: tuple = (("mul", 2),)
    constraints: tuple = ()
    up_to_iso: bool = False
    pins: dict = field(default_factory=dict)
    binding: Binding = field(default_factory=Binding)

    def __post_init__(self):
        object.__setattr__(self, "signature", tuple(tuple(s) for s in self.signature))
        object.__setattr__(self, "constraints", tuple(self.constraints))
        object.__setattr__(self, "pins", dict(self.pins))
        if self.order < 1:
            raise AlgebraError("order must be positive")
        for name, arity in self.signature:
            if arity not in (1, 2, 3):
                raise AlgebraError(f"op {name!r}: arity must be 1, 2 or 3")
            if arity == 3 and self.order > MAX_TERNARY_ORDER:
                raise CapExceeded(f"ternary tables are capped at order {MAX_TERNARY_ORDER}")
        if sum(self.order ** a for _, a in self.signature) > MAX_CELLS:
            raise CapExceeded(f"more than {MAX_CELLS} table cells")
        for c, v in self.pins.items():
            if not 0 <= v < self.order:
                raise AlgebraError(f"pin {c}={v} outside 0..{self.order - 1}")


def parse_signature(text: str) -> tuple:
    out = []
    for word in text.split(","):
        word = word.strip()
        if not word:
            continue
        if word in SIGNATURE_WORDS:
            out.append(SIGNATURE_WORDS[word])
        elif ":" in word:
            name, arity = word.split(":")
            out.append((name, int(arity)))
        else:
            raise AlgebraError(f"unknown signature word {word!r}")
    return tuple(out)


class _Plan:
    """Constraints of a spec sorted into propagated clauses, Latin masks and leaf checks."""

    def __init__(self, spec: EnumSpec):
        self.spec = spec
        b = spec.binding
        self.op_index = {name: k for k, (name, _) in enumerate(spec.signature)}
        self.clauses: list[Clause] = []
        self.latin: dict[int, set] = {}
        self.leaf: list[str] = []
        for c in spec.constraints:
            if isinstance(c, Clause):
                self.clauses.append(c)
                continue
            token = c.strip()
            if any(ch in token for ch in "=*[]'^") or " " in token:
                self.clauses.append(parse_clause(token))
                continue
            name = canonical_name(token)
            prop = CATALOG[name]
            if name in LATIN or name == "ward-quasigroup":
                k = self._op_for("mul")
                if name == "ward-quasigroup":
                    self.latin.setdefault(k, set()).update(("row", "col"))
                    self.clauses.extend(prop.parsed)
                else:
                    self.latin.setdefault(k, set()).add(LATIN[name])
            elif prop.builtin is not None:
                for f in prop.needs:
                    self._op_for(f)
                self.leaf.append(name)
                # necessary conditions the search can propagate; the leaf check stays
                for implied in IMPLIED.get(name, ()):
                    if implied in LATIN:
                        self.latin.setdefault(self._op_for("mul"), set()).add(LATIN[implied])
                    else:
                        self.clauses.extend(CATALOG[implied].parsed)
            elif prop.role and "l" not in spec.pins and "l" not in b.consts:
                self.leaf.append(name)
            else:
                self.clauses.extend(prop.parsed)
        self.consts = dict(spec.pins)
        self.consts.update(b.consts)
        for cl in self.clauses:
            for sym in cl.symbols:
                self._op_for(SYMBOLS[sym][0], SYMBOLS[sym][1])
            for c in cl.constants:
                if c not in self.consts:
                    raise AlgebraError(f"constant {c!r} must be pinned")

    def _op_for(self, field_name: str, arity: int | None = None) -> int:
        op = getattr(self.spec.binding, field_name)
        if op not in self.op_index:
            raise AlgebraError(f"constraint needs op {op!r}, which is not in the signature")
        k = self.op_index[op]
        if arity is not None and self.spec.signature[k][1] != arity:
            raise AlgebraError(f"op {op!r} has the wrong arity for its symbol")
        return k

    def clause_ops(self, cl: Clause) -> list[int]:
        return sorted({self._op_for(SYMBOLS[s][0]) for s in cl.symbols})

    def args_for(self, cl: Clause, tables):
        b = self.spec.binding
        out = []
        for field_name in ("mul", "t", "star", "hat"):
            op = getattr(b, field_name)
            out.append(tables[self.op_index[op]] if op in self.op_index else None)
        return out


def _forced_cells(plan: _Plan, n: int):
    """Cells fixed by equations ``f(args) = c`` with variable/constant sides.

    Returns a list of ``(op, index, value)`` or ``None`` on a conflict."""
    out = {}
    for cl in plan.clauses:
        if cl.premises:
            continue
        lhs, rhs = cl.conclusion
        for app, other in ((lhs, rhs), (rhs, lhs)):
            if not isinstance(app, App) or not isinstance(other, (Var, Const)):
                continue
            if not all(isinstance(a, (Var, Const)) for a in app.args):
                continue
            k = plan._op_for(SYMBOLS[app.op][0])
            vs = sorted({a.name for a in app.args if isinstance(a, Var)} |
                        ({other.name} if isinstance(other, Var) else set()))
            for values in product(range(n), repeat=len(vs)):
                env = dict(zip(vs, values))
                idx = 0
                for a in app.args:
                    idx = idx * n + (env[a.name] if isinstance(a, Var) else plan.consts[a.name])
                val = env[other.name] if isinstance(other, Var) else plan.consts[other.name]
                if out.get((k, idx), val) != val:
                    return None
                out[(k, idx)] = val
            break
    return out


def _search(spec: EnumSpec) -> Iterator[tuple]:
    """Yield complete models as tuples of per-op entry tuples (lexicographic order)."""
    n = spec.order
    plan = _Plan(spec)
    sig = spec.signature
    tables = [[-1] * (n ** a) for _, a in sig]
    forced = _forced_cells(plan, n)
    if forced is None:
        return
    for (k, idx), v in forced.items():
        tables[k][idx] = v

    # Latin masks per binary op: rows[k][r], cols[k][c] are bitmasks of used values
    rows = {k: [0] * n for k in plan.latin}
    cols = {k: [0] * n for k in plan.latin}
    for k, modes in plan.latin.items():
        if sig[k][1] != 2:
            raise AlgebraError("cancellativity needs a binary op")
        for idx, v in enumerate(tables[k]):
            if v < 0:
                continue
            r, c = divmod(idx, n)
            bit = 1 << v
            if ("row" in modes and rows[k][r] & bit) or ("col" in modes and cols[k][c] & bit):
                return
            rows[k][r] |= bit
            cols[k][c] |= bit

    consts = plan.consts
    checks_by_op = [[] for _ in sig]
    all_checks = []
    for cl in plan.clauses:
        fn = compile_clause(cl, partial=True)
        args = plan.args_for(cl, tables)
        entry = (fn, args)
        all_checks.append(entry)
        for k in plan.clause_ops(cl):
            checks_by_op[k].append(entry)
    for fn, args in all_checks:
        if fn(*args, consts, n):
            return

    free = [(k, idx) for k in range(len(sig)) for idx in range(n ** sig[k][1])
            if tables[k][idx] < 0]
    latin_of = [plan.latin.get(k, ()) for k in range(len(sig))]
    total = len(free)
    i = 0
    if total == 0:
        yield tuple(tuple(t) for t in tables)
        return
    while i >= 0:
        if i == total:
            yield tuple(tuple(t) for t in tables)
            i -= 1
            continue
        k, idx = free[i]
        tab = tables[k]
        modes = latin_of[k]
        old = tab[idx]
        if modes:
            r, c = divmod(idx, n)
            rk, ck = rows[k], cols[k]
            if old >= 0:
                rk[r] &= ~(1 << old)
                ck[c] &= ~(1 << old)
        v = old + 1
        checks = checks_by_op[k]
        while v < n:
            if modes:
                bit = 1 << v
                if ("row" in modes and rk[r] & bit) or ("col" in modes and ck[c] & bit):
                    v += 1
                    continue
            tab[idx] = v
            ok = True
            for fn, args in checks:
                if fn(*args, consts, n):
                    ok = False
                    break
            if ok:
                break
            v += 1
        if v < n:
            if modes:
                rk[r] |= 1 << v
                ck[c] |= 1 << v
            i += 1
        else:
            tab[idx] = -1
            i -= 1


def _to_structure(spec: EnumSpec, model: tuple, name: str = "M") -> Structure:
    n = spec.order
    ops = {op: OpTable(a, n, entries) for (op, a), entries in zip(spec.signature, model)}
    return Structure(name, default_names(n), ops, dict(spec.pins))


class _Canon:
    """Lex-minimality test under relabellings fixing the pinned indices."""

    def __init__(self, spec: EnumSpec):
        n = spec.order
        fixed = set(spec.pins.values())
        perms = [p for p in permutations(range(n)) if all(p[i] == i for i in fixed)]
        perms = [p for p in perms if list(p) != list(range(n))]
        self.perms = np.asarray(perms, dtype=np.int64).reshape(len(perms), n)
        # for each perm and each op, the source cell feeding each target cell
        self.src = []
        for _, arity in spec.signature:
            cells = np.asarray(list(product(range(n), repeat=arity)), dtype=np.int64).reshape(-1, arity)
            srcs = np.zeros((len(perms), len(cells)), dtype=np.int64)
            for j, p in enumerate(perms):
                inv = np.argsort(p)
                src = np.zeros(len(cells), dtype=np.int64)
                for a in range(arity):
                    src = src * n + inv[cells[:, a]]
                srcs[j] = src
            self.src.append(srcs)

    def is_minimal(self, model) -> bool:
        if len(self.perms) == 0:
            return True
        flat = np.concatenate([np.asarray(t, dtype=np.int64) for t in model])
        parts = []
        for srcs, entries in zip(self.src, model):
            e = np.asarray(entries, dtype=np.int64)
            vals = e[srcs]
            parts.append(np.take_along_axis(self.perms, vals, axis=1))
        images = np.concatenate(parts, axis=1)
        diff = images != flat[None, :]
        has = diff.any(axis=1)
        if not has.any():
            return True
        first = diff.argmax(axis=1)
        rows = np.nonzero(has)[0]
        smaller = images[rows, first[rows]] < flat[first[rows]]
        return not smaller.any()


def enumerate_tables(spec: EnumSpec) -> Iterator[tuple]:
    """Raw stream: tuples of entry tuples, one per op in the signature."""
    plan = _Plan(spec)
    canon = _Canon(spec) if spec.up_to_iso else None
    leaf = plan.leaf
    for model in _search(spec):
        if leaf:
            s = _to_structure(spec, model)
            if not all(check_property(s, p, spec.binding).holds for p in leaf):
                continue
        if canon is not None and not canon.is_minimal(model):
            continue
        yield model


def enumerate_models(spec: EnumSpec, name: str = "M") -> Iterator[Structure]:
    """Stream of satisfying structures in lexicographic table order."""
    for i, model in enumerate(enumerate_tables(spec)):
        yield _to_structure(spec, model, f"{name}{i}")


def count_models(spec: EnumSpec) -> int:
    return sum(1 for _ in enumerate_tables(spec))


def search_space(spec: EnumSpec) -> int:
    return spec.order ** sum(spec.order ** a for _, a in spec.signature)


# -- common specs --------------------------------------------------------------

def groups(order: int, up_to_iso: bool = True) -> EnumSpec:
    """Groups with identity pinned at 0: associative Latin squares with identity."""
    return EnumSpec(order, (("mul", 2),),
                    ("associative", "two-sided-identity", "left-cancellative",
                     "right-cancellative", "group"),
                    up_to_iso=up_to_iso, pins={"l": 0})


def rm_left_identity(order: int, up_to_iso: bool = False) -> EnumSpec:
    return EnumSpec(order, (("mul", 2),), ("right-modular", "left-identity"),
                    up_to_iso=up_to_iso, pins={"l": 0})


def lc_biunital_semiheaps(order: int, up_to_iso: bool = False) -> EnumSpec:
    return EnumSpec(order, (("t", 3),), ("laterally-commutative", "semiheap", "bi-unital"),
                    up_to_iso=up_to_iso, pins={"l": 0})


def heaps(order: int, up_to_iso: bool = False) -> EnumSpec:
    return EnumSpec(order, (("t", 3),), ("heap",), up_to_iso=up_to_iso)


def inverse_semigroups(order: int, up_to_iso: bool = False) -> EnumSpec:
    return EnumSpec(order, (("mul", 2),), ("associative", "inverse-semigroup"),
                    up_to_iso=up_to_iso)


def ag_star(order: int, up_to_iso: bool = False) -> EnumSpec:
    return EnumSpec(order, (("mul", 2),), ("ag-star",), up_to_iso=up_to_iso)
