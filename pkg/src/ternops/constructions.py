"""Structures built from other structures.

Ternary operations from groupoids (natural, starred, argument-permuted),
groupoids recovered from ternary operations, and the maps between groups,
heaps, Ward quasigroups and natural ternary products of Ward quasigroups.

Every construction that advertises a class of output re-checks it before
returning when ``check`` is true (the default); a failure there raises
:class:`PostconditionViolated` and means a bug, not bad input.
"""

from __future__ import annotations

from itertools import permutations

import numpy as np

from .clauses import Binding, check_clause
from .errors import (
    AlgebraError,
    MissingBinding,
    NoUniqueIdempotent,
    PostconditionViolated,
    PreconditionViolated,
)
from .properties import check_property
from .structure import OpTable, Structure, default_names

PERMUTATIONS3 = tuple(permutations((1, 2, 3)))


def _table(s: Structure, op: str, arity: int) -> np.ndarray:
    if op not in s.ops:
        raise MissingBinding(f"{s.name!r} has no op {op!r}")
    t = s.ops[op]
    if t.arity != arity:
        raise MissingBinding(f"op {op!r} of {s.name!r} has arity {t.arity}, expected {arity}")
    return np.asarray(t.entries, dtype=np.int64).reshape((s.n,) * arity)


def _op(arr: np.ndarray) -> OpTable:
    return OpTable(arr.ndim, arr.shape[0], tuple(arr.ravel().tolist()))


def _binary(s: Structure, table: np.ndarray, name: str, op: str = "mul", **consts) -> Structure:
    return Structure(name, s.names, {op: _op(table)}, consts)


def _ternary(s: Structure, table: np.ndarray, name: str, op: str = "t", **consts) -> Structure:
    return Structure(name, s.names, {op: _op(table)}, consts)


def _demand(s: Structure, checks, binding: Binding | None = None):
    failed = [p for p in checks if not check_property(s, p, binding).holds]
    if failed:
        raise PreconditionViolated(f"{s.name}: " + ", ".join(failed) + " fails", failed)


def _ensure(s: Structure, checks, what: str, binding: Binding | None = None):
    for p in checks:
        if not check_property(s, p, binding).holds:
            raise PostconditionViolated(f"{what}: output fails {p}")


# -- ternary operations from groupoids -----------------------------------------

def natural_ternary(s: Structure, op: str = "mul") -> OpTable:
    """``[abc] = (a*b)*c``."""
    m = _table(s, op, 2)
    return _op(m[m])


def star_ternary(s: Structure, unary: str, op: str = "mul") -> OpTable:
    """``[abc] = (a*u(b))*c`` for the unary table ``unary``."""
    m = _table(s, op, 2)
    u = _table(s, unary, 1)
    return _op(m[m[:, u]])


def pi_ternary(t: OpTable, perm) -> OpTable:
    """``[x1 x2 x3]_P = [x_P(1) x_P(2) x_P(3)]`` with ``perm`` given 1-based."""
    if sorted(perm) != [1, 2, 3]:
        raise AlgebraError(f"{perm!r} is not a permutation of 1, 2, 3")
    n = t.n
    arr = np.asarray(t.entries, dtype=np.int64).reshape(n, n, n)
    # out[x1,x2,x3] = arr[x_p1, x_p2, x_p3]: arr transposed so that its axis k
    # is indexed by the output axis perm[k]-1
    inv = [0, 0, 0]
    for k, p in enumerate(perm):
        inv[p - 1] = k
    return _op(np.ascontiguousarray(arr.transpose(inv)))


def dual_groupoid(s: Structure, op: str = "mul") -> Structure:
    """``x (x) y = y * x``; other ops are dropped, constants kept."""
    m = _table(s, op, 2)
    return Structure(s.name + "-dual", s.names, {op: _op(m.T.copy())}, dict(s.consts))


def with_natural_ternary(s: Structure, op: str = "mul", into: str = "t") -> Structure:
    return s.with_op(into, natural_ternary(s, op))


def example1_pair(n: int) -> tuple[Structure, Structure]:
    """Left-zero semigroup on ``n`` points and the variant with rows 0 and 1
    made constant at the other one; their natural ternaries coincide."""
    if n < 2:
        raise AlgebraError("the pair needs at least two elements")
    names = tuple(f"x{i + 1}" for i in range(n))
    left = [[a] * n for a in range(n)]
    bullet = [[1] * n, [0] * n] + [[a] * n for a in range(2, n)]
    return (Structure("left-zero", names, {"mul": OpTable.from_rows(left)}),
            Structure("left-zero-swapped", names, {"mul": OpTable.from_rows(bullet)}))


# -- groupoids from ternary operations -----------------------------------------

def gamma_from_semiheap(s: Structure, l: int, t: str = "t", check: bool = True) -> Structure:
    """``a*b = [l a b]`` for a laterally commutative semiheap bi-unital at ``l``."""
    b = Binding(t=t, consts={"l": l})
    _demand(s, ("laterally-commutative", "semiheap", "bi-unital"), b)
    arr = _table(s, t, 3)
    out = _binary(s, arr[l].copy(), s.name + "-gamma", l=l)
    if check:
        _ensure(out, ("right-modular", "left-identity"), "gamma-from-semiheap", Binding(consts={"l": l}))
        if natural_ternary(out) != s.ops[t]:
            raise PostconditionViolated("gamma-from-semiheap: natural ternary does not return")
    return out


SCHEMES = {
    "lateral-unital": ("laterally-commutative", "left-commutative", "unit", "semiheap"),
    "star-unital": ("unit", "left-commutative", "left-l-consistent", "central-commutant"),
    "star-bi-unital": ("bi-unital", "left-l-consistent", "central-commutant"),
    "dual": ("right-commutative",),
}
SCHEME_ALIASES = {"thm65": "lateral-unital", "thm66": "star-unital",
                  "thm67": "star-bi-unital", "thm68": "dual"}

_SCHEME_CLAUSES = {
    "lateral-unital": ("x^^ = x", "[x y^ l]^ = [x^ y l]"),
    "star-unital": ("x^^ = x", "l^ = l", "[x y z]^ = [x^ y^ z^]"),
    "star-bi-unital": ("[x y z]^ = [x^ y^ z^]", "[l x l] = x^"),
    "dual": ("[x l l] = x", "[x [y z q] w] = [z w [y x q]]", "[[x y z] q w] = [[x y q] w z]"),
}


def reconstruct(s: Structure, scheme: str, l: int, hat: str | None = None,
                t: str = "t", check: bool = True) -> Structure:
    """Recover a groupoid from a ternary operation.

    ``lateral-unital``: ``a*b = [b a^ l]`` (result right modular, left identity
    ``l``, starred ternary with ``x' = x*l`` equals the input).
    ``star-unital``: ``x*y = [y l x^]`` (result star-unary with ``' = ^``).
    ``star-bi-unital``: ``x*y = [l x y]`` (natural ternary equals the input).
    ``dual``: returns the dual of ``x*y = [y x l]``, i.e. ``x*y = [x y l]``,
    whose natural ternary equals the input.
    """
    scheme = SCHEME_ALIASES.get(scheme, scheme)
    if scheme not in SCHEMES:
        raise AlgebraError(f"unknown scheme {scheme!r}")
    n = s.n
    if scheme != "dual" and scheme != "star-bi-unital" and hat is None:
        raise MissingBinding(f"scheme {scheme} needs a unary op (hat)")
    if scheme == "star-bi-unital" and hat is None:
        # the hat is forced: x^ = [l x l]
        arr = _table(s, t, 3)
        s = s.with_op("hat", _op(arr[l, :, l].copy()))
        hat = "hat"
    b = Binding(t=t, hat=hat or "hat", consts={"l": l})
    failed = [p for p in SCHEMES[scheme] if not check_property(s, p, b).holds]
    failed += [c for c in _SCHEME_CLAUSES[scheme] if not check_clause(s, c, b).holds]
    if failed:
        raise PreconditionViolated(f"{s.name}: " + ", ".join(failed) + " fails", failed)
    arr = _table(s, t, 3)
    idx = np.arange(n)
    if scheme == "lateral-unital":
        h = _table(s, hat, 1)
        mul = arr[idx[None, :], h[:, None], l]          # mul[a,b] = [b a^ l]
    elif scheme == "star-unital":
        h = _table(s, hat, 1)
        mul = arr[idx[None, :], l, h[:, None]]          # mul[x,y] = [y l x^]
    elif scheme == "star-bi-unital":
        mul = arr[l].copy()
    else:
        mul = arr[:, :, l].copy()                       # x*y = [x y l]
    out = Structure(s.name + "-" + scheme, s.names, {"mul": _op(mul)}, {"l": l})
    if hat is not None and scheme != "dual":
        out = out.with_op("star", s.ops[hat])
    if check:
        _check_reconstruction(s, out, scheme, l, t)
    return out


def _check_reconstruction(src: Structure, out: Structure, scheme: str, l: int, t: str):
    what = f"reconstruct {scheme}"
    b = Binding(consts={"l": l})
    if scheme == "lateral-unital":
        _ensure(out, ("right-modular", "left-identity"), what, b)
        m = _table(out, "mul", 2)
        prime = out.with_op("p", _op(m[:, l].copy()))
        if star_ternary(prime, "p") != src.ops[t]:
            raise PostconditionViolated(what + ": starred ternary does not return")
    elif scheme == "star-unital":
        _ensure(out, ("star-unary", "left-identity"), what, b)
        if star_ternary(out, "star") != src.ops[t]:
            raise PostconditionViolated(what + ": starred ternary does not return")
    elif scheme == "star-bi-unital":
        _ensure(out, ("star-unary", "left-identity"), what, b)
        if natural_ternary(out) != src.ops[t]:
            raise PostconditionViolated(what + ": natural ternary does not return")
    else:
        d = dual_groupoid(out)
        _ensure(d, ("right-modular", "left-identity"), what, b)
        if natural_ternary(out) != src.ops[t]:
            raise PostconditionViolated(what + ": natural ternary does not return")


# -- groups, heaps and Ward quasigroups ----------------------------------------

def group_identity(s: Structure, op: str = "mul") -> int:
    m = _table(s, op, 2)
    idx = np.arange(s.n)
    for e in range(s.n):
        if (m[e] == idx).all() and (m[:, e] == idx).all():
            return e
    raise PreconditionViolated(f"{s.name}: no two-sided identity", ["group"])


def group_inverse(s: Structure, op: str = "mul") -> np.ndarray:
    """Inverse table by row scan once the identity is located."""
    m = _table(s, op, 2)
    e = group_identity(s, op)
    inv = np.empty(s.n, dtype=np.int64)
    for a in range(s.n):
        hits = np.nonzero(m[a] == e)[0]
        if len(hits) == 0 or m[hits[0], a] != e:
            raise PreconditionViolated(f"{s.name}: {s.names[a]} has no inverse", ["group"])
        inv[a] = hits[0]
    return inv


def ward_idempotent(s: Structure, op: str = "mul") -> int:
    """The unique idempotent of a Ward quasigroup."""
    m = _table(s, op, 2)
    idem = [x for x in range(s.n) if m[x, x] == x]
    if len(idem) != 1:
        raise NoUniqueIdempotent(f"{s.name}: {len(idem)} idempotents", ["unique-idempotent"])
    return idem[0]


def _require_group(s):
    _demand(s, ("group",))


def _require_heap(s):
    _demand(s, ("heap",))


def _require_ward(s):
    _demand(s, ("ward-quasigroup",))


def psi(g: Structure, check: bool = True) -> Structure:
    """Heap of a group: ``{xyz} = x y^-1 z``."""
    _require_group(g)
    m = _table(g, "mul", 2)
    inv = group_inverse(g)
    out = _ternary(g, m[m[:, inv]], g.name + "-psi")
    if check:
        _ensure(out, ("heap",), "psi")
    return out


def omega(h: Structure, e: int = 0, check: bool = True) -> Structure:
    """Group of a heap at ``e``: ``x o y = [x e y]``."""
    _require_heap(h)
    t = _table(h, "t", 3)
    out = _binary(h, t[:, e, :].copy(), h.name + "-omega")
    if check:
        _ensure(out, ("group",), "omega")
        if group_identity(out) != e:
            raise PostconditionViolated("omega: identity is not e")
    return out


def pi_map(h: Structure, e: int = 0, check: bool = True) -> Structure:
    """Ward quasigroup of a heap at ``e``: ``x o y = [x y e]``."""
    _require_heap(h)
    t = _table(h, "t", 3)
    out = _binary(h, t[:, :, e].copy(), h.name + "-pi")
    if check:
        _ensure(out, ("ward-quasigroup",), "pi-map")
    return out


def lambda_map(w: Structure, check: bool = True) -> Structure:
    """Heap of a Ward quasigroup: ``{xyz} = (x y)(e z)`` with ``e`` its idempotent."""
    _require_ward(w)
    e = ward_idempotent(w)
    m = _table(w, "mul", 2)
    out = _ternary(w, m[m[:, :, None], m[e][None, None, :]], w.name + "-lambda")
    if check:
        _ensure(out, ("heap",), "lambda")
    return out


def gamma_wq(w: Structure, check: bool = True) -> Structure:
    """Group of a Ward quasigroup: ``x o y = x (e y)``."""
    _require_ward(w)
    e = ward_idempotent(w)
    m = _table(w, "mul", 2)
    out = _binary(w, m[:, m[e]], w.name + "-gamma")
    if check:
        _ensure(out, ("group",), "gamma-wq")
    return out


def phi_g(g: Structure, check: bool = True) -> Structure:
    """Ward quasigroup of a group: ``x * y = x y^-1``."""
    _require_group(g)
    m = _table(g, "mul", 2)
    out = _binary(g, m[:, group_inverse(g)], g.name + "-phi")
    if check:
        _ensure(out, ("ward-quasigroup",), "phi-g")
    return out


def theta(g: Structure, check: bool = True) -> Structure:
    """Ternary of a group: ``[xyz] = z^-1 (y^-1 x)``."""
    _require_group(g)
    m = _table(g, "mul", 2)
    inv = group_inverse(g)
    n = g.n
    x, y, z = np.ix_(range(n), range(n), range(n))
    out = _ternary(g, m[inv[z], m[inv[y], x]], g.name + "-theta")
    if check and not nwq_conditions(out, group_identity(g)).ok:
        raise PostconditionViolated("theta: output is not a Ward natural ternary")
    return out


class NWQReport:
    """Which of the four Ward-natural-ternary conditions hold at ``e``."""

    LABELS = ("xxe", "para", "right-cancel", "left-cancel")

    def __init__(self, e, results):
        self.e = e
        self.results = dict(zip(self.LABELS, results))

    @property
    def ok(self) -> bool:
        return all(self.results.values())

    @property
    def failed(self) -> list[str]:
        return [k for k, v in self.results.items() if not v]


def nwq_conditions(s: Structure, e: int, t: str = "t") -> NWQReport:
    """``[xxe] = e``; ``[xyz] = [[xye]ze] = [x[z[eye]e]e]``; and ``[x y e]``
    cancellative in each free argument."""
    arr = _table(s, t, 3)
    n = s.n
    c1 = bool((arr[np.arange(n), np.arange(n), e] == e).all())
    xye = arr[:, :, e]
    x, y, z = np.ix_(range(n), range(n), range(n))
    eye = arr[e, :, e]
    c2 = bool((arr == arr[xye[x, y], z, e]).all()) and \
        bool((arr == arr[x, arr[z, eye[y], e], e]).all())
    c3 = all(len(set(row)) == n for row in xye.tolist())
    c4 = all(len(set(col)) == n for col in xye.T.tolist())
    return NWQReport(e, (c1, c2, c3, c4))


def nwq_units(s: Structure, t: str = "t") -> list[int]:
    """Every ``e`` at which the Ward-natural-ternary conditions hold."""
    return [e for e in range(s.n) if nwq_conditions(s, e, t).ok]


def _nwq_e(s: Structure, e: int | None) -> int:
    if e is None:
        units = nwq_units(s)
        if not units:
            raise PreconditionViolated(f"{s.name}: not the natural ternary of a Ward quasigroup",
                                       ["ward-natural-ternary"])
        return units[0]
    rep = nwq_conditions(s, e)
    if not rep.ok:
        raise PreconditionViolated(f"{s.name}: conditions fail at e: " + ", ".join(rep.failed),
                                   rep.failed)
    return e


def sigma(s: Structure, e: int | None = None, check: bool = True) -> Structure:
    """Group from a Ward natural ternary: ``x o y = [y [e x e] e]``.

    ``e`` defaults to the smallest element satisfying the conditions; the
    conditions need not single out one element, so pass ``e`` to pin it.
    """
    e = _nwq_e(s, e)
    arr = _table(s, "t", 3)
    exe = arr[e, :, e]
    n = s.n
    x, y = np.ix_(range(n), range(n))
    out = _binary(s, arr[y, exe[x], e], s.name + "-sigma")
    if check:
        _ensure(out, ("group",), "sigma")
    return out


def alpha_map(s: Structure, e: int | None = None, check: bool = True) -> Structure:
    """Heap from a Ward natural ternary: ``[[x y e][e z e] e]``."""
    e = _nwq_e(s, e)
    arr = _table(s, "t", 3)
    x, y, z = np.ix_(range(s.n), range(s.n), range(s.n))
    out = _ternary(s, arr[arr[x, y, e], arr[e, z, e], e], s.name + "-alpha")
    if check:
        _ensure(out, ("heap",), "alpha-map")
    return out


def beta_map(h: Structure, k: int = 0, check: bool = True) -> Structure:
    """Ward natural ternary from a heap at ``k``: ``[[x y k] z k]``."""
    _require_heap(h)
    arr = _table(h, "t", 3)
    x, y, z = np.ix_(range(h.n), range(h.n), range(h.n))
    out = _ternary(h, arr[arr[x, y, k], z, k], h.name + "-beta")
    if check and not nwq_conditions(out, k).ok:
        raise PostconditionViolated("beta-map: output is not a Ward natural ternary")
    return out


def cyclic_group(n: int, name: str | None = None) -> Structure:
    return Structure(name or f"Z{n}", default_names(n),
                     {"mul": OpTable.from_function(n, 2, lambda a, b: (a + b) % n)})


def delta_left(h: Structure, e: int, f: int) -> list[int]:
    """``x -> [f e x]``, the isomorphism between the groups at ``e`` and ``f``."""
    arr = _table(h, "t", 3)
    return arr[f, e, :].tolist()


def delta_right(h: Structure, e: int, f: int) -> list[int]:
    """``x -> [x e f]``, the isomorphism between the Ward quasigroups at ``e`` and ``f``."""
    arr = _table(h, "t", 3)
    return arr[:, e, f].tolist()


def parse_perm(text: str) -> tuple[int, int, int]:
    digits = [int(c) for c in text if c.isdigit()]
    if sorted(digits) != [1, 2, 3]:
        raise AlgebraError(f"{text!r} is not a permutation of 1, 2, 3")
    return tuple(digits)


__all__ = [
    "PERMUTATIONS3", "natural_ternary", "star_ternary", "pi_ternary", "dual_groupoid",
    "with_natural_ternary", "example1_pair", "gamma_from_semiheap", "reconstruct",
    "group_identity", "group_inverse", "ward_idempotent", "psi", "omega", "pi_map",
    "lambda_map", "gamma_wq", "phi_g", "theta", "sigma", "alpha_map", "beta_map",
    "nwq_conditions", "nwq_units", "cyclic_group", "delta_left", "delta_right",
    "parse_perm",
]
