"""Inverse semigroups, standard ternary operations and Clifford semigroups.

``x -> x^-1`` is found by scanning candidates in index order.  The second
regularity condition of an inverse groupoid can be read two ways when the
product is not associative: ``a^-1 (a a^-1) = a^-1`` (``reading="nested"``,
the classifier's definition) or ``(a^-1 a) a^-1 = a^-1`` (``reading="left"``).
Both agree on semigroups; groupoids determined by an automorphism of a
Clifford semigroup generally only satisfy the second.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product

import numpy as np

from .clauses import Binding, check_clause
from .errors import NotClifford, NotInverse, PostconditionViolated, PreconditionViolated
from .properties import check_property
from .structure import OpTable, Structure


@dataclass(frozen=True)
class InverseCert:
    inv: OpTable
    idempotents: frozenset

    def __post_init__(self):
        object.__setattr__(self, "idempotents", frozenset(self.idempotents))


def _mul(s: Structure, op: str = "mul") -> np.ndarray:
    t = s.op(op)
    if t.arity != 2:
        raise PreconditionViolated(f"op {op!r} is not binary", ["binary"])
    return np.asarray(t.entries, dtype=np.int64).reshape(s.n, s.n)


def inverse_cert(s: Structure, op: str = "mul", reading: str = "nested") -> InverseCert:
    """Unique inverses and the idempotent set; raises :class:`NotInverse`."""
    m = _mul(s, op)
    n = s.n
    inv = []
    for a in range(n):
        found = []
        for b in range(n):
            ab = m[a, b]
            if m[ab, a] != a:
                continue
            second = m[b, ab] if reading == "nested" else m[m[b, a], b]
            if second == b:
                found.append(b)
                if len(found) > 1:
                    break
        if len(found) != 1:
            raise NotInverse(f"{s.names[a]} has {'no' if not found else 'at least two'} inverses",
                             element=a, count=len(found))
        inv.append(found[0])
    idem = frozenset(x for x in range(n) if m[x, x] == x)
    return InverseCert(OpTable(1, n, tuple(inv)), idem)


def is_inverse_semigroup(s: Structure, op: str = "mul") -> bool:
    return check_property(s, "inverse-semigroup", Binding(mul=op)).holds


def standard_ternary(s: Structure, cert: InverseCert | None = None, op: str = "mul",
                     reading: str = "nested") -> OpTable:
    """``{abc} = (a b^-1) c``.  Only an inverse groupoid is required."""
    if cert is None:
        cert = inverse_cert(s, op, reading)
    m = _mul(s, op)
    inv = np.asarray(cert.inv.entries, dtype=np.int64)
    for a in range(s.n):
        b = inv[a]
        if m[m[a, b], a] != a:
            raise PreconditionViolated(f"certificate is not valid at {s.names[a]}", ["inverse"])
    t = m[m[:, inv]]
    return OpTable(3, s.n, tuple(t.ravel().tolist()))


def inverse_triple(s: Structure, op: str = "mul") -> Structure:
    """``i(S)``: standard ternary ``t``, inversion ``star`` and ``hat: x -> x^-1 x``."""
    if not is_inverse_semigroup(s, op):
        raise PreconditionViolated(f"{s.name}: not an inverse semigroup", ["inverse-semigroup"])
    cert = inverse_cert(s, op)
    m = _mul(s, op)
    inv = np.asarray(cert.inv.entries)
    hat = [int(m[inv[x], x]) for x in range(s.n)]
    return Structure(s.name + "-i", s.names, {
        "t": standard_ternary(s, cert, op),
        "star": cert.inv,
        "hat": OpTable(1, s.n, tuple(hat)),
    })


GH_INVERSE_AXIOMS = {
    "prime-involutive": "x'' = x",
    "hat-idempotent": "x^^ = x^",
    "89.1": "[x x^ y] = [x y' y^]",
    "89.2": "[x^ x^ x'] = x'",
    "89.3": "[x' x' x^] = x^",
}


def gh_inverse_failures(s: Structure, prime: str = "star", hat: str = "hat", t: str = "t") -> list[str]:
    """Names of the failed hypotheses for recovering an inverse semigroup."""
    b = Binding(t=t, star=prime, hat=hat)
    failed = [] if check_property(s, "generalised-heap", b).holds else ["generalised-heap"]
    failed += [k for k, c in GH_INVERSE_AXIOMS.items() if not check_clause(s, c, b).holds]
    return failed


def gh_to_inverse_semigroup(s: Structure, prime: str = "star", hat: str = "hat",
                            t: str = "t", check: bool = True) -> Structure:
    """``g``: ``x y = [x x^ y]`` for a generalised heap with suitable ``'`` and ``^``."""
    failed = gh_inverse_failures(s, prime, hat, t)
    if failed:
        raise PreconditionViolated(f"{s.name}: " + ", ".join(failed) + " fails", failed)
    tt = np.asarray(s.op(t).entries).reshape(s.n, s.n, s.n)
    h = np.asarray(s.op(hat).entries)
    idx = np.arange(s.n)
    mul = tt[idx[:, None], h[:, None], idx[None, :]]
    out = Structure(s.name + "-g", s.names, {"mul": OpTable(2, s.n, tuple(mul.ravel().tolist()))})
    if check:
        if not is_inverse_semigroup(out):
            raise PostconditionViolated("g: result is not an inverse semigroup")
        cert = inverse_cert(out)
        if standard_ternary(out, cert) != s.op(t) or cert.inv != s.op(prime):
            raise PostconditionViolated("g: standard ternary or inversion does not return")
    return out


NATURAL_INVERSE_AXIOMS = {
    "prime-involutive": "x'' = x",
    "hat-idempotent": "x^^ = x^",
    "92.1a": "x = [x x' x]",
    "92.1b": "x = [x x^ x^]",
    "92.2": "[x x^ y] = [x y y^]",
    "92.3": "x' = [x^ x^ x']",
    "92.4a": "x^ = [x' x x^]",
    "92.4b": "x^ = [x^ x' x]",
    "92.5": "[[x x^ x'] [y' y y^] [y' y y^]^] = [[y' y y^] [x x^ x'] [x x^ x']^]",
    "92.6": "[x y z] = [[x x^ y] z z^]",
}


def natural_inverse_failures(s: Structure, prime: str = "star", hat: str = "hat",
                             t: str = "t") -> list[str]:
    b = Binding(t=t, star=prime, hat=hat)
    failed = [] if check_property(s, "ternary-associative", b).holds else ["ternary-associative"]
    failed += [k for k, c in NATURAL_INVERSE_AXIOMS.items() if not check_clause(s, c, b).holds]
    return failed


def natural_ternary_inverse_check(s: Structure, prime: str = "star", hat: str = "hat",
                                  t: str = "t", check: bool = True) -> Structure:
    """Inverse semigroup ``x y = [x x^ y]`` whose natural ternary is ``t``."""
    failed = natural_inverse_failures(s, prime, hat, t)
    if failed:
        raise PreconditionViolated(f"{s.name}: " + ", ".join(failed) + " fails", failed)
    tt = np.asarray(s.op(t).entries).reshape(s.n, s.n, s.n)
    h = np.asarray(s.op(hat).entries)
    idx = np.arange(s.n)
    mul = tt[idx[:, None], h[:, None], idx[None, :]]
    out = Structure(s.name + "-g", s.names, {"mul": OpTable(2, s.n, tuple(mul.ravel().tolist()))})
    if check:
        if not is_inverse_semigroup(out):
            raise PostconditionViolated("result is not an inverse semigroup")
        if tuple(mul[mul].ravel().tolist()) != s.op(t).entries:
            raise PostconditionViolated("natural ternary does not return")
    return out


def involutions(n: int):
    """All unary tables ``u`` with ``u(u(x)) = x``."""
    for u in permutations(range(n)):
        if all(u[u[x]] == x for x in range(n)):
            yield u


def idempotent_maps(n: int):
    """All unary tables ``u`` with ``u(u(x)) = u(x)``."""
    for u in product(range(n), repeat=n):
        if all(u[u[x]] == u[x] for x in range(n)):
            yield u


def admissible_pairs(s: Structure, t: str = "t", natural: bool = False):
    """Every (prime, hat) making ``s`` satisfy the recovery hypotheses."""
    out = []
    for p in involutions(s.n):
        for h in idempotent_maps(s.n):
            trial = s.with_op("star", OpTable(1, s.n, p)).with_op("hat", OpTable(1, s.n, h))
            fails = (natural_inverse_failures if natural else gh_inverse_failures)(trial, t=t)
            if not fails:
                out.append((p, h))
    return out


# -- Clifford semigroups -------------------------------------------------------

@dataclass(frozen=True)
class CliffordDecomposition:
    component_of: tuple[int, ...]
    components: dict

    @property
    def identities(self) -> list[int]:
        return sorted(self.components)


def clifford_decompose(s: Structure, op: str = "mul") -> CliffordDecomposition:
    """Split a semilattice of groups into its groups, keyed by their identities."""
    if not check_property(s, "associative", Binding(mul=op)).holds:
        raise PreconditionViolated(f"{s.name}: not associative", ["associative"])
    m = _mul(s, op)
    try:
        cert = inverse_cert(s, op)
    except NotInverse as exc:
        raise NotClifford(f"{s.name}: {exc}") from None
    n = s.n
    for e in cert.idempotents:
        for a in range(n):
            if m[e, a] != m[a, e]:
                raise NotClifford(f"{s.name}: idempotent {s.names[e]} is not central "
                                  f"({s.names[e]}*{s.names[a]} != {s.names[a]}*{s.names[e]})")
    inv = cert.inv.entries
    comp = tuple(int(m[inv[a], a]) for a in range(n))
    groups: dict[int, list[int]] = {}
    for a in range(n):
        if m[a, inv[a]] != comp[a]:
            raise NotClifford(f"{s.name}: a a^-1 != a^-1 a at {s.names[a]}")
        groups.setdefault(comp[a], []).append(a)
    tables = {}
    for e, elems in groups.items():
        pos = {a: i for i, a in enumerate(elems)}
        rows = [[pos[int(m[a, b])] for b in elems] for a in elems]
        tables[e] = (tuple(elems), OpTable.from_rows(rows))
    for a in range(n):
        for b in range(n):
            if comp[m[a, b]] != m[comp[a], comp[b]]:
                raise PostconditionViolated("component map is not a homomorphism")
    return CliffordDecomposition(comp, tables)


def is_clifford(s: Structure, op: str = "mul") -> bool:
    try:
        clifford_decompose(s, op)
    except (NotClifford, PreconditionViolated):
        return False
    return True


def admissible_automorphisms(s: Structure, op: str = "mul") -> list[tuple[int, ...]]:
    """Involutive automorphisms fixing every idempotent, in lexicographic order."""
    m = _mul(s, op)
    n = s.n
    idem = [x for x in range(n) if m[x, x] == x]
    out = []
    for a in permutations(range(n)):
        if any(a[e] != e for e in idem) or any(a[a[x]] != x for x in range(n)):
            continue
        arr = np.asarray(a)
        if (arr[m] == m[arr[:, None], arr[None, :]]).all():
            out.append(a)
    return out


def alpha_failures(s: Structure, alpha, op: str = "mul") -> list[str]:
    m = _mul(s, op)
    n = s.n
    a = np.asarray(alpha)
    failed = []
    if not is_clifford(s, op):
        failed.append("clifford")
    if sorted(a.tolist()) != list(range(n)):
        failed.append("bijective")
    if any(a[a[x]] != x for x in range(n)):
        failed.append("involutive")
    if any(a[e] != e for e in range(n) if m[e, e] == e):
        failed.append("idempotent-fixed")
    if not (a[m] == m[a[:, None], a[None, :]]).all():
        failed.append("automorphism")
    return failed


def alpha_determined(s: Structure, alpha, op: str = "mul", check: bool = True) -> Structure:
    """``x y = alpha(x) * y`` on a Clifford semigroup; ``alpha`` stored as op ``alpha``."""
    alpha = tuple(alpha.entries) if isinstance(alpha, OpTable) else tuple(alpha)
    failed = alpha_failures(s, alpha, op)
    if failed:
        raise PreconditionViolated(f"{s.name}: alpha " + ", ".join(failed) + " fails", failed)
    m = _mul(s, op)
    mul = m[np.asarray(alpha)]
    out = Structure(s.name + "-alpha", s.names, {
        "mul": OpTable(2, s.n, tuple(mul.ravel().tolist())),
        "alpha": OpTable(1, s.n, alpha),
    })
    if check:
        expected = clifford_standard_ternary(s, op)
        if standard_ternary(out, reading="left") != expected:
            raise PostconditionViolated("S(alpha): standard ternary differs from a*b^-1*c")
    return out


def clifford_standard_ternary(s: Structure, op: str = "mul") -> OpTable:
    """``a * b^-1 * c`` in the underlying semigroup."""
    return standard_ternary(s, inverse_cert(s, op), op)


def brandt5() -> Structure:
    """The five-element Brandt semigroup ``B2``."""
    names = ("0", "e11", "e12", "e21", "e22")
    pairs = {1: (1, 1), 2: (1, 2), 3: (2, 1), 4: (2, 2)}

    def mul(a, b):
        if a == 0 or b == 0:
            return 0
        i, j = pairs[a]
        k, l = pairs[b]
        if j != k:
            return 0
        return {v: key for key, v in pairs.items()}[(i, l)]

    return Structure("B2", names, {"mul": OpTable.from_function(5, 2, mul)})


def group_with_zero(g: Structure, name: str | None = None) -> Structure:
    """Adjoin a zero below the group ``g`` (a two-component Clifford semigroup)."""
    n = g.n
    m = _mul(g)

    def mul(a, b):
        if a == 0 or b == 0:
            return 0
        return int(m[a - 1, b - 1]) + 1

    names = ("z",) + tuple(g.names) if "z" not in g.names else ("0z",) + tuple(g.names)
    return Structure(name or g.name + "0", names, {"mul": OpTable.from_function(n + 1, 2, mul)})
