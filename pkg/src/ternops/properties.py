"""Named classes of groupoids and ternary operations, and element roles.

Most catalog entries reduce to clauses over the conventional symbols (``*``
binary, ``[...]`` ternary, ``'`` and ``^`` unary).  Entries needing
quantifier shapes the clause language does not have (global idempotence,
weak reductivity, solvability, unique inverses) are checked directly.

Role properties (``left-identity``, ``bi-unital``, ``lateral-unit`` ...) are
stated at an element ``l``.  If ``l`` is pinned, through the binding or as a
constant of the structure, the property is checked there; otherwise it is
existential and the smallest qualifying element is reported as the witness.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable

from .clauses import (
    Binding,
    Clause,
    compile_clause,
    parse_clause,
    resolve_tables,
    SYMBOLS,
)
from .errors import AlgebraError, MissingBinding, PreconditionViolated
from .structure import Structure

SEMIHEAP = ("[[x y z] u v] = [x [u z y] v]", "[x [u z y] v] = [x y [z u v]]")
GH_AXIOMS = ("[x x [y y z]] = [y y [x x z]]", "[[x y y] z z] = [[x z z] y y]")
RIGHT_MODULAR = "(x*y)*z = (z*y)*x"
WEAKLY_ASSOCIATIVE = "(x*y)*z = y*(x*z)"
LEFT_LATERAL = "x*(y*z) = y*(x*z)"
WARD = "(x*z)*(y*z) = x*y"
LEFT_CANCEL = "x*y = x*z => y = z"
RIGHT_CANCEL = "y*x = z*x => y = z"
STAR_UNARY = ("x'' = x", "(x*y)' = x'*y'", "x'*y = y'*x")


@dataclass(frozen=True)
class Property:
    name: str
    clauses: tuple[str, ...] = ()
    role: bool = False
    builtin: Callable | None = None
    needs: tuple[str, ...] = ()
    doc: str = ""

    @property
    def parsed(self) -> tuple[Clause, ...]:
        return tuple(parse_clause(c) for c in self.clauses)


@dataclass(frozen=True)
class PropertyReport:
    property: str
    holds: bool
    witness: int | None = None
    counterexample: dict | None = None
    detail: str = ""

    @property
    def verdict(self) -> str:
        return "holds" if self.holds else "fails"

    def __bool__(self):
        return self.holds


def _needs(clauses: Iterable[str]) -> tuple[str, ...]:
    out = []
    for c in clauses:
        for sym in parse_clause(c).symbols:
            f = SYMBOLS[sym][0]
            if f not in out:
                out.append(f)
    return tuple(out)


CATALOG: dict[str, Property] = {}
ALIASES = {
    "associative(binary)": "associative",
    "idempotent(binary)": "idempotent",
    "associative(ternary)": "ternary-associative",
    "idempotent(ternary)": "ternary-idempotent",
    "left-unital(l)": "left-unital",
    "right-unital(l)": "right-unital",
    "bi-unital(l)": "bi-unital",
    "lateral-unit(l)": "lateral-unit",
    "outer-lateral-unit(l)": "outer-lateral-unit",
    "unit(l)": "unit",
    "central-commutant(l)": "central-commutant",
    "ag*": "ag-star",
    "ag**": "ag-star-star",
    "generalized-heap": "generalised-heap",
}


def _add(name, *clauses, role=False, doc=""):
    CATALOG[name] = Property(name, tuple(clauses), role=role, needs=_needs(clauses), doc=doc)


def _add_builtin(name, fn, needs, doc=""):
    CATALOG[name] = Property(name, builtin=fn, needs=tuple(needs), doc=doc)


# binary identities
_add("right-modular", RIGHT_MODULAR)
_add("left-lateral", LEFT_LATERAL)
_add("weakly-associative", WEAKLY_ASSOCIATIVE)
_add("ag-star", RIGHT_MODULAR, WEAKLY_ASSOCIATIVE)
_add("ag-star-star", RIGHT_MODULAR, LEFT_LATERAL)
_add("medial", "(x*y)*(z*w) = (x*z)*(y*w)")
_add("paramedial", "(x*y)*(z*w) = (w*y)*(z*x)")
_add("reversible", "(x*y)*(z*w) = (w*z)*(y*x)")
_add("commutative", "x*y = y*x")
_add("associative", "(x*y)*z = x*(y*z)")
_add("idempotent", "x*x = x")
_add("left-distributive", "x*(y*z) = (x*y)*(x*z)")
_add("right-distributive", "(x*y)*z = (x*z)*(y*z)")
_add("distributive", "x*(y*z) = (x*y)*(x*z)", "(x*y)*z = (x*z)*(y*z)")
_add("left-cancellative", LEFT_CANCEL)
_add("right-cancellative", RIGHT_CANCEL)
_add("ward-groupoid", WARD)
_add("ward-quasigroup", WARD, LEFT_CANCEL, RIGHT_CANCEL)
_add("star-unary", *STAR_UNARY)
_add("left-identity", "l*x = x", role=True)
_add("right-identity", "x*l = x", role=True)
_add("two-sided-identity", "l*x = x", "x*l = x", role=True)

# ternary identities
_add("semiheap", *SEMIHEAP)
_add("laterally-commutative", "[x y z] = [z y x]")
_add("left-commutative", "[x y z] = [y x z]")
_add("right-commutative", "[x y z] = [x z y]")
_add("ternary-associative", "[[x y z] u v] = [x [y z u] v]", "[x [y z u] v] = [x y [z u v]]")
_add("ternary-idempotent", "[x x x] = x")
_add("near-heap", *SEMIHEAP, "[x x x] = x", "[x x y] = [y x x]")
_add("generalised-heap-axioms", *GH_AXIOMS)
_add("generalised-heap", *SEMIHEAP, "[x x x] = x", *GH_AXIOMS)
_add("heap", *SEMIHEAP, "[x x y] = y", "[y x x] = y")
_add("outer-lateral", "[x [x y x] x] = y")
_add("star-congruent", "[x y z]' = [x' y' z']")
_add("left-unital", "[l l x] = x", role=True)
_add("right-unital", "[x l l] = x", role=True)
_add("bi-unital", "[l l x] = x", "[x l l] = x", role=True)
_add("lateral-unit", "[l x l] = x", role=True)
_add("outer-lateral-unit", "[l [l x l] l] = x", role=True)
_add("unit", "[l x l] = x", "[l l x] = x", "[x l l] = x", role=True)
_add("left-l-consistent", "[x y z] = [l [l x y] z]", role=True)
_add("central-commutant", "[x l y] = [y l x]", role=True)


# -- built-in checks -----------------------------------------------------------

def _mul(s: Structure, binding: Binding):
    name = binding.mul
    if name not in s.ops or s.ops[name].arity != 2:
        raise MissingBinding(f"{s.name!r} has no binary op {name!r}")
    return s.ops[name].entries


def _globally_idempotent(s, binding):
    m = _mul(s, binding)
    products = set(m)
    for a in range(s.n):
        if a not in products:
            return PropertyReport("globally-idempotent", False, counterexample={"x": a},
                                  detail=f"{s.names[a]} is not a product")
    return PropertyReport("globally-idempotent", True)


def _weakly_reductive(s, binding):
    m, n = _mul(s, binding), s.n
    for x in range(n):
        for y in range(x + 1, n):
            if all(m[x * n + z] == m[y * n + z] and m[z * n + x] == m[z * n + y] for z in range(n)):
                return PropertyReport("weakly-reductive", False, counterexample={"x": x, "y": y},
                                      detail="distinct elements with equal left and right actions")
    return PropertyReport("weakly-reductive", True)


def _right_solvable(s, binding):
    m, n = _mul(s, binding), s.n
    for b in range(n):
        row = set(m[b * n:(b + 1) * n])
        for a in range(n):
            if a not in row:
                return PropertyReport("right-solvable", False, counterexample={"x": a, "y": b},
                                      detail=f"no z with {s.names[a]} = {s.names[b]}*z")
    return PropertyReport("right-solvable", True)


def inverse_candidates(m, n: int, a: int) -> list[int]:
    """All ``b`` with ``(a*b)*a = a`` and ``b*(a*b) = b``."""
    out = []
    for b in range(n):
        ab = m[a * n + b]
        if m[ab * n + a] == a and m[b * n + ab] == b:
            out.append(b)
    return out


def _inverse_groupoid(s, binding):
    m, n = _mul(s, binding), s.n
    for a in range(n):
        found = []
        for b in range(n):
            ab = m[a * n + b]
            if m[ab * n + a] == a and m[b * n + ab] == b:
                found.append(b)
                if len(found) > 1:
                    break
        if len(found) != 1:
            return PropertyReport("inverse-groupoid", False, counterexample={"x": a},
                                  detail=f"{s.names[a]} has {'no' if not found else 'several'} inverses")
    return PropertyReport("inverse-groupoid", True)


def _group(s, binding):
    r = check_property(s, "associative", binding)
    if not r.holds:
        return PropertyReport("group", False, counterexample=r.counterexample,
                              detail="associative fails")
    m, n = _mul(s, binding), s.n
    ids = [e for e in range(n) if all(m[e * n + x] == x and m[x * n + e] == x for x in range(n))]
    if not ids:
        return PropertyReport("group", False, detail="no two-sided identity")
    e = ids[0]
    for a in range(n):
        if not any(m[a * n + b] == e and m[b * n + a] == e for b in range(n)):
            return PropertyReport("group", False, counterexample={"x": a},
                                  detail=f"{s.names[a]} has no inverse")
    return PropertyReport("group", True, witness=e)


def _inverse_semigroup(s, binding):
    for p in ("associative", "inverse-groupoid"):
        r = check_property(s, p, binding)
        if not r.holds:
            return PropertyReport("inverse-semigroup", False, counterexample=r.counterexample,
                                  detail=p + " fails")
    m, n = _mul(s, binding), s.n
    idem = [e for e in range(n) if m[e * n + e] == e]
    for e in idem:
        for f in idem:
            if m[e * n + f] != m[f * n + e]:
                return PropertyReport("inverse-semigroup", False, counterexample={"x": e, "y": f},
                                      detail="idempotents do not commute")
    return PropertyReport("inverse-semigroup", True)


_add_builtin("globally-idempotent", _globally_idempotent, ["mul"])
_add_builtin("weakly-reductive", _weakly_reductive, ["mul"])
_add_builtin("right-solvable", _right_solvable, ["mul"])
_add_builtin("inverse-groupoid", _inverse_groupoid, ["mul"])
_add_builtin("group", _group, ["mul"])
_add_builtin("inverse-semigroup", _inverse_semigroup, ["mul"])


def canonical_name(name: str) -> str:
    name = ALIASES.get(name, name)
    if name not in CATALOG:
        raise AlgebraError(f"unknown property {name!r}")
    return name


def _pinned(s: Structure, binding: Binding, const: str = "l"):
    if const in binding.consts:
        return binding.consts[const]
    return s.consts.get(const)


def _check_clauses_at(s, clauses, binding, consts):
    tables = {}
    for c in clauses:
        tables.update(resolve_tables(s, c, binding))
    for c in clauses:
        hit = compile_clause(c)(tables.get("*"), tables.get("[]"), tables.get("'"),
                                tables.get("^"), consts, s.n)
        if hit is not None:
            return c, dict(zip(c.variables, hit))
    return None, None


def check_property(s: Structure, name: str, binding: Binding | None = None) -> PropertyReport:
    """Verdict for one catalog property under ``binding``."""
    binding = binding or Binding()
    name = canonical_name(name)
    prop = CATALOG[name]
    for f in prop.needs:
        op = getattr(binding, f)
        if op not in s.ops:
            raise MissingBinding(f"{name} needs op {op!r} ({f}) on {s.name!r}")
    if prop.builtin is not None:
        return prop.builtin(s, binding)
    clauses = prop.parsed
    consts = {k: v for k, v in s.consts.items()}
    consts.update(binding.consts)
    if prop.role:
        at = _pinned(s, binding)
        if at is not None:
            consts["l"] = at
            bad, cex = _check_clauses_at(s, clauses, binding, consts)
            if bad is None:
                return PropertyReport(name, True, witness=at)
            return PropertyReport(name, False, counterexample=cex, detail=f"fails at l: {bad}")
        for m in range(s.n):
            consts["l"] = m
            bad, _ = _check_clauses_at(s, clauses, binding, consts)
            if bad is None:
                return PropertyReport(name, True, witness=m)
        return PropertyReport(name, False, detail="no element qualifies")
    bad, cex = _check_clauses_at(s, clauses, binding, consts)
    if bad is None:
        return PropertyReport(name, True)
    return PropertyReport(name, False, counterexample=cex, detail=str(bad))


def applicable(s: Structure, binding: Binding | None = None) -> list[str]:
    """Catalog properties whose required tables exist with the right arity."""
    binding = binding or Binding()
    arity = {"mul": 2, "t": 3, "star": 1, "hat": 1}
    out = []
    for name, prop in CATALOG.items():
        ok = True
        for f in prop.needs:
            op = getattr(binding, f)
            if op not in s.ops or s.ops[op].arity != arity[f]:
                ok = False
        if ok:
            out.append(name)
    return out


def classify(s: Structure, binding: Binding | None = None) -> list[str]:
    """Sorted names of every applicable property that holds."""
    binding = binding or Binding()
    return sorted(p for p in applicable(s, binding) if check_property(s, p, binding).holds)


ROLES = {
    "left-unital": "left-unital",
    "right-unital": "right-unital",
    "bi-unital": "bi-unital",
    "lateral-unit": "lateral-unit",
    "outer-lateral-unit": "outer-lateral-unit",
    "unit": "unit",
    "left-identity": "left-identity",
    "right-identity": "right-identity",
    "two-sided-identity": "two-sided-identity",
}


def find_elements(s: Structure, role: str, binding: Binding | None = None) -> set[int]:
    """Every element satisfying ``role`` (``idempotents`` means ``x*x = x``)."""
    binding = binding or Binding()
    if role == "idempotents":
        if binding.mul in s.ops:
            m, n = _mul(s, binding), s.n
            return {x for x in range(n) if m[x * n + x] == x}
        if binding.t in s.ops:
            t, n = s.ops[binding.t].entries, s.n
            return {x for x in range(n) if t[x * n * n + x * n + x] == x}
        raise MissingBinding(f"{s.name!r} has neither {binding.mul!r} nor {binding.t!r}")
    if role not in ROLES:
        raise AlgebraError(f"unknown role {role!r}")
    prop = CATALOG[ROLES[role]]
    for f in prop.needs:
        if getattr(binding, f) not in s.ops:
            raise MissingBinding(f"{role} needs op {getattr(binding, f)!r} on {s.name!r}")
    clauses = prop.parsed
    consts = dict(s.consts)
    consts.update(binding.consts)
    out = set()
    for m in range(s.n):
        consts["l"] = m
        bad, _ = _check_clauses_at(s, clauses, binding, consts)
        if bad is None:
            out.add(m)
    return out


def left_identities(s: Structure, binding: Binding | None = None) -> list[int]:
    return sorted(find_elements(s, "left-identity", binding))


# -- unit sets of right modular groupoids with left identity -------------------

@dataclass
class UnitReport:
    l: int
    rows: list = field(default_factory=list)  # (label, brute set, closed-form set)
    claims: list = field(default_factory=list)  # (label, bool)

    @property
    def discrepancies(self) -> list:
        """Rows where the brute-force set differs from the closed form."""
        return [r for r in self.rows if r[1] != r[2]]

    @property
    def agree(self) -> bool:
        return not self.discrepancies

    @property
    def first_discrepancy(self):
        d = self.discrepancies
        return d[0] if d else None

    @property
    def refuted_claims(self) -> list:
        """Side claims about the unit sets that this structure contradicts."""
        return [c for c in self.claims if not c[1]]


def _is_subgroupoid_with_identity(m, n, subset, l):
    if not subset:
        return True
    if l not in subset:
        return False
    return all(m[a * n + b] in subset for a in subset for b in subset)


def _commutative_monoid_on(m, n, subset, l):
    return all(m[a * n + b] == m[b * n + a] for a in subset for b in subset) and \
        all(m[a * n + l] == a for a in subset)


def check_unit_characterizations(s: Structure, binding: Binding | None = None) -> UnitReport:
    """Compare brute-force unit sets of ``[S]`` and ``[S]'`` with their closed forms.

    ``x' = x*l`` where ``l`` is the left identity.  Lateral units of ``[S]``
    are ``{m : (m*l)*m = l, x = x*l for all x}`` (equivalently ``m*m = l``
    and ``x = x*l``); lateral units of ``[S]'`` are ``{m : (m*l)*m = l}``;
    outer lateral units of ``[S]`` are ``{m : (m*m)*(m*m) = l}``; outer
    lateral units of ``[S]'`` are ``{m : ((m*l)*m)*(m*(m*l)) = l}``.
    """
    from .constructions import natural_ternary, star_ternary

    binding = binding or Binding()
    if not check_property(s, "right-modular", binding).holds:
        raise PreconditionViolated("not right modular", ["right-modular"])
    lids = left_identities(s, Binding(binding.mul))
    if not lids:
        raise PreconditionViolated("no left identity", ["left-identity"])
    l = lids[0]
    m, n = _mul(s, binding), s.n
    E = range(n)

    def mul(a, b):
        return m[a * n + b]

    prime = tuple(mul(x, l) for x in E)
    base = Structure(s.name, s.names, {"mul": s.ops[binding.mul], "p": _unary(n, prime)})
    nat = base.with_op("t", natural_ternary(base))
    star = base.with_op("t", star_ternary(base, "p"))

    lu = find_elements(nat, "lateral-unit")
    olu = find_elements(nat, "outer-lateral-unit")
    lu_p = find_elements(star, "lateral-unit")
    olu_p = find_elements(star, "outer-lateral-unit")
    units_p = find_elements(star, "unit")

    right_unit_l = all(mul(x, l) == x for x in E)
    sq = [mul(x, x) for x in E]
    t48 = {x for x in E if mul(mul(x, l), x) == l and right_unit_l}
    c49 = {x for x in E if sq[x] == l and right_unit_l}
    t52a = {x for x in E if mul(mul(mul(x, l), x), l) == l}
    t52b = {x for x in E if mul(mul(x, l), x) == l}
    t52c = {x for x in E if x == mul(x, sq[x]) and l == mul(sq[x], sq[x])}
    t56 = {x for x in E if mul(sq[x], sq[x]) == l}
    t59 = {x for x in E if mul(mul(mul(x, l), x), mul(x, mul(x, l))) == l}

    rep = UnitReport(l)
    rep.rows += [
        ("lateral units of [S] vs (m*l)*m = l and x = x*l", lu, t48),
        ("lateral units of [S] vs m*m = l and x = x*l", lu, c49),
        ("lateral units of [S]' vs ((m*l)*m)*l = l", lu_p, t52a),
        ("lateral units of [S]' vs (m*l)*m = l", lu_p, t52b),
        ("lateral units of [S]' vs m = m*(m*m) and l = (m*m)*(m*m)", lu_p, t52c),
        ("outer lateral units of [S] vs (m*m)*(m*m) = l", olu, t56),
        ("outer lateral units of [S]' vs ((m*l)*m)*(m*(m*l)) = l", olu_p, t59),
    ]
    idem = {x for x in E if sq[x] == x}
    rep.claims += [
        ("l is the only idempotent lateral unit of [S]", lu & idem <= {l}),
        ("l is the only idempotent lateral unit of [S]'", lu_p & idem == {l}),
        ("l is the only idempotent outer lateral unit of [S]", olu & idem == {l}),
        ("l is the only idempotent outer lateral unit of [S]'", olu_p & idem == {l}),
        ("lateral units of [S]' are units", lu_p <= units_p),
        ("m is an outer lateral unit of [S]' iff m*l is",
         all((x in olu_p) == (mul(x, l) in olu_p) for x in E)),
        ("lateral units of [S] form a subgroupoid with identity l or are empty",
         _is_subgroupoid_with_identity(m, n, lu, l)),
        ("lateral units of [S]' form a subgroupoid containing l",
         l in lu_p and _is_subgroupoid_with_identity(m, n, lu_p, l)),
        ("outer lateral units of [S] form a subgroupoid containing l",
         l in olu and _is_subgroupoid_with_identity(m, n, olu, l)),
        ("outer lateral units of [S]' form a subgroupoid containing l",
         l in olu_p and _is_subgroupoid_with_identity(m, n, olu_p, l)),
        ("outer lateral units of [S] and [S]' meet in a commutative monoid with identity l",
         _is_subgroupoid_with_identity(m, n, olu & olu_p, l)
         and _commutative_monoid_on(m, n, olu & olu_p, l)),
    ]
    if lu:
        rep.claims.append((
            "lateral units of [S] commute iff (x*l)*x = l implies x*x = l",
            _commutative_monoid_on(m, n, lu, l)
            == all(sq[x] == l for x in E if mul(mul(x, l), x) == l)))
    rep.claims += [
        ("lateral units of [S]' commute iff (m*l)*m = l implies m*m = l",
         _commutative_monoid_on(m, n, lu_p, l)
         == all(sq[x] == l for x in E if mul(mul(x, l), x) == l)),
        ("outer lateral units of [S] commute iff (m*m)*(m*m) = l implies m = (m*m)*(m*(m*m))",
         _commutative_monoid_on(m, n, olu, l)
         == all(x == mul(sq[x], mul(x, sq[x])) for x in E if mul(sq[x], sq[x]) == l)),
        ("outer lateral units of [S]' commute iff the closed form implies (m*m)*(m*m) = l",
         _commutative_monoid_on(m, n, olu_p, l)
         == all(mul(sq[x], sq[x]) == l for x in E if x in t59)),
    ]
    return rep


def _unary(n, values):
    from .structure import OpTable
    return OpTable(1, n, tuple(values))
