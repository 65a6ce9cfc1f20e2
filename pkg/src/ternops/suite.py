"""Deterministic regression checks over the reference tables and small
exhaustive sweeps.

Each check returns a one-line summary on success and raises :class:`CheckFailed`
otherwise.  Sweeps over "all groupoids of order 3" share one :class:`Atlas`,
which holds every table, its natural ternary and a canonical key for both.
Isomorphism verdicts in the sweeps come from the backtracking search; the
canonical keys are an independent cross-check.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from typing import Callable, Iterable

import numpy as np

from . import corpus
from .clauses import Binding, check_clause, format_assignment
from .constructions import (
    PERMUTATIONS3, alpha_map, beta_map, delta_left, delta_right, dual_groupoid,
    example1_pair, gamma_from_semiheap, gamma_wq, group_identity, lambda_map,
    natural_ternary, omega, phi_g, pi_map, pi_ternary, psi, reconstruct, sigma,
    star_ternary, theta, cyclic_group,
)
from .enumeration import (
    EnumSpec, ag_star, enumerate_models, enumerate_tables, groups, heaps,
    inverse_semigroups, lc_biunital_semiheaps, rm_left_identity,
)
from .errors import AlgebraError, UnknownFilter
from .inverse import (
    admissible_automorphisms, admissible_pairs, alpha_determined, clifford_standard_ternary,
    gh_inverse_failures, gh_to_inverse_semigroup, group_with_zero,
    inverse_triple, is_clifford, natural_ternary_inverse_check, standard_ternary,
)
from .iso import automorphisms, iso_search, is_isomorphism, profile_signature, profiles, search_tables
from .properties import check_property, check_unit_characterizations, left_identities
from .structure import OpTable, Structure, adjoin_identity, default_names, groupoid


class CheckFailed(Exception):
    pass


def expect(cond, message: str):
    if not cond:
        raise CheckFailed(message)


@dataclass(frozen=True)
class PaperCheck:
    id: str
    description: str
    run: Callable[[], str]


@dataclass(frozen=True)
class Outcome:
    id: str
    status: str
    details: str

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def as_dict(self) -> dict:
        return {"id": self.id, "status": self.status, "details": self.details}


# -- small helpers -------------------------------------------------------------

def _holds(s: Structure, prop: str, binding: Binding | None = None) -> bool:
    return check_property(s, prop, binding).holds


def _mul(s: Structure) -> np.ndarray:
    return np.asarray(s.ops["mul"].entries, dtype=np.int64).reshape(s.n, s.n)


def _tern(s: Structure, op: str = "t") -> np.ndarray:
    n = s.n
    return np.asarray(s.ops[op].entries, dtype=np.int64).reshape(n, n, n)


def _with_prime(s: Structure, l: int) -> Structure:
    m = _mul(s)
    return s.with_op("p", OpTable(1, s.n, tuple(int(v) for v in m[:, l])))


def _fmt_cex(s: Structure, report) -> str:
    if report.counterexample:
        return format_assignment(s, report.counterexample)
    return report.detail


def _models(spec: EnumSpec) -> list[Structure]:
    return list(enumerate_models(spec))


# -- the order-3 atlas ---------------------------------------------------------

class Atlas:
    """Every binary table of order ``n`` in lexicographic order."""

    def __init__(self, n: int = 3):
        self.n = n
        cells = n * n
        total = n ** cells
        codes = np.arange(total, dtype=np.int64)
        tabs = np.empty((total, cells), dtype=np.int64)
        for c in range(cells - 1, -1, -1):
            tabs[:, c] = codes % n
            codes //= n
        self.tables = tabs
        idx = (tabs[:, :, None] * n + np.arange(n)).reshape(total, cells * n)
        self.ternary = np.take_along_axis(tabs, idx, axis=1)
        self.bkey = self._keys(tabs, 2)
        self.tkey = self._keys(self.ternary, 3)
        self._bsig = None
        self._tsig = None

    def __len__(self) -> int:
        return self.tables.shape[0]

    def _keys(self, arr: np.ndarray, arity: int) -> np.ndarray:
        n = self.n
        cells = np.asarray(list(product(range(n), repeat=arity)), dtype=np.int64)
        weights = n ** np.arange(n ** arity - 1, -1, -1, dtype=np.int64)
        best = None
        for p in permutations(range(n)):
            p = np.asarray(p)
            inv = np.argsort(p)
            src = np.zeros(len(cells), dtype=np.int64)
            for a in range(arity):
                src = src * n + inv[cells[:, a]]
            key = p[arr[:, src]] @ weights
            best = key if best is None else np.minimum(best, key)
        return best

    def index(self, entries: Iterable[int]) -> int:
        code = 0
        for v in entries:
            code = code * self.n + int(v)
        return code

    def structure(self, i: int, name: str | None = None) -> Structure:
        n = self.n
        return Structure(name or f"T{i}", default_names(n),
                         {"mul": OpTable(2, n, tuple(int(v) for v in self.tables[i]))})

    def _signatures(self, arr, arity):
        n = self.n
        return [profile_signature(profiles(n, [(arity, tuple(row))])) for row in arr.tolist()]

    def binary_candidates(self, sig) -> list[int]:
        if self._bsig is None:
            self._bsig = self._signatures(self.tables, 2)
        return [i for i, s in enumerate(self._bsig) if s == sig]

    def ternary_candidates(self, sig) -> list[int]:
        if self._tsig is None:
            self._tsig = self._signatures(self.ternary, 3)
        return [i for i, s in enumerate(self._tsig) if s == sig]

    def binary_isos(self, entries) -> dict[int, tuple]:
        """Rows ``T`` with ``S ~= T`` and the lexicographically least certificate."""
        n = self.n
        ts = [(2, tuple(entries))]
        profs = profiles(n, ts)
        out = {}
        for i in self.binary_candidates(profile_signature(profs)):
            tt = [(2, tuple(self.tables[i].tolist()))]
            hits = search_tables(n, ts, tt, profs_s=profs)
            if hits:
                out[i] = hits[0]
        return out

    def ternary_isos(self, tern_entries, find_all: bool = False) -> dict[int, list]:
        """Rows ``T`` whose natural ternary is isomorphic to ``tern_entries``."""
        n = self.n
        ts = [(3, tuple(tern_entries))]
        profs = profiles(n, ts)
        out = {}
        for i in self.ternary_candidates(profile_signature(profs)):
            tt = [(3, tuple(self.ternary[i].tolist()))]
            hits = search_tables(n, ts, tt, profs_s=profs, find_all=find_all)
            if hits:
                out[i] = hits
        return out


@lru_cache(maxsize=None)
def atlas3() -> Atlas:
    return Atlas(3)


def key_of(entries, arity: int, n: int) -> int:
    """Canonical key computed directly (matches :meth:`Atlas._keys`)."""
    best = None
    for p in permutations(range(n)):
        inv = [0] * n
        for i, q in enumerate(p):
            inv[q] = i
        key = 0
        for args in product(range(n), repeat=arity):
            src = 0
            for a in args:
                src = src * n + inv[a]
            key = key * n + p[entries[src]]
        best = key if best is None else min(best, key)
    return best


# -- reference tables ----------------------------------------------------------

def check_prop2() -> str:
    s = corpus.prop2()
    expect(_holds(s, "right-modular"), "table is not right modular")
    t = s.with_op("t", natural_ternary(s))
    rep = check_property(t, "semiheap")
    expect(not rep.holds, "natural ternary is a semiheap")
    a, b, ab, ba = (s.element(x) for x in ("a", "b", "ab", "ba"))

    def T(x, y, z):
        return t.eval("t", x, y, z)

    lhs = T(T(a, ba, b), ab, a)
    rhs = T(a, ba, T(b, ab, a))
    expect((lhs, rhs) == (a, ba),
           f"witness evaluates to {s.names[lhs]} vs {s.names[rhs]}, expected a vs ba")
    return (f"right modular; natural ternary not a semiheap (first failure {_fmt_cex(t, rep)}); "
            f"[[a ba b] ab a] = {s.names[lhs]}, [a ba [b ab a]] = {s.names[rhs]}")


def check_prop39() -> str:
    s = corpus.prop39()
    expect(_holds(s, "right-modular"), "table is not right modular")
    expect(left_identities(s) == [s.element("l")], "l is not the unique left identity")
    expect(not _holds(s, "weakly-associative"), "table is weakly associative")
    nat = natural_ternary(s)
    a, b, c, l = (s.element(x) for x in "abcl")
    out = []
    for perm, (x, y, z, u, v), want in (((1, 3, 2), (a, b, b, l, b), (b, c)),
                                        ((2, 1, 3), (a, c, b, a, a), (a, l))):
        tp = s.with_op("t", pi_ternary(nat, perm))
        expect(not _holds(tp, "semiheap"), f"pi{perm} ternary is a semiheap")

        def T(p, q, r):
            return tp.eval("t", p, q, r)

        got = (T(T(x, y, z), u, v), T(x, y, T(z, u, v)))
        expect(got == want, f"pi{perm} witness gives {s.names[got[0]]} vs {s.names[got[1]]}")
        out.append(f"pi{perm}: {s.names[got[0]]} != {s.names[got[1]]}")
    return "; ".join(out)


def check_prop39_heap() -> str:
    s = corpus.prop39()
    t = s.with_op("t", natural_ternary(s))
    expect(check_clause(s, "x*x = l").holds, "x*x = l fails")
    expect(_holds(t, "outer-lateral"), "natural ternary is not outer lateral")
    expect(_holds(t, "ternary-idempotent"), "natural ternary is not idempotent")
    expect(_holds(t, "heap"), "natural ternary is not a heap")
    non_identity = [x for x in range(s.n) if x not in left_identities(s)]
    return (f"x*x = l; natural ternary is an outer lateral heap; "
            f"{len(non_identity)} outer lateral elements are not left identities")


def check_prop39_dual() -> str:
    s = corpus.prop39()
    d = dual_groupoid(s)
    t = d.with_op("t", natural_ternary(d))
    rep = check_property(t, "semiheap")
    expect(not rep.holds, "natural ternary of the dual is a semiheap")
    return f"natural ternary of the dual fails semiheap at {_fmt_cex(t, rep)}"


def check_ex1_pair() -> str:
    sizes = []
    for n in (2, 3, 4, 5):
        left, right = example1_pair(n)
        expect(natural_ternary(left) == natural_ternary(right),
               f"n={n}: natural ternaries differ")
        expect(iso_search(left, right) is None, f"n={n}: binary tables are isomorphic")
        cert = iso_search(left.with_op("t", natural_ternary(left)),
                          right.with_op("t", natural_ternary(right)), kind="ternary")
        expect(cert is not None and cert.is_identity, f"n={n}: identity is not the ternary certificate")
        sizes.append(str(n))
    return f"n = {', '.join(sizes)}: equal natural ternaries, no binary isomorphism"


def check_ex2() -> str:
    s = corpus.example2()
    b = Binding(star="star")
    expect(_holds(s, "star-unary", b), "not star-unary")
    expect(left_identities(s) == [s.element("l")], "l is not the unique left identity")
    rep = check_property(s, "right-modular")
    expect(not rep.holds, "table is right modular")
    return f"star-unary with left identity l; right modular fails at {_fmt_cex(s, rep)}"


def check_ex3() -> str:
    s = corpus.example3()
    expect(_holds(s, "generalised-heap"), "not a generalised heap")
    pairs = admissible_pairs(s)
    expect(not pairs, f"{len(pairs)} admissible (prime, hat) pairs")
    return "generalised heap; none of the involution x idempotent-map pairs is admissible"


def check_ex4() -> str:
    n = 3
    s = Structure("proj", default_names(n), {"t": OpTable.from_function(n, 3, lambda x, y, z: x)})
    expect(_holds(s, "ternary-associative"), "projection is not associative")
    pairs = admissible_pairs(s, natural=True)
    expect(not pairs, f"{len(pairs)} admissible pairs for the natural recovery")
    return "first-projection ternary is associative but admits no natural inverse pair"


# -- the right modular / natural ternary correspondence ------------------------

def correspondence_counts(orders=(2, 3, 4), back_orders=(2, 3)) -> dict:
    """Forward and backward model counts; raises on any broken roundtrip."""
    counts = {"forward": {}, "backward": {}}
    b = Binding(consts={"l": 0})
    for n in orders:
        k = 0
        for s in enumerate_models(rm_left_identity(n)):
            t = s.with_op("t", natural_ternary(s))
            for p in ("semiheap", "laterally-commutative", "bi-unital"):
                expect(_holds(t, p, b), f"order {n}: natural ternary of {s.ops['mul'].entries} fails {p}")
            back = gamma_from_semiheap(t, 0)
            expect(back.ops["mul"] == s.ops["mul"], f"order {n}: gamma does not invert")
            k += 1
        counts["forward"][n] = k
    for n in back_orders:
        k = 0
        for t in enumerate_models(lc_biunital_semiheaps(n)):
            g = gamma_from_semiheap(t, 0)
            expect(_holds(g, "right-modular") and _holds(g, "left-identity", b),
                   f"order {n}: gamma output is not right modular with left identity 0")
            expect(natural_ternary(g) == t.ops["t"], f"order {n}: natural ternary does not invert")
            k += 1
        counts["backward"][n] = k
    for n in back_orders:
        expect(counts["forward"].get(n) == counts["backward"][n],
               f"order {n}: {counts['forward'].get(n)} groupoids vs {counts['backward'][n]} semiheaps")
    return counts


def check_correspondence() -> str:
    c = correspondence_counts()
    fw = ", ".join(f"{n}:{k}" for n, k in c["forward"].items())
    bw = ", ".join(f"{n}:{k}" for n, k in c["backward"].items())
    return f"groupoids -> semiheaps {fw}; semiheaps -> groupoids {bw}"


REVERSIBLE_NOT_RM = ((0, 1, 2), (1, 0, 0), (2, 0, 0))


def paramedial_sweep() -> dict:
    """Order-3 groupoids with left identity 0: right modular vs paramedial
    vs reversible."""
    n = 3
    spec = EnumSpec(n, constraints=("left-identity",), pins={"l": 0})
    out = {"total": 0, "rm": 0, "reversible_only": []}
    for s in enumerate_models(spec):
        r = _holds(s, "right-modular")
        expect(r == _holds(s, "paramedial"), f"{s.ops['mul'].entries}: right modular != paramedial")
        if r:
            for p in ("reversible", "left-lateral", "medial"):
                expect(_holds(s, p), f"{s.ops['mul'].entries}: right modular but not {p}")
        elif _holds(s, "reversible"):
            out["reversible_only"].append(s.ops["mul"].entries)
        out["total"] += 1
        out["rm"] += r
    return out


def check_paramedial() -> str:
    r = paramedial_sweep()
    return (f"{r['total']} order-3 groupoids with left identity 0; {r['rm']} right modular, "
            f"all paramedial, reversible, left lateral and medial, and conversely for paramedial")


def check_reversible_counterexample() -> str:
    s = groupoid(REVERSIBLE_NOT_RM, name="rev")
    b = Binding(consts={"l": 0})
    expect(_holds(s, "left-identity", b), "0 is not a left identity")
    expect(_holds(s, "reversible"), "table is not reversible")
    rep = check_property(s, "right-modular")
    expect(not rep.holds, "table is right modular")
    r = paramedial_sweep()
    flat = tuple(v for row in REVERSIBLE_NOT_RM for v in row)
    expect(flat in r["reversible_only"], "sweep does not find the table")
    return (f"reversible with left identity yet right modular fails at {_fmt_cex(s, rep)}; "
            f"{len(r['reversible_only'])} such groupoids at order 3 with identity pinned at 0")


def check_ag_natural() -> str:
    specs = [("AG*", ag_star(n)) for n in (1, 2, 3, 4)]
    specs += [("AG**", EnumSpec(n, constraints=("ag-star-star",))) for n in (1, 2, 3, 4)]
    seen = 0
    no_left = 0
    for label, spec in specs:
        for s in enumerate_models(spec):
            t = s.with_op("t", natural_ternary(s))
            for p in ("semiheap", "laterally-commutative", "generalised-heap-axioms"):
                expect(_holds(t, p), f"{label} {s.ops['mul'].entries}: natural ternary fails {p}")
            if not left_identities(s):
                no_left += 1
                for p in ("lateral-unit", "outer-lateral-unit"):
                    expect(not _holds(t, p),
                           f"{label} {s.ops['mul'].entries}: no left identity yet has a {p}")
            seen += 1
    extra = 0
    for n in (2, 3):
        for t in enumerate_models(lc_biunital_semiheaps(n)):
            expect(_holds(t, "generalised-heap-axioms"), "laterally commutative semiheap fails the axioms")
            extra += 1
    return (f"{seen} AG*/AG** groupoids of order <= 4 give laterally commutative semiheaps "
            f"with the generalised heap axioms ({no_left} without left identity have no lateral "
            f"or outer lateral units); {extra} bi-unital laterally commutative semiheaps satisfy the axioms")


def check_lateral_commutativity() -> str:
    total = 0
    for n in (1, 2, 3):
        at = atlas3() if n == 3 else Atlas(n)
        for i in range(len(at)):
            s = at.structure(i)
            t = s.with_op("t", OpTable(3, n, tuple(at.ternary[i].tolist())))
            expect(_holds(s, "right-modular") == _holds(t, "laterally-commutative"),
                   f"{at.tables[i].tolist()}: right modular != laterally commutative natural ternary")
            total += 1
    return f"{total} groupoids of order <= 3: right modular <=> natural ternary laterally commutative"


def check_ag_star_permutations(orders=(1, 2, 3, 4)) -> str:
    total = 0
    for n in orders:
        for s in enumerate_models(ag_star(n)):
            nat = natural_ternary(s)
            for perm in PERMUTATIONS3:
                t = s.with_op("t", pi_ternary(nat, perm))
                for p in ("semiheap", "generalised-heap-axioms"):
                    expect(_holds(t, p), f"order {n} {s.ops['mul'].entries}: pi{perm} fails {p}")
            m = _mul(s)
            star = s.with_op("t", OpTable(3, n, tuple(
                int(m[m[a, c], b]) for a, b, c in product(range(n), repeat=3))))
            for p in ("semiheap", "left-commutative", "generalised-heap-axioms"):
                expect(_holds(star, p), f"order {n}: (a c) b fails {p}")
            total += 1
    return f"{total} AG* groupoids of order <= {max(orders)}: all six permuted ternaries pass"


# -- isomorphism sweeps over order 3 -------------------------------------------

def _rows(spec: EnumSpec, at: Atlas) -> list[int]:
    return [at.index(m[0]) for m in enumerate_tables(spec)]


def _sq_one_implies_one(m: np.ndarray, one: int) -> bool:
    return all(x == one for x in range(len(m)) if m[x, x] == one)


def rm_iso_sweep() -> dict:
    """For each right modular S with a left identity and every order-3 T,
    ternary isomorphism agrees with binary isomorphism."""
    at = atlas3()
    spec = EnumSpec(3, constraints=("right-modular", "left-identity"))
    srows = _rows(spec, at)
    t = at.ternary
    rm = (t[:, [x * 9 + y * 3 + z for x, y, z in product(range(3), repeat=3)]]
          == t[:, [z * 9 + y * 3 + x for x, y, z in product(range(3), repeat=3)]]).all(axis=1)
    has_left = np.zeros(len(at), dtype=bool)
    for l in range(3):
        has_left |= (at.tables[:, [l * 3 + x for x in range(3)]] == np.arange(3)).all(axis=1)
    expect(sorted(srows) == np.nonzero(rm & has_left)[0].tolist(),
           "enumerator and direct filter disagree on right modular groupoids with left identity")
    pairs = 0
    for i in srows:
        tern = at.ternary_isos(at.ternary[i].tolist())
        binary = at.binary_isos(at.tables[i].tolist())
        expect(set(tern) == set(binary),
               f"S={at.tables[i].tolist()}: ternary-isomorphic rows {sorted(tern)} vs "
               f"binary-isomorphic rows {sorted(binary)}")
        keyed_t = set(np.nonzero(at.tkey == at.tkey[i])[0].tolist())
        keyed_b = set(np.nonzero(at.bkey == at.bkey[i])[0].tolist())
        expect(keyed_t == set(tern) and keyed_b == set(binary),
               f"S={at.tables[i].tolist()}: search disagrees with canonical keys")
        pairs += len(tern)
    return {"S": len(srows), "T": len(at), "iso_pairs": pairs}


def check_rm_iso_sweep() -> str:
    r = rm_iso_sweep()
    return (f"{r['S']} right modular groupoids with left identity x {r['T']} groupoids: "
            f"ternary iso <=> binary iso ({r['iso_pairs']} isomorphic pairs)")


def check_rm_star_iso_sweep() -> str:
    at = atlas3()
    spec = EnumSpec(3, constraints=("right-modular", "left-identity"))
    hits = 0
    for s in enumerate_models(spec):
        l = left_identities(s)[0]
        st = star_ternary(_with_prime(s, l), "p")
        for i in at.ternary_isos(st.entries):
            T = at.structure(i)
            expect(_holds(T, "commutative") and _holds(T, "associative")
                   and _holds(T, "two-sided-identity"),
                   f"[S]' ~= [T] for T={at.tables[i].tolist()} which is not a commutative monoid")
            hits += 1
    return f"every T with [S]' ~= [T] is a commutative monoid ({hits} pairs)"


def check_monoid_iso_sweep() -> str:
    """Groupoids with identity: the consequences of a ternary isomorphism."""
    at = atlas3()
    n = 3
    spec = EnumSpec(n, constraints=("two-sided-identity",))
    pairs = 0
    prop_cache: dict = {}

    def props(i):
        if i not in prop_cache:
            T = at.structure(i)
            prop_cache[i] = {p: _holds(T, p) for p in
                             ("medial", "left-lateral", "associative", "right-distributive",
                              "commutative")}
        return prop_cache[i]

    for s in enumerate_models(spec):
        m = _mul(s)
        one = check_property(s, "two-sided-identity").witness
        i_s = at.index(s.ops["mul"].entries)
        semi = _holds(s.with_op("t", natural_ternary(s)), "semiheap")
        assoc = _holds(s, "associative")
        for j, certs in at.ternary_isos(at.ternary[i_s].tolist(), find_all=True).items():
            T = at.tables[j].reshape(n, n)
            pj = props(j)
            binary_iso = j in at.binary_isos(s.ops["mul"].entries)
            for d in certs:
                d = np.asarray(d)
                d1 = d[one]
                sq = T[d1, d1]
                ctx = f"S={s.ops['mul'].entries} T={at.tables[j].tolist()} d={d.tolist()}"
                expect((d[m] == T[T[d[:, None], d[None, :]], d1]).all(), ctx + ": (da db) d1 fails")
                expect((T[sq] == np.arange(n)).all(), ctx + ": (d1)^2 is not a left identity")
                expect((d == T[T[d1, d], d1]).all() and (d == T[T[d, d1], d1]).all(),
                       ctx + ": da = (d1 da) d1 = (da d1) d1 fails")
                expect((T[d, d1] == T[d1, d]).all(), ctx + ": da d1 != d1 da")
                expect(is_isomorphism(d.tolist(), n, [(2, s.ops["mul"].entries)],
                                      [(2, tuple(at.tables[j].tolist()))]) == (sq == d1),
                       ctx + ": d is a homomorphism iff (d1)^2 = d1 fails")
                if pj["medial"] or pj["left-lateral"] or pj["associative"]:
                    expect((T[sq] == np.arange(n)).all() and (T[:, sq] == np.arange(n)).all(),
                           ctx + ": (d1)^2 is not the identity of T")
                    lhs = d[m[np.arange(n)[:, None, None], m[None, :, :]]]
                    rhs = T[d[:, None, None], T[d[None, :, None], d[None, None, :]]]
                    expect((lhs == rhs).all(), ctx + ": d(a bc) != da (db dc)")
                if pj["right-distributive"]:
                    expect(binary_iso and sq == d1 and (np.diag(m) == np.arange(n)).all(),
                           ctx + ": T right distributive but S not idempotent or not isomorphic")
            if semi:
                expect(_holds(s, "commutative"), f"S={s.ops['mul'].entries}: [S] semiheap, S not commutative")
                expect(pj["commutative"], f"T={at.tables[j].tolist()}: [S] semiheap, T not commutative")
                cond = (pj["left-lateral"] or pj["medial"] or _sq_one_implies_one(m, one))
                if cond:
                    expect(binary_iso, f"S={s.ops['mul'].entries} T={at.tables[j].tolist()}: "
                                       "semiheap case but not isomorphic")
            if _sq_one_implies_one(m, one):
                expect(binary_iso, f"S={s.ops['mul'].entries}: x^2 = 1 => x = 1 but S !~= T")
            if assoc and (pj["medial"] or pj["left-lateral"] or pj["associative"]):
                expect(binary_iso, f"S={s.ops['mul'].entries}: semigroup case but S !~= T")
            pairs += 1
    return f"{pairs} ternary-isomorphic pairs (S with identity, any T): all consequences hold"


def check_semigroup_iso_sweep() -> str:
    at = atlas3()
    n = 3
    sg = [s for s in enumerate_models(EnumSpec(n, constraints=("associative",)))]
    rows = {at.index(s.ops["mul"].entries): s for s in sg}
    flags = {}
    for i, s in rows.items():
        flags[i] = {
            "gi": _holds(s, "globally-idempotent"),
            "wr": _holds(s, "weakly-reductive"),
            "one": any(_holds(s, p) for p in ("left-identity", "right-identity")),
        }
    pairs = 0
    for i, s in rows.items():
        tern = at.ternary_isos(at.ternary[i].tolist())
        binary = at.binary_isos(s.ops["mul"].entries)
        for j in tern:
            if flags[i]["gi"]:
                expect(_holds(at.structure(j), "globally-idempotent"),
                       f"S={s.ops['mul'].entries}: globally idempotent not transported")
            if j not in rows:
                continue
            pairs += 1
            strong = (flags[i]["gi"] and flags[i]["wr"]) or (flags[j]["gi"] and flags[j]["wr"])
            if strong or flags[i]["one"] or flags[j]["one"]:
                expect(j in binary, f"S={s.ops['mul'].entries} T={at.tables[j].tolist()}: "
                                    "ternary iso without binary iso")
    adjoined = 0
    for s in enumerate_models(EnumSpec(2, constraints=("associative",))):
        if _holds(s, "two-sided-identity"):
            continue
        s1 = adjoin_identity(s)
        entries = s1.ops["mul"].entries
        tern = at.ternary_isos(natural_ternary(s1).entries)
        binary = at.binary_isos(entries)
        expect(set(tern) == set(binary), f"S={s.ops['mul'].entries}: [S^1] ~= [T] differs from S^1 ~= T")
        adjoined += 1
    return (f"{len(rows)} order-3 semigroups, {pairs} ternary-isomorphic semigroup pairs; "
            f"{adjoined} identity-adjoined semigroups agree with all order-3 groupoids")


def check_distributive_iso_sweep() -> str:
    at = atlas3()
    n = 3
    pairs = 0
    for s in enumerate_models(EnumSpec(n, constraints=("right-identity",))):
        i = at.index(s.ops["mul"].entries)
        tern = at.ternary_isos(at.ternary[i].tolist())
        binary = at.binary_isos(s.ops["mul"].entries)
        idem = _holds(s, "idempotent")
        for j in tern:
            T = at.structure(j)
            if _holds(T, "right-distributive"):
                expect(_holds(s, "right-distributive"),
                       f"S={s.ops['mul'].entries} T={at.tables[j].tolist()}: S not right distributive")
                if _holds(T, "left-distributive"):
                    expect(_holds(T, "idempotent"), f"T={at.tables[j].tolist()}: not idempotent")
                    if idem:
                        expect(j in binary, f"S={s.ops['mul'].entries}: not isomorphic to T")
                pairs += 1
        if idem:
            for j in binary:
                if _holds(at.structure(j), "distributive"):
                    expect(j in tern, "isomorphic groupoids with non-isomorphic ternaries")
    return f"{pairs} ternary-isomorphic pairs with right distributive T: all consequences hold"


# -- the prime map x -> x*l -----------------------------------------------------

def check_prime_map(orders=(1, 2, 3, 4)) -> str:
    total = 0
    for n in orders:
        for s in enumerate_models(rm_left_identity(n)):
            m = _mul(s)
            xl = tuple(int(v) for v in m[:, 0])
            st = s.with_op("star", OpTable(1, n, xl))
            expect(_holds(st, "star-unary"), f"{s.ops['mul'].entries}: x -> x*l is not star-unary")
            autos = [a.forward for a in automorphisms(s, constraint="x'*y = y'*x")]
            expect(autos == [xl], f"{s.ops['mul'].entries}: maps {autos} instead of {[xl]}")
            total += 1
    return f"{total} right modular groupoids with left identity: x -> x*l is the only such automorphism"


def _equivalence_flags(s: Structure) -> tuple:
    b = Binding(consts={"l": 0})
    sp = _with_prime(s, 0)
    star = sp.with_op("t", star_ternary(sp, "p"))
    nat = s.with_op("t", natural_ternary(s))
    return (
        _holds(star, "unit", b) and _holds(star, "semiheap"),
        _holds(s, "right-modular"),
        _holds(star, "laterally-commutative") and check_clause(sp, "x'' = x", Binding(star="p")).holds,
        _holds(nat, "bi-unital", b) and _holds(nat, "semiheap"),
        _holds(s, "paramedial"),
    )


def check_left_identity_equivalences(sample: int = 1500, seed: int = 7) -> str:
    n = 3
    total = rm_count = 0
    for s in enumerate_models(EnumSpec(n, constraints=("left-identity",), pins={"l": 0})):
        flags = _equivalence_flags(s)
        expect(len(set(flags)) == 1, f"{s.ops['mul'].entries}: equivalences split {flags}")
        sp = _with_prime(s, 0)
        su = _holds(sp.with_op("star", sp.ops["p"]), "star-unary")
        expect(su == _holds(s, "reversible"), f"{s.ops['mul'].entries}: prime-unary != reversible")
        total += 1
        rm_count += flags[1]
    # order 4 is out of reach exhaustively: all right modular tables plus a seeded sample
    rng = random.Random(seed)
    pool = [s.ops["mul"].entries for s in enumerate_models(rm_left_identity(4))]
    for _ in range(sample):
        rest = [rng.randrange(4) for _ in range(12)]
        pool.append((0, 1, 2, 3, *rest))
    for entries in pool:
        s = Structure("S", default_names(4), {"mul": OpTable(2, 4, entries)})
        flags = _equivalence_flags(s)
        expect(len(set(flags)) == 1, f"{entries}: equivalences split {flags}")
    spec = EnumSpec(n, (("mul", 2), ("star", 1)), ("star-unary", "left-identity"), pins={"l": 0})
    su_total = 0
    for s in enumerate_models(spec):
        m = _mul(s)
        expect(s.ops["star"].entries == tuple(int(v) for v in m[:, 0]),
               f"{s.ops['mul'].entries}: star-unary map is not x -> x*l")
        sp = s.with_op("p", s.ops["star"])
        semi = _holds(sp.with_op("t", star_ternary(sp, "p")), "semiheap")
        expect(semi == _holds(s, "right-modular"), f"{s.ops['mul'].entries}: [S]' semiheap != right modular")
        expect(_holds(s, "right-modular") == _holds(s, "medial"),
               f"{s.ops['mul'].entries}: right modular != medial")
        su_total += 1
    return (f"{total} order-3 groupoids with left identity 0 ({rm_count} right modular) and "
            f"{len(pool)} order-4 ones: five conditions agree; {su_total} star-unary ones: star = x*l and [S]' semiheap <=> right modular")


def check_star_unary_identities() -> str:
    n = 3
    spec = EnumSpec(n, (("mul", 2), ("star", 1)), ("star-unary", "left-identity"), pins={"l": 0})
    b = Binding(star="star")
    monoid_ids = ("(x*y)*z = y'*(x*z)", "(x*y)*z = y*(x*z')", "x*(y*z) = y'*(x*z)",
                  "x*(y*z) = y*(x'*z)", "x*(y*z) = y*(x*z')")
    total = 0
    for s in enumerate_models(spec):
        comm_monoid = _holds(s, "commutative") and _holds(s, "associative")
        if _holds(s, "left-lateral"):
            expect(_holds(s, "right-modular"), f"{s.ops['mul'].entries}: left lateral, not right modular")
        if _holds(s, "weakly-associative"):
            expect(comm_monoid, f"{s.ops['mul'].entries}: weakly associative, not a commutative monoid")
        for c in monoid_ids:
            if check_clause(s, c, b).holds:
                expect(comm_monoid, f"{s.ops['mul'].entries}: {c} holds, not a commutative monoid")
        if check_clause(s, "(x*y)*z = y*(x'*z)", b).holds:
            expect(_holds(s, "right-modular"), f"{s.ops['mul'].entries}: not right modular")
        total += 1
    return f"{total} star-unary groupoids with left identity 0 satisfy every implication"


# -- unit sets -----------------------------------------------------------------

REFUTED_CLAIMS = (
    "outer lateral units of [S]' commute iff the closed form implies (m*m)*(m*m) = l",
    "outer lateral units of [S] and [S]' meet in a commutative monoid with identity l",
)


def unit_sweep(orders=(1, 2, 3, 4)) -> dict:
    out = {"models": 0, "refuted": {}}
    for n in orders:
        for s in enumerate_models(rm_left_identity(n)):
            rep = check_unit_characterizations(s)
            d = rep.first_discrepancy
            expect(d is None, f"{s.ops['mul'].entries}: {d and d[0]} brute {d and sorted(d[1])} "
                              f"vs closed form {d and sorted(d[2])}")
            for label, _ in rep.refuted_claims:
                out["refuted"].setdefault(label, []).append(s.ops["mul"].entries)
            out["models"] += 1
    return out


def check_unit_closed_forms() -> str:
    r = unit_sweep()
    return f"{r['models']} right modular groupoids with left identity: all seven closed forms agree"


def check_unit_corollaries() -> str:
    r = unit_sweep()
    other = {k: v for k, v in r["refuted"].items() if k not in REFUTED_CLAIMS}
    expect(not other, "refuted: " + "; ".join(f"{k} on {v[0]}" for k, v in other.items()))
    return f"{r['models']} models: every other unit-set claim holds"


def check_unit_counterexample() -> str:
    s = corpus.prop39()
    rep = check_unit_characterizations(s)
    refuted = [c for c, _ in rep.refuted_claims]
    expect(sorted(refuted) == sorted(REFUTED_CLAIMS),
           f"prop39 refutes {refuted or 'nothing'}")
    expect(not _holds(s, "commutative"), "prop39 is commutative")
    olu = {x for x in range(s.n) if check_clause(
        s.with_op("t", natural_ternary(s)), "[l [l x l] l] = x", Binding(consts={"l": x})).holds}
    expect(olu == set(range(s.n)), "not every element is an outer lateral unit")
    return ("prop39: every element is an outer lateral unit of both ternaries yet the "
            "groupoid is not commutative, so both commutative-monoid claims fail")


# -- reconstruction from ternary operations ------------------------------------

def check_reconstructions(orders=(1, 2, 3, 4)) -> str:
    total = 0
    for n in orders:
        for s in enumerate_models(rm_left_identity(n)):
            sp = _with_prime(s, 0)
            st = s.with_op("t", star_ternary(sp, "p")).with_op("hat", sp.ops["p"])
            out = reconstruct(st, "lateral-unital", 0, hat="hat")
            expect(out.ops["mul"] == s.ops["mul"], f"{s.ops['mul'].entries}: lateral-unital roundtrip")
            su = s.with_op("star", sp.ops["p"])
            st2 = su.with_op("t", star_ternary(su, "star")).with_op("hat", sp.ops["p"])
            out = reconstruct(st2, "star-unital", 0, hat="hat")
            expect(out.ops["mul"] == s.ops["mul"], f"{s.ops['mul'].entries}: star-unital roundtrip")
            nt = s.with_op("t", natural_ternary(s))
            out = reconstruct(nt, "star-bi-unital", 0)
            expect(out.ops["mul"] == s.ops["mul"], f"{s.ops['mul'].entries}: star-bi-unital roundtrip")
            d = dual_groupoid(s)
            dt = d.with_op("t", natural_ternary(d))
            out = reconstruct(dt, "dual", 0)
            expect(out.ops["mul"] == d.ops["mul"], f"{s.ops['mul'].entries}: dual roundtrip")
            total += 1
    extra = 0
    spec = EnumSpec(3, (("mul", 2), ("star", 1)), ("star-unary", "left-identity"), pins={"l": 0})
    for s in [*enumerate_models(spec), corpus.example2()]:
        l = s.consts.get("l", 0)
        st = s.with_op("t", star_ternary(s, "star")).with_op("hat", s.ops["star"])
        out = reconstruct(st, "star-unital", l, hat="hat")
        expect(out.ops["mul"] == s.ops["mul"], f"{s.ops['mul'].entries}: star-unital roundtrip")
        out = reconstruct(s.with_op("t", natural_ternary(s)), "star-bi-unital", l)
        expect(out.ops["mul"] == s.ops["mul"], f"{s.ops['mul'].entries}: star-bi-unital roundtrip")
        extra += 1
    return (f"{total} right modular groupoids with left identity: four schemes invert; "
            f"{extra} star-unary groupoids: two schemes invert")


# -- groupoids determined by an automorphism -----------------------------------

def clifford_instances(orders=(1, 2, 3, 4)):
    out = []
    for n in orders:
        for s in enumerate_models(inverse_semigroups(n, up_to_iso=True), name=f"I{n}_"):
            if not is_clifford(s):
                continue
            for a in admissible_automorphisms(s):
                out.append((s, a))
    for g in (cyclic_group(3), cyclic_group(4), cyclic_group(5)):
        for s in (g, group_with_zero(g)):
            for a in admissible_automorphisms(s):
                out.append((s, a))
    return out


def _alpha_identities(base: Structure, sa: Structure, alpha) -> None:
    """Identities every determined groupoid satisfies.  Inverses in S(alpha) are
    found by direct search under the left-bracketed reading (b a) b = b."""
    p = _mul(sa)
    m = _mul(base)
    a = np.asarray(alpha)
    n = sa.n
    x, y, z, w = np.ix_(*[np.arange(n)] * 4)
    ctx = f"{base.name} alpha={tuple(alpha)}"
    expect((p[p[x, y][..., 0], z[..., 0]] == p[a[x[..., 0]], p[y, z][..., 0]]).all(),
           ctx + ": (ab)c != (alpha a)(bc)")
    expect((p[p[p[x, y], z], w] == p[x, p[p[y, z], w]]).all(), ctx + ": ((ab)c)d != a((bc)d)")
    inv = []
    for u in range(n):
        cands = [v for v in range(n) if p[p[u, v], u] == u and p[p[v, u], v] == v]
        expect(len(cands) == 1, ctx + f": {len(cands)} inverses of {u}")
        inv.append(cands[0])
    inv = np.asarray(inv)
    idem = [e for e in range(n) if p[e, e] == e]
    for u in range(n):
        expect(a[u] == p[u, p[u, inv[u]]], ctx + f": alpha {u} != {u}({u}{u}^-1)")
        expect(m[m[u, a[inv[u]]], u] == u and a[inv[u]] == m[a[inv[u]], m[u, a[inv[u]]]],
               ctx + f": alpha({u}^-1) is not the inverse of {u} in the base")
        for e in idem:
            expect(p[e, u] == p[a[u], e], ctx + f": {e}{u} != (alpha {u}){e}")
    for e, f in product(idem, repeat=2):
        expect(p[e, f] == p[f, e] and p[e, f] in idem, ctx + ": idempotents do not form a semilattice")


def check_alpha_determined() -> str:
    z3 = cyclic_group(3)
    neg = (0, 2, 1)
    s = alpha_determined(z3, neg)
    expect(_holds(s, "right-modular"), "S(alpha) of Z3 is not right modular")
    expect(left_identities(s) == [0], f"left identities {left_identities(s)}")
    std = standard_ternary(s, reading="left")
    m = _mul(z3)
    inv = [(-x) % 3 for x in range(3)]
    formula = tuple(int(m[m[a, inv[b_]], c]) for a, b_, c in product(range(3), repeat=3))
    expect(std.entries == formula, "standard ternary differs from a b^-1 c")
    inst = 0
    for base, alpha in clifford_instances():
        sa = alpha_determined(base, alpha)
        t = sa.with_op("t", standard_ternary(sa, reading="left"))
        expect(_holds(t, "generalised-heap"), f"{base.name} alpha={alpha}: not a generalised heap")
        expect(t.ops["t"] == clifford_standard_ternary(base), f"{base.name} alpha={alpha}: depends on alpha")
        for l in left_identities(sa):
            expect(_holds(t, "bi-unital", Binding(consts={"l": l})), f"{base.name}: left identity not bi-unitary")
        expect(sa.ops["alpha"].entries == tuple(alpha), "alpha not stored")
        _alpha_identities(base, sa, alpha)
        inst += 1
    return (f"Z3 with negation: right modular, left identity 0, standard ternary = a b^-1 c; "
            f"{inst} determined groupoids give alpha-independent generalised heaps")


def check_alpha_iso_sweep() -> str:
    inst = clifford_instances(orders=(1, 2, 3, 4))
    terns = []
    for base, alpha in inst:
        sa = alpha_determined(base, alpha)
        terns.append((3, standard_ternary(sa, reading="left").entries))
    pairs = 0
    for i, (si, _) in enumerate(inst):
        for j, (sj, _) in enumerate(inst):
            if si.n != sj.n or j < i:
                continue
            t_iso = bool(search_tables(si.n, [terns[i]], [terns[j]]))
            b_iso = iso_search(si, sj) is not None
            expect(t_iso == b_iso, f"{si.name} vs {sj.name}: ternary {t_iso}, semigroup {b_iso}")
            pairs += 1
    return f"{len(inst)} determined groupoids, {pairs} pairs: standard ternaries iso <=> semigroups iso"


# -- heaps, groups and Ward quasigroups ----------------------------------------

def heap_list():
    out = []
    for n in (1, 2, 3):
        out += _models(heaps(n))
    return out


def group_list(orders=range(1, 7)):
    out = []
    for n in orders:
        out += _models(groups(n))
    return out


def check_heap_characterisation() -> str:
    clauses = ("[x x y] = y", "[y x x] = y", "[x y z] = q => [z q x] = y",
               "[x y z] = [[x y q] q z]", "[x y z] = [x [q z y] q]")
    for n in (1, 2, 3):
        a = set(enumerate_tables(heaps(n)))
        b = set(enumerate_tables(EnumSpec(n, (("t", 3),), clauses)))
        expect(a == b, f"order {n}: {len(a)} heaps vs {len(b)} models of the characterisation")
    for h in heap_list():
        t = _tern(h)
        n = h.n
        for x, y, z in product(range(n), repeat=3):
            expect((t[x, y, z] == x) == (y == z) and (t[x, y, z] == z) == (x == y),
                   f"{h.name}: [xyz] = x iff y = z fails")
        for x, z in product(range(n), repeat=2):
            expect(len(set(t[x, :, z].tolist())) == n, f"{h.name}: middle argument not cancellative")
            expect(len(set(t[:, x, z].tolist())) == n and len(set(t[x, z, :].tolist())) == n,
                   f"{h.name}: outer argument not cancellative")
    return "heap models equal the alternative characterisation at orders 1-3; cancellation laws hold"


WARD_IDENTITIES = ("x*x = y*y", "x*y = (x*z)*(y*z)", "x*(y*y) = x")


def check_ward_variety(orders=(1, 2, 3, 4)) -> str:
    counts = []
    for n in orders:
        a = set(enumerate_tables(EnumSpec(n, constraints=WARD_IDENTITIES)))
        b = set(enumerate_tables(EnumSpec(n, constraints=("ward-quasigroup",))))
        expect(a == b, f"order {n}: {len(a)} vs {len(b)}")
        c = set(enumerate_tables(EnumSpec(n, constraints=("ward-groupoid", "right-solvable"))))
        expect(a == c, f"order {n}: right solvable Ward groupoids differ ({len(c)})")
        counts.append(f"{n}:{len(a)}")
    return "identity models = Ward quasigroups = right solvable Ward groupoids (" + ", ".join(counts) + ")"


def check_heap_translations() -> str:
    hs = heap_list() + [psi(g) for g in group_list(range(1, 6))]
    total = 0
    for h in hs:
        n = h.n
        for e, f in product(range(n), repeat=2):
            ge, gf = omega(h, e), omega(h, f)
            d = delta_left(h, e, f)
            expect(is_isomorphism(d, n, [(2, ge.ops["mul"].entries)], [(2, gf.ops["mul"].entries)]),
                   f"{h.name}: [f e x] is not a group isomorphism for e={e}, f={f}")
            we, wf = pi_map(h, e), pi_map(h, f)
            d = delta_right(h, e, f)
            expect(is_isomorphism(d, n, [(2, we.ops["mul"].entries)], [(2, wf.ops["mul"].entries)]),
                   f"{h.name}: [x e f] is not a Ward isomorphism for e={e}, f={f}")
            be, bf = beta_map(h, e), beta_map(h, f)
            d = [int(v) for v in _tern(h)[f, e, :]]
            expect(is_isomorphism(d, n, [(3, be.ops["t"].entries)], [(3, bf.ops["t"].entries)]),
                   f"{h.name}: [f e x] does not carry beta at e to beta at f")
            total += 1
    return f"{len(hs)} heaps, {total} base-point pairs: translations are isomorphisms"


def roundtrip_report(group_orders=range(1, 7)) -> dict:
    """Exact equalities and certified isomorphisms between groups, heaps and
    Ward quasigroups; raises on the first failure."""
    tally = {k: 0 for k in ("gamma-phi", "phi-gamma", "pi-lambda", "lambda-pi", "psi-omega",
                            "omega-psi", "alpha-beta", "beta-alpha", "sigma-theta", "theta-sigma")}
    for g in group_list(group_orders):
        e = group_identity(g)
        w = phi_g(g)
        expect(gamma_wq(w).ops["mul"] == g.ops["mul"], f"{g.ops['mul'].entries}: gamma(phi(G)) != G")
        tally["gamma-phi"] += 1
        expect(phi_g(gamma_wq(w)).ops["mul"] == w.ops["mul"], f"{g.ops['mul'].entries}: phi(gamma(W)) != W")
        tally["phi-gamma"] += 1
        pl = pi_map(lambda_map(w), e)
        cert = iso_search(pl, w)
        expect(cert is not None, f"{g.ops['mul'].entries}: pi(lambda(W)) !~= W")
        tally["pi-lambda"] += 1
        og = omega(psi(g), e)
        cert = iso_search(og, g)
        expect(cert is not None, f"{g.ops['mul'].entries}: omega(psi(G)) !~= G")
        tally["omega-psi"] += 1
        th = theta(g)
        expect(sigma(th, e).ops["mul"] == g.ops["mul"], f"{g.ops['mul'].entries}: sigma(theta(G)) != G")
        tally["sigma-theta"] += 1
        nw = w.with_op("t", natural_ternary(w))
        nwt = Structure(nw.name, nw.names, {"t": nw.ops["t"]})
        expect(theta(sigma(nwt, e)).ops["t"] == nwt.ops["t"],
               f"{g.ops['mul'].entries}: theta(sigma([W])) != [W]")
        tally["theta-sigma"] += 1
        ba = beta_map(alpha_map(nwt, e), e)
        expect(iso_search(ba, nwt, kind="ternary") is not None,
               f"{g.ops['mul'].entries}: beta(alpha([W])) !~= [W]")
        tally["beta-alpha"] += 1
    for h in heap_list() + [psi(g) for g in group_list(group_orders)]:
        for e in range(h.n):
            expect(lambda_map(pi_map(h, e)).ops["t"] == h.ops["t"], f"{h.name}: lambda(pi(H)) != H at {e}")
            tally["lambda-pi"] += 1
            expect(psi(omega(h, e)).ops["t"] == h.ops["t"], f"{h.name}: psi(omega(H)) != H at {e}")
            tally["psi-omega"] += 1
            expect(alpha_map(beta_map(h, e), e).ops["t"] == h.ops["t"],
                   f"{h.name}: alpha(beta(H)) != H at {e}")
            tally["alpha-beta"] += 1
    return tally


def check_roundtrips() -> str:
    t = roundtrip_report()
    return "all hold: " + ", ".join(f"{k} x{v}" for k, v in t.items())


# -- inverse semigroups --------------------------------------------------------

def inverse_report(orders=(1, 2, 3, 4)) -> dict:
    out = {"models": 0}
    for n in orders:
        for s in enumerate_models(inverse_semigroups(n)):
            tri = inverse_triple(s)
            expect(_holds(tri, "generalised-heap"), f"{s.ops['mul'].entries}: standard ternary not a generalised heap")
            expect(not gh_inverse_failures(tri), f"{s.ops['mul'].entries}: recovery hypotheses fail")
            back = gh_to_inverse_semigroup(tri)
            expect(back.ops["mul"] == s.ops["mul"], f"{s.ops['mul'].entries}: g(i(S)) != S")
            again = inverse_triple(back)
            expect(again.ops == tri.ops, f"{s.ops['mul'].entries}: i(g(i(S))) != i(S)")
            nat = Structure(s.name, s.names, {"t": natural_ternary(s), "star": tri.ops["star"],
                                              "hat": tri.ops["hat"]})
            back = natural_ternary_inverse_check(nat)
            expect(back.ops["mul"] == s.ops["mul"], f"{s.ops['mul'].entries}: natural recovery differs")
            out["models"] += 1
    return out


def check_inverse_standard() -> str:
    r = inverse_report()
    return (f"{r['models']} inverse semigroups of order <= 4: standard ternaries are generalised "
            f"heaps and both recoveries return the original table")


# -- registry ------------------------------------------------------------------

CHECKS = [
    PaperCheck("prop2", "natural ternary of a right modular groupoid that is not a semiheap", check_prop2),
    PaperCheck("prop39", "permuted ternaries of a right modular groupoid with left identity fail "
                         "para-associativity", check_prop39),
    PaperCheck("prop39-dual", "natural ternary of the dual table is not a semiheap", check_prop39_dual),
    PaperCheck("prop39-heap", "the same table squares to l and its natural ternary is an outer "
                              "lateral heap", check_prop39_heap),
    PaperCheck("thm20-roundtrip", "right modular groupoids with left identity 0 correspond to "
                                  "laterally commutative semiheaps bi-unital at 0", check_correspondence),
    PaperCheck("ex1-pair", "non-isomorphic groupoids with identical natural ternaries", check_ex1_pair),
    PaperCheck("ex2-not-right-modular", "star-unary groupoid with left identity that is not right "
                                        "modular", check_ex2),
    PaperCheck("ex3-not-standard", "generalised heap that is not a standard ternary", check_ex3),
    PaperCheck("ex4-not-natural", "associative ternary that is not a natural ternary of an inverse "
                                  "semigroup", check_ex4),
    PaperCheck("sweep-paramedial", "with a left identity, right modular <=> paramedial, and "
                                   "right modular => reversible", check_paramedial),
    PaperCheck("reversible-counterexample", "a reversible groupoid with left identity that is not "
                                            "right modular", check_reversible_counterexample),
    PaperCheck("sweep-ag-natural", "AG* and AG** natural ternaries are laterally commutative "
                                   "semiheaps with the generalised heap axioms", check_ag_natural),
    PaperCheck("sweep-lateral-commutativity", "right modular <=> laterally commutative natural ternary",
               check_lateral_commutativity),
    PaperCheck("sweep-ag-star-permutations", "all six permuted natural ternaries of AG* groupoids",
               check_ag_star_permutations),
    PaperCheck("sweep-iso-monoid", "consequences of a ternary isomorphism out of a groupoid with "
                                   "identity", check_monoid_iso_sweep),
    PaperCheck("sweep-iso-semigroup", "ternary isomorphism implies isomorphism for semigroups with "
                                      "one-sided identities or reductive and globally idempotent",
               check_semigroup_iso_sweep),
    PaperCheck("sweep-iso-distributive", "ternary isomorphism onto distributive groupoids",
               check_distributive_iso_sweep),
    PaperCheck("sweep-iso-right-modular", "ternary iso <=> iso for right modular groupoids with "
                                          "left identity", check_rm_iso_sweep),
    PaperCheck("sweep-iso-prime", "groupoids whose natural ternary matches [S]'",
               check_rm_star_iso_sweep),
    PaperCheck("prime-map", "x -> x*l is the unique star-unary automorphism", check_prime_map),
    PaperCheck("left-identity-equivalences", "conditions equivalent to right modularity in a "
                                             "groupoid with left identity",
               check_left_identity_equivalences),
    PaperCheck("star-unary-identities", "identities forcing right modularity or a commutative "
                                        "monoid", check_star_unary_identities),
    PaperCheck("units-closed-forms", "lateral and outer lateral unit sets vs closed forms",
               check_unit_closed_forms),
    PaperCheck("units-corollaries", "remaining claims about unit sets", check_unit_corollaries),
    PaperCheck("units-counterexample", "a table refuting the two commutative-monoid claims",
               check_unit_counterexample),
    PaperCheck("reconstruct-roundtrips", "groupoids recovered from their ternary operations",
               check_reconstructions),
    PaperCheck("alpha-determined", "groupoids determined by automorphisms of Clifford semigroups",
               check_alpha_determined),
    PaperCheck("alpha-iso-sweep", "standard ternaries iso <=> underlying semigroups iso",
               check_alpha_iso_sweep),
    PaperCheck("heap-characterisation", "alternative heap axioms and cancellation",
               check_heap_characterisation),
    PaperCheck("ward-variety", "Ward quasigroups as a variety", check_ward_variety),
    PaperCheck("heap-translations", "base-point changes are isomorphisms", check_heap_translations),
    PaperCheck("group-heap-ward-roundtrips", "maps between groups, heaps, Ward quasigroups and "
                                             "their natural ternaries", check_roundtrips),
    PaperCheck("inverse-roundtrips", "standard and natural ternaries of inverse semigroups",
               check_inverse_standard),
]
CHECKS.sort(key=lambda c: c.id)


def select_checks(prefix: str | None = None) -> list[PaperCheck]:
    if not prefix:
        return list(CHECKS)
    chosen = [c for c in CHECKS if c.id.startswith(prefix)]
    if not chosen:
        raise UnknownFilter(f"no check id starts with {prefix!r}")
    return chosen


def run_check(check: PaperCheck) -> Outcome:
    try:
        details = check.run()
        return Outcome(check.id, "pass", details)
    except CheckFailed as exc:
        return Outcome(check.id, "fail", str(exc))
    except AlgebraError as exc:
        return Outcome(check.id, "fail", f"{type(exc).__name__}: {exc}")


def run_suite(prefix: str | None = None) -> list[Outcome]:
    return [run_check(c) for c in select_checks(prefix)]


def format_json(outcomes: list[Outcome]) -> str:
    return json.dumps([o.as_dict() for o in outcomes], indent=2)


def format_text(outcomes: list[Outcome]) -> str:
    lines = [f"{o.status.upper():4} {o.id}: {o.details}" for o in outcomes]
    passed = sum(o.passed for o in outcomes)
    lines.append(f"{passed}/{len(outcomes)} checks passed")
    return "\n".join(lines)
