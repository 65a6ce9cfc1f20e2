"""Isomorphism and automorphism search for tabular structures.

The search assigns images to domain elements in index order, trying
candidate images in ascending order, so the first certificate found is the
lexicographically least one.  Candidates are restricted to elements with the
same invariant profile (counts that any isomorphism must preserve), and each
table entry is checked as soon as its arguments and value all have images.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import permutations, product
from typing import Sequence

from .clauses import Binding, parse_clause, check_tables
from .errors import AlgebraError, MissingBinding
from .structure import Structure

KINDS = {
    "binary": (("mul", 2),),
    "ternary": (("t", 3),),
    "binary-with-unary": (("mul", 2), ("star", 1)),
}


@dataclass(frozen=True)
class Bijection:
    forward: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "forward", tuple(self.forward))
        if sorted(self.forward) != list(range(len(self.forward))):
            raise AlgebraError(f"{self.forward!r} is not a permutation")

    def __call__(self, x: int) -> int:
        return self.forward[x]

    def inverse(self) -> "Bijection":
        inv = [0] * len(self.forward)
        for i, p in enumerate(self.forward):
            inv[p] = i
        return Bijection(tuple(inv))

    def compose(self, other: "Bijection") -> "Bijection":
        """``self`` after ``other``."""
        return Bijection(tuple(self.forward[other.forward[i]] for i in range(len(self.forward))))

    @property
    def is_identity(self) -> bool:
        return self.forward == tuple(range(len(self.forward)))

    def format(self, left: Structure, right: Structure) -> str:
        return " ".join(f"{left.names[i]}->{right.names[p]}" for i, p in enumerate(self.forward))


def _tables(s: Structure, kind: str, binding: Binding | None):
    binding = binding or Binding()
    if kind not in KINDS:
        raise AlgebraError(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}")
    out = []
    for field_name, arity in KINDS[kind]:
        op = getattr(binding, field_name)
        if op not in s.ops:
            raise MissingBinding(f"{s.name!r} has no op {op!r} ({field_name})")
        table = s.ops[op]
        if table.arity != arity:
            raise MissingBinding(f"op {op!r} of {s.name!r} has arity {table.arity}, expected {arity}")
        out.append((arity, table.entries))
    return out


def _counts(values) -> tuple[int, ...]:
    return tuple(sorted(Counter(values).values()))


def profiles(n: int, tables: Sequence[tuple[int, Sequence[int]]]) -> list[tuple]:
    """Per-element invariant vectors; equal under any isomorphism."""
    out = [[] for _ in range(n)]
    for arity, e in tables:
        occurs = Counter(e)
        if arity == 1:
            pre = occurs
            for x in range(n):
                out[x].append((e[x] == x, pre[x], e[e[x]] == x))
        elif arity == 2:
            for x in range(n):
                row = e[x * n:(x + 1) * n]
                col = e[x::n]
                out[x].append((
                    e[x * n + x] == x,
                    e[e[x * n + x] * n + x] == x,
                    occurs[x],
                    _counts(row),
                    _counts(col),
                    sum(row[y] == y for y in range(n)),
                    sum(col[y] == y for y in range(n)),
                    row.count(x),
                    col.count(x),
                ))
        else:
            nn = n * n
            for x in range(n):
                block = e[x * nn:(x + 1) * nn]
                out[x].append((
                    e[x * nn + x * n + x] == x,
                    occurs[x],
                    _counts(block),
                    sum(e[x * nn + y * n + x] == y for y in range(n)),
                    sum(e[x * nn + x * n + y] == y for y in range(n)),
                    sum(e[y * nn + x * n + x] == y for y in range(n)),
                    block.count(x),
                ))
    return [tuple(p) for p in out]


def profile_signature(profs: Sequence[tuple]) -> tuple:
    """Order-free summary; different signatures rule out isomorphism."""
    return tuple(sorted(profs))


def _buckets(n: int, tables_s):
    """Entry checks grouped by the largest element they mention."""
    buckets = [[] for _ in range(n)]
    for k, (arity, e) in enumerate(tables_s):
        for args in product(range(n), repeat=arity):
            idx = 0
            for a in args:
                idx = idx * n + a
            v = e[idx]
            buckets[max(max(args), v)].append((k, args, v))
    return buckets


def _dfs(n, tables_s, tables_t, allowed, find_all=False, accept=None):
    buckets = _buckets(n, tables_s)
    t_entries = [e for _, e in tables_t]
    f = [-1] * n
    used = [False] * n
    found = []

    def consistent(k):
        for op, args, v in buckets[k]:
            idx = 0
            for a in args:
                idx = idx * n + f[a]
            if t_entries[op][idx] != f[v]:
                return False
        return True

    def go(k):
        if k == n:
            cand = tuple(f)
            if accept is None or accept(cand):
                found.append(cand)
                return not find_all
            return False
        for img in allowed[k]:
            if used[img]:
                continue
            f[k] = img
            used[img] = True
            if consistent(k) and go(k + 1):
                return True
            used[img] = False
            f[k] = -1
        return False

    go(0)
    return found


def search_tables(n: int, tables_s, tables_t, profs_s=None, profs_t=None,
                  find_all: bool = False, accept=None) -> list[tuple[int, ...]]:
    """Core search over raw ``(arity, entries)`` lists; returns certificates."""
    profs_s = profs_s if profs_s is not None else profiles(n, tables_s)
    profs_t = profs_t if profs_t is not None else profiles(n, tables_t)
    if profile_signature(profs_s) != profile_signature(profs_t):
        return []
    allowed = [[y for y in range(n) if profs_t[y] == profs_s[x]] for x in range(n)]
    return _dfs(n, tables_s, tables_t, allowed, find_all, accept)


def is_isomorphism(forward: Sequence[int], n: int, tables_s, tables_t) -> bool:
    """Entrywise re-verification on every tuple."""
    if sorted(forward) != list(range(n)):
        return False
    for (arity, es), (_, et) in zip(tables_s, tables_t):
        for args in product(range(n), repeat=arity):
            i = j = 0
            for a in args:
                i = i * n + a
                j = j * n + forward[a]
            if forward[es[i]] != et[j]:
                return False
    return True


def iso_search(left: Structure, right: Structure, kind: str = "binary",
               left_binding: Binding | None = None,
               right_binding: Binding | None = None) -> Bijection | None:
    """Lexicographically least isomorphism ``left -> right``, or ``None``."""
    if left.n != right.n:
        return None
    ts = _tables(left, kind, left_binding)
    tt = _tables(right, kind, right_binding or left_binding)
    hits = search_tables(left.n, ts, tt)
    if not hits:
        return None
    if not is_isomorphism(hits[0], left.n, ts, tt):
        raise AssertionError("search returned a map that is not an isomorphism")
    return Bijection(hits[0])


def brute_force_iso(left: Structure, right: Structure, kind: str = "binary",
                    left_binding: Binding | None = None,
                    right_binding: Binding | None = None) -> Bijection | None:
    """Reference: first permutation in lexicographic order that works."""
    if left.n != right.n:
        return None
    ts = _tables(left, kind, left_binding)
    tt = _tables(right, kind, right_binding or left_binding)
    for p in permutations(range(left.n)):
        if is_isomorphism(p, left.n, ts, tt):
            return Bijection(p)
    return None


def automorphisms(s: Structure, binding: Binding | None = None, kind: str = "binary",
                  constraint: str | None = None) -> list[Bijection]:
    """All automorphisms in lexicographic order.

    ``constraint`` is a clause in which ``'`` stands for the candidate map,
    e.g. ``"x'*y = y'*x"``.
    """
    binding = binding or Binding()
    ts = _tables(s, kind, binding)
    accept = None
    if constraint is not None:
        clause = parse_clause(constraint)
        mul = s.ops[binding.mul].entries if binding.mul in s.ops else None
        tern = s.ops[binding.t].entries if binding.t in s.ops else None
        hat = s.ops[binding.hat].entries if binding.hat in s.ops else None
        consts = dict(s.consts)
        consts.update(binding.consts)

        def satisfies(cand):
            return check_tables(clause, s.n, mul, tern, cand, hat, consts) is None

        accept = satisfies

    hits = search_tables(s.n, ts, ts, find_all=True, accept=accept)
    return [Bijection(h) for h in hits]


def canonical_form(n: int, tables, fixed: Sequence[int] = ()) -> tuple:
    """Lexicographically least concatenated tables over all relabellings
    (fixing the indices in ``fixed``).  Tables are ``(arity, entries)``."""
    best = None
    for p in permutations(range(n)):
        if any(p[i] != i for i in fixed):
            continue
        inv = [0] * n
        for i, q in enumerate(p):
            inv[q] = i
        key = []
        for arity, e in tables:
            for args in product(range(n), repeat=arity):
                src = 0
                for a in args:
                    src = src * n + inv[a]
                key.append(p[e[src]])
        key = tuple(key)
        if best is None or key < best:
            best = key
    return best
