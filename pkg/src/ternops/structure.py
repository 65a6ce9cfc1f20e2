"""Finite carriers, operation tables and the text file format.

Elements are dense indices ``0..n-1``; names only exist at the I/O boundary.
Tables are stored flat and row-major, so a ternary entry ``t[a, b, c]`` lives
at ``a*n*n + b*n + c``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import product
from types import MappingProxyType
from typing import Callable, Iterable, Mapping, Sequence

from .errors import (
    AlgebraError,
    ArityMismatch,
    IndexOutOfRange,
    ParseError,
    UnknownOp,
)

MAX_TERNARY_ORDER = 64

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_.\-]*$")


@dataclass(frozen=True)
class OpTable:
    """An operation of arity 1, 2 or 3 on ``n`` elements."""

    arity: int
    n: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.arity not in (1, 2, 3):
            raise AlgebraError(f"arity must be 1, 2 or 3, got {self.arity}")
        if self.n < 1:
            raise AlgebraError("order must be positive")
        if self.arity == 3 and self.n > MAX_TERNARY_ORDER:
            raise AlgebraError(f"ternary tables are capped at order {MAX_TERNARY_ORDER}")
        entries = tuple(int(v) for v in self.entries)
        if len(entries) != self.n ** self.arity:
            raise AlgebraError(
                f"table of arity {self.arity} on {self.n} elements needs "
                f"{self.n ** self.arity} entries, got {len(entries)}"
            )
        for v in entries:
            if not 0 <= v < self.n:
                raise IndexOutOfRange(f"table entry {v} outside 0..{self.n - 1}")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_function(cls, n: int, arity: int, fn: Callable[..., int]) -> "OpTable":
        return cls(arity, n, tuple(fn(*args) for args in product(range(n), repeat=arity)))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "OpTable":
        n = len(rows)
        return cls(2, n, tuple(v for row in rows for v in row))

    def index(self, args: Sequence[int]) -> int:
        if len(args) != self.arity:
            raise ArityMismatch(f"expected {self.arity} arguments, got {len(args)}")
        i = 0
        for a in args:
            if not 0 <= a < self.n:
                raise IndexOutOfRange(f"element index {a} outside 0..{self.n - 1}")
            i = i * self.n + a
        return i

    def __call__(self, *args: int) -> int:
        return self.entries[self.index(args)]

    def rows(self) -> list[list[int]]:
        """Binary table as a list of rows (first argument selects the row)."""
        if self.arity != 2:
            raise ArityMismatch("rows() needs a binary table")
        n = self.n
        return [list(self.entries[i * n:(i + 1) * n]) for i in range(n)]

    def permuted(self, perm: Sequence[int]) -> "OpTable":
        """Transport the table along the bijection ``i -> perm[i]``."""
        n = self.n
        inv = [0] * n
        for i, p in enumerate(perm):
            inv[p] = i
        out = [0] * len(self.entries)
        for args in product(range(n), repeat=self.arity):
            src = 0
            for a in args:
                src = src * n + inv[a]
            dst = 0
            for a in args:
                dst = dst * n + a
            out[dst] = perm[self.entries[src]]
        return OpTable(self.arity, n, tuple(out))


@dataclass(frozen=True)
class Structure:
    """A carrier with named operation tables and named constants."""

    name: str
    names: tuple[str, ...]
    ops: Mapping[str, OpTable] = field(default_factory=dict)
    consts: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self):
        names = tuple(self.names)
        if not names:
            raise AlgebraError("carrier must be non-empty")
        if len(set(names)) != len(names):
            raise AlgebraError("element names must be distinct")
        for tok in names:
            if not tok or any(c.isspace() for c in tok) or tok.startswith("#"):
                raise AlgebraError(f"bad element token {tok!r}")
        n = len(names)
        for op_name, table in self.ops.items():
            if table.n != n:
                raise AlgebraError(f"op {op_name!r} has order {table.n}, carrier has {n}")
        for c, v in self.consts.items():
            if not 0 <= v < n:
                raise IndexOutOfRange(f"constant {c!r} = {v} outside 0..{n - 1}")
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "ops", MappingProxyType(dict(self.ops)))
        object.__setattr__(self, "consts", MappingProxyType({k: int(v) for k, v in self.consts.items()}))

    def __hash__(self):
        return hash((self.name, self.names, tuple(sorted(self.ops.items())),
                     tuple(sorted(self.consts.items()))))

    @property
    def n(self) -> int:
        return len(self.names)

    def op(self, name: str) -> OpTable:
        try:
            return self.ops[name]
        except KeyError:
            raise UnknownOp(f"structure {self.name!r} has no op {name!r}") from None

    def eval(self, op_name: str, *args: int) -> int:
        return self.op(op_name)(*args)

    def element(self, token: str) -> int:
        try:
            return self.names.index(token)
        except ValueError:
            raise AlgebraError(f"no element named {token!r} in {self.name!r}") from None

    def replace(self, *, name: str | None = None, names: Sequence[str] | None = None,
                ops: Mapping[str, OpTable] | None = None,
                consts: Mapping[str, int] | None = None) -> "Structure":
        return Structure(
            self.name if name is None else name,
            tuple(self.names if names is None else names),
            dict(self.ops if ops is None else ops),
            dict(self.consts if consts is None else consts),
        )

    def with_op(self, op_name: str, table: OpTable) -> "Structure":
        ops = dict(self.ops)
        ops[op_name] = table
        return self.replace(ops=ops)

    def with_const(self, const_name: str, value: int) -> "Structure":
        consts = dict(self.consts)
        consts[const_name] = value
        return self.replace(consts=consts)

    def permuted(self, perm: Sequence[int], name: str | None = None) -> "Structure":
        """Isomorphic copy: element ``i`` becomes ``perm[i]`` (names travel along)."""
        names = [""] * self.n
        for i, p in enumerate(perm):
            names[p] = self.names[i]
        return Structure(
            self.name if name is None else name,
            tuple(names),
            {k: t.permuted(perm) for k, t in self.ops.items()},
            {k: perm[v] for k, v in self.consts.items()},
        )


def default_names(n: int) -> tuple[str, ...]:
    return tuple(str(i) for i in range(n))


def groupoid(rows: Sequence[Sequence[int]], names: Sequence[str] | None = None,
             name: str = "S", consts: Mapping[str, int] | None = None,
             op: str = "mul") -> Structure:
    table = OpTable.from_rows(rows)
    return Structure(name, tuple(names) if names else default_names(table.n),
                     {op: table}, dict(consts or {}))


def from_function(n: int, fn: Callable[..., int], arity: int = 2, name: str = "S",
                  op: str | None = None, names: Sequence[str] | None = None) -> Structure:
    op = op or {1: "star", 2: "mul", 3: "t"}[arity]
    return Structure(name, tuple(names) if names else default_names(n),
                     {op: OpTable.from_function(n, arity, fn)})


def evaluate(s: Structure, op_name: str, args: Sequence[int]) -> int:
    """Table lookup with full error checking."""
    return s.op(op_name)(*args)


def identity_map(n: int) -> OpTable:
    return OpTable(1, n, tuple(range(n)))


def adjoin_identity(s: Structure, op: str = "mul", const: str = "1",
                    token: str | None = None) -> Structure:
    """Add a fresh two-sided identity element to the binary op ``op``.

    The new element is the last index and is named by ``const`` unless that
    token is already taken.  Other ops are dropped since they have no
    canonical extension.
    """
    table = s.op(op)
    if table.arity != 2:
        raise ArityMismatch(f"op {op!r} is not binary")
    n = s.n
    if token is None:
        token = const
        while token in s.names:
            token += "'"
    old = table.entries

    def mul(a, b):
        if a == n:
            return b
        if b == n:
            return a
        return old[a * n + b]

    new = OpTable.from_function(n + 1, 2, mul)
    consts = {k: v for k, v in s.consts.items()}
    consts[const] = n
    return Structure(s.name, s.names + (token,), {op: new}, consts)


# -- text format ---------------------------------------------------------------

def _strip_comment(line: str) -> str:
    i = line.find("#")
    return line if i < 0 else line[:i]


def _tokens_with_cols(line: str) -> list[tuple[str, int]]:
    return [(m.group(0), m.start() + 1) for m in re.finditer(r"\S+", line)]


class _Lines:
    def __init__(self, text: str):
        self.raw = text.splitlines()
        self.i = 0

    def peek(self):
        while self.i < len(self.raw):
            body = _strip_comment(self.raw[self.i])
            if body.strip():
                return self.i + 1, body
            self.i += 1
        return None

    def next(self):
        item = self.peek()
        if item is not None:
            self.i += 1
        return item


_KEYWORDS = {"structure", "elements", "op", "const", "end"}


def parse_structures(text: str) -> list[Structure]:
    """Parse every structure in ``text`` in declaration order."""
    lines = _Lines(text)
    out = []
    seen = set()
    while True:
        item = lines.next()
        if item is None:
            return out
        lineno, body = item
        toks = _tokens_with_cols(body)
        if toks[0][0] != "structure" or len(toks) != 2:
            raise ParseError("expected 'structure <ident>'", lineno, toks[0][1])
        sname = toks[1][0]
        if not _IDENT.match(sname):
            raise ParseError(f"bad structure name {sname!r}", lineno, toks[1][1])
        if sname in seen:
            raise ParseError(f"duplicate structure name {sname!r}", lineno, toks[1][1])
        seen.add(sname)
        out.append(_parse_body(lines, sname, lineno))


def _parse_body(lines: _Lines, sname: str, start: int) -> Structure:
    item = lines.next()
    if item is None:
        raise ParseError("unexpected end of input, expected 'elements'", start, 1)
    lineno, body = item
    toks = _tokens_with_cols(body)
    if toks[0][0] != "elements" or len(toks) < 2:
        raise ParseError("expected 'elements <tok> ...'", lineno, toks[0][1])
    names = []
    for tok, col in toks[1:]:
        if tok in names:
            raise ParseError(f"duplicate element name {tok!r}", lineno, col)
        names.append(tok)
    index = {tok: i for i, tok in enumerate(names)}
    n = len(names)
    ops: dict[str, OpTable] = {}
    consts: dict[str, int] = {}
    while True:
        item = lines.next()
        if item is None:
            raise ParseError(f"structure {sname!r} is missing 'end'", start, 1)
        lineno, body = item
        toks = _tokens_with_cols(body)
        head, col = toks[0]
        if head == "end":
            if len(toks) != 1:
                raise ParseError("trailing tokens after 'end'", lineno, toks[1][1])
            break
        if head == "op":
            if len(toks) != 4 or toks[2][0] != "arity" or toks[3][0] not in ("1", "2", "3"):
                raise ParseError("expected 'op <ident> arity <1|2|3>'", lineno, col)
            oname = toks[1][0]
            if not _IDENT.match(oname):
                raise ParseError(f"bad op name {oname!r}", lineno, toks[1][1])
            if oname in ops:
                raise ParseError(f"duplicate op {oname!r}", lineno, toks[1][1])
            arity = int(toks[3][0])
            if arity == 3 and n > MAX_TERNARY_ORDER:
                raise ParseError(f"ternary tables are capped at order {MAX_TERNARY_ORDER}", lineno, col)
            ops[oname] = OpTable(arity, n, _parse_table(lines, arity, n, index, lineno))
        elif head == "const":
            if len(toks) != 4 or toks[2][0] != "=":
                raise ParseError("expected 'const <ident> = <tok>'", lineno, col)
            cname, ccol = toks[1]
            if cname in consts:
                raise ParseError(f"duplicate constant {cname!r}", lineno, ccol)
            tok, tcol = toks[3]
            if tok not in index:
                raise ParseError(f"undeclared element {tok!r}", lineno, tcol)
            consts[cname] = index[tok]
        else:
            raise ParseError(f"unexpected {head!r}", lineno, col)
    return Structure(sname, tuple(names), ops, consts)


def _parse_table(lines: _Lines, arity: int, n: int, index: dict, op_line: int) -> list[int]:
    """Read table rows up to the next keyword; ternary blocks are split by blank lines."""
    rows: list[tuple[int, list[tuple[str, int]]]] = []
    blocks: list[list] = [[]]
    while True:
        # blank lines matter for ternary block structure, so look at raw lines
        if lines.i >= len(lines.raw):
            break
        raw = lines.raw[lines.i]
        body = _strip_comment(raw)
        if not body.strip():
            lines.i += 1
            if raw.strip() == "" and blocks[-1]:
                blocks.append([])
            continue
        toks = _tokens_with_cols(body)
        if toks[0][0] in _KEYWORDS:
            break
        lines.i += 1
        row = (lines.i, toks)
        rows.append(row)
        blocks[-1].append(row)
    if blocks and not blocks[-1]:
        blocks.pop()
    expected_rows = {1: 1, 2: n, 3: n * n}[arity]
    if len(rows) != expected_rows:
        where = rows[-1][0] if rows else op_line
        raise ParseError(
            f"ragged table: expected {expected_rows} row(s) of {n} tokens, got {len(rows)} row(s)",
            where, 1)
    if arity == 3 and n > 1 and (len(blocks) != n or any(len(b) != n for b in blocks)):
        raise ParseError(f"ternary table must be {n} blocks of {n} lines separated by blank lines",
                         rows[0][0], 1)
    out = []
    for lineno, toks in rows:
        if len(toks) != n:
            raise ParseError(f"ragged table: expected {n} tokens, got {len(toks)}", lineno,
                             toks[min(len(toks), n) - 1][1] if toks else 1)
        for tok, col in toks:
            if tok not in index:
                raise ParseError(f"undeclared element {tok!r}", lineno, col)
            out.append(index[tok])
    return out


def serialize(s: Structure, comments: Iterable[str] = ()) -> str:
    """Canonical text: ops sorted by name, then constants sorted by name."""
    names = s.names
    n = s.n
    out = [f"structure {s.name}", "elements " + " ".join(names)]
    out.extend("# " + c for c in comments)
    for oname in sorted(s.ops):
        t = s.ops[oname]
        out.append(f"op {oname} arity {t.arity}")
        e = t.entries
        if t.arity == 1:
            out.append(" ".join(names[v] for v in e))
        elif t.arity == 2:
            for a in range(n):
                out.append(" ".join(names[v] for v in e[a * n:(a + 1) * n]))
        else:
            for a in range(n):
                if a:
                    out.append("")
                for b in range(n):
                    base = (a * n + b) * n
                    out.append(" ".join(names[v] for v in e[base:base + n]))
    for cname in sorted(s.consts):
        out.append(f"const {cname} = {names[s.consts[cname]]}")
    out.append("end")
    return "\n".join(out) + "\n"


def serialize_all(structures: Iterable[Structure]) -> str:
    return "\n".join(serialize(s) for s in structures)


def load(path, name: str | None = None) -> Structure:
    """Read one structure from ``path``; ``name`` selects among several."""
    with open(path, encoding="utf-8") as fh:
        structures = parse_structures(fh.read())
    return select(structures, name, str(path))


def select(structures: Sequence[Structure], name: str | None, origin: str = "input") -> Structure:
    if name is None:
        if len(structures) != 1:
            raise AlgebraError(f"{origin} holds {len(structures)} structures; pick one by name")
        return structures[0]
    for s in structures:
        if s.name == name:
            return s
    raise AlgebraError(f"{origin} has no structure named {name!r}")
