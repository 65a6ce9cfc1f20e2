"""Identities and quasi-identities over a structure's signature.

Syntax::

    clause  := [eq ("&" eq)* "=>"] eq
    eq      := term "=" term
    term    := factor ("*" factor)*          # left associative
    factor  := atom ("'" | "^")*
    atom    := var | const | "[" term term term "]" | "(" term ")"

Variables are exactly ``x y z u v w q``; any other identifier is a constant.
``*`` is the binary op, ``[...]`` the ternary op, and the postfix marks
``'`` and ``^`` are two unary ops.  Which tables they denote is decided by a
:class:`Binding` at check time.

Checking is exhaustive.  Each clause is compiled to a nest of Python loops,
one per variable in ``x, y, z, u, v, w, q`` order, with every subterm hoisted
to the shallowest loop that binds all of its variables.  The same compiled
form runs on partially filled tables (unknown cells hold ``-1``), which is
what the enumerator uses for pruning.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Mapping, Sequence, Union

from .errors import ArityMismatch, ClauseSyntaxError, MissingBinding, UnboundSymbol
from .structure import Structure

VARIABLES = ("x", "y", "z", "u", "v", "w", "q")

# clause symbol -> (Binding field, arity)
SYMBOLS = {"*": ("mul", 2), "[]": ("t", 3), "'": ("star", 1), "^": ("hat", 1)}


@dataclass(frozen=True)
class Var:
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Const:
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class App:
    op: str
    args: tuple

    def __str__(self):
        if self.op == "*":
            a, b = self.args
            right = f"({b})" if isinstance(b, App) and b.op == "*" else str(b)
            return f"{a}*{right}"
        if self.op == "[]":
            return "[" + " ".join(str(a) for a in self.args) + "]"
        (a,) = self.args
        inner = f"({a})" if isinstance(a, App) and a.op == "*" else str(a)
        return inner + self.op


Term = Union[Var, Const, App]


@dataclass(frozen=True)
class Clause:
    premises: tuple[tuple[Term, Term], ...]
    conclusion: tuple[Term, Term]
    text: str = field(default="", compare=False)

    @property
    def is_identity(self) -> bool:
        return not self.premises

    def equations(self):
        yield from self.premises
        yield self.conclusion

    @property
    def variables(self) -> tuple[str, ...]:
        seen = set()
        for lhs, rhs in self.equations():
            seen |= term_vars(lhs) | term_vars(rhs)
        return tuple(v for v in VARIABLES if v in seen)

    @property
    def constants(self) -> tuple[str, ...]:
        seen: list[str] = []
        for lhs, rhs in self.equations():
            for t in (lhs, rhs):
                for c in _consts(t):
                    if c not in seen:
                        seen.append(c)
        return tuple(seen)

    @property
    def symbols(self) -> tuple[str, ...]:
        seen = set()
        for lhs, rhs in self.equations():
            seen |= _symbols(lhs) | _symbols(rhs)
        return tuple(s for s in SYMBOLS if s in seen)

    def __str__(self):
        eqs = [f"{a} = {b}" for a, b in self.premises]
        concl = f"{self.conclusion[0]} = {self.conclusion[1]}"
        return (" & ".join(eqs) + " => " + concl) if eqs else concl


def term_vars(t: Term) -> frozenset:
    if isinstance(t, Var):
        return frozenset((t.name,))
    if isinstance(t, Const):
        return frozenset()
    out = frozenset()
    for a in t.args:
        out |= term_vars(a)
    return out


def _consts(t: Term):
    if isinstance(t, Const):
        yield t.name
    elif isinstance(t, App):
        for a in t.args:
            yield from _consts(a)


def _symbols(t: Term) -> set:
    if isinstance(t, App):
        out = {t.op}
        for a in t.args:
            out |= _symbols(a)
        return out
    return set()


@dataclass
class Binding:
    """Which tables of a structure the clause symbols denote.

    ``consts`` pins constant symbols to element indices and takes priority
    over the structure's own constants.
    """

    mul: str = "mul"
    t: str = "t"
    star: str = "star"
    hat: str = "hat"
    consts: dict = field(default_factory=dict)

    def op_for(self, symbol: str) -> str:
        return getattr(self, SYMBOLS[symbol][0])

    def with_consts(self, **consts: int) -> "Binding":
        merged = dict(self.consts)
        merged.update(consts)
        return Binding(self.mul, self.t, self.star, self.hat, merged)


# -- parser --------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(=>)|([A-Za-z0-9_]+)|(.))")


def _tokenize(text: str):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m.group(0).strip() == "":
            break
        start = m.start(m.lastindex)
        tok = m.group(m.lastindex)
        if m.lastindex == 3 and tok not in "()[]*=&'^":
            raise ClauseSyntaxError(f"unexpected character {tok!r}", start, text)
        out.append((tok, start, m.lastindex == 2))
        pos = m.end()
    out.append(("", len(text), False))
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, expected: str | None = None):
        tok = self.toks[self.i]
        if expected is not None and tok[0] != expected:
            what = repr(tok[0]) if tok[0] else "end of input"
            raise ClauseSyntaxError(f"expected {expected!r}, found {what}", tok[1], self.text)
        self.i += 1
        return tok

    def clause(self) -> Clause:
        eqs = [self.equation()]
        while self.peek()[0] == "&":
            self.take()
            eqs.append(self.equation())
        if self.peek()[0] == "=>":
            self.take()
            conclusion = self.equation()
            premises = tuple(eqs)
        else:
            if len(eqs) > 1:
                tok = self.peek()
                raise ClauseSyntaxError("conjunction without '=>'", tok[1], self.text)
            conclusion, premises = eqs[0], ()
        tok = self.peek()
        if tok[0]:
            raise ClauseSyntaxError(f"unexpected {tok[0]!r}", tok[1], self.text)
        return Clause(premises, conclusion, self.text)

    def equation(self):
        lhs = self.term()
        self.take("=")
        return lhs, self.term()

    def term(self):
        t = self.factor()
        while self.peek()[0] == "*":
            self.take()
            t = App("*", (t, self.factor()))
        return t

    def factor(self):
        t = self.atom()
        while self.peek()[0] in ("'", "^"):
            t = App(self.take()[0], (t,))
        return t

    def atom(self):
        tok, pos, ident = self.peek()
        if ident:
            self.take()
            return Var(tok) if tok in VARIABLES else Const(tok)
        if tok == "(":
            self.take()
            t = self.term()
            self.take(")")
            return t
        if tok == "[":
            self.take()
            args = (self.term(), self.term(), self.term())
            self.take("]")
            return App("[]", args)
        what = repr(tok) if tok else "end of input"
        raise ClauseSyntaxError(f"expected a term, found {what}", pos, self.text)


@lru_cache(maxsize=None)
def parse_clause(text: str) -> Clause:
    return _Parser(text).clause()


def parse_catalog(text: str) -> dict[str, Clause]:
    """Parse a ``.clauses`` file: one ``name: clause`` per line, ``#`` comments."""
    out = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        name, sep, rest = body.partition(":")
        if not sep or not name.strip():
            raise ClauseSyntaxError(f"line {lineno}: expected 'name: clause'", 0, line)
        out[name.strip()] = parse_clause(rest.strip())
    return out


# -- naive evaluation (reference semantics) ------------------------------------

def eval_term(t: Term, tables: Mapping[str, Sequence[int]], n: int,
              consts: Mapping[str, int], assignment: Mapping[str, int]) -> int:
    """Evaluate ``t`` by recursion; ``tables`` maps clause symbols to flat entries."""
    if isinstance(t, Var):
        return assignment[t.name]
    if isinstance(t, Const):
        return consts[t.name]
    args = [eval_term(a, tables, n, consts, assignment) for a in t.args]
    i = 0
    for a in args:
        i = i * n + a
    return tables[t.op][i]


def clause_violated(clause: Clause, tables, n, consts, assignment) -> bool:
    for lhs, rhs in clause.premises:
        if eval_term(lhs, tables, n, consts, assignment) != eval_term(rhs, tables, n, consts, assignment):
            return False
    lhs, rhs = clause.conclusion
    return eval_term(lhs, tables, n, consts, assignment) != eval_term(rhs, tables, n, consts, assignment)


# -- compilation ---------------------------------------------------------------

class _Codegen:
    def __init__(self, clause: Clause, partial: bool):
        self.clause = clause
        self.partial = partial
        self.vars = clause.variables
        self.depth_of = {v: i + 1 for i, v in enumerate(self.vars)}
        self.levels: list[list[str]] = [[] for _ in range(len(self.vars) + 1)]
        self.memo: dict = {}
        self.counter = 0

    def level(self, t: Term) -> int:
        vs = term_vars(t)
        return max((self.depth_of[v] for v in vs), default=0)

    def emit(self, t: Term) -> str:
        if isinstance(t, Var):
            return "v_" + t.name
        if isinstance(t, Const):
            return "c_" + t.name
        if t in self.memo:
            return self.memo[t]
        args = [self.emit(a) for a in t.args]
        name = f"t{self.counter}"
        self.counter += 1
        if t.op == "*":
            expr = f"M[{args[0]}*n+{args[1]}]"
        elif t.op == "[]":
            expr = f"T[{args[0]}*nn+{args[1]}*n+{args[2]}]"
        elif t.op == "'":
            expr = f"P[{args[0]}]"
        else:
            expr = f"H[{args[0]}]"
        lvl = self.level(t)
        self.levels[lvl].append(f"{name} = {expr}")
        if self.partial:
            self.levels[lvl].append(f"if {name} < 0: continue")
        self.memo[t] = name
        return name

    def source(self) -> str:
        floor = 0
        for lhs, rhs in self.clause.premises:
            a, b = self.emit(lhs), self.emit(rhs)
            lvl = max(self.level(lhs), self.level(rhs))
            floor = max(floor, lvl)
            self.levels[lvl].append(f"if {a} != {b}: continue")
        lhs, rhs = self.clause.conclusion
        a, b = self.emit(lhs), self.emit(rhs)
        # the conclusion may only be tested once every premise has been
        lvl = max(self.level(lhs), self.level(rhs), floor)
        hit = "return True" if self.partial else "return (" + "".join(f"v_{v}, " for v in self.vars) + ")"
        self.levels[lvl].append(f"if {a} != {b}: {hit}")

        consts = self.clause.constants
        lines = ["def check(M, T, P, H, consts, n):",
                 "    nn = n * n",
                 "    R = range(n)"]
        lines += [f"    c_{c} = consts[{c!r}]" for c in consts]
        lines.append("    for _once in (0,):")
        indent = "        "
        for stmt in self.levels[0]:
            lines.append(indent + stmt)
        for i, v in enumerate(self.vars):
            lines.append(indent + f"for v_{v} in R:")
            indent += "    "
            for stmt in self.levels[i + 1]:
                lines.append(indent + stmt)
            if not self.levels[i + 1]:
                lines.append(indent + "pass")
        lines.append("    return " + ("False" if self.partial else "None"))
        return "\n".join(lines)


@lru_cache(maxsize=None)
def compile_clause(clause: Clause, partial: bool = False):
    """Compile ``clause`` to ``check(M, T, P, H, consts, n)``.

    Full mode returns the first violating assignment (a tuple over
    ``clause.variables``) or ``None``.  Partial mode returns ``True`` iff a
    violation is already visible among the filled-in cells.
    """
    src = _Codegen(clause, partial).source()
    namespace: dict = {}
    exec(compile(src, f"<clause {clause}>", "exec"), namespace)
    fn = namespace["check"]
    fn.source = src
    return fn


# -- checking against structures -----------------------------------------------

@dataclass(frozen=True)
class CheckResult:
    holds: bool
    counterexample: dict | None = None

    @property
    def verdict(self) -> str:
        return "holds" if self.holds else "fails"

    def __bool__(self):
        return self.holds


def resolve_tables(s: Structure, clause: Clause, binding: Binding | None = None):
    """Entries for each symbol used by ``clause``, in (M, T, P, H) order."""
    binding = binding or Binding()
    out = {}
    for sym in clause.symbols:
        field_name, arity = SYMBOLS[sym]
        op_name = getattr(binding, field_name)
        if op_name not in s.ops:
            raise UnboundSymbol(f"symbol {sym!r} is bound to {op_name!r}, which "
                                f"{s.name!r} does not have")
        table = s.ops[op_name]
        if table.arity != arity:
            raise ArityMismatch(f"symbol {sym!r} needs arity {arity}, op {op_name!r} has "
                                f"arity {table.arity}")
        out[sym] = table.entries
    return out


def resolve_consts(s: Structure, clause: Clause, binding: Binding | None = None) -> dict:
    binding = binding or Binding()
    out = {}
    for c in clause.constants:
        if c in binding.consts:
            out[c] = binding.consts[c]
        elif c in s.consts:
            out[c] = s.consts[c]
        else:
            raise UnboundSymbol(f"constant {c!r} is not a constant of {s.name!r}")
    return out


def check_clause(s: Structure, clause: Clause | str, binding: Binding | None = None) -> CheckResult:
    """Exhaustively check ``clause`` over every assignment of elements to variables."""
    if isinstance(clause, str):
        clause = parse_clause(clause)
    tables = resolve_tables(s, clause, binding)
    consts = resolve_consts(s, clause, binding)
    fn = compile_clause(clause)
    hit = fn(tables.get("*"), tables.get("[]"), tables.get("'"), tables.get("^"), consts, s.n)
    if hit is None:
        return CheckResult(True)
    return CheckResult(False, dict(zip(clause.variables, hit)))


def check_tables(clause: Clause, n: int, mul=None, tern=None, prime=None, hat=None,
                 consts: Mapping[str, int] | None = None):
    """Low-level check on raw entry sequences; returns the first violation or ``None``."""
    return compile_clause(clause)(mul, tern, prime, hat, consts or {}, n)


def brute_force_check(s: Structure, clause: Clause | str, binding: Binding | None = None) -> CheckResult:
    """Reference checker: recursive evaluation over ``itertools.product``."""
    if isinstance(clause, str):
        clause = parse_clause(clause)
    tables = resolve_tables(s, clause, binding)
    consts = resolve_consts(s, clause, binding)
    for values in product(range(s.n), repeat=len(clause.variables)):
        assignment = dict(zip(clause.variables, values))
        if clause_violated(clause, tables, s.n, consts, assignment):
            return CheckResult(False, assignment)
    return CheckResult(True)


def reproduces(s: Structure, clause: Clause | str, assignment: Mapping[str, int],
               binding: Binding | None = None) -> bool:
    """True iff ``assignment`` makes every premise true and the conclusion false."""
    if isinstance(clause, str):
        clause = parse_clause(clause)
    tables = resolve_tables(s, clause, binding)
    consts = resolve_consts(s, clause, binding)
    return clause_violated(clause, tables, s.n, consts, assignment)


def format_assignment(s: Structure, assignment: Mapping[str, int]) -> str:
    """Element names in variable order, comma separated (``x,x,y``)."""
    return ",".join(s.names[assignment[v]] for v in VARIABLES if v in assignment)


def require(s: Structure, binding: Binding, *fields_: str):
    for f in fields_:
        name = getattr(binding, f)
        if name not in s.ops:
            raise MissingBinding(f"{s.name!r} has no op {name!r} (needed as {f})")
