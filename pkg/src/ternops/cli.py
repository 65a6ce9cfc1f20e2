"""Command-line front end.

Exit status: 0 when the property holds or the command succeeds, 1 when a
property fails or no isomorphism exists (details on stdout), 2 for usage,
parse and precondition errors (message on stderr).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import constructions as C
from . import inverse as I
from .clauses import Binding, check_clause, format_assignment, parse_clause
from .enumeration import EnumSpec, count_models, enumerate_models, parse_signature
from .errors import AlgebraError
from .iso import iso_search
from .properties import CATALOG, check_property, classify
from .structure import Structure, load, serialize
from .suite import format_json, format_text, run_suite

OK, FAILS, ERROR = 0, 1, 2


class UsageError(Exception):
    pass


# -- shared argument plumbing --------------------------------------------------

def _pairs(items, what: str) -> dict:
    out = {}
    for item in items or ():
        if "=" not in item:
            raise UsageError(f"{what} expects key=value, got {item!r}")
        k, v = item.split("=", 1)
        out[k.strip()] = v.strip()
    return out


def _load(target: str, name: str | None = None) -> Structure:
    path, _, frag = target.partition("#")
    if frag and name and frag != name:
        raise UsageError(f"selector #{frag} conflicts with -s {name}")
    return load(path, frag or name)


def _binding(s: Structure, args) -> Binding:
    ops = _pairs(getattr(args, "bind", None), "--bind")
    for k in ops:
        if k not in ("mul", "t", "star", "hat"):
            raise UsageError(f"--bind: unknown role {k!r} (mul, t, star or hat)")
    consts = {k: s.element(v) for k, v in _pairs(getattr(args, "const", None), "--const").items()}
    return Binding(**ops, consts=consts)


def _const(s: Structure, args, key: str, default: int | None = None) -> int:
    consts = _pairs(args.const, "--const")
    if key in consts:
        return s.element(consts[key])
    if key in s.consts:
        return s.consts[key]
    if default is None:
        raise UsageError(f"this scheme needs --const {key}=<element>")
    return default


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- verbs ---------------------------------------------------------------------

def cmd_check(args) -> int:
    if args.target == "clifford":
        if not args.file:
            raise UsageError("check clifford needs a file")
        return _check_clifford(_load(args.file, args.s), args)
    if args.file:
        raise UsageError(f"unexpected argument {args.file!r}")
    s = _load(args.target, args.s)
    b = _binding(s, args)
    if not args.prop and not args.clause:
        raise UsageError("give at least one --prop or --clause")
    results = []
    for p in args.prop or ():
        rep = check_property(s, p, b)
        cex = format_assignment(s, rep.counterexample) if rep.counterexample else None
        wit = s.names[rep.witness] if rep.witness is not None else None
        results.append({"name": p, "holds": rep.holds, "counterexample": cex, "witness": wit,
                        "detail": rep.detail})
    for c in args.clause or ():
        res = check_clause(s, parse_clause(c), b)
        cex = format_assignment(s, res.counterexample) if res.counterexample else None
        results.append({"name": c, "holds": res.holds, "counterexample": cex, "witness": None,
                        "detail": ""})
    if args.json:
        print(json.dumps({"structure": s.name, "results": results}, indent=2))
    else:
        for r in results:
            line = f"{r['name']}: {'holds' if r['holds'] else 'fails'}"
            if r["witness"] is not None and r["holds"]:
                line += f" (at {r['witness']})"
            if r["counterexample"]:
                line += f"\ncounterexample: {r['counterexample']}"
            elif not r["holds"] and r["detail"]:
                line += f"\n{r['detail']}"
            print(line)
    return OK if all(r["holds"] for r in results) else FAILS


def _check_clifford(s: Structure, args) -> int:
    op = _binding(s, args).mul
    try:
        dec = I.clifford_decompose(s, op)
    except (I.NotClifford, AlgebraError) as exc:
        if args.json:
            print(json.dumps({"structure": s.name, "clifford": False, "reason": str(exc)}))
        else:
            print(f"clifford: fails\n{exc}")
        return FAILS
    comps = {s.names[e]: [s.names[a] for a in elems] for e, (elems, _) in sorted(dec.components.items())}
    if args.json:
        print(json.dumps({"structure": s.name, "clifford": True, "components": comps}, indent=2))
    else:
        print("clifford: holds")
        for e, elems in comps.items():
            print(f"group at {e}: {' '.join(elems)}")
    return OK


def cmd_classify(args) -> int:
    s = _load(args.file, args.s)
    props = classify(s, _binding(s, args))
    if args.json:
        print(json.dumps({"structure": s.name, "properties": props}, indent=2))
    else:
        for p in props:
            print(p)
    return OK


RECONSTRUCT = ("lateral-unital", "star-unital", "star-bi-unital", "dual",
               "thm65", "thm66", "thm67", "thm68")
SCHEMES = ("natural-ternary", "star-ternary", "pi-ternary", "dual-groupoid", "gamma",
           *RECONSTRUCT, "standard-ternary", "inverse-cert", "gh-to-inv", "alpha-determined",
           "psi", "omega", "pi-map", "lambda", "gamma-wq", "phi-g", "theta", "sigma",
           "alpha-map", "beta-map", "example1-pair", "cyclic-group")


def _construct(args) -> tuple[list[Structure], list[str]]:
    scheme = args.scheme
    if scheme in ("example1-pair", "cyclic-group"):
        if args.order is None:
            raise UsageError(f"{scheme} needs --order")
        if scheme == "cyclic-group":
            return [C.cyclic_group(args.order)], []
        return list(C.example1_pair(args.order)), []
    if not args.file:
        raise UsageError(f"{scheme} needs an input file")
    s = _load(args.file, args.s)
    b = _binding(s, args)
    if scheme == "natural-ternary":
        return [s.with_op("t", C.natural_ternary(s, b.mul))], []
    if scheme == "star-ternary":
        if not args.unary:
            raise UsageError("star-ternary needs --unary <op>")
        return [s.with_op("t", C.star_ternary(s, args.unary, b.mul))], []
    if scheme == "pi-ternary":
        if not args.perm:
            raise UsageError("pi-ternary needs --perm, e.g. 132")
        return [s.with_op("t", C.pi_ternary(s.op(b.t), C.parse_perm(args.perm)))], []
    if scheme == "dual-groupoid":
        return [C.dual_groupoid(s, b.mul)], []
    if scheme == "gamma":
        return [C.gamma_from_semiheap(s, _const(s, args, "l"), b.t)], []
    if scheme in RECONSTRUCT:
        return [C.reconstruct(s, scheme, _const(s, args, "l"), hat=args.unary, t=b.t)], []
    if scheme in ("standard-ternary", "inverse-cert"):
        cert = I.inverse_cert(s, b.mul)
        idem = " ".join(s.names[e] for e in sorted(cert.idempotents))
        out = s.with_op("inv", cert.inv)
        if scheme == "standard-ternary":
            out = out.with_op("t", I.standard_ternary(s, cert, b.mul))
        return [out], [f"idempotents: {idem}"]
    if scheme == "gh-to-inv":
        return [I.gh_to_inverse_semigroup(s, prime=b.star, hat=b.hat, t=b.t)], []
    if scheme == "alpha-determined":
        if not args.unary:
            raise UsageError("alpha-determined needs --unary <op> naming the automorphism")
        return [I.alpha_determined(s, s.op(args.unary), b.mul)], []
    if scheme == "psi":
        return [C.psi(s)], []
    if scheme == "phi-g":
        return [C.phi_g(s)], []
    if scheme == "theta":
        return [C.theta(s)], []
    if scheme == "lambda":
        return [C.lambda_map(s)], []
    if scheme == "gamma-wq":
        return [C.gamma_wq(s)], []
    e = _const(s, args, "e", 0)
    if scheme == "omega":
        return [C.omega(s, e)], []
    if scheme == "pi-map":
        return [C.pi_map(s, e)], []
    if scheme == "beta-map":
        return [C.beta_map(s, e)], []
    consts = _pairs(args.const, "--const")
    e = s.element(consts["e"]) if "e" in consts else None
    if scheme == "sigma":
        return [C.sigma(s, e)], []
    return [C.alpha_map(s, e)], []


def cmd_construct(args) -> int:
    outs, comments = _construct(args)
    _emit("\n".join(serialize(o, comments) for o in outs), args.out)
    return OK


def cmd_iso(args) -> int:
    left, right = _load(args.left), _load(args.right)
    b = _binding(left, args)
    cert = iso_search(left, right, kind=args.kind, left_binding=b)
    text = cert.format(left, right) if cert is not None else "none"
    if args.json:
        print(json.dumps({"kind": args.kind, "isomorphic": cert is not None,
                          "map": list(cert.forward) if cert else None}))
    else:
        print(text)
    return OK if cert is not None else FAILS


def cmd_enumerate(args) -> int:
    signature = parse_signature(args.signature)
    constraints = [p.strip() for p in (args.props or "").split(",") if p.strip()]
    for p in constraints:
        if p not in CATALOG:
            raise UsageError(f"unknown property {p!r}")
    for c in args.clause or ():
        parse_clause(c)
        constraints.append(c)
    pins = {}
    for k, v in _pairs(args.pin, "--pin").items():
        try:
            pins[k] = int(v)
        except ValueError:
            raise UsageError(f"--pin {k}: expected an element index, got {v!r}") from None
    spec = EnumSpec(args.order, signature, tuple(constraints), args.up_to_iso, pins)
    if args.count_only:
        n = count_models(spec)
        print(json.dumps({"order": args.order, "count": n}) if args.json else n)
        return OK
    models = list(enumerate_models(spec))
    _emit("\n".join(serialize(m) for m in models), args.out)
    if args.out:
        print(f"{len(models)} models written to {args.out}")
    return OK


def cmd_suite(args) -> int:
    outcomes = run_suite(args.filter)
    print(format_json(outcomes) if args.json else format_text(outcomes))
    return OK if all(o.passed for o in outcomes) else FAILS


# -- parser --------------------------------------------------------------------

def _add_common(p, selector=True):
    if selector:
        p.add_argument("-s", metavar="NAME", help="structure name inside the file")
    p.add_argument("--bind", action="append", metavar="ROLE=OP",
                   help="table for a clause role: mul, t, star or hat")
    p.add_argument("--const", action="append", metavar="NAME=ELEMENT", help="pin a constant")
    p.add_argument("--json", action="store_true", help="JSON output")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ternops", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("check", help="check properties or clauses; 'check clifford FILE'")
    p.add_argument("target", help="FILE[#name], or the word clifford")
    p.add_argument("file", nargs="?", help="FILE[#name] after 'clifford'")
    p.add_argument("--prop", action="append", help="catalog property (repeatable)")
    p.add_argument("--clause", action="append", help="clause text (repeatable)")
    _add_common(p)
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("classify", help="list every catalog property that holds")
    p.add_argument("file")
    _add_common(p)
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("construct", help="build a structure from another")
    p.add_argument("scheme", choices=SCHEMES)
    p.add_argument("file", nargs="?")
    p.add_argument("--unary", help="unary op used by the scheme (star, hat or alpha)")
    p.add_argument("--perm", help="argument permutation for pi-ternary, e.g. 132")
    p.add_argument("--order", type=int, help="size for example1-pair and cyclic-group")
    p.add_argument("--out", help="write here instead of stdout")
    _add_common(p)
    p.set_defaults(fn=cmd_construct)

    p = sub.add_parser("iso", help="search for an isomorphism")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--kind", choices=("binary", "ternary"), default="binary")
    _add_common(p, selector=False)
    p.set_defaults(fn=cmd_iso)

    p = sub.add_parser("enumerate", help="all models of a specification")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--signature", default="binary", help="comma list: binary, ternary, unary, hat")
    p.add_argument("--props", help="comma list of catalog properties")
    p.add_argument("--clause", action="append", help="extra clause (repeatable)")
    p.add_argument("--up-to-iso", action="store_true")
    p.add_argument("--pin", action="append", metavar="CONST=INDEX")
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--out")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("paper-suite", help="run the regression checks")
    p.add_argument("--filter", help="id prefix")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_suite)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (UsageError, AlgebraError, OSError) as exc:
        print(f"ternops {args.verb}: {exc}", file=sys.stderr)
        return ERROR


if __name__ == "__main__":
    sys.exit(main())
