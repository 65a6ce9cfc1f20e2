"""Enumeration specs small enough for the filter-everything oracle (space <= 10^7)."""

from ternops.enumeration import EnumSpec

BINARY_PROPS = [
    (), ("associative",), ("commutative",), ("idempotent",), ("medial",), ("paramedial",),
    ("right-modular",), ("right-modular", "left-identity"), ("ag-star",), ("ag-star-star",),
    ("left-cancellative",), ("left-cancellative", "right-cancellative"), ("ward-quasigroup",),
    ("associative", "two-sided-identity"), ("inverse-semigroup",), ("group",),
    ("reversible", "left-identity"), ("right-distributive", "left-distributive"),
    ("x*x = y*y", "x*y = (x*z)*(y*z)", "x*(y*y) = x"),
    ("x*y = x*z => y = z", "(x*y)*z = x*(y*z)"),
]


def specs():
    out = []
    for n in (1, 2, 3):
        for props in BINARY_PROPS:
            for iso in (False, True):
                out.append(EnumSpec(n, constraints=props, up_to_iso=iso))
    for n in (2, 3):
        out.append(EnumSpec(n, constraints=("right-modular", "left-identity"), pins={"l": 0}))
        out.append(EnumSpec(n, constraints=("left-identity",), pins={"l": 0}, up_to_iso=True))
        out.append(EnumSpec(n, (("mul", 2), ("star", 1)), ("star-unary", "left-identity"),
                            pins={"l": 0}))
    for n in (1, 2):
        for props in [(), ("semiheap",), ("heap",), ("generalised-heap",), ("ternary-associative",),
                      ("laterally-commutative", "semiheap", "bi-unital"), ("near-heap",)]:
            for iso in (False, True):
                out.append(EnumSpec(n, (("t", 3),), props, up_to_iso=iso))
        out.append(EnumSpec(n, (("t", 3),), ("semiheap", "laterally-commutative", "bi-unital"),
                            pins={"l": 0}))
        out.append(EnumSpec(n, (("t", 3), ("star", 1), ("hat", 1)),
                            ("generalised-heap", "x'' = x", "x^^ = x^")))
    return out


def label(spec) -> str:
    sig = "+".join(f"{name}{a}" for name, a in spec.signature)
    iso = " iso" if spec.up_to_iso else ""
    pins = "".join(f" {k}={v}" for k, v in spec.pins.items())
    return f"n{spec.order} {sig} [{'; '.join(spec.constraints)}]{iso}{pins}"
