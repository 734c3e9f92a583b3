"""The textual mini-language for family specs.

Examples: ``C(7)``, ``D(8)``, ``M(4,3)``, ``M(5)``, ``Gn(2,9)``,
``G(r=2;p=2,n=3;q=5,m=1)``, ``B2(2,2)``, ``A(2)``, ``X(2,3)``, ``SL23``,
``C3Q8``, and direct products joined with ``x``: ``Q(8)xC(2)xC(2)``.

``M`` with one argument is the extraspecial group of order p^3 and
exponent p; with two arguments it is the modular group of order p^n.
``Gn(n,q)`` abbreviates ``G(r=-1;p=2,n;...)`` with q a prime power.
Names are case-insensitive and whitespace is ignored.
"""

from __future__ import annotations

from .arith import factorize
from .families import (
    AFAMILY,
    ALT,
    B1,
    B2,
    C3Q8,
    CYCLIC,
    DIHEDRAL,
    EXTRASPECIAL,
    FFAMILY,
    GENERAL,
    GSHORT,
    MODULAR,
    QUATERNION,
    SEMIDIHEDRAL,
    SL23,
    SYM,
    XFAMILY,
    FamilySpec,
    product_spec,
)


class SpecError(ValueError):
    """Malformed family spec text."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


# longest names first so e.g. "C3Q8" wins over "C"
_NAMES: tuple[tuple[str, str], ...] = (
    ("c3q8", C3Q8),
    ("sl23", SL23),
    ("sym", SYM),
    ("alt", ALT),
    ("gn", GSHORT),
    ("b1", B1),
    ("b2", B2),
    ("c", CYCLIC),
    ("d", DIHEDRAL),
    ("q", QUATERNION),
    ("s", SEMIDIHEDRAL),
    ("m", None),  # arity decides: M(p) vs M(n,p)
    ("g", GENERAL),
    ("f", FFAMILY),
    ("a", AFAMILY),
    ("x", XFAMILY),
)


def _parse_args(body: str, pos: int) -> tuple[list[int], dict[str, int]]:
    positional: list[int] = []
    named: dict[str, int] = {}
    if not body.strip():
        return positional, named
    for part in body.replace(";", ",").split(","):
        part = part.strip()
        if not part:
            raise SpecError("empty argument", pos)
        if "=" in part:
            key, _, val = part.partition("=")
            key = key.strip().lower()
            try:
                named[key] = int(val.strip())
            except ValueError:
                raise SpecError(f"bad integer {val.strip()!r}", pos) from None
        else:
            try:
                positional.append(int(part))
            except ValueError:
                raise SpecError(f"bad integer {part!r}", pos) from None
    return positional, named


def _make_spec(kind: str | None, args: list[int], named: dict[str, int], pos: int) -> FamilySpec:
    if kind is None:  # the two "M" families
        if len(args) == 1:
            return FamilySpec(EXTRASPECIAL, tuple(args))
        if len(args) == 2:
            return FamilySpec(MODULAR, tuple(args))
        raise SpecError("M takes 1 (extraspecial) or 2 (modular) arguments", pos)
    if kind == GENERAL:
        missing = [k for k in ("r", "p", "n", "q", "m") if k not in named]
        if missing or args:
            raise SpecError(
                "G uses named arguments r, p, n, q, m, "
                "e.g. G(r=2;p=2,n=3;q=5,m=1)",
                pos,
            )
        return FamilySpec(
            GENERAL,
            (named["p"], named["n"], named["q"], named["m"]),
            r=named["r"],
        )
    if named:
        raise SpecError(f"{kind} takes positional arguments only", pos)
    if kind == GSHORT:
        if len(args) != 2:
            raise SpecError("Gn takes 2 arguments: n and a prime power", pos)
        n, qm = args
        fact = factorize(qm) if qm > 1 else {}
        if len(fact) != 1:
            raise SpecError(f"{qm} is not a prime power", pos)
        ((q, m),) = fact.items()
        return FamilySpec(GSHORT, (n, q, m))
    if kind == FFAMILY:
        if len(args) == 2:
            return FamilySpec(FFAMILY, tuple(args))
        if len(args) == 3:
            return FamilySpec(FFAMILY, (args[0], args[1]), r=args[2])
        raise SpecError("F takes 2 or 3 arguments: n, p[, r]", pos)
    if kind in (SL23, C3Q8):
        if args:
            raise SpecError(f"{kind} takes no arguments", pos)
        return FamilySpec(kind, ())
    return FamilySpec(kind, tuple(args))


def parse_spec(text: str) -> FamilySpec:
    """Parse mini-language text into a FamilySpec (no validation)."""
    src = "".join(text.split())
    if not src:
        raise SpecError("empty spec")
    low = src.lower()
    pos = 0
    factors: list[FamilySpec] = []
    while True:
        matched = None
        for name, kind in _NAMES:
            if low.startswith(name, pos):
                after = pos + len(name)
                nxt = low[after] if after < len(low) else ""
                if nxt == "" or nxt in "(x":
                    # a product separator directly after a parameterized
                    # name is only valid for the no-argument families
                    if nxt != "(" and kind not in (SL23, C3Q8):
                        continue
                    matched = (name, kind, after)
                    break
        if matched is None:
            raise SpecError(f"unrecognized family name in {text!r}", pos)
        name, kind, after = matched
        pos = after
        if pos < len(low) and low[pos] == "(":
            depth = 0
            start = pos
            while pos < len(low):
                if low[pos] == "(":
                    depth += 1
                elif low[pos] == ")":
                    depth -= 1
                    if depth == 0:
                        break
                pos += 1
            if depth != 0:
                raise SpecError("unbalanced parentheses", start)
            body = src[start + 1 : pos]
            pos += 1
            args, named = _parse_args(body, start)
        else:
            args, named = [], {}
        factors.append(_make_spec(kind, args, named, pos))
        if pos >= len(low):
            break
        if low[pos] != "x":
            raise SpecError(f"expected 'x' or end of spec, found {src[pos]!r}", pos)
        pos += 1
    return product_spec(*factors)
