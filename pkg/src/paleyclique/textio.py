"""Text syntax for elements: ``x+y*a`` where ``a`` stands for alpha.

Prime fields accept any integers (``-3+2*a`` and ``26+2*a`` are the same
element of GF(29^2)).  For q = p^e with e > 1 each coefficient is written
as its base-field code; a leading minus sign means the additive inverse.
"""

from __future__ import annotations

import re

from .errors import ParseError
from .gf_ext import ExtElement, ExtField

_TERM = re.compile(r"[+-]?[^+-]+")


def _coef_str(F, c: int, symmetric: bool) -> str:
    if F.e == 1 and symmetric:
        return str(F.symmetric(c))
    return str(c)


def format_element(g: ExtElement, symmetric: bool = True) -> str:
    F = g.field.base
    if not g:
        return "0"
    parts = []
    if g.x:
        parts.append(_coef_str(F, g.x, symmetric))
    if g.y:
        c = _coef_str(F, g.y, symmetric)
        if c == "1":
            term = "a"
        elif c == "-1":
            term = "-a"
        else:
            term = c + "*a"
        if parts and not term.startswith("-"):
            term = "+" + term
        parts.append(term)
    return "".join(parts)


def _embed(F, n: int) -> int:
    if F.e == 1:
        return n % F.p
    if n < 0:
        return F.neg(_embed(F, -n))
    if n >= F.q:
        raise ParseError(f"coefficient code {n} out of range for GF({F.q})")
    return n


def parse_element(E: ExtField, text: str) -> ExtElement:
    s = text.replace(" ", "").replace("α", "a")
    if not s:
        raise ParseError("empty element")
    F = E.base
    x = y = 0
    pos = 0
    for m in _TERM.finditer(s):
        if m.start() != pos:
            raise ParseError(f"cannot parse {text!r}")
        pos = m.end()
        term = m.group()
        sign = -1 if term.startswith("-") else 1
        body = term.lstrip("+-")
        try:
            if body.endswith("a"):
                coef = body[:-1]
                if coef.endswith("*"):
                    coef = coef[:-1]
                    if not coef:
                        raise ParseError(f"dangling '*' in {text!r}")
                n = int(coef) if coef else 1
                y = F.add(y, _embed(F, sign * n))
            else:
                x = F.add(x, _embed(F, sign * int(body)))
        except ValueError as exc:
            raise ParseError(f"cannot parse {text!r}") from exc
    if pos != len(s):
        raise ParseError(f"cannot parse {text!r}")
    return E.element(x, y)


def parse_set(E: ExtField, text: str) -> list[ExtElement]:
    """Parse a comma separated list, braces optional."""
    s = text.strip().strip("{}")
    return [parse_element(E, t) for t in s.split(",") if t.strip()]
