"""GF(q^2) read as the affine plane AG(2, q): lines, pencils and ovals."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from enum import Enum

from .errors import ZeroSlope
from .gf_ext import ExtElement, ExtField


class LineClass(str, Enum):
    QUADRATIC = "Quadratic"
    NON_QUADRATIC = "NonQuadratic"


def canonical_slope(s: ExtElement) -> ExtElement:
    """The GF(q)*-multiple of ``s`` that is smallest in coefficient-tuple order.

    Multiples of ``s`` run through every nonzero value in the leading
    coordinate, so the minimum puts the smallest unit there.
    """
    if not s:
        raise ZeroSlope("a line needs a nonzero slope")
    E = s.field
    F = E.base
    m = F.smallest_unit()
    lead = s.y if s.y else s.x
    return s.scale(F.div(m, lead))


@dataclass(frozen=True)
class Line:
    base_point: ExtElement
    slope: ExtElement
    points: frozenset = field(repr=False, compare=True)

    @property
    def field(self) -> ExtField:
        return self.slope.field

    def __contains__(self, g) -> bool:
        return g in self.points

    def __len__(self):
        return len(self.points)

    def __hash__(self):
        return hash(self.points)

    def __eq__(self, other):
        return isinstance(other, Line) and self.points == other.points


def line_through(p: ExtElement, s: ExtElement) -> Line:
    s = canonical_slope(s)
    pts = frozenset(p + s.scale(c) for c in s.field.base.elements())
    # canonical base point: smallest index on the line
    base = min(pts, key=lambda g: g.index)
    return Line(base, s, pts)


def line_joining(u: ExtElement, v: ExtElement) -> Line:
    return line_through(u, v - u)


def classify_line(line: Line) -> LineClass:
    E = line.field
    if E.is_square_by_norm(line.slope):
        return LineClass.QUADRATIC
    return LineClass.NON_QUADRATIC


def slope_classes(E: ExtField) -> list[ExtElement]:
    """The q+1 canonical slopes, one per parallel class."""
    F = E.base
    m = F.smallest_unit()
    return [E.element(m, 0)] + [E.element(x, m) for x in F.elements()]


def pencil(p: ExtElement) -> tuple[list[Line], list[Line]]:
    """Lines through ``p`` split into (quadratic, non-quadratic)."""
    quad, nonquad = [], []
    for s in slope_classes(p.field):
        line = line_through(p, s)
        (quad if classify_line(line) is LineClass.QUADRATIC else nonquad).append(line)
    return quad, nonquad


@dataclass
class OvalReport:
    is_oval: bool
    tangent_counts: dict = field(repr=False)
    secant_count_per_point: dict = field(repr=False)
    tangent_count_per_point: dict = field(repr=False)
    max_collinear: int = 0

    def qvist_holds(self) -> bool:
        return all(n in (0, 2) for n in self.tangent_counts.values())


def _direction_counts(p: ExtElement, S) -> dict:
    counts: dict = {}
    for g in S:
        if g != p:
            k = canonical_slope(g - p).index
            counts[k] = counts.get(k, 0) + 1
    return counts


def oval_report(S, external_sample: int | None = None, seed: int = 0) -> OvalReport:
    """Oval test plus tangent/secant statistics for a point set ``S``.

    Every point off ``S`` is examined unless ``external_sample`` limits the
    sweep to that many randomly chosen points.
    """
    S = list(S)
    if not S:
        return OvalReport(False, {}, {}, {})
    E = S[0].field
    q = E.q
    members = set(S)

    secants, tangents_at = {}, {}
    max_col = 1 if S else 0
    for g in S:
        counts = _direction_counts(g, S)
        # a direction seen c times through g means a line with c+1 points of S
        max_col = max([max_col] + [c + 1 for c in counts.values()])
        secants[g] = sum(1 for c in counts.values() if c == 1)
        tangents_at[g] = (q + 1) - len(counts)
    is_oval = len(members) == q + 1 and max_col <= 2

    outside = [g for g in E.elements() if g not in members]
    if external_sample is not None and external_sample < len(outside):
        outside = random.Random(seed).sample(outside, external_sample)
    tangent_counts = {}
    for g in outside:
        counts = _direction_counts(g, S)
        tangent_counts[g] = sum(1 for c in counts.values() if c == 1)
    return OvalReport(is_oval, tangent_counts, secants, tangents_at, max_col)
