"""The four families of maximal cliques / independent sets of size (q + q mod 4)/2.

* ``C1``: alpha together with the points of GF(q) adjacent to it (both
  +-alpha when q = 3 mod 4).
* ``C2``: 1 together with the points of alpha*GF(q) that see 1 as 1 sees
  the line (both +-1 when q = 3 mod 4).
* ``C3``: the index-2 subgroup Q0 of the norm-1 circle and its coset Q1,
  with 0 adjoined when q = 3 mod 4.
* ``C4``: alpha times the C3 sets.
"""

from __future__ import annotations

from dataclasses import dataclass

from .affine_plane import LineClass, classify_line, line_joining
from .gf_ext import ExtField
from .paley import Kind, PaleyGraph, VertexSet


def r(q: int) -> int:
    return q % 4


def target_size(q: int) -> int:
    return (q + r(q)) // 2


@dataclass(frozen=True)
class ConstructionResult:
    id: str
    set: VertexSet
    expected_kind: Kind
    expected_size: int

    @property
    def elements(self) -> frozenset:
        return self.set.elements

    def ok(self) -> bool:
        return (
            len(self.set) == self.expected_size
            and self.set.kind is self.expected_kind
            and self.set.maximal is True
        )


def _result(G: PaleyGraph, ident: str, elements, kind: Kind) -> ConstructionResult:
    vs = G.classify_set(elements)
    if vs.kind is kind or len(vs) == 1:
        vs = G.is_maximal(vs.elements, kind)
    return ConstructionResult(ident, vs, kind, target_size(G.q))


def line_points(E: ExtField):
    """The c-part of C1: points of GF(q) adjacent to alpha."""
    a = E.alpha
    return [c for c in E.subfield() if E.is_square_by_norm(c - a)]


def line_points_by_pencil(E: ExtField):
    """Same set as :func:`line_points`, read off the pencil of quadratic lines through alpha."""
    a = E.alpha
    out = []
    for c in E.subfield():
        if classify_line(line_joining(a, c)) is LineClass.QUADRATIC:
            out.append(c)
    return out


def construct_c1(G: PaleyGraph) -> ConstructionResult:
    E = G.field
    S = {E.alpha, *line_points(E)}
    if r(E.q) == 3:
        S.add(-E.alpha)
    return _result(G, "C1", S, Kind.CLIQUE)


def construct_c2(G: PaleyGraph) -> ConstructionResult:
    E = G.field
    one = E.one
    S = {one}
    if r(E.q) == 1:
        S.update(c * E.alpha for c in E.subfield() if not G.adjacent(c * E.alpha, one))
        return _result(G, "C2", S, Kind.INDEPENDENT)
    S.add(-one)
    # c = 0 qualifies here: the line through 0 and 1 is GF(q), which is quadratic
    S.update(c * E.alpha for c in E.subfield() if G.adjacent(c * E.alpha, one))
    return _result(G, "C2", S, Kind.CLIQUE)


def construct_c3(G: PaleyGraph) -> tuple[ConstructionResult, ConstructionResult]:
    E = G.field
    C = E.circle_subgroups()
    if r(E.q) == 1:
        return (
            _result(G, "C3-Q0", C.Q0, Kind.INDEPENDENT),
            _result(G, "C3-Q1", C.Q1, Kind.INDEPENDENT),
        )
    return (
        _result(G, "C3-Q0", C.Q0 | {E.zero}, Kind.CLIQUE),
        _result(G, "C3-Q1", C.Q1 | {E.zero}, Kind.CLIQUE),
    )


def construct_c4(G: PaleyGraph) -> tuple[ConstructionResult, ConstructionResult]:
    E = G.field
    C = E.circle_subgroups()
    a = E.alpha
    aq0 = {a * g for g in C.Q0}
    aq1 = {a * g for g in C.Q1}
    if r(E.q) == 3:
        aq0.add(E.zero)
        aq1.add(E.zero)
    return (
        _result(G, "C4-Q0", aq0, Kind.CLIQUE),
        _result(G, "C4-Q1", aq1, Kind.CLIQUE),
    )


def all_constructions(G: PaleyGraph) -> dict[str, ConstructionResult]:
    out = {"C1": construct_c1(G), "C2": construct_c2(G)}
    for res in (*construct_c3(G), *construct_c4(G)):
        out[res.id] = res
    return out


# CLI selector -> construction id
SELECTORS = {
    "c1": "C1",
    "c2": "C2",
    "q0": "C3-Q0",
    "q1": "C3-Q1",
    "aq0": "C4-Q0",
    "aq1": "C4-Q1",
}
