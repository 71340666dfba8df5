"""The involutions phi(g) = (g+1)/(g-1) and psi(g) = (alpha*g + d)/(g - alpha).

Both poles are patched to fixed points (phi(1) = 1, psi(alpha) = alpha), which
makes each map a bijection of GF(q^2).  ``verify_*`` functions compare images
of the circle sets with the constructions and return a report rather than
raising.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .constructions import construct_c1, construct_c2, r
from .errors import DegenerateGamma, NotOnCircle, PoleAtOne
from .gf_ext import ExtElement, ExtField
from .paley import PaleyGraph


def phi(g: ExtElement) -> ExtElement:
    one = g.field.one
    if g == one:
        return one
    return (g + one) / (g - one)


def psi(g: ExtElement) -> ExtElement:
    E = g.field
    a = E.alpha
    if g == a:
        return a
    return (a * g + E.element(E.d)) / (g - a)


def psi_via_phi(g: ExtElement) -> ExtElement:
    a = g.field.alpha
    return a * phi(g / a)


def _check_circle(g: ExtElement):
    if g.field.norm(g) != 1:
        raise NotOnCircle("element is not on the norm-1 circle")


def phi_on_circle(g: ExtElement) -> ExtElement:
    """Closed form of phi on Q minus 1: (y/(x-1)) * alpha."""
    _check_circle(g)
    E = g.field
    if g == E.one:
        raise PoleAtOne("closed form is undefined at 1")
    F = E.base
    return E.element(0, F.div(g.y, F.sub(g.x, 1)))


def phi_of_square(g: ExtElement) -> ExtElement:
    """phi(g^2) = (x/(y*d)) * alpha for g on Q minus {1, -1}."""
    _check_circle(g)
    E = g.field
    if g.y == 0:
        raise DegenerateGamma("g must not be +-1")
    F = E.base
    return E.element(0, F.div(g.x, F.mul(g.y, E.d)))


def psi_of_alpha_times(g: ExtElement) -> ExtElement:
    """psi(alpha*g) = y*d/(x-1) for g on Q minus 1."""
    _check_circle(g)
    E = g.field
    if g == E.one:
        raise PoleAtOne("closed form is undefined at 1")
    F = E.base
    return E.element(F.div(F.mul(g.y, E.d), F.sub(g.x, 1)))


def psi_of_alpha_square(g: ExtElement) -> ExtElement:
    """psi(alpha*g^2) = x/y for g on Q minus {1, -1}."""
    _check_circle(g)
    E = g.field
    if g.y == 0:
        raise DegenerateGamma("g must not be +-1")
    return E.element(E.base.div(g.x, g.y))


@dataclass
class CorrespondenceReport:
    theorem: str
    lhs: frozenset
    rhs: frozenset
    equal: bool
    witness: ExtElement | None = None


def _compare(name: str, lhs, rhs) -> CorrespondenceReport:
    lhs, rhs = frozenset(lhs), frozenset(rhs)
    witness = None
    if lhs != rhs:
        witness = min(lhs ^ rhs, key=lambda g: g.index)
    return CorrespondenceReport(name, lhs, rhs, lhs == rhs, witness)


def phi_source(E: ExtField) -> frozenset:
    C = E.circle_subgroups()
    return C.Q0 | {E.zero} if r(E.q) == 3 else C.Q0


def psi_source(E: ExtField) -> frozenset:
    C = E.circle_subgroups()
    aq0 = frozenset(E.alpha * g for g in C.Q0)
    return aq0 | {E.zero} if r(E.q) == 3 else aq0


def verify_theorem_phi(G: PaleyGraph) -> CorrespondenceReport:
    E = G.field
    return _compare("T1", (phi(g) for g in phi_source(E)), construct_c2(G).elements)


def verify_theorem_psi(G: PaleyGraph) -> CorrespondenceReport:
    E = G.field
    return _compare("T2", (psi(g) for g in psi_source(E)), construct_c1(G).elements)


@dataclass
class CorollaryReport:
    phi_part: frozenset
    psi_part: frozenset
    checks: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def _all_pairs(G, S, want):
    S = list(S)
    return all(G.adjacent(S[i], S[j]) == want for i in range(len(S)) for j in range(i + 1, len(S)))


def _cross(G, A, B, want):
    return all(G.adjacent(a, b) == want for a in A for b in B)


def verify_corollaries(G: PaleyGraph) -> CorollaryReport:
    """Induced structure on phi(Q1 + {1}) and psi(alpha*Q1 + {alpha}) (plus 0 when q = 3 mod 4)."""
    E = G.field
    C = E.circle_subgroups()
    one, a = E.one, E.alpha
    phi_q1 = frozenset(phi(g) for g in C.Q1)
    psi_q1 = frozenset(psi(a * g) for g in C.Q1)
    checks = {}
    if r(E.q) == 1:
        # complete bipartite: phi(Q1) independent, all joined to 1
        checks["phi(Q1) independent"] = _all_pairs(G, phi_q1, False)
        checks["1 adjacent to all of phi(Q1)"] = _cross(G, [one], phi_q1, True)
        checks["psi(aQ1) clique"] = _all_pairs(G, psi_q1, True)
        checks["alpha adjacent to none of psi(aQ1)"] = _cross(G, [a], psi_q1, False)
        phi_part = phi_q1 | {phi(one)}
        psi_part = psi_q1 | {psi(a)}
    else:
        edge = {phi(E.zero), phi(one)}
        checks["phi({0,1}) = {1,-1}"] = edge == {one, -one}
        checks["phi(Q1) clique"] = _all_pairs(G, phi_q1, True)
        checks["{1,-1} edge"] = G.adjacent(one, -one)
        checks["no edges phi(Q1)-{1,-1}"] = _cross(G, edge, phi_q1, False)
        aedge = {psi(E.zero), psi(a)}
        checks["psi({0,a}) = {a,-a}"] = aedge == {a, -a}
        checks["psi(aQ1) clique"] = _all_pairs(G, psi_q1, True)
        checks["{a,-a} edge"] = G.adjacent(a, -a)
        checks["no edges psi(aQ1)-{a,-a}"] = _cross(G, aedge, psi_q1, False)
        phi_part = phi_q1 | edge
        psi_part = psi_q1 | aedge
    return CorollaryReport(frozenset(phi_part), frozenset(psi_part), checks)
