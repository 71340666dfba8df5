"""Named invariant checks for one field, used by ``verify`` and the acceptance tests.

Each check returns a :class:`CheckResult`; a failing check carries a witness
(the first offending element or a short description).  Checks that would be
O(q^4) run exhaustively only for small q and on a seeded sample otherwise.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from . import affine_plane as ap
from . import constructions as cons
from . import moebius as mb
from .paley import Kind, PaleyGraph, paley_graph
from .textio import format_element


@dataclass
class CheckResult:
    name: str
    passed: bool
    witness: str | None = None

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        tail = f"  witness: {self.witness}" if self.witness else ""
        return f"{mark} {self.name}{tail}"


class _Suite:
    def __init__(self, G: PaleyGraph, seed: int):
        self.G = G
        self.E = G.field
        self.F = G.field.base
        self.q = G.q
        self.rng = random.Random(seed)
        self.results: list[CheckResult] = []

    def check(self, name: str, fn: Callable[[], object]):
        """``fn`` returns None/True on success, or a witness (anything else)."""
        try:
            out = fn()
        except Exception as exc:  # a crash is a failed check, not a crashed suite
            self.results.append(CheckResult(name, False, f"{type(exc).__name__}: {exc}"))
            return
        ok = out is None or out is True
        witness = None if ok else (format_element(out) if hasattr(out, "field") else str(out))
        self.results.append(CheckResult(name, ok, witness))

    def sample(self, population, k):
        population = list(population)
        if len(population) <= k:
            return population
        return self.rng.sample(population, k)


def _first(xs):
    for x in xs:
        return x
    return None


def _check_base(s: _Suite):
    F, q = s.F, s.q
    units = list(F.units())
    sq = {a for a in units if F.is_square(a)}

    s.check("base.square_count", lambda: len(sq) == (q - 1) // 2 or f"{len(sq)} squares")
    s.check("base.squares_are_squares", lambda: sq == {F.mul(a, a) for a in units} or "log parity != squares")

    def product_rule():
        us = s.sample(units, 200)
        for a in us:
            for b in us:
                if F.is_square(F.mul(a, b)) != (F.is_square(a) == F.is_square(b)):
                    return f"{a}*{b}"
    s.check("base.product_rule", product_rule)
    s.check("base.minus_one", lambda: F.is_square(F.neg(1)) == (q % 4 == 1) or "wrong character of -1")
    s.check(
        "base.minus_nonsquare",
        lambda: _first(n for n in units if n not in sq and F.is_square(F.neg(n)) != (q % 4 == 3)),
    )

    def roundtrip():
        for a in F.elements():
            if F.from_digits(F.digits(a)) != a:
                return a
            if a and F.exp(F.log(a)) != a:
                return a
    s.check("base.roundtrip", roundtrip)

    def field_axioms():
        xs = s.sample(F.elements(), 40)
        for a in xs:
            for b in xs:
                if F.add(F.sub(a, b), b) != a:
                    return f"sub {a},{b}"
                if b and F.mul(F.div(a, b), b) != a:
                    return f"div {a},{b}"
                for c in xs[:10]:
                    if F.mul(a, F.add(b, c)) != F.add(F.mul(a, b), F.mul(a, c)):
                        return f"distributivity {a},{b},{c}"
    s.check("base.field_axioms", field_axioms)


def _check_ext(s: _Suite):
    E, F, q = s.E, s.F, s.q
    units = E.units()
    one = E.one

    def norm_mult():
        xs = units if q <= 13 else s.sample(units, 120)
        for a in xs:
            for b in xs:
                if E.norm(a * b) != F.mul(E.norm(a), E.norm(b)):
                    return a
    s.check("ext.norm_multiplicative", norm_mult)
    s.check("ext.norm_is_power", lambda: _first(g for g in s.sample(units, 300) if E.norm(g) != (g ** (q + 1)).x or (g ** (q + 1)).y))

    def kernel():
        ker = [g for g in units if E.norm(g) == 1]
        if len(ker) != q + 1:
            return f"|Ker N| = {len(ker)}"
        if {E.norm(g) for g in units} != set(F.units()):
            return "image(N) != GF(q)*"
    s.check("ext.norm_kernel", kernel)

    def squares():
        n = 0
        for g in units:
            a, b = E.is_square_by_norm(g), E.is_square_by_log(g)
            if a != b:
                return g
            n += a
        if n != (q * q - 1) // 2:
            return f"{n} squares"
    s.check("ext.squareness_criterion", squares)
    s.check("ext.subfield_squares", lambda: _first(c for c in E.subfield()[1:] if not E.is_square(c)))
    s.check("ext.alpha_square", lambda: E.is_square(E.alpha) == (q % 4 == 3) or "alpha")
    s.check("ext.norm_alpha", lambda: E.norm(E.alpha) == F.neg(E.d) or "N(alpha) != -d")
    s.check("ext.alpha_squared", lambda: E.alpha * E.alpha == E.element(E.d) or "alpha^2 != d")

    def frob():
        e = E.e
        for g in s.sample(units, 100):
            h = s.rng.choice(units)
            if E.frobenius(g * h, 1) != E.frobenius(g, 1) * E.frobenius(h, 1):
                return g
            if E.frobenius(g + h, 1) != E.frobenius(g, 1) + E.frobenius(h, 1):
                return g
            if E.frobenius(g, 1) != g ** E.p:
                return g
            if E.frobenius(E.frobenius(g, e), e) != g:
                return g
        if E.frobenius(E.alpha, e) != -E.alpha:
            return "alpha^q != -alpha"
        if _first(c for c in E.subfield() if E.frobenius(c, e) != c):
            return "not identity on GF(q)"
    s.check("ext.frobenius", frob)

    def circle():
        C = E.circle_subgroups()
        w = E.omega
        if E.multiplicative_order(E.beta) != E.order:
            return "beta not primitive"
        if E.multiplicative_order(w) != q + 1 or not E.is_square(w):
            return "omega"
        gen_Q = {w ** k for k in range(q + 1)}
        if gen_Q != set(C.Q):
            return "<omega> != Ker N"
        if {w ** (2 * k) for k in range((q + 1) // 2)} != set(C.Q0):
            return "<omega^2> != squares of Q"
        if len(C.Q0) != (q + 1) // 2 or len(C.Q1) != (q + 1) // 2:
            return "|Q0|,|Q1|"
        if {w * g for g in C.Q0} != set(C.Q1):
            return "Q1 != omega*Q0"
        if one not in C.Q0 or ((-one) in C.Q0) != (((q + 1) // 2) % 2 == 0):
            return "+-1 membership"
    s.check("ext.circle_subgroups", circle)


def _check_plane(s: _Suite):
    E, q = s.E, s.q
    pts = E.elements()

    def pencils():
        sample = pts if q <= 13 else s.sample(pts, 6)
        for p in sample:
            quad, non = ap.pencil(p)
            if len(quad) != (q + 1) // 2 or len(non) != (q + 1) // 2:
                return p
            cover = {}
            for line in quad + non:
                for g in line.points:
                    if g != p:
                        cover[g] = cover.get(g, 0) + 1
            if len(cover) != q * q - 1 or set(cover.values()) != {1}:
                return p
    s.check("plane.pencil_counts", pencils)

    def special_lines():
        if ap.classify_line(ap.line_through(E.zero, E.one)) is not ap.LineClass.QUADRATIC:
            return "GF(q)"
        want = ap.LineClass.QUADRATIC if q % 4 == 3 else ap.LineClass.NON_QUADRATIC
        if ap.classify_line(ap.line_through(E.zero, E.alpha)) is not want:
            return "alpha*GF(q)"
    s.check("plane.two_special_lines", special_lines)

    def quadratic_means_adjacent():
        for _ in range(30):
            p, sl = s.rng.choice(pts), s.rng.choice(pts[1:])
            line = ap.line_through(p, sl)
            quad = ap.classify_line(line) is ap.LineClass.QUADRATIC
            L = list(line.points)
            for _ in range(5):
                u, v = s.rng.sample(L, 2)
                if s.G.adjacent(u, v) != quad:
                    return u
            other = ap.line_through(s.rng.choice(L), sl.scale(s.rng.choice(list(E.base.units()))))
            if other != line or ap.classify_line(other) is not ap.classify_line(line):
                return p
    s.check("plane.line_class_invariance", quadratic_means_adjacent)

    def oval():
        C = E.circle_subgroups()
        sample = None if q <= 31 else 400
        rep = ap.oval_report(C.Q, external_sample=sample, seed=s.rng.randrange(1 << 30))
        if not rep.is_oval:
            return "Q is not an oval"
        if not rep.qvist_holds():
            return _first(g for g, n in rep.tangent_counts.items() if n not in (0, 2))
        for g in C.Q:
            if rep.tangent_count_per_point[g] != 1 or rep.secant_count_per_point[g] != q:
                return g
        if ap.oval_report(E.subfield()).is_oval:
            return "GF(q) reported as an oval"
    s.check("plane.oval_and_qvist", oval)


def _check_paley(s: _Suite):
    G, E, q = s.G, s.E, s.q

    s.check("paley.degree", lambda: _first(v for v in s.sample(range(G.n), 5) if G.degree(v) != (G.n - 1) // 2))
    s.check("paley.symmetric", lambda: E.is_square(-E.one) or "-1 non-square in GF(q^2)")

    def self_comp():
        _, checked, failures = G.self_complement_witness(samples=10_000, seed=s.rng.randrange(1 << 30))
        if failures:
            return failures[0][0]
    s.check("paley.self_complementary", self_comp)

    def preserve_by_square():
        sq_mult = E.beta * E.beta
        for _ in range(2000):
            u, v = s.rng.sample(E.elements(), 2)
            if G.adjacent(u, v) != G.adjacent(sq_mult * u, sq_mult * v):
                return u
    s.check("paley.square_multiplier_automorphism", preserve_by_square)

    if q <= 13:
        def srg():
            n = q * q
            _, deg, lam, mu = G.srg_parameters()
            want = ({(n - 1) // 2}, {(n - 5) // 4}, {(n - 1) // 4})
            if (deg, lam, mu) != want:
                return f"k={deg} lambda={lam} mu={mu}"
        s.check("paley.strongly_regular", srg)


def _check_constructions(s: _Suite):
    G, E, q = s.G, s.E, s.q
    allc = cons.all_constructions(G)
    for ident, res in allc.items():
        s.check(
            f"construction.{ident}",
            lambda res=res: res.ok() or f"size={len(res.set)} kind={res.set.kind.value} maximal={res.set.maximal}",
        )
    s.check("construction.c_part_count", lambda: len(cons.line_points(E)) == (q - 1) // 2 or "count")
    s.check(
        "construction.pencil_route",
        lambda: set(cons.line_points(E)) == set(cons.line_points_by_pencil(E)) or "routes differ",
    )

    def frobenius_c1():
        c1 = allc["C1"].elements
        img = frozenset(E.frobenius(g, E.e) for g in c1)
        if q % 4 == 3:
            return img == c1 or "C1 not conjugation invariant"
        flipped = (c1 - {E.alpha}) | {-E.alpha}
        return img == flipped or "conjugation does not swap alpha"
    s.check("construction.c1_conjugation", frobenius_c1)

    def times_alpha():
        for ident, res in allc.items():
            S = frozenset(E.alpha * g for g in res.elements)
            kind = res.set.kind
            if q % 4 == 1:
                kind = Kind.INDEPENDENT if kind is Kind.CLIQUE else Kind.CLIQUE
            vs = G.is_maximal(S, kind)
            if not vs.maximal:
                return ident
    s.check("construction.multiplication_by_alpha", times_alpha)

    def swap_halves():
        # gamma -> -gamma^q carries the +1 half of C2 onto the -1 half
        c2 = allc["C2"].elements
        img = frozenset(-E.frobenius(g, E.e) for g in c2)
        want = (c2 - {E.one}) | {-E.one} if q % 4 == 1 else c2
        return img == want or "C2 halves"
    s.check("construction.c2_halves", swap_halves)


def _check_moebius(s: _Suite):
    G, E, F, q = s.G, s.E, s.F, s.q
    pts = E.elements()
    C = E.circle_subgroups()
    a = E.alpha

    def bij_inv(f):
        images = [f(g) for g in pts]
        if len(set(images)) != len(pts):
            return "not injective"
        return _first(g for g, h in zip(pts, images) if f(h) != g)
    s.check("moebius.phi_bijective_involution", lambda: bij_inv(mb.phi))
    s.check("moebius.psi_bijective_involution", lambda: bij_inv(mb.psi))
    s.check("moebius.psi_is_conjugated_phi", lambda: _first(g for g in pts if mb.psi(g) != mb.psi_via_phi(g)))

    line_a = {c * a for c in E.subfield()}
    s.check("moebius.phi_circle_to_line", lambda: {mb.phi(g) for g in C.Q - {E.one}} == line_a or "phi(Q-1)")
    s.check(
        "moebius.psi_alpha_circle_to_subfield",
        lambda: {mb.psi(a * g) for g in C.Q - {E.one}} == set(E.subfield()) or "psi(aQ-a)",
    )
    s.check("moebius.closed_form_phi", lambda: _first(g for g in C.Q - {E.one} if mb.phi_on_circle(g) != mb.phi(g)))
    s.check(
        "moebius.closed_form_phi_square",
        lambda: _first(g for g in C.Q - {E.one, -E.one} if mb.phi_of_square(g) != mb.phi(g * g)),
    )
    s.check(
        "moebius.closed_form_psi",
        lambda: _first(g for g in C.Q - {E.one} if mb.psi_of_alpha_times(g) != mb.psi(a * g)),
    )
    s.check(
        "moebius.closed_form_psi_square",
        lambda: _first(g for g in C.Q - {E.one, -E.one} if mb.psi_of_alpha_square(g) != mb.psi(a * g * g)),
    )

    def proof_norm():
        for g in C.Q - {E.one, -E.one}:
            x, y = g.x, g.y
            h = E.one - E.element(0, F.div(x, F.mul(y, E.d)))
            want = F.neg(F.inv(F.mul(F.mul(y, y), E.d)))
            if E.norm(h) != want:
                return g
    s.check("moebius.theorem_norm_identity", proof_norm)
    s.check("moebius.special_values", lambda: (mb.phi(-E.one), mb.phi(E.zero), mb.phi(E.one)) == (E.zero, -E.one, E.one) or "phi(-1),phi(0),phi(1)")

    for name, fn in (("moebius.theorem_phi", mb.verify_theorem_phi), ("moebius.theorem_psi", mb.verify_theorem_psi)):
        s.check(name, lambda fn=fn: fn(G).equal or fn(G).witness)

    def cor():
        rep = mb.verify_corollaries(G)
        return rep.ok or ", ".join(k for k, v in rep.checks.items() if not v)
    s.check("moebius.corollaries", cor)


SECTIONS = {
    "base": _check_base,
    "ext": _check_ext,
    "plane": _check_plane,
    "paley": _check_paley,
    "construction": _check_constructions,
    "moebius": _check_moebius,
}


def run_checks(q: int, d: int | None = None, seed: int = 0, sections=None) -> list[CheckResult]:
    suite = _Suite(paley_graph(q, d), seed)
    for name, fn in SECTIONS.items():
        if sections is None or name in sections:
            fn(suite)
    return suite.results
