import pytest
from hypothesis import given, settings, strategies as st

from paleyclique import moebius as mb
from paleyclique.constructions import construct_c1, construct_c2, r
from paleyclique.errors import DegenerateGamma, NotOnCircle, PoleAtOne
from paleyclique.gf_ext import make_extension
from paleyclique.paley import paley_graph
from paleyclique.textio import parse_element

QS = [3, 5, 7, 9, 11, 13, 17, 19, 23, 25, 27, 29, 31, 49, 81]


def test_fixed_values():
    E = make_extension(29)
    assert mb.phi(-E.one) == E.zero
    assert mb.phi(E.zero) == -E.one
    assert mb.phi(E.one) == E.one
    assert mb.psi(E.alpha) == E.alpha
    assert mb.phi(parse_element(E, "-3+2*a")) == parse_element(E, "14*a")
    assert mb.psi(parse_element(E, "-3+7*a")) == parse_element(E, "14")
    E31 = make_extension(31)
    assert mb.phi(parse_element(E31, "-7+4*a")) == parse_element(E31, "15*a")
    assert mb.psi(E31.zero) == -E31.alpha


def test_closed_form_examples():
    E = make_extension(29)
    assert mb.phi_on_circle(parse_element(E, "-3+2*a")) == parse_element(E, "14*a")
    assert mb.phi_on_circle(parse_element(E, "14-5*a")) == parse_element(E, "13*a")
    with pytest.raises(PoleAtOne):
        mb.phi_on_circle(E.one)
    with pytest.raises(NotOnCircle):
        mb.phi_on_circle(E.alpha)
    with pytest.raises(DegenerateGamma):
        mb.phi_of_square(-E.one)
    with pytest.raises(PoleAtOne):
        mb.psi_of_alpha_times(E.one)
    with pytest.raises(DegenerateGamma):
        mb.psi_of_alpha_square(E.one)


@pytest.mark.parametrize("q", [5, 7, 9, 13, 25, 27, 29, 31])
def test_closed_forms_on_whole_circle(q):
    E = make_extension(q)
    a = E.alpha
    for g in E.circle_subgroups().Q:
        if g != E.one:
            assert mb.phi_on_circle(g) == mb.phi(g)
            assert mb.psi_of_alpha_times(g) == mb.psi(a * g)
        if g.y:
            assert mb.phi_of_square(g) == mb.phi(g * g)
            assert mb.psi_of_alpha_square(g) == mb.psi(a * g * g)


@pytest.mark.parametrize("q", [5, 9, 13, 29, 31])
def test_circle_images(q):
    E = make_extension(q)
    C = E.circle_subgroups()
    a_line = {E.alpha.scale(c) for c in range(q)} if E.e == 1 else {E.alpha.scale(c) for c in E.base.elements()}
    assert {mb.phi(g) for g in C.Q if g != E.one} == a_line
    assert {mb.psi(E.alpha * g) for g in C.Q if g != E.one} == set(E.subfield())


@pytest.mark.parametrize("q", [3, 5, 9, 27, 29])
def test_bijection_and_involution(q):
    E = make_extension(q)
    els = E.elements()
    for f in (mb.phi, mb.psi):
        imgs = [f(g) for g in els]
        assert len(set(imgs)) == len(els)
        assert all(f(h) == g for g, h in zip(els, imgs))
    assert all(mb.psi(g) == mb.psi_via_phi(g) for g in els)


@pytest.mark.parametrize("q", QS)
def test_theorems(q):
    G = paley_graph(q)
    tphi = mb.verify_theorem_phi(G)
    tpsi = mb.verify_theorem_psi(G)
    assert tphi.equal and tphi.witness is None
    assert tpsi.equal
    assert tphi.rhs == construct_c2(G).elements
    assert tpsi.rhs == construct_c1(G).elements


@pytest.mark.parametrize("q", QS)
def test_corollaries(q):
    rep = mb.verify_corollaries(paley_graph(q))
    assert rep.ok, rep.checks
    # K_{1,(q+1)/2} for q = 1 mod 4; clique on Q1 images plus an edge otherwise
    extra = 1 if r(q) == 1 else 2
    assert len(rep.phi_part) == len(rep.psi_part) == (q + 1) // 2 + extra


def test_mismatch_report_has_witness():
    E = make_extension(5)
    rep = mb._compare("x", {E.one}, {E.one, E.alpha})
    assert not rep.equal and rep.witness == E.alpha


@settings(max_examples=300, deadline=None)
@given(st.sampled_from([9, 25, 29, 31, 49]), st.data())
def test_involution_property(q, data):
    E = make_extension(q)
    g = E.from_index(data.draw(st.integers(0, E.size - 1)))
    assert mb.phi(mb.phi(g)) == g
    assert mb.psi(mb.psi(g)) == g
