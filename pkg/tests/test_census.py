import random
from functools import lru_cache

import pytest
from hypothesis import given, settings, strategies as st

from paleyclique import census as cz
from paleyclique.affine_plane import classify_line, line_joining
from paleyclique.constructions import construct_c1, construct_c4
from paleyclique.errors import BudgetExhausted, NotAClique, NotAnArc
from paleyclique.paley import paley_graph


def random_aut(E, rng):
    squares = [g * g for g in E.units()]
    return cz.AutMap(rng.choice(squares), rng.choice(E.elements()), rng.randrange(2 * E.e))


def test_automap_rejects_nonsquare():
    E = paley_graph(9).field
    with pytest.raises(ValueError):
        cz.AutMap(E.beta, E.zero)
    with pytest.raises(ValueError):
        cz.AutMap(E.zero, E.zero)


@pytest.mark.parametrize("q", [5, 9, 27])
def test_automap_preserves_adjacency(q):
    G = paley_graph(q)
    E = G.field
    rng = random.Random(q)
    els = E.elements()
    for _ in range(20):
        f = random_aut(E, rng)
        for _ in range(200):
            u, v = rng.sample(els, 2)
            assert G.adjacent(u, v) == G.adjacent(f(u), f(v))


@pytest.mark.parametrize("q", [9, 25, 27])
def test_automap_group_laws(q):
    E = paley_graph(q).field
    rng = random.Random(1)
    for _ in range(30):
        f, g = random_aut(E, rng), random_aut(E, rng)
        h = f.compose(g)
        inv = f.inverse()
        for x in rng.sample(E.elements(), 10):
            assert h(x) == f(g(x))
            assert inv(f(x)) == x and f(inv(x)) == x


def test_automap_preserves_line_classes():
    E = paley_graph(13).field
    rng = random.Random(2)
    for _ in range(100):
        f = random_aut(E, rng)
        u, v = rng.sample(E.elements(), 2)
        line = line_joining(u, v)
        img = f.apply(line.points)
        line2 = line_joining(f(u), f(v))
        assert img == line2.points
        assert classify_line(line) is classify_line(line2)


def test_subfield_stabiliser():
    E = paley_graph(11).field
    sub = frozenset(E.subfield())
    for a in range(1, 11):
        for b in range(11):
            assert cz.AutMap(E.element(a), E.element(b)).apply(sub) == sub


def test_arc_normalizer():
    G = paley_graph(29)
    E = G.field
    ident = cz.arc_normalizer(G, E.zero, E.one)
    assert all(ident(g) == g for g in E.elements()[:100])
    f = cz.arc_normalizer(G, E.element(1), E.element(3))
    assert f(E.element(3)) == E.one and f(E.one) == E.zero
    for g in E.elements()[:50]:
        assert f(g) == (g - 1) / E.element(2)
    with pytest.raises(NotAnArc):
        cz.arc_normalizer(G, E.zero, E.alpha)
    with pytest.raises(NotAnArc):
        cz.arc_normalizer(G, E.one, E.one)


def test_canonical_form_basics():
    G = paley_graph(29)
    E = G.field
    assert cz.canonical_form(G, [E.zero, E.one]) == (0, 1)
    with pytest.raises(NotAClique):
        cz.canonical_form(G, [E.zero])
    with pytest.raises(NotAClique):
        cz.canonical_form(G, [E.zero, E.alpha])
    c1 = construct_c1(G).elements
    frob = [E.frobenius(g, E.e) for g in c1]
    assert cz.canonical_form(G, c1) == cz.canonical_form(G, frob)
    assert cz.canonical_form(G, c1) != cz.canonical_form(G, construct_c4(G)[0].elements)


@lru_cache(maxsize=None)
def _cliques(q):
    return cz.enumerate_target_cliques(paley_graph(q))


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([9, 13, 25]), st.randoms(use_true_random=False))
def test_canonical_form_invariant(q, rng):
    G = paley_graph(q)
    E = G.field
    C = [E.from_index(i) for i in rng.choice(_cliques(q))]
    f = random_aut(E, rng)
    assert cz.canonical_form(G, f.apply(C)) == cz.canonical_form(G, C)


def test_enumerated_cliques_are_maximal_through_arc():
    G = paley_graph(13)
    E = G.field
    found = cz.enumerate_target_cliques(G)
    assert found == sorted(set(found))
    for c in found:
        assert c[:2] == (0, 1) and len(c) == 7
        assert G.is_maximal([E.from_index(i) for i in c]).maximal


def test_parallel_matches_sequential():
    G = paley_graph(13)
    assert cz.CliqueSearch(G).run(jobs=2) == cz.CliqueSearch(G).run(jobs=1)


def test_budget_exhaustion():
    G = paley_graph(31)
    with pytest.raises(BudgetExhausted):
        cz.classify(G, budget=0.001)


@pytest.mark.parametrize("q,orbits", [(5, 1), (7, 1), (9, 3), (11, 3), (13, 4)])
def test_small_census(q, orbits):
    res = cz.classify(paley_graph(q))
    assert res.orbit_count == orbits
    assert sum(o.cliques_through_arc for o in res.orbits) == res.clique_count
    tags = {t for o in res.orbits for t in o.tags}
    assert {cz.FAMILY_C1, cz.FAMILY_C3} <= tags


def test_census_q29_contains_constructions():
    G = paley_graph(29)
    E = G.field
    found = set(cz.enumerate_target_cliques(G))
    for S in (construct_c1(G).elements, construct_c4(G)[0].elements):
        S = list(S)
        f = cz.arc_normalizer(G, S[0], S[1])
        assert tuple(sorted(g.index for g in f.apply(S))) in found


def test_cache_roundtrip(tmp_path):
    G = paley_graph(9)
    E = G.field
    res = cz.classify(G)
    path = cz.cache_path(tmp_path, 9, E.d)
    assert path.name == f"census-q9-d{E.d}.v1"
    cz.write_cache(path, res, E)
    back = cz.read_cache(path)
    assert back == res
    assert cz.dumps(back, E) == path.read_text()
    assert cz.read_cache(tmp_path / "missing") is None


def test_default_cache_dir(monkeypatch, tmp_path):
    monkeypatch.setenv("CACHE_DIR", str(tmp_path))
    assert cz.default_cache_dir() == tmp_path
