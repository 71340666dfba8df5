import random

import pytest

from paleyclique.affine_plane import (
    LineClass, canonical_slope, classify_line, line_joining, line_through, oval_report, pencil, slope_classes,
)
from paleyclique.errors import ZeroSlope
from paleyclique.gf_ext import make_extension


def test_special_lines():
    E = make_extension(29)
    F = E.base
    assert line_through(E.zero, E.one).points == frozenset(E.subfield())
    assert line_through(E.zero, E.alpha).points == frozenset(E.alpha.scale(c) for c in F.elements())
    assert line_through(E.alpha, E.one).points == frozenset(E.element(c, 1) for c in F.elements())


def test_zero_slope():
    E = make_extension(7)
    with pytest.raises(ZeroSlope):
        line_through(E.one, E.zero)


@pytest.mark.parametrize("q,expected", [(29, LineClass.NON_QUADRATIC), (31, LineClass.QUADRATIC),
                                        (9, LineClass.NON_QUADRATIC), (27, LineClass.QUADRATIC)])
def test_alpha_line_class(q, expected):
    E = make_extension(q)
    assert classify_line(line_through(E.zero, E.one)) is LineClass.QUADRATIC
    assert classify_line(line_through(E.zero, E.alpha)) is expected


def test_canonical_slope_is_min_multiple():
    E = make_extension(25)
    F = E.base
    rng = random.Random(3)
    for _ in range(50):
        s = E.from_index(rng.randrange(1, E.size))
        multiples = [s.scale(c) for c in F.units()]
        assert canonical_slope(s) == min(multiples, key=E.sort_key)


@pytest.mark.parametrize("q", [3, 5, 7, 9, 11, 13, 25, 27, 29, 31])
def test_pencil_counts(q):
    E = make_extension(q)
    rng = random.Random(q)
    points = E.elements() if q <= 13 else rng.sample(E.elements(), 20)
    for p in points:
        quad, nonquad = pencil(p)
        assert len(quad) == len(nonquad) == (q + 1) // 2
        lines = quad + nonquad
        for i in range(len(lines)):
            for j in range(i + 1, len(lines)):
                assert lines[i].points & lines[j].points == {p}
    assert len(slope_classes(E)) == q + 1


def test_pencil_example_q9():
    E = make_extension(9)
    quad, nonquad = pencil(E.alpha)
    assert (len(quad), len(nonquad)) == (5, 5)


def test_class_independent_of_representation():
    E = make_extension(13)
    F = E.base
    rng = random.Random(0)
    for _ in range(30):
        u, v = rng.sample(E.elements(), 2)
        line = line_joining(u, v)
        c = rng.randrange(1, 13)
        other = line_through(rng.choice(sorted(line.points)), (v - u).scale(c))
        assert other == line
        assert classify_line(other) is classify_line(line)


def test_quadratic_line_points_are_pairwise_adjacent():
    E = make_extension(11)
    for s in slope_classes(E):
        line = line_through(E.zero, s)
        pts = sorted(line.points)
        adj = {E.is_square_by_norm(a - b) for a in pts for b in pts if a != b}
        assert adj == {classify_line(line) is LineClass.QUADRATIC}


@pytest.mark.parametrize("q", [5, 9, 13, 29])
def test_norm_circle_is_oval(q):
    E = make_extension(q)
    Q = E.circle_subgroups().Q
    rep = oval_report(Q)
    assert rep.is_oval
    assert rep.qvist_holds()
    assert rep.max_collinear == 2
    assert set(rep.tangent_count_per_point.values()) == {1}
    assert set(rep.secant_count_per_point.values()) == {q}
    assert len(rep.tangent_counts) == q * q - (q + 1)


def test_line_is_not_an_oval():
    E = make_extension(29)
    rep = oval_report(E.subfield())
    assert not rep.is_oval
    assert rep.max_collinear == 29
