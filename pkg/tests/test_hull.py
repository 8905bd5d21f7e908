from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, assume, given, settings, strategies as st

from quatpoly.algebra import HALF, FieldScalar
from quatpoly.checks import REFERENCE_CUBE, random_simplex
from quatpoly.coxeter import named_quaternion_set
from quatpoly.hull import BRUTE_LIMIT, DegenerateInput, affine_rank, brute_facets, convex_hull, dot, facets, sub


def _pts(rows):
    return [tuple(FieldScalar.coerce(x) for x in r) for r in rows]


def test_simplex():
    pts = _pts([(0, 0, 0, 0), (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)])
    assert facets(pts, workers=1) == brute_facets(pts) == [(0, 1, 2, 3), (0, 1, 2, 4), (0, 1, 3, 4), (0, 2, 3, 4), (1, 2, 3, 4)]


def test_random_simplex_agrees():
    pts = random_simplex()
    assert facets(pts, workers=1) == brute_facets(pts)


def test_tesseract_has_cubic_facets():
    pts = _pts([(a, b, c, d) for a in (0, 1) for b in (0, 1) for c in (0, 1) for d in (0, 1)])
    fs = facets(pts, workers=1)
    assert fs == brute_facets(pts)
    assert len(fs) == 8 and all(len(f) == 8 for f in fs)


def test_24cell_matches_oracle():
    T = list(named_quaternion_set("T"))
    fs = facets(T, workers=1)
    assert fs == brute_facets(T)
    assert len(fs) == 24 and all(len(f) == 6 for f in fs)


def test_cube_points_rejected():
    cube = [tuple(FieldScalar.coerce(x) * HALF for x in r) for r in REFERENCE_CUBE]
    assert affine_rank(cube) == 3
    with pytest.raises(DegenerateInput):
        facets(cube, workers=1)
    with pytest.raises(DegenerateInput):
        brute_facets(cube)


def test_brute_guard():
    S = list(named_quaternion_set("S"))
    assert len(S) > BRUTE_LIMIT
    with pytest.raises(ValueError):
        brute_facets(S)


def test_interior_points_ignored():
    pts = _pts([(0, 0, 0, 0), (4, 0, 0, 0), (0, 4, 0, 0), (0, 0, 4, 0), (0, 0, 0, 4), (1, 1, 1, Fraction(1, 2))])
    assert facets(pts, workers=1) == [(0, 1, 2, 3), (0, 1, 2, 4), (0, 1, 3, 4), (0, 2, 3, 4), (1, 2, 3, 4)]


def test_worker_counts_give_identical_output():
    I = list(named_quaternion_set("I"))
    one = convex_hull(I, workers=1)
    two = convex_hull(I, workers=2)
    assert [f.key for f in one.facets] == [f.key for f in two.facets]
    assert one.ridge_facets == two.ridge_facets
    assert len(one.facets) == 600


def test_env_worker_hint(monkeypatch):
    from quatpoly.hull import default_workers
    monkeypatch.setenv("QUATPOLY_THREADS", "3")
    assert default_workers() == 3
    monkeypatch.setenv("QUATPOLY_THREADS", "junk")
    assert default_workers() >= 1


def _valid(points, hull):
    """Every facet supports the whole set; every ridge has two owners."""
    for face in hull.facets:
        base = points[min(face.vertices)]
        side = {dot(face.normal, sub(p, base)).sign() for p in points}
        assert side <= {0, -1}
        on = {i for i, p in enumerate(points) if dot(face.normal, sub(p, base)).is_zero()}
        assert on == set(face.vertices)
    assert set(Counter(len(v) for v in hull.ridge_facets.values())) == {2}


coord = st.fractions(min_value=-6, max_value=6, max_denominator=4)
generic = st.lists(st.tuples(coord, coord, coord, coord), min_size=5, max_size=11, unique=True)
lattice = st.lists(st.tuples(*[st.integers(-1, 1)] * 4), min_size=5, max_size=14, unique=True)


@settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.filter_too_much])
@given(generic)
def test_random_clouds_match_oracle(rows):
    pts = _pts(rows)
    assume(affine_rank(pts) == 4)
    hull = convex_hull(pts, workers=1)
    assert [f.key for f in hull.facets] == brute_facets(pts)
    _valid(pts, hull)


@settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.filter_too_much])
@given(lattice)
def test_degenerate_lattice_clouds_match_oracle(rows):
    pts = _pts(rows)
    assume(affine_rank(pts) == 4)
    hull = convex_hull(pts, workers=1)
    assert [f.key for f in hull.facets] == brute_facets(pts)
    _valid(pts, hull)


def test_irrational_coordinates():
    # 600-cell vertices with a tilted subset; facets still agree with the oracle
    I = list(named_quaternion_set("I"))[:26]
    pts = [tuple(p.c) for p in I]
    assert affine_rank(pts) == 4
    assert facets(pts, workers=1) == brute_facets(pts)
