import random

import pytest
from hypothesis import given, settings, strategies as st

from quatpoly.algebra import E0, E1, E2, E3, HALF, INV_SQRT2, ONE, SIGMA, SQRT2, TAU, ZERO_F, Quaternion, quat_dot
from quatpoly.coxeter import (
    D4_SIMPLE_ROOTS, EXPECTED_ORDERS, GROUP_NAMES, IDENTITY, S3_GENERATORS, GroupElement, GroupOrderExceeded,
    PointSet, apply, build_named_group, compose, dynkin_to_cartesian, expected_decomposition, generate_group,
    mirror_check, named_quaternion_set, orbit, reflection_from_root, root_system, rotation_words, stabilizer,
)
from quatpoly.polytope import LAMBDA_F4, LAMBDA_I

T = named_quaternion_set("T")


def test_reflection_examples():
    r = reflection_from_root(E2 - E3)
    assert apply(r, E2) == E3
    for alpha in D4_SIMPLE_ROOTS:
        assert apply(reflection_from_root(alpha), alpha) == -alpha


def test_reflections_fix_other_weights():
    rs = root_system("D4")
    for i, r in enumerate(rs.reflections()):
        for j, w in enumerate(rs.weights):
            if i != j:
                assert apply(r, w) == w


def test_d4_cartan_and_weights():
    rs = root_system("D4")
    assert quat_dot(rs.roots[0], rs.roots[1]) == -ONE
    assert [[int(x.a) for x in row] for row in rs.gram] == [
        [2, -1, 0, 0], [-1, 2, -1, -1], [0, -1, 2, 0], [0, -1, 0, 2]]
    assert dynkin_to_cartesian((0, 0, 0, 1), rs) == E0


def test_f4_cartan():
    g = root_system("F4").gram
    assert g[1][2] == -SQRT2 and g[0][1] == -ONE and g[2][3] == -ONE and g[0][0] == 2


def test_dynkin_seeds():
    assert dynkin_to_cartesian((TAU, 1, TAU, TAU), root_system("D4")).scale(SIGMA * SIGMA * HALF) == LAMBDA_I
    assert dynkin_to_cartesian((0, 0, TAU, 1), root_system("F4")).scale(SIGMA * SIGMA * HALF) == LAMBDA_F4
    assert quat_dot(LAMBDA_I, LAMBDA_I) == ONE


def test_compose_examples():
    p = Quaternion(HALF, HALF, HALF, HALF)
    q = Quaternion(INV_SQRT2, INV_SQRT2)
    g = GroupElement(p, q)
    assert compose(IDENTITY, g) == g
    assert compose(g, GroupElement(p.conj(), q.conj())) == IDENTITY
    assert compose(GroupElement(p, q, True), GroupElement(q, p, True)) == IDENTITY


def test_canonical_sign():
    p = Quaternion(HALF, HALF, HALF, HALF)
    assert GroupElement(p, E1) == GroupElement(-p, -E1)
    assert GroupElement(p, E1) != GroupElement(p, -E1)


@pytest.mark.parametrize("name", GROUP_NAMES)
def test_named_group_orders(name):
    assert build_named_group(name).order == EXPECTED_ORDERS[name]


@pytest.mark.parametrize("name", [n for n in GROUP_NAMES if n != "W_H4"])
def test_named_group_decompositions(name):
    g = build_named_group(name)
    assert g.key_set() == frozenset(e.key for e in expected_decomposition(name))


def test_w_h4_decomposition():
    g = build_named_group("W_H4")
    assert g.key_set() == frozenset(e.key for e in expected_decomposition("W_H4"))


def test_generation_examples():
    refl = root_system("D4").reflections()
    assert generate_group(refl).order == 192
    rot = rotation_words(refl)
    assert generate_group(rot).order == 96
    assert generate_group(rot + list(S3_GENERATORS)).order == 576


def test_order_cap():
    with pytest.raises(GroupOrderExceeded):
        generate_group(root_system("D4").reflections(), order_cap=100)


def test_named_sets():
    assert named_quaternion_set("V0") == PointSet([E0, -E0, E1, -E1, E2, -E2, E3, -E3])
    sizes = {n: len(named_quaternion_set(n)) for n in ("V0", "Vplus", "Vminus", "T", "Tprime", "S", "I")}
    assert sizes == {"V0": 8, "Vplus": 8, "Vminus": 8, "T": 24, "Tprime": 24, "S": 96, "I": 120}
    assert all(p.norm2() == ONE for p in named_quaternion_set("I"))
    assert named_quaternion_set("Stilde") == named_quaternion_set("S").conj5()


def test_orbit_examples():
    assert orbit(build_named_group("snub_group"), LAMBDA_I) == named_quaternion_set("S")
    ico = orbit(build_named_group("rot_A3"), E2 + E3.scale(TAU))
    want = set()
    for a, b, c in ((1, 2, 3), (2, 3, 1), (3, 1, 2)):
        for s in (1, -1):
            for t in (1, -1):
                v = [ZERO_F] * 4
                v[a] = ONE * s
                v[b] = TAU * t
                want.add(Quaternion(*v))
    assert ico == PointSet(want)
    both = named_quaternion_set("S") | named_quaternion_set("Stilde")
    assert orbit(build_named_group("W_F4"), LAMBDA_F4) == both


def test_stabilizer_examples():
    g = build_named_group("snub_group")
    assert stabilizer(g, E0).order == 24
    w2 = root_system("D4").weights[1]
    pair = PointSet([w2.scale(INV_SQRT2), -w2.scale(INV_SQRT2)])
    assert all(p in named_quaternion_set("Tprime") for p in pair)
    assert stabilizer(g, pair).order == 48
    assert stabilizer(g, Quaternion()).order == g.order


def test_mirror_examples():
    r1 = root_system("D4").reflections()[0]
    S, St = named_quaternion_set("S"), named_quaternion_set("Stilde")
    assert mirror_check(S, St, r1)
    assert not mirror_check(S, S, r1)
    assert mirror_check(T, T, r1)
    with pytest.raises(ValueError):
        mirror_check(S, St, IDENTITY)


# properties

elements = st.sampled_from(build_named_group("W_F4").elements)
points = st.sampled_from(named_quaternion_set("I").points)


@settings(max_examples=200)
@given(elements, elements, points)
def test_action_is_homomorphism(g, h, x):
    assert apply(g * h, x) == apply(g, apply(h, x))


@settings(max_examples=200)
@given(elements, elements)
def test_closure_and_inverse(g, h):
    group = build_named_group("W_F4")
    assert g * h in group
    assert g * g.inverse() == IDENTITY


@settings(max_examples=100)
@given(elements, points, points)
def test_action_is_orthogonal(g, x, y):
    assert quat_dot(apply(g, x), apply(g, y)) == quat_dot(x, y)


def test_reflections_are_involutions():
    for name in ("A3", "D4", "F4"):
        for r in root_system(name).reflections():
            assert r * r == IDENTITY
            assert r.star


@pytest.mark.parametrize("gname", ["snub_group", "W_D4", "W_F4", "W_A3"])
def test_orbit_stabilizer(gname):
    g = build_named_group(gname)
    rng = random.Random(gname)
    seeds = [LAMBDA_I, E0, E1 + E2] + rng.sample(named_quaternion_set("I").points, 4)
    for s in seeds:
        assert g.order == len(orbit(g, s)) * stabilizer(g, s).order


def test_permutations_match_action():
    g = build_named_group("snub_group")
    S = named_quaternion_set("S")
    perms = g.permutations(S)
    rng = random.Random(5)
    for k in rng.sample(range(g.order), 40):
        el = g.elements[k]
        for i in rng.sample(range(len(S)), 10):
            assert S[perms[k][i]] == apply(el, S[i])
