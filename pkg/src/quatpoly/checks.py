"""Verification registry: every acceptance criterion as a set of exact checks.

Each check returns ``(expected, actual, passed)``. ``run_checks`` times them,
turns exceptions into failures and filters by scope.
"""
from __future__ import annotations

import random
import time
from collections import Counter
from dataclasses import dataclass
from decimal import Decimal, getcontext
from fractions import Fraction
from typing import Callable, Optional

from . import constructions as C
from .algebra import (
    E0, E1, E2, E3, HALF, ONE, SIGMA, SQRT2, TAU, ZERO_F, FieldScalar, Quaternion, exact_key, field_sqrt,
)
from .coxeter import (
    EXPECTED_ORDERS, IDENTITY, PointSet, apply, build_named_group, dynkin_to_cartesian, expected_decomposition,
    named_quaternion_set, orbit, root_system, stabilizer,
)
from .hull import brute_facets, facets as hull_facets
from .polytope import (
    LAMBDA_I, LAMBDA_II, Polytope, cell_census, cells_per_vertex, census_summary, cube_check_f4, dual_cell,
    vertex_figure,
)
from .project3d import face_census, face_census_detailed, hull3d, imag3, partition_by_real_part, pyritohedral_orbits

SCOPES = ("algebra", "coxeter", "polytope", "project3d")

ACCEPTANCE_CRITERIA = {
    1: "group orders",
    2: "set decompositions",
    3: "snub 24-cell vertex set",
    4: "cell census of the snub 24-cell",
    5: "dual polytope and its cell",
    6: "vertex figure",
    7: "F4 union polytope",
    8: "A3 icosahedra and truncated octahedron",
    9: "pyritohedral projection",
    10: "property suites",
}


@dataclass(frozen=True)
class Check:
    criterion: int
    scope: str
    name: str
    fn: Callable[[], tuple]


@dataclass
class CheckResult:
    criterion: int
    scope: str
    name: str
    expected: str
    actual: str
    passed: bool
    seconds: float

    def row(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"[{mark}] {self.criterion:>2} {self.scope:<9} {self.name} | expected: {self.expected} | actual: {self.actual} | {self.seconds:.2f}s"


REGISTRY: list[Check] = []


def check(criterion: int, scope: str, name: str):
    def deco(fn):
        REGISTRY.append(Check(criterion, scope, name, fn))
        return fn
    return deco


def _fs(x) -> FieldScalar:
    return FieldScalar.coerce(x)


def _q(*cs) -> Quaternion:
    return Quaternion(*(_fs(c) for c in cs))


def _key3(pts) -> frozenset:
    return frozenset(tuple(_fs(x).key for x in p) for p in pts)


def _fmt3(p) -> str:
    return "(" + ", ".join(str(_fs(x)) for x in p) + ")"


# ---------------------------------------------------------------------------
# 1. group orders

ORDER_LIMITS = {"W_H4": 30.0}
ORDER_CHECKED = ("W_A3", "rot_A3", "W_D4", "rot_D4", "snub_group", "W_B3", "W_F4", "W_H4")


def _order_check(name: str):
    def fn():
        t = time.perf_counter()
        group = build_named_group.__wrapped__(name)
        dt = time.perf_counter() - t
        limit = ORDER_LIMITS.get(name, 1.0)
        ok = group.order == EXPECTED_ORDERS[name] and dt < limit
        return f"{EXPECTED_ORDERS[name]} in < {limit:g}s", f"{group.order} in {dt:.2f}s", ok
    return fn


for _name in ORDER_CHECKED:
    check(1, "coxeter", f"order of {_name}")(_order_check(_name))


# ---------------------------------------------------------------------------
# 2. decompositions


def _decomp_check(name: str):
    def fn():
        group = build_named_group(name)
        want = expected_decomposition(name)
        ok = group.key_set() == frozenset(g.key for g in want)
        return f"{len(want)} bracket elements, equal sets", f"{group.order} generated, equal={ok}", ok
    return fn


for _name in ("W_D4", "snub_group", "W_F4"):
    check(2, "coxeter", f"{_name} equals its bracket decomposition")(_decomp_check(_name))


# ---------------------------------------------------------------------------
# 3. snub 24-cell vertices


@check(3, "coxeter", "orbit of (tau + e1 + sigma e3)/2 equals the reference 96-point list")
def _snub_orbit():
    pts = orbit(build_named_group("snub_group"), LAMBDA_I)
    ok = len(pts) == 96 and pts == named_quaternion_set("S")
    return "96 points, equal to S", f"{len(pts)} points, equal={pts == named_quaternion_set('S')}", ok


@check(3, "coxeter", "mirror orbit equals S with tau and sigma exchanged")
def _snub_mirror():
    pts = orbit(build_named_group("snub_group"), LAMBDA_II)
    ok = pts == named_quaternion_set("S").conj5()
    return "S with tau<->sigma", f"{len(pts)} points, equal={ok}", ok


@check(3, "coxeter", "r1 S = S~")
def _r1_s():
    r1 = root_system("D4").reflections()[0]
    img = PointSet(apply(r1, x) for x in named_quaternion_set("S"))
    ok = img == named_quaternion_set("Stilde")
    return "r1 S == S~", f"equal={ok}", ok


# ---------------------------------------------------------------------------
# 4. cell census


@check(4, "polytope", "facets of S by gift wrapping")
def _s_facets():
    t = time.perf_counter()
    f = hull_facets(list(named_quaternion_set("S")))
    dt = time.perf_counter() - t
    return "144 facets in < 60s", f"{len(f)} facets in {dt:.2f}s", len(f) == 144 and dt < 60


@check(4, "polytope", "cell census of S under the order-576 group")
def _s_census():
    want = {("icosahedron", 24): 24, ("tetrahedron", 6): 96, ("tetrahedron", 24): 24}
    got = census_summary(C.snub24_polytope().census)
    return str(want), str(got), got == want


@check(4, "polytope", "cells at every vertex")
def _s_per_vertex():
    poly = C.snub24_polytope()
    got = cells_per_vertex(poly, poly.census)
    want = Counter({(("icosahedron", 3), ("tetrahedron", 5)): 96})
    return "3 icosahedra + 5 tetrahedra at all 96 vertices", str(dict(got)), got == want


@check(4, "polytope", "24-cell: gift wrapping agrees with brute force, 24 octahedra in one orbit")
def _cell24():
    pts = named_quaternion_set("T")
    a, b = hull_facets(list(pts)), brute_facets(list(pts))
    poly = Polytope.from_points(pts)
    got = census_summary(cell_census(poly, build_named_group("W_D4")))
    ok = a == b and got == {("octahedron", 8): 24}
    return "equal facet lists; {('octahedron', 8): 24}", f"equal={a == b}; {got}", ok


def random_simplex(seed: int = 7) -> list[tuple[FieldScalar, ...]]:
    rng = random.Random(seed)
    while True:
        pts = [tuple(_fs(Fraction(rng.randint(-20, 20), rng.randint(1, 5))) for _ in range(4)) for _ in range(5)]
        try:
            brute_facets(pts)
            return pts
        except ValueError:
            continue


@check(4, "polytope", "random 4-simplex: gift wrapping agrees with brute force")
def _simplex():
    pts = random_simplex()
    a, b = hull_facets(pts), brute_facets(pts)
    return "5 facets, equal lists", f"{len(a)} facets, equal={a == b}", a == b and len(a) == 5


# ---------------------------------------------------------------------------
# 5. dual

_S2 = SIGMA * SIGMA
REFERENCE_DUAL_CELL = (
    (-TAU, 0, 1), (0, -1, -TAU), (1, TAU, 0), (-SIGMA, SIGMA, -SIGMA), (SIGMA, -SIGMA, SIGMA),
    (_S2, 0, 1), (1, -_S2, 0), (0, 1, _S2),
)
DUAL_CELL_FACTOR = ONE / (2 * SQRT2)


def reference_dual_cell() -> list[tuple]:
    return [tuple(_fs(x) * DUAL_CELL_FACTOR for x in p) for p in REFERENCE_DUAL_CELL]


@check(5, "polytope", "dual has 144 vertices and 96 cells")
def _dual_counts():
    d = C.snub24_dual().dual
    return "144 vertices, 96 cells", f"{len(d.vertices)} vertices, {len(d.facets)} cells", (
        len(d.vertices) == 144 and len(d.facets) == 96)


@check(5, "polytope", "dual cell at Lambda'_I reproduces the eight reference triples")
def _dual_triples():
    cell = dual_cell(C.snub24_dual(), C.snub24_polytope(), LAMBDA_I)
    got, want = _key3(cell.coords), _key3(reference_dual_cell())
    missing = [p for p in reference_dual_cell() if tuple(x.key for x in p) not in got]
    extra = [p for p in cell.coords if tuple(x.key for x in p) not in want]
    actual = f"{len(want) - len(missing)}/8 match"
    if missing:
        scale = 2 * SQRT2
        actual += "; reference only: " + ", ".join(_fmt3(tuple(x * scale for x in p)) for p in missing)
        actual += "; computed only: " + ", ".join(_fmt3(tuple(x * scale for x in p)) for p in extra)
        actual += " (times 1/(2 sqrt2))"
    return "8/8 reference triples", actual, got == want


@check(5, "polytope", "dual cell faces: 3 kites + 6 isosceles triangles with exact sides")
def _dual_faces():
    cell = dual_cell(C.snub24_dual(), C.snub24_polytope(), LAMBDA_I)
    got = face_census_detailed(cell.solid)
    kite = tuple(sorted({SIGMA ** 4 * HALF, HALF}, key=exact_key))
    tri = tuple(sorted({TAU * TAU * HALF, HALF}, key=exact_key))
    want = {("kite", kite): 3, ("isosceles triangle", tri): 6}
    fmt = lambda d: {(k[0], tuple(str(x) for x in k[1])): v for k, v in d.items()}
    return str(fmt(want)), str(fmt(got)), got == want


# ---------------------------------------------------------------------------
# 6. vertex figure

REFERENCE_VERTEX_FIGURE = (
    (1, 0, SIGMA), (-1, 0, SIGMA), (1, 0, -SIGMA), (SIGMA, 1, 0), (SIGMA, -1, 0),
    (0, SIGMA, 1), (-SIGMA, -1, 0), (0, -SIGMA, 1), (0, -SIGMA, -1),
)
REFERENCE_ICOSA_COMPLETION = ((-1, 0, -SIGMA), (SIGMA, 1, 0), (0, SIGMA, -1))
VERTEX_FIGURE_FACTOR = HALF


def _scaled(rows, k) -> list[tuple]:
    return [tuple(_fs(x) * k for x in p) for p in rows]


@check(6, "polytope", "nine nearest neighbours reproduce the reference list")
def _vf_points():
    vf = vertex_figure(C.snub24_polytope(), LAMBDA_I)
    ok = len(vf.points) == 9 and _key3(vf.points) == _key3(_scaled(REFERENCE_VERTEX_FIGURE, VERTEX_FIGURE_FACTOR))
    return "9 points equal to the list (times 1/2)", f"{len(vf.points)} points, equal={ok}", ok


@check(6, "project3d", "vertex figure hull is J63")
def _vf_j63():
    s = vertex_figure(C.snub24_polytope(), LAMBDA_I).solid
    got = (len(s.vertices), len(s.edges), len(s.faces), face_census(s))
    want = (9, 15, 8, {"equilateral triangle": 5, "pentagon": 3})
    return str(want), str(got), got == want


@check(6, "project3d", "vertex figure plus the three reference completion points is a regular icosahedron")
def _vf_augment():
    vf = vertex_figure(C.snub24_polytope(), LAMBDA_I)
    extra = _scaled(REFERENCE_ICOSA_COMPLETION, VERTEX_FIGURE_FACTOR)
    pts = {tuple(x.key for x in p): p for p in list(vf.points) + extra}
    dup = [_fmt3(tuple(x * 2 for x in p)) for p in extra if tuple(x.key for x in p) in _key3(vf.points)]
    census = face_census(hull3d(list(pts.values())))
    ok = len(pts) == 12 and census == {"equilateral triangle": 20}
    actual = f"{len(pts)} distinct points, faces {census}"
    if dup:
        actual += f"; already in the figure: {', '.join(dup)}"
    return "12 distinct points, faces {'equilateral triangle': 20}", actual, ok


# ---------------------------------------------------------------------------
# 7. F4 union

_T, _S = TAU, SIGMA
REFERENCE_CUBE = (
    (_T, 1, -_S, 0), (_T, 1, _S, 0), (1, _T, 0, -_S), (1, _T, 0, _S),
    (_T, 1, 0, -_S), (_T, 1, 0, _S), (1, _T, -_S, 0), (1, _T, _S, 0),
)


@check(7, "polytope", "W(F4) orbit of (0,0,tau,1) scaled by sigma^2/2 equals S + S~")
def _f4_orbit():
    seed = dynkin_to_cartesian((ZERO_F, ZERO_F, TAU, ONE), root_system("F4")).scale(SIGMA * SIGMA * HALF)
    pts = orbit(build_named_group("W_F4"), seed)
    want = named_quaternion_set("S") | named_quaternion_set("Stilde")
    return "192 points equal to S + S~", f"{len(pts)} points, equal={pts == want}", pts == want


@check(7, "polytope", "F4 union facets by gift wrapping")
def _f4_facets():
    t = time.perf_counter()
    f = hull_facets(list(C.construction("f4-union").points))
    dt = time.perf_counter() - t
    return "48 facets in < 600s", f"{len(f)} facets in {dt:.2f}s", len(f) == 48 and dt < 600


@check(7, "polytope", "F4 union cells: 24 cubes + 24 truncated octahedra, 1 + 3 at every vertex")
def _f4_census():
    poly = C.f4_polytope()
    got = Counter(r.shape for r in poly.census)
    per = cells_per_vertex(poly, poly.census)
    want_per = Counter({(("cube", 1), ("truncated-octahedron", 3)): 192})
    ok = got == Counter({"cube": 24, "truncated-octahedron": 24}) and per == want_per
    return "24 cube + 24 truncated-octahedron; 1 + 3 per vertex", f"{dict(got)}; {dict(per)}", ok


@check(7, "polytope", "<r1,r2,r3> orbit gives the reference cube and its +-1 triples")
def _f4_cube():
    rep = cube_check_f4(build_named_group("W_F4"))
    ref_cube = PointSet(_q(*p).scale(HALF) for p in REFERENCE_CUBE)
    triples = set(rep.triples.values())
    halves = {
        frozenset(rep.triples[_q(*p).scale(HALF).key] for p in REFERENCE_CUBE[:4]),
        frozenset(rep.triples[_q(*p).scale(HALF).key] for p in REFERENCE_CUBE[4:]),
    } if rep.orbit == ref_cube else set()
    tetra = {frozenset(t for t in triples if t[0] * t[1] * t[2] == s) for s in (1, -1)}
    ok = (rep.orbit == ref_cube and len(triples) == 8 and all(abs(x) == 1 for t in triples for x in t)
          and rep.common == TAU * TAU / (2 * SQRT2) and halves == tetra)
    actual = (f"orbit equal={rep.orbit == ref_cube}, {len(triples)} distinct +-1 triples, "
              f"common {rep.common}, rows are two tetrahedra={halves == tetra}")
    return "8 reference points; all (+-1,+-1,+-1); common tau^2/(2 sqrt2); two tetrahedra", actual, ok


# ---------------------------------------------------------------------------
# 8. A3 icosahedra


@check(8, "project3d", "both A3 orbits are regular icosahedra")
def _icosa():
    out = []
    for name in ("icosa-a3", "icosa-a3-mirror"):
        pts = C.construction(name).points
        out.append((len(pts), face_census_detailed(hull3d([imag3(p) for p in pts]))))
    ok = all(n == 12 and len(c) == 1 and next(iter(c))[0] == "equilateral triangle"
             and len(next(iter(c))[1]) == 1 and list(c.values()) == [20] for n, c in out)
    return "12 points, 20 equilateral triangles of one length, twice", str([(n, sum(c.values())) for n, c in out]), ok


@check(8, "coxeter", "every W(A3) reflection maps one icosahedron onto the other")
def _icosa_mirror():
    a, b = C.construction("icosa-a3").points, C.construction("icosa-a3-mirror").points
    refl = [g for g in build_named_group("W_A3") if g.star]
    ok = all(PointSet(apply(g, x) for x in a) == b for g in refl)
    return f"{len(refl)} reflections swap the sets", f"all={ok}", ok and len(refl) == 12


@check(8, "project3d", "union equals the W(B3) orbit of (1,tau,0) up to one rescale")
def _union_b3():
    u = C.construction("icosa-a3").points | C.construction("icosa-a3-mirror").points
    b = C.construction("trunc-oct-b3").points
    du = min(((x - y).norm2() for x in u for y in u if x != y), key=exact_key)
    db = min(((x - y).norm2() for x in b for y in b if x != y), key=exact_key)
    scale = db / du
    ok = u.scaled(field_sqrt(scale)) == b
    return "24-point set equality after rescale", f"{len(u)} vs {len(b)} points, squared rescale {scale}, equal={ok}", ok


@check(8, "project3d", "union hulls to 6 squares + 8 isogonal hexagons, edge ratio tau")
def _trunc_oct():
    u = C.construction("icosa-a3").points | C.construction("icosa-a3-mirror").points
    s = hull3d([imag3(p) for p in u])
    got = face_census_detailed(s)
    tags = Counter()
    lengths = set()
    for (tag, ls), n in got.items():
        tags[tag] += n
        lengths.update(ls)
    lo, hi = sorted(lengths, key=exact_key) if len(lengths) == 2 else (None, None)
    ok = tags == Counter({"square": 6, "isogonal hexagon": 8}) and lo is not None and hi == lo * TAU * TAU
    sq = [ls for (tag, ls) in got if tag == "square"]
    ok = ok and sq == [(hi,)]
    return "6 square (long side) + 8 isogonal hexagon; long^2 = tau^2 short^2", f"{dict(tags)}; squared lengths {lo}, {hi}", ok


# ---------------------------------------------------------------------------
# 9. pyritohedral projection


@check(9, "project3d", "real-part classes of S")
def _classes():
    parts = partition_by_real_part(named_quaternion_set("S"))
    sizes = sorted(len(p) for p in parts.values())
    return "[12, 12, 12, 12, 12, 12, 24]", str(sizes), sizes == [12] * 6 + [24]


@check(9, "project3d", "pyritohedral orbits of S")
def _orbits():
    orbs = pyritohedral_orbits(named_quaternion_set("S"), build_named_group("pyritohedral"))
    sizes = [len(o) for o in orbs]
    return "[12, 12, 12, 12, 12, 12, 24]", str(sizes), sizes == [12] * 6 + [24]


@check(9, "project3d", "the +-tau/2 and +-sigma/2 classes are regular icosahedra")
def _class_icosa():
    parts = partition_by_real_part(named_quaternion_set("S"))
    got = {}
    for label in ("tau/2", "-tau/2", "sigma/2", "-sigma/2"):
        c = face_census_detailed(hull3d([imag3(p) for p in parts[label]]))
        got[label] = c
    ok = all(len(c) == 1 and list(c.values()) == [20] and next(iter(c))[0] == "equilateral triangle"
             and len(next(iter(c))[1]) == 1 for c in got.values())
    return "20 equilateral triangles each", str({k: sum(v.values()) for k, v in got.items()}), ok


@check(9, "project3d", "zero real part class: triangles, golden rectangles, trapezoids with ratio tau")
def _zero_class():
    parts = partition_by_real_part(named_quaternion_set("S"))
    got = face_census_detailed(hull3d([imag3(p) for p in parts["0"]]))
    tags = Counter()
    for (tag, _), n in got.items():
        tags[tag] += n
    traps = [ls for (tag, ls) in got if tag == "trapezoid"]
    ratio_ok = bool(traps) and all(len(ls) == 2 and ls[1] == ls[0] * TAU * TAU for ls in traps)
    ok = {"equilateral triangle", "golden rectangle", "trapezoid"} <= set(tags) and ratio_ok
    return "triangles, golden rectangles, trapezoids (long/short = tau)", f"{dict(tags)}; trapezoid ratio ok={ratio_ok}", ok


# ---------------------------------------------------------------------------
# 10. properties (seeded samples; the hypothesis suites live in the tests)

SIGN_SAMPLES = 100_000


def random_scalar(rng: random.Random, span: int = 10 ** 6) -> FieldScalar:
    return FieldScalar(*(Fraction(rng.randint(-span, span), rng.randint(1, 1000)) for _ in range(4)))


def reference_sign(x: FieldScalar) -> int:
    """Sign from a 60-digit decimal evaluation, independent of the exact path."""
    getcontext().prec = 60
    v = Decimal(0)
    for coef, rad in zip(x.coefficients, (1, 2, 5, 10)):
        v += Decimal(coef.numerator) / Decimal(coef.denominator) * Decimal(rad).sqrt()
    return (v > 0) - (v < 0)


@check(10, "algebra", f"exact sign agrees with a 60-digit decimal oracle on {SIGN_SAMPLES} samples")
def _signs():
    rng = random.Random(2024)
    bad = 0
    for _ in range(SIGN_SAMPLES):
        x = random_scalar(rng)
        if x.sign() != reference_sign(x):
            bad += 1
    return "0 disagreements", f"{bad} disagreements", bad == 0


@check(10, "coxeter", "reflections are involutions")
def _involutions():
    refl = [r for name in ("A3", "D4", "F4") for r in root_system(name).reflections()]
    pts = list(named_quaternion_set("I"))
    ok = all(r * r == IDENTITY for r in refl) and all(apply(r, apply(r, x)) == x for r in refl for x in pts)
    return f"r(r(x)) = x for {len(refl)} reflections", f"all={ok}", ok


@check(10, "coxeter", "group action is a homomorphism")
def _homomorphism():
    rng = random.Random(11)
    g = build_named_group("W_F4")
    pts = list(named_quaternion_set("I"))
    bad = 0
    for _ in range(500):
        a, b, x = rng.choice(g.elements), rng.choice(g.elements), rng.choice(pts)
        if apply(a * b, x) != apply(a, apply(b, x)):
            bad += 1
    return "0 failures in 500 samples", f"{bad} failures", bad == 0


@check(10, "coxeter", "orbit-stabilizer identity")
def _orbit_stabilizer():
    rows = []
    for gname, seed in (("snub_group", LAMBDA_I), ("snub_group", E0), ("W_F4", LAMBDA_I), ("W_D4", E1 + E2),
                        ("W_A3", E2 + E3.scale(TAU))):
        g = build_named_group(gname)
        rows.append((gname, g.order, len(orbit(g, seed)), stabilizer(g, seed).order))
    ok = all(o == n * s for _, o, n, s in rows)
    return "|G| = |orbit| |stabilizer|", "; ".join(f"{g}: {o}={n}*{s}" for g, o, n, s in rows), ok


@check(10, "polytope", "every ridge lies in exactly two facets")
def _ridges():
    rows = []
    for poly in (C.snub24_polytope(), C.f4_polytope(), Polytope.from_points(named_quaternion_set("T"))):
        owners = Counter(len(v) for v in poly.hull.ridge_facets.values())
        rows.append((poly.name, dict(owners)))
    ok = all(set(o) == {2} for _, o in rows)
    return "2 owners per ridge", str(rows), ok


def all_solids() -> dict:
    out = {}
    for name in ("icosa-a3", "icosa-a3-mirror", "trunc-oct-b3"):
        out[name] = hull3d([imag3(p) for p in C.construction(name).points])
    for label, pts in partition_by_real_part(named_quaternion_set("S")).items():
        out[f"real={label}"] = hull3d([imag3(p) for p in pts])
    out["vertex-figure"] = vertex_figure(C.snub24_polytope(), LAMBDA_I).solid
    out["dual-cell"] = dual_cell(C.snub24_dual(), C.snub24_polytope(), LAMBDA_I).solid
    return out


@check(10, "project3d", "V - E + F = 2 and edge-manifold for every 3D solid")
def _euler():
    solids = all_solids()
    bad = [n for n, s in solids.items() if s.euler() != 2 or not s.edge_manifold()]
    return f"all {len(solids)} solids", f"failures: {bad}", not bad


# ---------------------------------------------------------------------------


def criteria_covered() -> set[int]:
    return {c.criterion for c in REGISTRY}


def select(scope: str = "all", criterion: Optional[int] = None) -> list[Check]:
    if scope != "all" and scope not in SCOPES:
        raise ValueError(f"unknown scope {scope!r}; choose from all, {', '.join(SCOPES)}")
    return [c for c in REGISTRY if (scope == "all" or c.scope == scope) and (criterion is None or c.criterion == criterion)]


def run_check(c: Check) -> CheckResult:
    t = time.perf_counter()
    try:
        expected, actual, ok = c.fn()
    except Exception as exc:  # a crash is a failed check, not a crashed run
        expected, actual, ok = "no error", f"error: {type(exc).__name__}: {exc}", False
    return CheckResult(c.criterion, c.scope, c.name, str(expected), str(actual), bool(ok), time.perf_counter() - t)


def run_checks(scope: str = "all", criterion: Optional[int] = None) -> list[CheckResult]:
    return [run_check(c) for c in select(scope, criterion)]
