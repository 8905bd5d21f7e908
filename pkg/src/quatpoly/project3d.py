"""Three-dimensional solids: exact hulls, polygon face classes, pyritohedral slices."""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .algebra import HALF, SIGMA, TAU, ZERO_F, FieldScalar, Quaternion, exact_key
from .coxeter import Group, PointSet, apply

Vec3 = tuple  # three FieldScalars


def sub3(u: Vec3, v: Vec3) -> Vec3:
    return (u[0] - v[0], u[1] - v[1], u[2] - v[2])


def dot3(u: Vec3, v: Vec3) -> FieldScalar:
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def cross3(u: Vec3, v: Vec3) -> Vec3:
    return (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])


def _dot(u, v) -> FieldScalar:
    total = ZERO_F
    for a, b in zip(u, v):
        total = total + a * b
    return total


def _diff(u, v) -> tuple:
    return tuple(a - b for a, b in zip(u, v))


POLYGON_TAGS = (
    "equilateral triangle", "isosceles triangle", "square", "golden rectangle", "rectangle",
    "kite", "trapezoid", "pentagon", "isogonal hexagon", "other",
)


@dataclass(frozen=True)
class PolygonClass:
    tag: str
    sides_sq: tuple  # squared side lengths in cyclic order

    @property
    def lengths_sq(self) -> tuple:
        """Distinct squared side lengths, ascending."""
        return tuple(sorted(set(self.sides_sq), key=exact_key))


def classify_polygon(points: Sequence[tuple]) -> PolygonClass:
    """Tag a planar polygon (vertices in cyclic order, any dimension) from exact lengths."""
    n = len(points)
    edges = [_diff(points[(i + 1) % n], points[i]) for i in range(n)]
    sides = tuple(_dot(e, e) for e in edges)
    distinct = set(sides)
    if n == 3:
        if len(distinct) == 1:
            return PolygonClass("equilateral triangle", sides)
        if len(distinct) == 2:
            return PolygonClass("isosceles triangle", sides)
        return PolygonClass("other", sides)
    if n == 4:
        d0 = _diff(points[2], points[0])
        d1 = _diff(points[3], points[1])
        equal_diagonals = _dot(d0, d0) == _dot(d1, d1)

        def parallel(u, v):
            uv = _dot(u, v)
            return uv * uv == _dot(u, u) * _dot(v, v)

        par = [parallel(edges[0], edges[2]), parallel(edges[1], edges[3])]
        if len(distinct) == 1 and equal_diagonals:
            return PolygonClass("square", sides)
        if sides[0] == sides[2] and sides[1] == sides[3] and equal_diagonals and all(par):
            lo, hi = sorted(distinct, key=exact_key)
            if hi == lo * TAU * TAU:
                return PolygonClass("golden rectangle", sides)
            return PolygonClass("rectangle", sides)
        if len(distinct) == 2 and (
            (sides[0] == sides[1] and sides[2] == sides[3]) or (sides[1] == sides[2] and sides[3] == sides[0])
        ):
            return PolygonClass("kite", sides)
        if par.count(True) == 1:
            return PolygonClass("trapezoid", sides)
        return PolygonClass("other", sides)
    if n == 5:
        return PolygonClass("pentagon", sides)
    if n == 6:
        alternating = sides[0] == sides[2] == sides[4] and sides[1] == sides[3] == sides[5]
        turns = {_dot(edges[i], edges[(i + 1) % 6]) for i in range(6)}
        if alternating and len(turns) == 1:
            return PolygonClass("isogonal hexagon", sides)
    return PolygonClass("other", sides)


@dataclass
class Solid3:
    vertices: list  # Vec3 tuples
    faces: list  # vertex-index cycles, counter-clockwise seen from outside
    normals: list = field(default_factory=list)

    @property
    def edges(self) -> list[tuple[int, int]]:
        out = set()
        for f in self.faces:
            for a, b in zip(f, f[1:] + f[:1]):
                out.add((min(a, b), max(a, b)))
        return sorted(out)

    def euler(self) -> int:
        return len(self.vertices) - len(self.edges) + len(self.faces)

    def edge_manifold(self) -> bool:
        count = Counter()
        for f in self.faces:
            for a, b in zip(f, f[1:] + f[:1]):
                count[(min(a, b), max(a, b))] += 1
        return all(v == 2 for v in count.values())

    def face_points(self, i: int) -> list[Vec3]:
        return [self.vertices[k] for k in self.faces[i]]

    def to_floats(self) -> list[tuple[float, float, float]]:
        return [tuple(float(x) for x in v) for v in self.vertices]


class DegenerateSpan(ValueError):
    pass


def _extreme(pts, members: Sequence[int], normal: Vec3) -> list[int]:
    """Members that are corners of the planar polygon they span."""
    out = []
    for c in members:
        others = [m for m in members if m != c]
        inside = False
        for a, b in itertools.combinations(others, 2):
            # on the closed segment ab
            if all(x.is_zero() for x in cross3(sub3(pts[b], pts[a]), sub3(pts[c], pts[a]))):
                if dot3(sub3(pts[c], pts[a]), sub3(pts[c], pts[b])).sign() <= 0:
                    inside = True
                    break
        if not inside:
            for a, b, d in itertools.combinations(others, 3):
                if all(x.is_zero() for x in cross3(sub3(pts[b], pts[a]), sub3(pts[d], pts[a]))):
                    continue
                signs = {dot3(cross3(sub3(pts[v], pts[u]), sub3(pts[c], pts[u])), normal).sign()
                         for u, v in ((a, b), (b, d), (d, a))}
                if signs <= {0, 1} or signs <= {0, -1}:
                    inside = True
                    break
        if not inside:
            out.append(c)
    return out


def _order_face(pts, members: Sequence[int], normal: Vec3) -> tuple[int, ...]:
    """Cyclic order of a convex planar face, counter-clockwise about ``normal``."""
    members = _extreme(pts, members, normal) if len(members) > 3 else list(members)
    if len(members) == 3:
        a, b, c = members
        if dot3(cross3(sub3(pts[b], pts[a]), sub3(pts[c], pts[a])), normal).sign() < 0:
            b, c = c, b
        return _rotate_min((a, b, c))
    edges = []
    for a, b in itertools.combinations(members, 2):
        side = cross3(sub3(pts[b], pts[a]), normal)
        signs = {dot3(side, sub3(pts[c], pts[a])).sign() for c in members if c not in (a, b)}
        signs.discard(0)
        if len(signs) <= 1:
            edges.append((a, b) if signs != {1} else (b, a))
    # with side = (b - a) x n, interior points give negative values for a CCW edge a -> b
    nxt = {a: b for a, b in edges}
    start = min(members)
    cycle = [start]
    while len(cycle) < len(members):
        cycle.append(nxt[cycle[-1]])
    if nxt[cycle[-1]] != start:
        raise DegenerateSpan("face vertices do not form a convex cycle")
    return tuple(cycle)


def _rotate_min(cycle: tuple) -> tuple:
    i = cycle.index(min(cycle))
    return cycle[i:] + cycle[:i]


def hull3d(points: Sequence[Vec3]) -> Solid3:
    """Exact 3D hull by scanning supporting planes through point triples."""
    pts = [tuple(FieldScalar.coerce(x) for x in p) for p in points]
    if len({tuple(x.key for x in p) for p in pts}) != len(pts):
        raise DegenerateSpan("duplicate points")
    if len(pts) < 4:
        raise DegenerateSpan("need at least 4 points spanning 3D")
    faces: list[tuple[frozenset, Vec3]] = []
    for i, j, k in itertools.combinations(range(len(pts)), 3):
        if any({i, j, k} <= f for f, _ in faces):
            continue
        n = cross3(sub3(pts[j], pts[i]), sub3(pts[k], pts[i]))
        if all(x.is_zero() for x in n):
            continue
        side = 0
        contact = []
        for m, p in enumerate(pts):
            s = dot3(n, sub3(p, pts[i])).sign()
            if s == 0:
                contact.append(m)
            elif side == 0:
                side = s
            elif s != side:
                break
        else:
            if side == 0:
                raise DegenerateSpan("points are coplanar")
            if side > 0:
                n = (-n[0], -n[1], -n[2])
            faces.append((frozenset(contact), n))
    if not faces:
        raise DegenerateSpan("points do not span 3D")
    cycles = [(_order_face(pts, sorted(f), n), n) for f, n in faces]
    # points inside a face or an edge are not vertices and are dropped
    used = sorted({i for c, _ in cycles for i in c})
    if len(used) != len(pts):
        new = {old: k for k, old in enumerate(used)}
        pts = [pts[i] for i in used]
        cycles = [(_rotate_min(tuple(new[i] for i in c)), n) for c, n in cycles]
    ordered = sorted(cycles, key=lambda t: t[0])
    return Solid3(pts, [c for c, _ in ordered], [n for _, n in ordered])


def classify_faces(solid: Solid3) -> list[PolygonClass]:
    out = []
    for i in range(len(solid.faces)):
        pts = solid.face_points(i)
        if len(pts) > 3:
            n = cross3(sub3(pts[1], pts[0]), sub3(pts[2], pts[0]))
            if any(not dot3(n, sub3(p, pts[0])).is_zero() for p in pts[3:]):
                raise ValueError(f"face {i} is not planar")
        out.append(classify_polygon(pts))
    return out


def face_census(solid: Solid3) -> dict[str, int]:
    return dict(sorted(Counter(c.tag for c in classify_faces(solid)).items()))


def face_census_detailed(solid: Solid3) -> dict[tuple, int]:
    """Counts keyed by (tag, distinct squared side lengths)."""
    return dict(Counter((c.tag, c.lengths_sq) for c in classify_faces(solid)))


# ---------------------------------------------------------------------------
# pyritohedral slicing of the snub 24-cell

REAL_PART_CLASSES = (
    ("tau/2", TAU * HALF), ("-tau/2", -TAU * HALF),
    ("sigma/2", SIGMA * HALF), ("-sigma/2", -SIGMA * HALF),
    ("1/2", HALF), ("-1/2", -HALF), ("0", ZERO_F),
)


def partition_by_real_part(points: PointSet) -> dict[str, PointSet]:
    """Split the 96 snub 24-cell vertices by exact real part into seven classes."""
    by_value = {v.key: label for label, v in REAL_PART_CLASSES}
    groups: dict[str, list[Quaternion]] = {label: [] for label, _ in REAL_PART_CLASSES}
    for p in points:
        label = by_value.get(p.real().key)
        if label is None:
            raise ValueError(f"unexpected real part {p.real()}")
        groups[label].append(p)
    return {label: PointSet(v, name=f"real={label}") for label, v in groups.items()}


def imag3(p: Quaternion) -> Vec3:
    return tuple(p.c[1:])


def projected_action(g, p: Quaternion) -> Quaternion:
    """Act on the imaginary part of ``p`` only, keeping its real part.

    Needs ``g`` to map the real axis to itself, which makes it act on pure
    imaginary quaternions by an orthogonal map of R^3.
    """
    im = Quaternion(ZERO_F, *p.c[1:])
    img = apply(g, im)
    if not img.c[0].is_zero():
        raise ValueError(f"{g} does not preserve the imaginary subspace")
    return Quaternion(p.c[0], *img.c[1:])


def pyritohedral_orbits(points: PointSet, group: Group) -> list[PointSet]:
    """Orbits under the 3D action of ``group`` on imaginary parts; real parts stay fixed."""
    one = Quaternion(1)
    for g in group.generators or group.elements:
        img = apply(g, one)
        if img != one and img != -one:
            raise ValueError(f"group element {g} does not fix real parts")
    seen: set = set()
    orbits = []
    for p in points:
        if p.key in seen:
            continue
        orb = PointSet(projected_action(g, p) for g in group)
        if not all(x in points for x in orb):
            raise ValueError("point set is not invariant under the group")
        seen |= orb.keys()
        orbits.append(orb)
    return sorted(orbits, key=lambda o: (len(o), o.points[0].key))
