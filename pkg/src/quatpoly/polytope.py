"""Cells, duals and vertex figures of 4-polytopes given as exact point sets."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .algebra import (
    E0, E1, E2, E3, HALF, INV_SQRT2, ONE, SIGMA, SQRT2, TAU, ZERO_F,
    FieldScalar, Quaternion, exact_key, field_sqrt, quat_dot, quat_mul, vsum,
)
from .coxeter import (
    S3_GENERATORS, Group, GroupElement, PointSet, apply, compose, generate_group,
    named_quaternion_set, orbit, root_system,
)
from .hull import DegenerateInput, Face, Hull, convex_hull
from . import project3d


def edge_graph(points: PointSet) -> list[tuple[int, int]]:
    """All pairs at the exact minimum nonzero squared distance."""
    pts = list(points)
    if len(pts) < 2:
        raise ValueError("edge_graph needs at least two points")
    best = None
    pairs: list[tuple[int, int]] = []
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            d = (pts[i] - pts[j]).norm2()
            if d.is_zero():
                continue
            if best is None or d < best:
                best, pairs = d, [(i, j)]
            elif d == best:
                pairs.append((i, j))
    if best is None:
        raise ValueError("degenerate input: all points coincide")
    return pairs


def min_sq_distance(points: Sequence[Quaternion]) -> FieldScalar:
    return min(((a - b).norm2() for i, a in enumerate(points) for b in points[i + 1:]
                if not (a - b).is_zero()), key=exact_key)


def _cycle_from_edges(edges: Sequence[tuple[int, int]]) -> tuple[int, ...]:
    adj: dict[int, list[int]] = {}
    for a, b in edges:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    start = min(adj)
    cycle = [start]
    prev, cur = None, start
    while True:
        nxt = [x for x in adj[cur] if x != prev]
        nxt = min(nxt) if prev is None else nxt[0]
        if nxt == start:
            break
        cycle.append(nxt)
        prev, cur = cur, nxt
    if len(cycle) != len(adj):
        raise ValueError("face boundary is not a single cycle")
    return tuple(cycle)


@dataclass
class CellRecord:
    vertices: tuple[int, ...]
    shape: str
    stabilizer_order: int
    centroid: Quaternion
    edge_lengths_sq: tuple[FieldScalar, ...]
    polygons: dict


@dataclass
class Polytope:
    vertices: PointSet
    hull: Hull
    name: Optional[str] = None
    census: Optional[list] = None

    @classmethod
    def from_points(cls, points: PointSet, name: Optional[str] = None,
                    workers: Optional[int] = None) -> "Polytope":
        return cls(points, convex_hull(list(points), workers=workers), name=name or points.name)

    @property
    def facets(self) -> list[tuple[int, ...]]:
        return [f.key for f in self.hull.facets]

    def facet_faces(self, facet: Face) -> list[tuple[int, ...]]:
        """2-faces of a cell as vertex cycles."""
        return [_cycle_from_edges([e.key for e in ridge.subfaces]) for ridge in facet.subfaces]

    def facet_edges(self, facet: Face) -> set[tuple[int, int]]:
        return {e.key for ridge in facet.subfaces for e in ridge.subfaces}

    @property
    def edges(self) -> list[tuple[int, int]]:
        """1-faces of the hull (may differ from :func:`edge_graph` when edge lengths vary)."""
        return sorted({e for f in self.hull.facets for e in self.facet_edges(f)})

    def vertex_cells(self, i: int) -> list[int]:
        return [k for k, f in enumerate(self.hull.facets) if i in f.vertices]

    def centroid(self, facet: Face) -> Quaternion:
        pts = [self.vertices[i] for i in facet.key]
        return vsum(pts).scale(FieldScalar(Fraction(1, len(pts))))


def shape_tag(n_vertices: int, polygon_sizes: Counter, lengths: Sequence[FieldScalar]) -> str:
    """Solid name from vertex count, polygon census and exact squared edge lengths."""
    single = len(lengths) == 1
    sizes = dict(polygon_sizes)
    if single:
        table = {
            (4, ((3, 4),)): "tetrahedron",
            (6, ((3, 8),)): "octahedron",
            (8, ((4, 6),)): "cube",
            (12, ((3, 20),)): "icosahedron",
        }
        tag = table.get((n_vertices, tuple(sorted(sizes.items()))))
        if tag:
            return tag
    if n_vertices == 24 and sizes == {4: 6, 6: 8}:
        if single:
            return "truncated-octahedron"
        if len(lengths) == 2:
            lo, hi = sorted(lengths, key=exact_key)
            if hi == lo * TAU * TAU:
                return "truncated-octahedron"
    return "other"


def classify_cell(poly: Polytope, facet: Face) -> tuple[str, tuple, dict]:
    pts = poly.vertices
    polys = poly.facet_faces(facet)
    lengths = sorted({(pts[a] - pts[b]).norm2() for a, b in poly.facet_edges(facet)}, key=exact_key)
    sizes = Counter(len(c) for c in polys)
    return shape_tag(len(facet.vertices), sizes, lengths), tuple(lengths), dict(sorted(sizes.items()))


def cell_census(poly: Polytope, group: Group) -> list[CellRecord]:
    """Classify each cell and count the group elements mapping it onto itself."""
    try:
        perms = group.permutations(poly.vertices)
    except ValueError as exc:
        raise ValueError(f"group {group.name} does not preserve the polytope: {exc}") from None
    records = []
    for facet in poly.hull.facets:
        members = facet.vertices
        stab = sum(1 for perm in perms if all(perm[i] in members for i in members))
        shape, lengths, sizes = classify_cell(poly, facet)
        records.append(CellRecord(facet.key, shape, stab, poly.centroid(facet), lengths, sizes))
    poly.census = records
    return records


def census_summary(records: Sequence[CellRecord]) -> dict[tuple[str, int], int]:
    return dict(sorted(Counter((r.shape, r.stabilizer_order) for r in records).items()))


def cells_per_vertex(poly: Polytope, records: Sequence[CellRecord]) -> Counter:
    """Multiset of per-vertex shape counts, e.g. {((icosahedron,3),(tetrahedron,5)): 96}."""
    per = [Counter() for _ in range(len(poly.vertices))]
    for r in records:
        for i in r.vertices:
            per[i][r.shape] += 1
    return Counter(tuple(sorted(c.items())) for c in per)


# ---------------------------------------------------------------------------
# snub 24-cell specifics

LAMBDA_I = Quaternion(TAU, ONE, ZERO_F, SIGMA).scale(HALF)
LAMBDA_II = Quaternion(SIGMA, ONE, ZERO_F, TAU).scale(HALF)

# Rotation words (i, j) meaning r_i r_j applied to LAMBDA_I; P(5)'s third word is resolved at runtime
TETRA_WORDS = {
    1: ((1, 3), (3, 4), (4, 1)),
    2: ((2, 1), (2, 3), (2, 4)),
    3: ((3, 2), (3, 1), (3, 4)),
    4: ((4, 2), (4, 3), (4, 1)),
    5: ((1, 2), None, (1, 4)),
}
LISTED_P5_WORD = (1, 1)


def _word_image(word: tuple[int, int], x: Quaternion) -> Quaternion:
    r = root_system("D4").reflections()
    i, j = word
    return apply(r[i - 1], apply(r[j - 1], x))


def _tetra_points(k: int, words) -> tuple[Quaternion, ...]:
    return (LAMBDA_I,) + tuple(_word_image(w, LAMBDA_I) for w in words)


def _is_regular(points: Sequence[Quaternion]) -> bool:
    d = {(a - b).norm2() for i, a in enumerate(points) for b in points[i + 1:]}
    return len(d) == 1 and not next(iter(d)).is_zero() and len(set(p.key for p in points)) == len(points)


@dataclass
class TetraResolution:
    listed_word: tuple[int, int]
    resolved_word: tuple[int, int]
    candidates: list


def resolve_p5(facet_sets: set[frozenset], s: PointSet) -> TetraResolution:
    """Pick the r_i r_j word completing P(5): regular, a facet of S, and in the S3 orbit of P(3), P(4)."""
    def key(pts):
        return frozenset(s.index(p) for p in pts)

    p3 = key(_tetra_points(3, TETRA_WORDS[3]))
    p4 = key(_tetra_points(4, TETRA_WORDS[4]))
    s3 = generate_group(list(S3_GENERATORS), order_cap=12)
    images = {frozenset(s.index(apply(g, s[i])) for i in p3) for g in s3}
    good: list[tuple[int, int]] = []
    sets = set()
    for i in range(1, 5):
        for j in range(1, 5):
            if i == j:
                continue
            words = (TETRA_WORDS[5][0], (i, j), TETRA_WORDS[5][2])
            pts = _tetra_points(5, words)
            if not _is_regular(pts):
                continue
            k = key(pts)
            if k in facet_sets and k in images and k not in (p3, p4):
                good.append((i, j))
                sets.add(k)
    if len(sets) != 1:
        raise ValueError(f"P(5) not uniquely determined by words {good}")
    # commuting reflections give equal words; keep the r1-leading form of the other P(5) words
    word = min(good, key=lambda w: (w[0] != 1, w))
    return TetraResolution(LISTED_P5_WORD, word, good)


def tetrahedra_at_vertex(vertex: Quaternion, group: Group, resolution: TetraResolution) -> list[tuple[Quaternion, ...]]:
    """P(1)..P(5) around ``vertex``; other vertices are reached by a group element moving LAMBDA_I."""
    s = named_quaternion_set("S")
    if vertex not in s:
        raise ValueError(f"{vertex} is not a vertex of the snub 24-cell")
    words = dict(TETRA_WORDS)
    words[5] = (words[5][0], resolution.resolved_word, words[5][2])
    base = [_tetra_points(k, words[k]) for k in range(1, 6)]
    if vertex == LAMBDA_I:
        return base
    g = next(g for g in group if apply(g, LAMBDA_I) == vertex)
    return [tuple(apply(g, x) for x in tet) for tet in base]


def p_basis(p0: Quaternion) -> tuple[Quaternion, Quaternion, Quaternion, Quaternion]:
    """Orthonormal frame (p0, e1 p0, e2 p0, e3 p0) for a unit quaternion p0."""
    return (p0, quat_mul(E1, p0), quat_mul(E2, p0), quat_mul(E3, p0))


def rebase(x: Quaternion, p0: Quaternion) -> tuple[FieldScalar, FieldScalar, FieldScalar, FieldScalar]:
    return tuple(quat_dot(x, p) for p in p_basis(p0))


@dataclass
class DualCell:
    vertex: Quaternion
    centers: list  # 4D scaled cell centers around the vertex
    kinds: list  # class label of each center
    height: FieldScalar  # common projection onto the vertex direction
    coords: list  # 3D coordinates in the p-basis with the p0 component dropped
    solid: "project3d.Solid3"


@dataclass
class DualResult:
    dual: Polytope
    scales: dict  # class label -> scale factor applied to centroids
    height: FieldScalar
    centers: list  # scaled center per facet of the original
    cell_of_vertex: dict  # original vertex index -> dual facet key
    cells: dict = field(default_factory=dict)  # original vertex index -> DualCell (computed lazily)


def _cell_class(r: CellRecord) -> str:
    if r.shape == "icosahedron":
        return "icosahedron"
    if r.shape == "tetrahedron" and r.stabilizer_order == 24:
        return "tetrahedron-Td"
    if r.shape == "tetrahedron" and r.stabilizer_order == 6:
        return "tetrahedron-S3"
    raise ValueError(f"unexpected cell {r.shape} with stabilizer {r.stabilizer_order}")


def dual_snub24(poly: Polytope, workers: Optional[int] = None) -> DualResult:
    """Dual of the snub 24-cell from rescaled cell centers.

    The tetrahedra with T_d stabilizer are scaled to unit length; the other
    two classes are scaled so all eight centers around a vertex share one
    projection onto that vertex.
    """
    if not poly.census:
        raise ValueError("dual_snub24 needs a cell census; run cell_census first")
    pts = poly.vertices
    recs = poly.census
    kinds = [_cell_class(r) for r in recs]
    # per-class projection (centroid . v) is the same for every vertex v of the cell
    proj = {}
    for r, k in zip(recs, kinds):
        val = quat_dot(r.centroid, pts[r.vertices[0]])
        if proj.setdefault(k, val) != val:
            raise ValueError(f"class {k} centroids do not project uniformly")
    td = next(r for r, k in zip(recs, kinds) if k == "tetrahedron-Td")
    unit = field_sqrt(td.centroid.norm2()).inverse()
    height = proj["tetrahedron-Td"] * unit
    scales = {k: height / v for k, v in proj.items()}
    centers = [r.centroid.scale(scales[k]) for r, k in zip(recs, kinds)]
    for r, c in zip(recs, centers):
        for i in r.vertices:
            if quat_dot(c, pts[i]) != height:
                raise AssertionError("scaled centers are not coplanar around a vertex")
    dual_pts = PointSet(centers, name="dual-snub24")
    dual = Polytope.from_points(dual_pts, workers=workers)
    center_idx = [dual_pts.index(c) for c in centers]
    cell_of_vertex = {}
    dual_facets = set(dual.facets)
    for i in range(len(pts)):
        around = tuple(sorted(center_idx[k] for k, r in enumerate(recs) if i in r.vertices))
        if around not in dual_facets:
            raise AssertionError(f"centers around vertex {i} do not form a dual cell")
        cell_of_vertex[i] = around
    return DualResult(dual, scales, height, centers, cell_of_vertex)


def dual_cell(result: DualResult, poly: Polytope, vertex: Quaternion) -> DualCell:
    i = poly.vertices.index(vertex)
    if i in result.cells:
        return result.cells[i]
    recs = poly.census
    around = [(k, r) for k, r in enumerate(recs) if i in r.vertices]
    centers = [result.centers[k] for k, _ in around]
    kinds = [_cell_class(r) for _, r in around]
    coords = [rebase(c, vertex)[1:] for c in centers]
    cell = DualCell(vertex, centers, kinds, result.height, coords, project3d.hull3d(coords))
    result.cells[i] = cell
    return cell


@dataclass
class VertexFigure:
    vertex: Quaternion
    neighbors: list  # 4D neighbours
    points: list  # 3D coordinates in the p-basis, p0 component removed
    solid: "project3d.Solid3"


def vertex_figure(poly: Polytope, vertex: Quaternion, count: Optional[int] = None) -> VertexFigure:
    """Nearest neighbours of ``vertex`` read in the frame (p0, e1 p0, e2 p0, e3 p0)."""
    if vertex not in poly.vertices:
        raise ValueError(f"{vertex} is not a vertex of the polytope")
    others = [x for x in poly.vertices if x != vertex]
    dists = [(x - vertex).norm2() for x in others]
    dmin = min(dists, key=exact_key)
    near = [x for x, d in zip(others, dists) if d == dmin]
    if count is not None and len(near) != count:
        raise ValueError(f"expected {count} nearest neighbours, found {len(near)}")
    pts3 = [rebase(x, vertex)[1:] for x in near]
    return VertexFigure(vertex, near, pts3, project3d.hull3d(pts3))


# ---------------------------------------------------------------------------
# F4 cube cells

LAMBDA_F4 = Quaternion(TAU, ONE, -SIGMA, ZERO_F).scale(HALF)
CUBE_CENTER = Quaternion(INV_SQRT2, INV_SQRT2)


@dataclass
class CubeReport:
    orbit: PointSet
    center: Quaternion
    common: FieldScalar  # shared p0 component
    factor: FieldScalar  # overall factor removed from the p1..p3 components
    triples: dict  # point key -> integer triple


def cube_check_f4(group: Group, seed: Quaternion = LAMBDA_F4, center: Quaternion = CUBE_CENTER) -> CubeReport:
    """Orbit of ``seed`` under the B3 subgroup <r1, r2, r3> of W(F4), rebased around the cube center."""
    sub = generate_group(group.generators[:3], order_cap=96, name="W_B3")
    pts = orbit(sub, seed)
    coords = {p.key: rebase(p, center) for p in pts}
    commons = {c[0] for c in coords.values()}
    if len(commons) != 1:
        raise ValueError("orbit points do not share a component along the cube center")
    common = commons.pop()
    factor = SIGMA / (2 * SQRT2)
    triples = {}
    for k, c in coords.items():
        t = []
        for x in c[1:]:
            y = x / factor
            if not y.is_rational() or y.a.denominator != 1:
                raise ValueError(f"rebased coordinate {x} is not an integer multiple of {factor}")
            t.append(int(y.a))
        triples[k] = tuple(t)
    return CubeReport(pts, center, common, factor, triples)
