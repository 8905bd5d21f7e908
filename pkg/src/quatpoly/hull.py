"""Exact convex hulls of point sets in R^4 by gift-wrapping.

Points live in a k-flat of R^4 described by ``4 - k`` normal vectors.  A
facet of a k-polytope is found from a lexicographic extreme point by
repeatedly tilting a supporting hyperplane; neighbours are then found by
pivoting around each ridge.  Ridges are themselves computed by the same
routine one dimension down, so the result carries the full face lattice.

Every orientation test is a 4x4 determinant over the exact field, written
as ``cross4(u, v, w) . x``.
"""
from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb
from typing import Optional, Sequence

from .algebra import ONE, ZERO_F, FieldScalar

Vec = tuple  # four FieldScalars


def sub(u: Vec, v: Vec) -> Vec:
    return (u[0] - v[0], u[1] - v[1], u[2] - v[2], u[3] - v[3])


def dot(u: Vec, v: Vec) -> FieldScalar:
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2] + u[3] * v[3]


def neg(u: Vec) -> Vec:
    return (-u[0], -u[1], -u[2], -u[3])


def cross4(u: Vec, v: Vec, w: Vec) -> Vec:
    """Vector n with ``n . x == det[u; v; w; x]`` for all x."""
    m01 = u[0] * v[1] - u[1] * v[0]
    m02 = u[0] * v[2] - u[2] * v[0]
    m03 = u[0] * v[3] - u[3] * v[0]
    m12 = u[1] * v[2] - u[2] * v[1]
    m13 = u[1] * v[3] - u[3] * v[1]
    m23 = u[2] * v[3] - u[3] * v[2]
    # 3x3 minors of rows u, v, w with one column removed
    d123 = w[1] * m23 - w[2] * m13 + w[3] * m12
    d023 = w[0] * m23 - w[2] * m03 + w[3] * m02
    d013 = w[0] * m13 - w[1] * m03 + w[3] * m01
    d012 = w[0] * m12 - w[1] * m02 + w[2] * m01
    return (-d123, d023, -d013, d012)


def is_zero_vec(u: Vec) -> bool:
    return all(x.is_zero() for x in u)


class _Basis:
    """Incremental row echelon form for exact rank tests."""

    def __init__(self):
        self.rows: list[tuple[int, list[FieldScalar]]] = []
        self.vectors: list[Vec] = []

    def add(self, v: Vec) -> bool:
        r = list(v)
        for piv, row in self.rows:
            if not r[piv].is_zero():
                f = r[piv] / row[piv]
                r = [a - f * b for a, b in zip(r, row)]
        for piv, x in enumerate(r):
            if not x.is_zero():
                self.rows.append((piv, r))
                self.vectors.append(v)
                return True
        return False

    def __len__(self) -> int:
        return len(self.rows)


def affine_rank(pts: Sequence[Vec]) -> int:
    if not pts:
        return -1
    b = _Basis()
    base = pts[0]
    for p in pts[1:]:
        b.add(sub(p, base))
        if len(b) == 4:
            break
    return len(b)


def _orthogonalize(vs: Sequence[Vec]) -> list[Vec]:
    out: list[Vec] = []
    for v in vs:
        for w in out:
            f = dot(v, w) / dot(w, w)
            v = tuple(a - f * b for a, b in zip(v, w))
        if not is_zero_vec(v):
            out.append(v)
    return out


_AXES = tuple(tuple(ONE if i == j else ZERO_F for j in range(4)) for i in range(4))


def _project_axes(normals: Sequence[Vec]) -> list[Vec]:
    """Axis vectors orthogonally projected into the complement of ``normals``."""
    ortho = _orthogonalize(normals)
    out = []
    for e in _AXES:
        v = e
        for w in ortho:
            f = dot(v, w) / dot(w, w)
            v = tuple(a - f * b for a, b in zip(v, w))
        if not is_zero_vec(v):
            out.append(v)
    return out


@dataclass(eq=False)
class Face:
    """A face of a hull: its contact vertices and outward normal within the flat."""

    vertices: frozenset
    normal: Vec
    subfaces: tuple = ()

    @property
    def key(self) -> tuple:
        return tuple(sorted(self.vertices))


@dataclass
class Hull:
    points: tuple
    facets: list  # of Face, canonically sorted
    ridge_facets: dict = field(default_factory=dict)  # ridge key -> facet keys


class DegenerateInput(ValueError):
    pass


def _directions(pts: Sequence[Vec], members: Sequence[int]) -> list[Vec]:
    b = _Basis()
    base = pts[members[0]]
    for i in members[1:]:
        b.add(sub(pts[i], base))
    return b.vectors


def _extend(start: Sequence[Vec], candidates: Sequence[Vec], size: int) -> list[Vec]:
    b = _Basis()
    for v in start:
        b.add(v)
    for c in candidates:
        if len(b) >= size:
            break
        b.add(c)
    if len(b) < size:
        raise DegenerateInput("could not complete a basis inside the flat")
    return b.vectors


def _wrap_step(pts, idx, fixed, base, d, inward, skip) -> Vec:
    """Pivot a hyperplane around span(fixed) through ``base``.

    ``d`` is the current supporting direction and ``inward`` points into the
    hull; among points with ``skip(x)`` false the one reached by the largest
    rotation from ``d`` towards ``inward`` wins.  Returns the new normal,
    oriented so that ``d`` lies on its negative side.
    """
    f0, f1 = fixed
    sense = dot(cross4(f0, f1, d), inward).sign()
    best_n = None
    for i in idx:
        x = sub(pts[i], base)
        if skip(x):
            continue
        if best_n is None or dot(best_n, x).sign() == sense:
            best_n = cross4(f0, f1, x)
    if best_n is None:
        raise DegenerateInput("no point off the current supporting hyperplane")
    s = dot(best_n, d).sign()
    if s > 0:
        best_n = neg(best_n)
    elif s == 0:
        # d lies in the new hyperplane only for degenerate input
        raise DegenerateInput("pivot did not rotate the hyperplane")
    return best_n


def _contact(pts, idx, n, base) -> frozenset:
    return frozenset(i for i in idx if dot(n, sub(pts[i], base)).is_zero())


def _seed_facet(pts, idx, normals, k) -> Face:
    cands = _project_axes(normals)
    n = cands[0]
    vals = [(dot(n, pts[i]), i) for i in idx]
    top = vals[0][0]
    for v, _ in vals[1:]:
        if v > top:
            top = v
    contact = frozenset(i for v, i in vals if v == top)
    while True:
        members = sorted(contact)
        dirs = _directions(pts, members)
        if len(dirs) == k - 1:
            return Face(contact, n)
        base = pts[members[0]]
        inside = _project_axes(list(normals) + [n])
        full = _extend(dirs, inside, k - 1)
        a_dirs, d = full[: k - 2], full[k - 2]
        fixed = list(a_dirs) + list(normals)
        new_n = _wrap_step(pts, idx, fixed, base, d, neg(n),
                           lambda x, n=n: dot(n, x).is_zero())
        new_contact = _contact(pts, idx, new_n, base)
        if not new_contact > contact:
            raise DegenerateInput("seed search failed to grow the contact set")
        n, contact = new_n, new_contact


def _pivot(pts, idx, normals, facet: Face, ridge: Face) -> Face:
    rv = sorted(ridge.vertices)
    r0 = pts[rv[0]]
    fixed = _directions(pts, rv) + list(normals)
    if len(fixed) != 2:
        raise DegenerateInput("ridge of wrong dimension")
    f = next(i for i in sorted(facet.vertices) if i not in ridge.vertices)
    d = sub(pts[f], r0)
    nf = facet.normal
    n = _wrap_step(pts, idx, fixed, r0, d, neg(nf), lambda x: dot(nf, x).is_zero())
    return Face(_contact(pts, idx, n, r0), n)


def _segment_ends(pts, idx, normals) -> list[Face]:
    first = pts[idx[0]]
    u = next((sub(pts[i], first) for i in idx if not is_zero_vec(sub(pts[i], first))), None)
    if u is None:
        raise DegenerateInput("segment with a single point")
    vals = [(dot(u, pts[i]), i) for i in idx]
    lo = min(v for v, _ in vals)
    hi = max(v for v, _ in vals)
    return [Face(frozenset(i for v, i in vals if v == lo), neg(u)),
            Face(frozenset(i for v, i in vals if v == hi), u)]


def _subfaces(pts, normals, facet: Face) -> tuple:
    return tuple(hull_faces(pts, sorted(facet.vertices), tuple(normals) + (facet.normal,)))


# process-pool state: workers receive the point list once via the initializer
_WORKER_STATE: dict = {}


def _init_worker(pts, normals):
    _WORKER_STATE["pts"] = pts
    _WORKER_STATE["normals"] = normals


def _worker_subfaces(facet: Face) -> tuple:
    return _subfaces(_WORKER_STATE["pts"], _WORKER_STATE["normals"], facet)


def _worker_pivot(args) -> Face:
    idx, facet, ridge = args
    return _pivot(_WORKER_STATE["pts"], idx, _WORKER_STATE["normals"], facet, ridge)


def default_workers() -> int:
    env = os.environ.get("QUATPOLY_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return os.cpu_count() or 1


def hull_faces(pts: Sequence[Vec], idx: Sequence[int], normals: tuple = (),
               workers: int = 1, ridge_log: Optional[dict] = None) -> list[Face]:
    """Facets (with their face lattice) of conv(pts[idx]) inside a (4 - len(normals))-flat."""
    k = 4 - len(normals)
    idx = list(idx)
    if k == 1:
        return _segment_ends(pts, idx, normals)
    seed = _seed_facet(pts, idx, normals, k)
    found = {seed.vertices: seed}
    owners: dict = {} if ridge_log is None else ridge_log
    pool = None
    if workers > 1:
        pool = ProcessPoolExecutor(max_workers=workers, initializer=_init_worker,
                                   initargs=(tuple(pts), tuple(normals)))
    try:
        frontier = [seed]
        while frontier:
            if pool is not None:
                lattices = list(pool.map(_worker_subfaces, frontier, chunksize=4))
            else:
                lattices = [_subfaces(pts, normals, f) for f in frontier]
            jobs = []
            for facet, ridges in zip(frontier, lattices):
                facet.subfaces = ridges
                for r in ridges:
                    holders = owners.setdefault(r.vertices, [])
                    holders.append(facet.vertices)
                    if len(holders) == 1:
                        jobs.append((facet, r))
            if pool is not None:
                results = list(pool.map(_worker_pivot, [(idx, f, r) for f, r in jobs], chunksize=8))
            else:
                results = [_pivot(pts, idx, normals, f, r) for f, r in jobs]
            frontier = []
            for g in results:
                if g.vertices not in found:
                    found[g.vertices] = g
                    frontier.append(g)
    finally:
        if pool is not None:
            pool.shutdown()
    return sorted(found.values(), key=lambda f: f.key)


def convex_hull(points: Sequence[Vec], workers: Optional[int] = None) -> Hull:
    """Facets of a full-dimensional point set in R^4, with ridge ownership."""
    pts = tuple(tuple(p) for p in points)
    if len(pts) < 5 or affine_rank(pts) < 4:
        raise DegenerateInput("points do not span 4 dimensions; use project3d.hull3d for 3D data")
    if workers is None:
        workers = default_workers()
    log: dict = {}
    facets = hull_faces(pts, range(len(pts)), (), workers=workers, ridge_log=log)
    ridge_facets = {tuple(sorted(r)): tuple(sorted(tuple(sorted(f)) for f in fs)) for r, fs in log.items()}
    return Hull(pts, facets, dict(sorted(ridge_facets.items())))


def facets(points, workers: Optional[int] = None) -> list[tuple[int, ...]]:
    """Canonically sorted vertex-index tuples of all facets."""
    pts = [tuple(p) for p in points]
    return [f.key for f in convex_hull(pts, workers=workers).facets]


BRUTE_LIMIT = 30


def brute_facets(points, override: bool = False) -> list[tuple[int, ...]]:
    """Exhaustive scan of all 4-point hyperplanes; a test oracle for :func:`facets`."""
    pts = [tuple(p) for p in points]
    if len(pts) > BRUTE_LIMIT and not override:
        raise ValueError(f"brute_facets limited to {BRUTE_LIMIT} points ({comb(len(pts), 4)} quadruples); pass override=True")
    if len(pts) < 5 or affine_rank(pts) < 4:
        raise DegenerateInput("points do not span 4 dimensions")
    found: list[frozenset] = []
    for quad in itertools.combinations(range(len(pts)), 4):
        q = frozenset(quad)
        if any(q <= f for f in found):
            continue
        i, j, k, l = quad
        base = pts[i]
        n = cross4(sub(pts[j], base), sub(pts[k], base), sub(pts[l], base))
        if is_zero_vec(n):
            continue
        side = 0
        contact = []
        for m, p in enumerate(pts):
            s = dot(n, sub(p, base)).sign()
            if s == 0:
                contact.append(m)
            elif side == 0:
                side = s
            elif s != side:
                break
        else:
            found.append(frozenset(contact))
    return sorted(tuple(sorted(f)) for f in found)
