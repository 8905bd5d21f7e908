"""Named groups and point sets, built once and cached for the CLI and the checks."""
from __future__ import annotations

import functools
from dataclasses import dataclass, field
from typing import Callable, Optional

from . import coxeter
from .algebra import E2, E3, HALF, SIGMA, TAU, ZERO_F, FieldScalar, Quaternion
from .coxeter import Group, PointSet, build_named_group, named_quaternion_set, orbit
from .polytope import (
    CUBE_CENTER, LAMBDA_F4, LAMBDA_I, LAMBDA_II, DualResult, Polytope, cell_census, dual_snub24, p_basis, rebase,
)

GROUP_CONSTRUCTIONS = {
    "w-a3": "W_A3",
    "rot-a3": "rot_A3",
    "pyritohedral": "pyritohedral",
    "w-d4": "W_D4",
    "rot-d4": "rot_D4",
    "snub-group": "snub_group",
    "w-b3": "W_B3",
    "w-f4": "W_F4",
    "w-h4": "W_H4",
}

POINT_CONSTRUCTIONS = (
    "24cell", "24cell-prime", "snub24", "snub24-mirror", "600cell", "f4-union",
    "icosa-a3", "icosa-a3-mirror", "trunc-oct-b3",
)

CONSTRUCTION_NAMES = tuple(GROUP_CONSTRUCTIONS) + POINT_CONSTRUCTIONS

# seeds of the two A3 icosahedra, as pure quaternions
ICOSA_SEED = E2 + E3.scale(TAU)
ICOSA_MIRROR_SEED = E3 - E2.scale(TAU)


@dataclass
class Construction:
    name: str
    dim: int
    group: Optional[Group] = None
    points: Optional[PointSet] = None
    metadata: dict = field(default_factory=dict)

    @property
    def is_group(self) -> bool:
        return self.points is None


def _pure(points) -> PointSet:
    return PointSet((Quaternion(ZERO_F, *p.c[1:]) for p in points))


def _meta(group: Optional[str], diagram: Optional[str] = None, seed=None, scale=None, note: str = "") -> dict:
    out = {"group": group}
    if diagram:
        out["diagram"] = diagram
    if seed is not None:
        out["seed_dynkin"] = [str(FieldScalar.coerce(x)) for x in seed]
    if scale is not None:
        out["seed_scale"] = str(scale)
    if note:
        out["note"] = note
    return out


def trunc_oct_points() -> PointSet:
    """W(B3) orbit of p1 + tau p2 read in the frame around the cube center (1 + e1)/sqrt2."""
    _, p1, p2, _ = p_basis(CUBE_CENTER)
    pts = orbit(build_named_group("W_B3"), p1 + p2.scale(TAU))
    return PointSet((Quaternion(ZERO_F, *rebase(x, CUBE_CENTER)[1:]) for x in pts), name="trunc-oct-b3")


def _build_points(name: str) -> Construction:
    if name == "24cell":
        return Construction(name, 4, points=named_quaternion_set("T"), metadata=_meta("W_D4", note="binary tetrahedral group T"))
    if name == "24cell-prime":
        return Construction(name, 4, points=named_quaternion_set("Tprime"), metadata=_meta("W_D4", note="T'"))
    if name == "snub24":
        pts = orbit(build_named_group("snub_group"), LAMBDA_I)
        return Construction(name, 4, points=PointSet(pts, name=name),
                            metadata=_meta("snub_group", "D4", (TAU, 1, TAU, TAU), SIGMA * SIGMA * HALF))
    if name == "snub24-mirror":
        pts = orbit(build_named_group("snub_group"), LAMBDA_II)
        return Construction(name, 4, points=PointSet(pts, name=name),
                            metadata=_meta("snub_group", "D4", (SIGMA, 1, SIGMA, SIGMA), TAU * TAU * HALF))
    if name == "600cell":
        return Construction(name, 4, points=named_quaternion_set("I"), metadata=_meta("W_H4", note="icosians T + S"))
    if name == "f4-union":
        pts = orbit(build_named_group("W_F4"), LAMBDA_F4)
        return Construction(name, 4, points=PointSet(pts, name=name),
                            metadata=_meta("W_F4", "F4", (0, 0, TAU, 1), SIGMA * SIGMA * HALF))
    if name == "icosa-a3":
        pts = _pure(orbit(build_named_group("rot_A3"), ICOSA_SEED))
        return Construction(name, 3, points=PointSet(pts, name=name),
                            metadata=_meta("rot_A3", "A3", (TAU, 1, TAU), -SIGMA))
    if name == "icosa-a3-mirror":
        pts = _pure(orbit(build_named_group("rot_A3"), ICOSA_MIRROR_SEED))
        return Construction(name, 3, points=PointSet(pts, name=name),
                            metadata=_meta("rot_A3", "A3", (SIGMA, 1, SIGMA), TAU * TAU))
    if name == "trunc-oct-b3":
        return Construction(name, 3, points=trunc_oct_points(),
                            metadata=_meta("W_B3", note="orbit of p1 + tau p2 around (1 + e1)/sqrt2"))
    raise KeyError(name)


@functools.lru_cache(maxsize=None)
def construction(name: str) -> Construction:
    if name in GROUP_CONSTRUCTIONS:
        gname = GROUP_CONSTRUCTIONS[name]
        return Construction(name, 4, group=build_named_group(gname), metadata=_meta(gname))
    if name in POINT_CONSTRUCTIONS:
        return _build_points(name)
    raise KeyError(f"unknown construction {name!r}; choose from {', '.join(CONSTRUCTION_NAMES)}")


# heavier derived objects


@functools.lru_cache(maxsize=None)
def snub24_polytope() -> Polytope:
    """Snub 24-cell hull with its cell census under the order-576 group."""
    poly = Polytope.from_points(construction("snub24").points, name="snub24")
    cell_census(poly, build_named_group("snub_group"))
    return poly


@functools.lru_cache(maxsize=None)
def snub24_dual() -> DualResult:
    return dual_snub24(snub24_polytope())


@functools.lru_cache(maxsize=None)
def f4_polytope() -> Polytope:
    poly = Polytope.from_points(construction("f4-union").points, name="f4-union")
    cell_census(poly, build_named_group("W_F4"))
    return poly


@functools.lru_cache(maxsize=None)
def polytope_of(name: str) -> Polytope:
    if name == "snub24":
        return snub24_polytope()
    if name == "f4-union":
        return f4_polytope()
    c = construction(name)
    if c.is_group or c.dim != 4:
        raise ValueError(f"{name} is not a 4D point construction")
    return Polytope.from_points(c.points, name=name)


_CACHES: tuple[Callable, ...] = (
    construction, snub24_polytope, snub24_dual, f4_polytope, polytope_of,
    coxeter.build_named_group, coxeter.named_quaternion_set,
)


def clear_caches() -> None:
    for fn in _CACHES:
        fn.cache_clear()
