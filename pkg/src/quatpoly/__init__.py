"""Exact quaternionic Coxeter groups, the snub 24-cell and its relatives.

Arithmetic is exact in Q(sqrt2, sqrt5); floats only appear in exported files.
"""
from .algebra import FieldScalar, Quaternion
from .coxeter import Group, GroupElement, PointSet, build_named_group, named_quaternion_set, orbit, stabilizer
from .hull import brute_facets, convex_hull, facets
from .polytope import Polytope, cell_census
from .project3d import Solid3, hull3d

__version__ = "0.1.0"

__all__ = [
    "FieldScalar", "Quaternion", "Group", "GroupElement", "PointSet", "build_named_group",
    "named_quaternion_set", "orbit", "stabilizer", "brute_facets", "convex_hull", "facets",
    "Polytope", "cell_census", "Solid3", "hull3d",
]
