"""Finite reflection groups acting on quaternions.

Every orthogonal map of R^4 is written as ``x -> p x q`` or ``x -> p conj(x) q``
for unit quaternions p, q; the pair is only defined up to ``(p, q) ~ (-p, -q)``.
"""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key, lru_cache
from typing import Iterable, Iterator, Optional, Sequence, Union

from .algebra import (
    E0, E1, E2, E3, HALF, INV_SQRT2, ONE, SIGMA, SQRT2, TAU, ZERO_F,
    FieldScalar, Quaternion, field_sqrt, quat_dot, quat_mul,
)


class GroupElement:
    """One orthogonal transformation ``[p, q]`` or ``[p, q]*`` in canonical sign."""

    __slots__ = ("p", "q", "star", "_key")

    def __init__(self, p: Quaternion, q: Quaternion, star: bool = False):
        for x in p.c:
            s = x.sign()
            if s:
                if s < 0:
                    p, q = -p, -q
                break
        else:
            raise ValueError("p must be nonzero")
        self.p = p
        self.q = q
        self.star = bool(star)
        self._key = None

    @property
    def key(self) -> tuple:
        k = self._key
        if k is None:
            k = self._key = (self.p.key, self.q.key, self.star)
        return k

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return f"[{self.p}, {self.q}]" + ("*" if self.star else "")

    def __call__(self, x: Quaternion) -> Quaternion:
        return apply(self, x)

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return compose(self, other)

    def inverse(self) -> "GroupElement":
        if self.star:
            return GroupElement(self.q, self.p, True)
        return GroupElement(self.p.conj(), self.q.conj(), False)

    def is_unit(self) -> bool:
        return self.p.norm2() == ONE and self.q.norm2() == ONE

    def matrix(self) -> list[list[FieldScalar]]:
        """4x4 matrix of the action, columns are images of 1, e1, e2, e3."""
        cols = [apply(self, e).c for e in (E0, E1, E2, E3)]
        return [[cols[j][i] for j in range(4)] for i in range(4)]


IDENTITY = GroupElement(E0, E0)


def apply(g: GroupElement, x: Quaternion) -> Quaternion:
    if g.star:
        x = x.conj()
    return quat_mul(quat_mul(g.p, x), g.q)


def compose(g: GroupElement, h: GroupElement) -> GroupElement:
    """The map ``x -> g(h(x))``."""
    p, q, r, s = g.p, g.q, h.p, h.q
    if not g.star:
        return GroupElement(quat_mul(p, r), quat_mul(s, q), h.star)
    return GroupElement(quat_mul(p, s.conj()), quat_mul(r.conj(), q), not h.star)


def reflection_from_root(alpha: Quaternion) -> GroupElement:
    """Reflection in the hyperplane orthogonal to ``alpha``: ``[n, -n]*`` with n = alpha/|alpha|."""
    if alpha.is_zero():
        raise ValueError("zero root has no reflection")
    n = alpha.scale(field_sqrt(alpha.norm2()).inverse())
    return GroupElement(n, -n, True)


# ---------------------------------------------------------------------------
# point sets


def _lex_cmp(x: Quaternion, y: Quaternion) -> int:
    for a, b in zip(x.c, y.c):
        if a != b:
            return -1 if a < b else 1
    return 0


_LEX_KEY = cmp_to_key(_lex_cmp)


class PointSet:
    """Deduplicated, lexicographically sorted set of quaternions."""

    __slots__ = ("points", "_index", "name")

    def __init__(self, points: Iterable[Quaternion], name: Optional[str] = None):
        uniq = {p.key: p for p in points}
        self.points: tuple[Quaternion, ...] = tuple(sorted(uniq.values(), key=_LEX_KEY))
        self._index = {p.key: i for i, p in enumerate(self.points)}
        self.name = name

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[Quaternion]:
        return iter(self.points)

    def __getitem__(self, i: int) -> Quaternion:
        return self.points[i]

    def __contains__(self, x: Quaternion) -> bool:
        return x.key in self._index

    def index(self, x: Quaternion) -> int:
        try:
            return self._index[x.key]
        except KeyError:
            raise ValueError(f"{x} not in point set") from None

    def keys(self) -> frozenset:
        return frozenset(self._index)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PointSet):
            return NotImplemented
        return self.keys() == other.keys()

    def __hash__(self) -> int:
        return hash(self.keys())

    def __or__(self, other: "PointSet") -> "PointSet":
        return PointSet(self.points + other.points)

    def scaled(self, s) -> "PointSet":
        return PointSet(p.scale(s) for p in self.points)

    def conj5(self) -> "PointSet":
        """Exchange tau and sigma in every coordinate."""
        return PointSet(p.conj5() for p in self.points)

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"<PointSet{label} n={len(self)}>"


# ---------------------------------------------------------------------------
# groups


class GroupOrderExceeded(RuntimeError):
    pass


class Group:
    """A finite group of GroupElements closed under composition.

    When built by :func:`generate_group` each non-identity element records the
    BFS edge ``elements[i] = generators[gen] o elements[parent]``; this lets
    :meth:`permutations` compose point permutations instead of re-acting
    exactly with every element.
    """

    def __init__(self, elements: Sequence[GroupElement], generators: Sequence[GroupElement] = (),
                 name: Optional[str] = None, tree: Optional[Sequence[tuple[int, int]]] = None):
        self.elements: tuple[GroupElement, ...] = tuple(elements)
        self.generators = tuple(generators)
        self.name = name
        self._index = {g.key: i for i, g in enumerate(self.elements)}
        if len(self._index) != len(self.elements):
            raise ValueError("duplicate group elements")
        self._tree = tuple(tree) if tree is not None else None

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[GroupElement]:
        return iter(self.elements)

    def __contains__(self, g: GroupElement) -> bool:
        return g.key in self._index

    def index(self, g: GroupElement) -> int:
        return self._index[g.key]

    def key_set(self) -> frozenset:
        return frozenset(self._index)

    def __repr__(self) -> str:
        return f"<Group {self.name or ''} order={self.order}>"

    def permutations(self, points: PointSet) -> list[tuple[int, ...]]:
        """Action of every element on ``points`` as index permutations.

        Raises ``ValueError`` when some element does not preserve the set.
        """
        def exact(g: GroupElement) -> tuple[int, ...]:
            try:
                return tuple(points.index(apply(g, x)) for x in points)
            except ValueError:
                raise ValueError(f"{g} does not preserve the point set") from None

        if self._tree is None:
            return [exact(g) for g in self.elements]
        gen_perms = [exact(g) for g in self.generators]
        perms: list[tuple[int, ...]] = [tuple(range(len(points)))]
        for parent, gen in self._tree:
            gp, pp = gen_perms[gen], perms[parent]
            perms.append(tuple(gp[k] for k in pp))
        return perms


def generate_group(generators: Sequence[GroupElement], order_cap: int = 100_000,
                   name: Optional[str] = None) -> Group:
    """Breadth-first closure of ``generators`` under composition."""
    gens = list(generators)
    if not gens:
        raise ValueError("need at least one generator")
    elements = [IDENTITY]
    index = {IDENTITY.key: 0}
    tree: list[tuple[int, int]] = []
    queue = deque([0])
    while queue:
        i = queue.popleft()
        h = elements[i]
        for gi, g in enumerate(gens):
            new = compose(g, h)
            k = new.key
            if k in index:
                continue
            index[k] = len(elements)
            elements.append(new)
            tree.append((i, gi))
            if len(elements) > order_cap:
                raise GroupOrderExceeded(
                    f"closure of {len(gens)} generators exceeded order cap {order_cap}"
                    f" ({name or 'unnamed group'}); check sign canonicalization or generators")
            queue.append(len(elements) - 1)
    return Group(elements, gens, name=name, tree=tree)


def pair_set(left: Iterable[Quaternion], right: Iterable[Quaternion], star: bool = False) -> set[GroupElement]:
    """All ``[p, q]`` (or ``[p, q]*``) with p, q drawn independently."""
    right = list(right)
    return {GroupElement(p, q, star) for p in left for q in right}


def paired_set(left: Iterable[Quaternion], f, star: bool = False) -> set[GroupElement]:
    """``[p, f(p)]`` for each p: the bracket notation ``[T, conj(T)]``."""
    return {GroupElement(p, f(p), star) for p in left}


# ---------------------------------------------------------------------------
# quaternion sets


def _signed(base: Sequence, *, parity: Optional[int] = None) -> list[Quaternion]:
    """All sign choices on the nonzero entries of ``base``."""
    nz = [i for i, v in enumerate(base) if v != 0]
    out = []
    for signs in itertools.product((1, -1), repeat=len(nz)):
        if parity is not None and signs.count(-1) % 2 != parity:
            continue
        vals = [FieldScalar.coerce(v) for v in base]
        for i, s in zip(nz, signs):
            vals[i] = vals[i] * s
        out.append(Quaternion(*vals))
    return out


def _perm_quats(base4: Sequence, positions: Sequence[Sequence[int]]) -> list[Quaternion]:
    out = []
    for pos in positions:
        v = [ZERO_F] * 4
        for value, slot in zip(base4, pos):
            v[slot] = FieldScalar.coerce(value)
        out.extend(_signed(v))
    return out


def _v0() -> list[Quaternion]:
    return [s * e for e in (E0, E1, E2, E3) for s in (1, -1)]


def _vpm(parity: int) -> list[Quaternion]:
    return _signed((HALF, HALF, HALF, HALF), parity=parity)


def _vk(k: int) -> list[Quaternion]:
    # V1: (±1 ±e1)/√2, (±e2 ±e3)/√2 ; V2, V3 cyclic
    pairs = {1: ((0, 1), (2, 3)), 2: ((0, 2), (3, 1)), 3: ((0, 3), (1, 2))}[k]
    out = []
    for i, j in pairs:
        v = [ZERO_F] * 4
        v[i] = v[j] = INV_SQRT2
        out.extend(_signed(v))
    return out


# (real, e1, e2, e3) placements of (τ, 1, σ) style triples, one per listed block
_S_PATTERNS = (
    ((TAU, ONE, SIGMA), (0, 1, 3)),
    ((TAU, ONE, SIGMA), (0, 2, 1)),
    ((TAU, ONE, SIGMA), (0, 3, 2)),
    ((SIGMA, ONE, TAU), (0, 1, 2)),
    ((SIGMA, ONE, TAU), (0, 2, 3)),
    ((SIGMA, ONE, TAU), (0, 3, 1)),
    ((ONE, TAU, SIGMA), (0, 1, 2)),
    ((ONE, TAU, SIGMA), (0, 2, 3)),
    ((ONE, TAU, SIGMA), (0, 3, 1)),
    ((SIGMA, TAU, ONE), (1, 2, 3)),
    ((SIGMA, TAU, ONE), (2, 3, 1)),
    ((SIGMA, TAU, ONE), (3, 1, 2)),
)


def _snub_s() -> list[Quaternion]:
    out = []
    for values, slots in _S_PATTERNS:
        v = [ZERO_F] * 4
        for value, slot in zip(values, slots):
            v[slot] = value * HALF
        out.extend(_signed(v))
    return out


QUATERNION_SET_NAMES = ("V0", "Vplus", "Vminus", "V1", "V2", "V3", "T", "Tprime", "S", "Stilde", "I", "Itilde")


@lru_cache(maxsize=None)
def named_quaternion_set(name: str) -> PointSet:
    """The quaternion sets V0, V±, V1..V3, T, T', S, S~, I, I~."""
    builders = {
        "V0": _v0,
        "Vplus": lambda: _vpm(0),
        "Vminus": lambda: _vpm(1),
        "V1": lambda: _vk(1),
        "V2": lambda: _vk(2),
        "V3": lambda: _vk(3),
        "S": _snub_s,
    }
    if name in builders:
        return PointSet(builders[name](), name=name)
    if name == "T":
        pts = named_quaternion_set("V0").points + named_quaternion_set("Vplus").points + named_quaternion_set("Vminus").points
    elif name == "Tprime":
        pts = sum((named_quaternion_set(n).points for n in ("V1", "V2", "V3")), ())
    elif name == "Stilde":
        pts = named_quaternion_set("S").conj5().points
    elif name == "I":
        pts = named_quaternion_set("T").points + named_quaternion_set("S").points
    elif name == "Itilde":
        pts = named_quaternion_set("T").points + named_quaternion_set("Stilde").points
    else:
        raise KeyError(f"unknown quaternion set {name!r}; expected one of {QUATERNION_SET_NAMES}")
    return PointSet(pts, name=name)


# ---------------------------------------------------------------------------
# root systems


def mat_inverse(m: Sequence[Sequence[FieldScalar]]) -> list[list[FieldScalar]]:
    """Gauss-Jordan inverse over the field."""
    n = len(m)
    a = [[FieldScalar.coerce(x) for x in row] + [ONE if i == j else ZERO_F for j in range(n)]
         for i, row in enumerate(m)]
    for col in range(n):
        piv = next((r for r in range(col, n) if not a[r][col].is_zero()), None)
        if piv is None:
            raise ValueError("singular matrix")
        a[col], a[piv] = a[piv], a[col]
        inv = a[col][col].inverse()
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and not a[r][col].is_zero():
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


@dataclass(frozen=True)
class RootSystemData:
    name: str
    roots: tuple[Quaternion, ...]
    gram: tuple[tuple[FieldScalar, ...], ...]
    weights: tuple[Quaternion, ...]

    @property
    def rank(self) -> int:
        return len(self.roots)

    @classmethod
    def from_roots(cls, name: str, roots: Sequence[Quaternion]) -> "RootSystemData":
        gram = tuple(tuple(quat_dot(a, b) for b in roots) for a in roots)
        inv = mat_inverse(gram)
        weights = tuple(
            _lincomb(inv[i], roots) for i in range(len(roots))
        )
        return cls(name, tuple(roots), gram, weights)

    def reflections(self) -> list[GroupElement]:
        return [reflection_from_root(a) for a in self.roots]


def _lincomb(coeffs: Sequence[FieldScalar], vectors: Sequence[Quaternion]) -> Quaternion:
    total = Quaternion()
    for c, v in zip(coeffs, vectors):
        total = total + v.scale(c)
    return total


D4_SIMPLE_ROOTS = (E2 - E3, E1 + E3, -E2 - E3, E0 - E1)
A3_SIMPLE_ROOTS = (E1 + E2, -E2 + E3, -E1 + E2)
F4_SIMPLE_ROOTS = (
    Quaternion(INV_SQRT2, -INV_SQRT2, -INV_SQRT2, -INV_SQRT2),
    E3.scale(SQRT2),
    E2 - E3,
    E1 - E2,
)
ROOT_SYSTEM_NAMES = ("D4", "A3", "F4")


def root_system(name: str) -> RootSystemData:
    roots = {"D4": D4_SIMPLE_ROOTS, "A3": A3_SIMPLE_ROOTS, "F4": F4_SIMPLE_ROOTS}
    try:
        return RootSystemData.from_roots(name, roots[name])
    except KeyError:
        raise KeyError(f"unknown root system {name!r}") from None


def dynkin_to_cartesian(coeffs: Sequence, roots: RootSystemData) -> Quaternion:
    """sum_i a_i w_i for Dynkin-basis coefficients a_i."""
    if len(coeffs) != roots.rank:
        raise ValueError(f"expected {roots.rank} Dynkin coefficients, got {len(coeffs)}")
    return _lincomb([FieldScalar.coerce(c) for c in coeffs], roots.weights)


# ---------------------------------------------------------------------------
# named groups

# Diagram-automorphism generators extending the rotation subgroup of W(D4)
S3_GENERATORS = (
    GroupElement(Quaternion(HALF, -HALF, HALF, -HALF), Quaternion(HALF, HALF, HALF, HALF)),
    GroupElement(E2, -E2, True),
)

GROUP_NAMES = ("W_A3", "rot_A3", "pyritohedral", "W_D4", "rot_D4", "snub_group", "W_B3", "W_F4", "W_H4")

EXPECTED_ORDERS = {
    "W_A3": 24, "rot_A3": 12, "pyritohedral": 24, "W_D4": 192, "rot_D4": 96,
    "snub_group": 576, "W_B3": 48, "W_F4": 1152, "W_H4": 14400,
}


def rotation_words(reflections: Sequence[GroupElement]) -> list[GroupElement]:
    return [compose(a, b) for a, b in itertools.combinations(reflections, 2)]


def _named_generators(name: str) -> list[GroupElement]:
    if name == "W_D4":
        return root_system("D4").reflections()
    if name == "rot_D4":
        return rotation_words(root_system("D4").reflections())
    if name == "snub_group":
        return _named_generators("rot_D4") + list(S3_GENERATORS)
    if name == "W_A3":
        return root_system("A3").reflections()
    if name == "rot_A3":
        return rotation_words(root_system("A3").reflections())
    if name == "pyritohedral":
        return _named_generators("rot_A3") + [GroupElement(E0, -E0)]
    if name == "W_F4":
        return root_system("F4").reflections()
    if name == "W_B3":
        return root_system("F4").reflections()[:3]
    if name == "W_H4":
        lam = Quaternion(TAU, ONE, ZERO_F, SIGMA).scale(HALF)
        return _named_generators("snub_group") + [GroupElement(lam, E0)]
    raise KeyError(f"unknown group {name!r}; expected one of {GROUP_NAMES}")


@lru_cache(maxsize=None)
def build_named_group(name: str) -> Group:
    gens = _named_generators(name)
    cap = 2 * EXPECTED_ORDERS[name]
    return generate_group(gens, order_cap=cap, name=name)


def expected_decomposition(name: str) -> set[GroupElement]:
    """Explicit element sets in bracket notation, used to cross-check closures."""
    q = named_quaternion_set
    T, Tp = q("T").points, q("Tprime").points
    if name == "W_D4":
        out = pair_set(q("V0"), q("V0")) | pair_set(q("Vplus"), q("Vminus")) | pair_set(q("Vminus"), q("Vplus"))
        for k in ("V1", "V2", "V3"):
            out |= pair_set(q(k), q(k), star=True)
        return out
    if name == "rot_D4":
        return pair_set(q("V0"), q("V0")) | pair_set(q("Vplus"), q("Vminus")) | pair_set(q("Vminus"), q("Vplus"))
    if name == "snub_group":
        return pair_set(T, T) | pair_set(T, T, star=True)
    if name == "W_F4":
        return pair_set(T, T) | pair_set(T, T, star=True) | pair_set(Tp, Tp) | pair_set(Tp, Tp, star=True)
    if name == "W_A3":
        return paired_set(T, Quaternion.conj) | paired_set(Tp, Quaternion.conj, star=True)
    if name == "rot_A3":
        return paired_set(T, Quaternion.conj)
    if name == "pyritohedral":
        return paired_set(T, Quaternion.conj) | paired_set(T, lambda p: -p.conj())
    if name == "W_B3":
        w = Quaternion(INV_SQRT2, INV_SQRT2)
        wb = w.conj()
        out = set()
        for p in T + Tp:
            out.add(GroupElement(p, wb * p.conj() * w))
            out.add(GroupElement(p, w * p.conj() * w, True))
        return out
    if name == "W_H4":
        I = q("I").points
        return pair_set(I, I) | pair_set(I, I, star=True)
    raise KeyError(f"no explicit decomposition for {name!r}")


# ---------------------------------------------------------------------------
# orbits and stabilizers


def orbit(group: Group, seed: Quaternion) -> PointSet:
    return PointSet(apply(g, seed) for g in group)


def stabilizer(group: Group, target: Union[Quaternion, PointSet]) -> Group:
    """Pointwise stabilizer of a quaternion, or setwise stabilizer of a point set."""
    if isinstance(target, Quaternion):
        keep = [g for g in group if apply(g, target) == target]
    else:
        keep = [g for g in group if all(apply(g, x) in target for x in target)]
    name = f"Stab({group.name})" if group.name else None
    return Group(keep, keep, name=name)


def mirror_check(set_a: PointSet, set_b: PointSet, reflection: GroupElement) -> bool:
    """True iff the (orientation-reversing) ``reflection`` maps set_a onto set_b."""
    if not reflection.star:
        raise ValueError("mirror_check needs a star-type (determinant -1) element")
    if len(set_a) != len(set_b):
        return False
    return PointSet(apply(reflection, x) for x in set_a) == set_b
