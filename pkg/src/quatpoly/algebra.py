"""Exact arithmetic in Q(sqrt2, sqrt5) and quaternions over that field.

A :class:`FieldScalar` stores ``(a + b*sqrt2 + c*sqrt5 + d*sqrt10)`` as four
integer numerators over one positive common denominator, reduced so the
five integers share no common factor.  That keeps equality and hashing
canonical while avoiding a ``Fraction`` object per coefficient.
"""
from __future__ import annotations

import re
from fractions import Fraction
from functools import cmp_to_key
from math import gcd, isqrt
from typing import Iterable, Sequence, Union

Number = Union[int, Fraction, "FieldScalar"]

NEGATIVE, ZERO, POSITIVE = -1, 0, 1


def _sign_q2(a: int, b: int) -> int:
    """Sign of a + b*sqrt2 for integers a, b."""
    if a >= 0 and b >= 0:
        return POSITIVE if (a or b) else ZERO
    if a <= 0 and b <= 0:
        return NEGATIVE
    # opposite signs: compare a^2 with 2 b^2
    diff = a * a - 2 * b * b
    if a > 0:
        return POSITIVE if diff > 0 else NEGATIVE
    return NEGATIVE if diff > 0 else POSITIVE


def _sign_numerators(a: int, b: int, c: int, d: int) -> int:
    # x = u + v*sqrt5 with u = a + b*sqrt2, v = c + d*sqrt2
    su = _sign_q2(a, b)
    sv = _sign_q2(c, d)
    if su >= 0 and sv >= 0:
        return POSITIVE if (su or sv) else ZERO
    if su <= 0 and sv <= 0:
        return NEGATIVE
    # u^2 - 5 v^2 = (a^2 + 2b^2 - 5c^2 - 10d^2) + (2ab - 10cd) sqrt2
    s = _sign_q2(a * a + 2 * b * b - 5 * c * c - 10 * d * d, 2 * a * b - 10 * c * d)
    return s if su > 0 else -s


class FieldScalar:
    """Exact element a + b*sqrt2 + c*sqrt5 + d*sqrt10 with rational a..d."""

    __slots__ = ("_n", "_den", "_hash")

    def __init__(self, a: Union[int, Fraction, str] = 0, b=0, c=0, d=0):
        coeffs = [Fraction(v) for v in (a, b, c, d)]
        den = 1
        for f in coeffs:
            den = den * f.denominator // gcd(den, f.denominator)
        nums = tuple(int(f.numerator * (den // f.denominator)) for f in coeffs)
        self._set(nums[0], nums[1], nums[2], nums[3], den)

    def _set(self, a: int, b: int, c: int, d: int, den: int) -> None:
        g = gcd(a, b, c, d, den)
        if g != 1:
            a //= g
            b //= g
            c //= g
            d //= g
            den //= g
        self._n = (a, b, c, d)
        self._den = den
        self._hash = None

    @classmethod
    def _raw(cls, a: int, b: int, c: int, d: int, den: int) -> "FieldScalar":
        obj = cls.__new__(cls)
        if den < 0:
            a, b, c, d, den = -a, -b, -c, -d, -den
        obj._set(a, b, c, d, den)
        return obj

    @classmethod
    def coerce(cls, x: Number) -> "FieldScalar":
        if isinstance(x, FieldScalar):
            return x
        if isinstance(x, int):
            return cls._raw(x, 0, 0, 0, 1)
        if isinstance(x, Fraction):
            return cls._raw(x.numerator, 0, 0, 0, x.denominator)
        raise TypeError(f"cannot coerce {type(x).__name__} to FieldScalar")

    # -- coefficient access -------------------------------------------------
    @property
    def a(self) -> Fraction:
        return Fraction(self._n[0], self._den)

    @property
    def b(self) -> Fraction:
        return Fraction(self._n[1], self._den)

    @property
    def c(self) -> Fraction:
        return Fraction(self._n[2], self._den)

    @property
    def d(self) -> Fraction:
        return Fraction(self._n[3], self._den)

    @property
    def coefficients(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.a, self.b, self.c, self.d)

    @property
    def key(self) -> tuple[int, int, int, int, int]:
        return self._n + (self._den,)

    def is_zero(self) -> bool:
        n = self._n
        return not (n[0] or n[1] or n[2] or n[3])

    def is_rational(self) -> bool:
        n = self._n
        return not (n[1] or n[2] or n[3])

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other: Number) -> "FieldScalar":
        if not isinstance(other, FieldScalar):
            try:
                other = FieldScalar.coerce(other)
            except TypeError:
                return NotImplemented
        (a, b, c, d), p = self._n, self._den
        (e, f, g, h), q = other._n, other._den
        if p == q:
            return FieldScalar._raw(a + e, b + f, c + g, d + h, p)
        return FieldScalar._raw(a * q + e * p, b * q + f * p, c * q + g * p, d * q + h * p, p * q)

    __radd__ = __add__

    def __neg__(self) -> "FieldScalar":
        a, b, c, d = self._n
        obj = FieldScalar.__new__(FieldScalar)
        obj._n = (-a, -b, -c, -d)
        obj._den = self._den
        obj._hash = None
        return obj

    def __pos__(self) -> "FieldScalar":
        return self

    def __sub__(self, other: Number) -> "FieldScalar":
        if not isinstance(other, FieldScalar):
            try:
                other = FieldScalar.coerce(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Number) -> "FieldScalar":
        return (-self) + other

    def __mul__(self, other: Number) -> "FieldScalar":
        if not isinstance(other, FieldScalar):
            if isinstance(other, int):
                a, b, c, d = self._n
                return FieldScalar._raw(a * other, b * other, c * other, d * other, self._den)
            try:
                other = FieldScalar.coerce(other)
            except TypeError:
                return NotImplemented
        (a, b, c, d), p = self._n, self._den
        (e, f, g, h), q = other._n, other._den
        return FieldScalar._raw(
            a * e + 2 * b * f + 5 * c * g + 10 * d * h,
            a * f + b * e + 5 * (c * h + d * g),
            a * g + c * e + 2 * (b * h + d * f),
            a * h + d * e + b * g + c * f,
            p * q,
        )

    __rmul__ = __mul__

    def conj5(self) -> "FieldScalar":
        """Galois conjugate sqrt5 -> -sqrt5 (swaps tau and sigma)."""
        a, b, c, d = self._n
        return FieldScalar._raw(a, b, -c, -d, self._den)

    def conj2(self) -> "FieldScalar":
        """Galois conjugate sqrt2 -> -sqrt2."""
        a, b, c, d = self._n
        return FieldScalar._raw(a, -b, c, -d, self._den)

    def inverse(self) -> "FieldScalar":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero FieldScalar")
        # x * conj5(x) lies in Q(sqrt2); then multiply by its sqrt2-conjugate
        c5 = self.conj5()
        m = self * c5
        c2 = m.conj2()
        r = m * c2
        assert r.is_rational()
        return c5 * c2 * FieldScalar._raw(r._den, 0, 0, 0, r._n[0])

    def __truediv__(self, other: Number) -> "FieldScalar":
        if isinstance(other, int):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            a, b, c, d = self._n
            return FieldScalar._raw(a, b, c, d, self._den * other)
        if not isinstance(other, FieldScalar):
            try:
                other = FieldScalar.coerce(other)
            except TypeError:
                return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other: Number) -> "FieldScalar":
        return FieldScalar.coerce(other) * self.inverse()

    def __pow__(self, n: int) -> "FieldScalar":
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparison ---------------------------------------------------------
    def sign(self) -> int:
        return _sign_numerators(*self._n)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FieldScalar):
            return self._n == other._n and self._den == other._den
        if isinstance(other, (int, Fraction)):
            return self == FieldScalar.coerce(other)
        return NotImplemented

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = self._hash = hash(self._n + (self._den,))
        return h

    def __lt__(self, other: Number) -> bool:
        return (self - other).sign() < 0

    def __le__(self, other: Number) -> bool:
        return (self - other).sign() <= 0

    def __gt__(self, other: Number) -> bool:
        return (self - other).sign() > 0

    def __ge__(self, other: Number) -> bool:
        return (self - other).sign() >= 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- conversion ---------------------------------------------------------
    def __float__(self) -> float:
        a, b, c, d = self._n
        # 2.23606797749979 etc. are correctly rounded doubles
        return (a + b * 1.4142135623730951 + c * 2.23606797749979 + d * 3.1622776601683795) / self._den

    def __repr__(self) -> str:
        return f"FieldScalar({self})"

    def __str__(self) -> str:
        """Canonical text form ``a + b*r2 + c*r5 + d*r10`` with zero terms dropped."""
        parts = []
        for coeff, name in zip(self.coefficients, ("", "r2", "r5", "r10")):
            if coeff == 0:
                continue
            mag = abs(coeff)
            if name and mag == 1:
                body = name
            elif name:
                body = f"{mag}*{name}"
            else:
                body = str(mag)
            if not parts:
                parts.append(body if coeff > 0 else "-" + body)
            else:
                parts.append(("+ " if coeff > 0 else "- ") + body)
        return " ".join(parts) if parts else "0"

    _TERM = re.compile(r"([+-]?)\s*([0-9/]+)?\s*\*?\s*(r10|r2|r5)?")

    @classmethod
    def parse(cls, text: str) -> "FieldScalar":
        """Inverse of ``str()``."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty FieldScalar text")
        coeffs = {"": Fraction(0), "r2": Fraction(0), "r5": Fraction(0), "r10": Fraction(0)}
        pos = 0
        while pos < len(s):
            m = cls._TERM.match(s, pos)
            if not m or m.end() == pos or not (m.group(2) or m.group(3)):
                raise ValueError(f"bad FieldScalar text: {text!r}")
            mag = Fraction(m.group(2)) if m.group(2) else Fraction(1)
            if m.group(1) == "-":
                mag = -mag
            coeffs[m.group(3) or ""] += mag
            pos = m.end()
        return cls(coeffs[""], coeffs["r2"], coeffs["r5"], coeffs["r10"])

    def to_json(self) -> list[str]:
        """Rational strings for the four coefficients."""
        return [str(f) for f in self.coefficients]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "FieldScalar":
        return cls(*(Fraction(s) for s in data))


ZERO_F = FieldScalar(0)
ONE = FieldScalar(1)
HALF = FieldScalar(Fraction(1, 2))
SQRT2 = FieldScalar(0, 1)
SQRT5 = FieldScalar(0, 0, 1)
SQRT10 = FieldScalar(0, 0, 0, 1)
TAU = FieldScalar(Fraction(1, 2), 0, Fraction(1, 2))
SIGMA = FieldScalar(Fraction(1, 2), 0, Fraction(-1, 2))
INV_SQRT2 = FieldScalar(0, Fraction(1, 2))


def field_mul(x: FieldScalar, y: FieldScalar) -> FieldScalar:
    return x * y


def field_sign(x: FieldScalar) -> int:
    """Exact sign (-1, 0, +1) by nested square comparison; no floats involved."""
    return x.sign()


def _rational_sqrt(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def field_sqrt(x: FieldScalar) -> FieldScalar:
    """Square root inside the field, for the cases the geometry needs.

    Handles rationals times 1, 2, 5 or 10 and elements of Q(sqrt5) that
    denest as (u + v sqrt5)^2 or 2(u + v sqrt5)^2 style squares.  Raises
    ``ValueError`` when no root is found in Q(sqrt2, sqrt5).
    """
    if x.sign() < 0:
        raise ValueError(f"negative argument to field_sqrt: {x}")
    if x.is_zero():
        return ZERO_F
    if x.is_rational():
        q = x.a
        for m, unit in ((1, ONE), (2, SQRT2), (5, SQRT5), (10, SQRT10)):
            r = _rational_sqrt(q / m)
            if r is not None:
                return unit * r
    # candidates: x = (p + r sqrt5)^2 * m with m in {1, 2}; p, r rational
    for m, unit in ((1, ONE), (2, SQRT2)):
        y = x / m
        if y.b == 0 and y.d == 0:
            a, c = y.a, y.c
            disc = _rational_sqrt(a * a - 5 * c * c)
            if disc is None:
                continue
            for s in (disc, -disc):
                p2 = (a + s) / 2
                p = _rational_sqrt(p2)
                if p is None or p == 0:
                    continue
                r = c / (2 * p)
                root = FieldScalar(p, 0, r) * unit
                if root * root == x:
                    return root if root.sign() > 0 else -root
    raise ValueError(f"no square root of {x} found in Q(sqrt2, sqrt5)")


class Quaternion:
    """q0 + q1 e1 + q2 e2 + q3 e3 with FieldScalar components."""

    __slots__ = ("c", "_key")

    def __init__(self, q0: Number = 0, q1: Number = 0, q2: Number = 0, q3: Number = 0):
        co = FieldScalar.coerce
        self.c = (co(q0), co(q1), co(q2), co(q3))
        self._key = None

    @classmethod
    def _of(cls, c: tuple) -> "Quaternion":
        obj = cls.__new__(cls)
        obj.c = c
        obj._key = None
        return obj

    @property
    def q0(self) -> FieldScalar:
        return self.c[0]

    @property
    def q1(self) -> FieldScalar:
        return self.c[1]

    @property
    def q2(self) -> FieldScalar:
        return self.c[2]

    @property
    def q3(self) -> FieldScalar:
        return self.c[3]

    @property
    def key(self) -> tuple:
        k = self._key
        if k is None:
            k = self._key = tuple(x.key for x in self.c)
        return k

    def __iter__(self):
        return iter(self.c)

    def __getitem__(self, i: int) -> FieldScalar:
        return self.c[i]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Quaternion):
            return NotImplemented
        return self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return "Quaternion(" + ", ".join(str(x) for x in self.c) + ")"

    def __add__(self, other: "Quaternion") -> "Quaternion":
        a, b = self.c, other.c
        return Quaternion._of((a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]))

    def __sub__(self, other: "Quaternion") -> "Quaternion":
        a, b = self.c, other.c
        return Quaternion._of((a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]))

    def __neg__(self) -> "Quaternion":
        a = self.c
        return Quaternion._of((-a[0], -a[1], -a[2], -a[3]))

    def scale(self, s: Number) -> "Quaternion":
        s = FieldScalar.coerce(s)
        a = self.c
        return Quaternion._of((a[0] * s, a[1] * s, a[2] * s, a[3] * s))

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            return quat_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def conj(self) -> "Quaternion":
        a = self.c
        return Quaternion._of((a[0], -a[1], -a[2], -a[3]))

    def norm2(self) -> FieldScalar:
        a = self.c
        return a[0] * a[0] + a[1] * a[1] + a[2] * a[2] + a[3] * a[3]

    def inverse(self) -> "Quaternion":
        return self.conj().scale(self.norm2().inverse())

    def is_zero(self) -> bool:
        return all(x.is_zero() for x in self.c)

    def real(self) -> FieldScalar:
        return self.c[0]

    def imag(self) -> tuple[FieldScalar, FieldScalar, FieldScalar]:
        return self.c[1:]

    def conj5(self) -> "Quaternion":
        return Quaternion._of(tuple(x.conj5() for x in self.c))

    def to_floats(self) -> tuple[float, float, float, float]:
        return tuple(float(x) for x in self.c)

    def __str__(self) -> str:
        return "(" + ", ".join(str(x) for x in self.c) + ")"


def quat_mul(p: Quaternion, q: Quaternion) -> Quaternion:
    """Hamilton product, e_i e_j = -delta_ij + eps_ijk e_k."""
    a0, a1, a2, a3 = p.c
    b0, b1, b2, b3 = q.c
    return Quaternion._of((
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    ))


def quat_dot(p: Quaternion, q: Quaternion) -> FieldScalar:
    """Scalar product (p, q) = (p-bar q + q-bar p) / 2, i.e. the Euclidean dot product."""
    a, b = p.c, q.c
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3]


E0 = Quaternion(1)
E1 = Quaternion(0, 1)
E2 = Quaternion(0, 0, 1)
E3 = Quaternion(0, 0, 0, 1)


def vsum(vs: Iterable[Quaternion]) -> Quaternion:
    total = Quaternion()
    for v in vs:
        total = total + v
    return total


def _cmp(x: FieldScalar, y: FieldScalar) -> int:
    return (x - y).sign()


# sort key giving the exact numeric order of FieldScalars
exact_key = cmp_to_key(_cmp)
