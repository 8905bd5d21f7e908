from decimal import Decimal, getcontext
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from quatpoly.algebra import (
    E0, E1, E2, E3, HALF, ONE, SIGMA, SQRT2, SQRT5, SQRT10, TAU, ZERO_F, FieldScalar, Quaternion,
    exact_key, field_sqrt, quat_dot, quat_mul,
)
from quatpoly.checks import reference_sign

small = st.fractions(min_value=-50, max_value=50, max_denominator=12)
scalars = st.builds(FieldScalar, small, small, small, small)
nonzero = scalars.filter(lambda x: not x.is_zero())
quats = st.builds(Quaternion, scalars, scalars, scalars, scalars)


def dec(x: FieldScalar) -> Decimal:
    getcontext().prec = 50
    return sum(Decimal(c.numerator) / Decimal(c.denominator) * Decimal(r).sqrt()
               for c, r in zip(x.coefficients, (1, 2, 5, 10)))


# examples


def test_golden_identities():
    assert TAU + SIGMA == ONE
    assert TAU * SIGMA == -ONE
    assert TAU * TAU == TAU + 1
    assert SIGMA * SIGMA == SIGMA + 1
    assert TAU.inverse() == -SIGMA


def test_radical_products():
    assert SQRT2 * SQRT5 == SQRT10
    assert SQRT10 * SQRT10 == FieldScalar(10)
    assert (SQRT2 + SQRT5) * (SQRT2 - SQRT5) == FieldScalar(-3)


def test_inverse_of_nested_element():
    x = FieldScalar(1, 2, 3, 4)
    assert x * x.inverse() == ONE
    with pytest.raises(ZeroDivisionError):
        ZERO_F.inverse()


def test_sign_near_cancellation():
    # sqrt2 + sqrt5 - sqrt10 is about 0.488
    assert (SQRT2 + SQRT5 - SQRT10 - HALF).sign() == -1
    assert (SQRT2 + SQRT5 - SQRT10 - Fraction(48, 100)).sign() == 1
    # 3 sqrt10 - 9.486832980 is positive, the float neighbour is not far away
    assert (SQRT10 * 3 - FieldScalar(Fraction(9486832980, 10 ** 9))).sign() == 1
    assert (SQRT10 * 3 - FieldScalar(Fraction(9486832981, 10 ** 9))).sign() == -1


def test_canonical_text_round_trip():
    x = FieldScalar(Fraction(-3, 2), 0, Fraction(1, 4), -1)
    assert str(x) == "-3/2 + 1/4*r5 - r10"
    assert FieldScalar.parse(str(x)) == x
    assert str(ZERO_F) == "0"
    assert FieldScalar.from_json(x.to_json()) == x


def test_field_sqrt():
    assert field_sqrt(TAU * TAU) == TAU
    assert field_sqrt(FieldScalar(2)) == SQRT2
    assert field_sqrt(FieldScalar(Fraction(9, 2))) == SQRT2 * Fraction(3, 2)
    assert field_sqrt(SIGMA ** 4 * 2) * field_sqrt(SIGMA ** 4 * 2) == SIGMA ** 4 * 2


def test_hamilton_table():
    assert quat_mul(E1, E2) == E3
    assert quat_mul(E2, E3) == E1
    assert quat_mul(E3, E1) == E2
    assert quat_mul(E2, E1) == -E3
    for e in (E1, E2, E3):
        assert quat_mul(e, e) == -E0


def test_exact_key_orders_by_value():
    xs = [TAU, SIGMA, ONE, SQRT2, -SQRT5, HALF]
    assert [float(x) for x in sorted(xs, key=exact_key)] == sorted(float(x) for x in xs)


# properties


@given(scalars, scalars, scalars)
def test_ring_axioms(x, y, z):
    assert x + y == y + x
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z


@given(nonzero)
def test_inverse(x):
    assert x * x.inverse() == ONE


@given(scalars, scalars)
def test_galois_conjugations_are_homomorphisms(x, y):
    for conj in (FieldScalar.conj5, FieldScalar.conj2):
        assert conj(x * y) == conj(x) * conj(y)
        assert conj(x + y) == conj(x) + conj(y)
        assert conj(conj(x)) == x


@given(scalars)
def test_sign_matches_decimal_oracle(x):
    assert x.sign() == reference_sign(x)


@given(scalars, scalars)
def test_sign_is_multiplicative(x, y):
    assert (x * y).sign() == x.sign() * y.sign()


@given(scalars)
def test_text_and_json_round_trip(x):
    assert FieldScalar.parse(str(x)) == x
    assert FieldScalar.from_json(x.to_json()) == x


@given(scalars)
def test_float_conversion_close(x):
    assert abs(float(x) - float(dec(x))) <= 1e-9 * max(1.0, abs(float(dec(x))))


@settings(max_examples=60)
@given(quats, quats, quats)
def test_quaternion_product_associative(p, q, r):
    assert quat_mul(quat_mul(p, q), r) == quat_mul(p, quat_mul(q, r))


@settings(max_examples=60)
@given(quats, quats)
def test_norm_multiplicative_and_conjugation(p, q):
    pq = quat_mul(p, q)
    assert pq.norm2() == p.norm2() * q.norm2()
    assert pq.conj() == quat_mul(q.conj(), p.conj())


@settings(max_examples=60)
@given(quats, quats)
def test_dot_is_euclidean(p, q):
    assert quat_dot(p, q) == sum((a * b for a, b in zip(p.c, q.c)), ZERO_F)
    # the real part of p conj(q) is the same scalar product
    assert quat_mul(p, q.conj()).real() == quat_dot(p, q)
