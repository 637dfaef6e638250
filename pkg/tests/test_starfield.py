"""Field-with-involution layer: arithmetic, conjugation, parsing, order."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from exactqt import (
    Element,
    FieldMismatch,
    GaussianRationals,
    PrimeField,
    QuadExt,
    fixed_field_coordinates,
    involute,
    is_fixed,
    make_field,
    parse_field,
)
from exactqt.errors import (
    DivisionByZero,
    NonPrimeCharacteristic,
    ParseError,
    ReducibleModulus,
)

F4 = QuadExt(2, 1)
F9 = QuadExt(3, 1)
F16 = QuadExt(2, 2)
F25 = QuadExt(5, 1)
QI = GaussianRationals()


def gaussian(re, im=0):
    return QI.element((Fraction(re), Fraction(im)))


# canonical moduli are the lexicographically smallest monic irreducibles,
# compared coefficient-low-degree-first
def test_canonical_moduli():
    assert F4.modulus == (1, 1, 1)
    assert F9.modulus == (1, 0, 1)
    assert F16.modulus == (1, 0, 0, 1, 1)
    assert F25.modulus == (1, 1, 1)
    assert QuadExt(7, 1).modulus == (1, 0, 1)


def test_bad_constructions():
    with pytest.raises(NonPrimeCharacteristic):
        PrimeField(6)
    with pytest.raises(NonPrimeCharacteristic):
        QuadExt(4, 1)
    with pytest.raises(ReducibleModulus):
        QuadExt(3, 1, modulus=(0, 0, 1))  # x^2 = x * x
    with pytest.raises(ReducibleModulus):
        QuadExt(3, 1, modulus=(2, 0, 1))  # x^2 - 2 = (x-1)(x+1) mod 3


def test_element_order_is_payload_order():
    # F_4 sorts 0 < t < 1 < 1+t: payloads are coefficient tuples low-first
    assert [str(x) for x in F4.elements()] == ["0", "t", "1", "1+t"]
    assert [str(x) for x in PrimeField(3).elements()] == ["0", "1", "2"]


@pytest.mark.parametrize("field", [F4, F9, F16, F25])
def test_involution_is_ring_automorphism_exhaustive(field):
    els = list(field.elements())
    for x in els:
        assert involute(involute(x)) == x
        for y in els:
            assert involute(x * y) == involute(x) * involute(y)
            assert involute(x + y) == involute(x) + involute(y)


rationals = st.fractions(min_value=-50, max_value=50, max_denominator=20)


@given(rationals, rationals, rationals, rationals)
def test_involution_is_ring_automorphism_gaussian(a, b, c, d):
    x, y = gaussian(a, b), gaussian(c, d)
    assert involute(involute(x)) == x
    assert involute(x * y) == involute(x) * involute(y)
    assert involute(x + y) == involute(x) + involute(y)


@pytest.mark.parametrize("q,field", [
    (2, F4), (3, F9), (4, F16), (5, F25), (7, QuadExt(7, 1)),
])
def test_fixed_set_is_index_two_subfield(q, field):
    fixed = [x for x in field.elements() if is_fixed(x)]
    assert len(fixed) == q
    assert field.fixed_elements() == tuple(fixed)
    # closed under addition and multiplication
    for x in fixed:
        for y in fixed:
            assert is_fixed(x + y)
            assert is_fixed(x * y)


@pytest.mark.parametrize("field", [F4, F9, F16, F25])
def test_norm_lands_in_fixed_field(field):
    for x in field.elements():
        assert is_fixed(involute(x) * x)


def test_gaussian_norm_is_anisotropic():
    # over Q(i) the scalar norm vanishes only at zero
    assert (involute(QI.zero()) * QI.zero()).is_zero()
    for re in range(-3, 4):
        for im in range(-3, 4):
            x = gaussian(re, im)
            if not x.is_zero():
                assert not (involute(x) * x).is_zero()


def test_finite_norm_has_nontrivial_kernel_only_at_zero():
    # scalar isotropy never happens in F_{q^2} either; the vector-level
    # isotropy lives in the forms suite
    for x in F9.elements():
        assert (involute(x) * x).is_zero() == x.is_zero()


def test_prime_field_is_improper():
    F7 = PrimeField(7)
    assert F7.involution_order == 1
    for x in F7.elements():
        assert involute(x) == x


@pytest.mark.parametrize("field", [F4, F9, F25, PrimeField(7)])
def test_arithmetic_laws_exhaustive(field):
    els = list(field.elements())
    one = field.one()
    for x in els:
        assert x + (-x) == field.zero()
        if not x.is_zero():
            assert x * x.inverse() == one
            assert x / x == one
            assert x ** (field.order - 1) == one
    with pytest.raises(DivisionByZero):
        field.zero().inverse()


def test_pow_agrees_with_repeated_product():
    x = F9.element("1+t")
    acc = F9.one()
    for k in range(10):
        assert x ** k == acc
        acc = acc * x
    assert x ** (-1) == x.inverse()


def test_cross_field_operations_rejected():
    with pytest.raises(FieldMismatch):
        F9.element(1) + F25.element(1)
    with pytest.raises(FieldMismatch):
        F9.element(1) * QI.one()


def test_element_text_round_trip():
    for field in (F4, F9, F16, F25):
        for x in field.elements():
            assert field.element(str(x)) == x
    for x in [gaussian(0), gaussian(3, 4), gaussian(Fraction(3, 2), Fraction(-7, 5)),
              gaussian(-1), gaussian(0, 1), gaussian(0, -1)]:
        assert QI.element(str(x)) == x


def test_element_parse_rejects_garbage():
    with pytest.raises(ParseError):
        F9.element("1+2s")
    with pytest.raises(ParseError):
        QI.element("3//2")


def test_fixed_field_coordinates():
    x = F9.element("1+2t")
    a, b = fixed_field_coordinates(x)
    assert (str(a), str(b)) == ("1", "2")
    re, im = fixed_field_coordinates(gaussian(Fraction(3, 2), 4))
    assert (str(re), str(im)) == ("3/2", "4")


def test_parse_field_round_trips():
    for field in (F4, F9, F16, F25, PrimeField(11), QI):
        assert parse_field(field.shorthand()) == field
        assert parse_field(field.to_json()) == field
        assert parse_field(field) is field
    assert make_field("quadext", p=3, e=1) == F9


def test_generator_satisfies_modulus():
    for field in (F4, F9, F16, F25):
        t = field.generator()
        coeffs = field.modulus
        acc = field.zero()
        power = field.one()
        for c in coeffs:
            acc = acc + power * field.element(c)
            power = power * t
        assert acc.is_zero()


def test_frobenius_is_q_power():
    for field in (F4, F9, F16, F25):
        for x in field.elements():
            assert involute(x) == x ** field.q


def test_element_hash_consistent_with_eq():
    seen = {}
    for x in F9.elements():
        seen[x] = str(x)
    assert len(seen) == 9
    assert seen[F9.element("1+2t")] == "1+2t"
    assert isinstance(F9.element(0), Element)
