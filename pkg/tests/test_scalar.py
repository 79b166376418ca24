import pytest

from parapy.framework.scalar import HALF, I, INV_SQRT2, ONE, SQRT2, ZERO, Scalar, parse_rational, rational, \
    scalar_add, scalar_conj, scalar_inv, scalar_mul


def test_sqrt2_squares_to_two():
    assert SQRT2 * SQRT2 == 2
    assert INV_SQRT2 * SQRT2 == ONE


def test_imaginary_unit():
    assert I * I == -1
    assert I.conjugate() == -I


def test_inverse_in_extension_field():
    value = Scalar(1, 0, 1)
    assert value.inverse() == Scalar(-1, 0, 1)
    assert value * value.inverse() == ONE
    mixed = Scalar(rational(2, 3), -1, rational(1, 5), 3)
    assert mixed / mixed == ONE


def test_zero_has_no_inverse():
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


def test_strings_are_exact():
    value = Scalar(rational(-7, 3), 0, HALF.re, 2)
    assert value.to_strings() == ("-7/3", "0/1", "1/2", "2/1")
    assert Scalar.from_strings(*value.to_strings()) == value


@pytest.mark.parametrize("text,expected", [("3/4", rational(3, 4)), ("-2", rational(-2)), (" 6/8 ", rational(3, 4))])
def test_parse_rational(text, expected):
    assert parse_rational(text) == expected


@pytest.mark.parametrize("text", ["1/0", "1/-2", "x"])
def test_parse_rational_rejects(text):
    with pytest.raises(ValueError):
        parse_rational(text)


def test_str():
    assert str(ZERO) == "0"
    assert str(SQRT2) == "√2"
    assert not ZERO
    assert Scalar(3).is_rational() and not SQRT2.is_rational()


def test_field_operations():
    a = ONE + SQRT2
    b = I * SQRT2 + rational(1, 2)
    assert scalar_add(a, b) == a + b
    assert scalar_mul(a, b) == scalar_mul(b, a)
    assert scalar_mul(a, scalar_inv(a)) == ONE
    assert scalar_inv(a) == SQRT2 - 1
    assert scalar_conj(b) == -I * SQRT2 + rational(1, 2)
    assert scalar_conj(scalar_mul(a, b)) == scalar_mul(scalar_conj(a), scalar_conj(b))
