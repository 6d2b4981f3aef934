from fractions import Fraction

import numpy as np
import pytest

from hermrank.arith import (
    I,
    ONE,
    ZERO,
    GaussianRational,
    bit_size,
    format_gaussian,
    format_rational,
    gaussian,
    parse_gaussian,
    parse_rational,
    sign,
    to_float,
)
from hermrank.errors import DivisionByZero, InvalidInput


def test_rational_is_canonical():
    assert parse_rational("6/4") == Fraction(3, 2)
    assert format_rational(Fraction(-6, 4)) == "-3/2"
    assert format_rational(Fraction(4, 2)) == "2"


def test_parse_rational_zero_denominator():
    with pytest.raises(DivisionByZero):
        parse_rational("1/0")
    with pytest.raises(ZeroDivisionError):
        parse_rational("3/0")


def test_parse_rational_rejects_garbage():
    with pytest.raises(InvalidInput):
        parse_rational("1.5")


def test_sign_and_bit_size():
    assert sign(Fraction(-1, 3)) == -1
    assert sign(0) == 0
    assert sign(7) == 1
    assert bit_size(Fraction(3, 4)) == 2 + 3
    assert to_float(Fraction(1, 4)) == 0.25
    with pytest.raises(InvalidInput):
        to_float(0.5)


def test_gaussian_field_operations():
    z = GaussianRational(1, 2)
    w = GaussianRational(Fraction(1, 2), -1)
    assert z * w == GaussianRational(Fraction(5, 2), 0)
    assert (z / z) == ONE
    assert z * z.inverse() == ONE
    assert z.conj() == GaussianRational(1, -2)
    assert z.norm2() == 5
    assert I * I == -ONE
    assert z ** 0 == ONE
    assert z ** 2 == GaussianRational(-3, 4)


def test_gaussian_division_by_zero():
    with pytest.raises(DivisionByZero):
        ONE / ZERO


def test_gaussian_rejects_floats():
    with pytest.raises(InvalidInput):
        gaussian(0.5)
    with pytest.raises(InvalidInput):
        GaussianRational(0.5, 0)


def test_gaussian_is_hashable_and_equal_to_rationals():
    assert gaussian(Fraction(1, 2)) == Fraction(1, 2)
    assert hash(gaussian(3)) == hash(GaussianRational(3, 0))
    assert len({GaussianRational(1, 1), GaussianRational(1, 1), GaussianRational(1, -1)}) == 2


@pytest.mark.parametrize(
    "text, expected",
    [
        ("3", GaussianRational(3)),
        ("-1/2", GaussianRational(Fraction(-1, 2))),
        ("i", I),
        ("-i", -I),
        ("1/2i", GaussianRational(0, Fraction(1, 2))),
        ("2-3i", GaussianRational(2, -3)),
        ("1/3+i", GaussianRational(Fraction(1, 3), 1)),
    ],
)
def test_parse_gaussian(text, expected):
    assert parse_gaussian(text) == expected


def test_format_gaussian_forms():
    assert format_gaussian(GaussianRational(2, -3)) == "2-3i"
    assert format_gaussian(GaussianRational(0, 1)) == "i"
    assert format_gaussian(GaussianRational(0, Fraction(-1, 2))) == "-1/2i"
    assert format_gaussian(GaussianRational(Fraction(1, 3))) == "1/3"


def test_gaussian_is_immutable():
    z = GaussianRational(1, 1)
    with pytest.raises(AttributeError):
        z.re = Fraction(2)


def _random_gaussian(rng):
    nums = rng.integers(-20, 21, size=2)
    dens = rng.integers(1, 10, size=2)
    return GaussianRational(Fraction(int(nums[0]), int(dens[0])), Fraction(int(nums[1]), int(dens[1])))


def test_field_laws_on_random_triples():
    rng = np.random.default_rng(2024)
    for _ in range(10_000):
        x, y, w = (_random_gaussian(rng) for _ in range(3))
        assert (x + y) + w == x + (y + w)
        assert (x * y) * w == x * (y * w)
        assert x * (y + w) == x * y + x * w
        assert (x + y).conj() == x.conj() + y.conj()
        if x:
            assert x * x.inverse() == ONE
            assert (y / x) * x == y
        prod = x * y
        assert isinstance(prod.re, Fraction) and isinstance(prod.im, Fraction)
        assert prod.re.denominator > 0 and prod.im.denominator > 0
