from fractions import Fraction

import pytest

from niljordan.errors import DIVERGES
from niljordan.scalars import (
    I,
    PuiseuxFraction,
    PuiseuxPoly,
    Scalar,
    parse_scalar,
    puiseux_limit_at_zero,
)
from util import random_puiseux_poly, random_scalar, rng


def test_canonical_form():
    s = Scalar(Fraction(2, 4), Fraction(-6, 4))
    assert s.re == Fraction(1, 2) and s.im == Fraction(-3, 2)
    assert s.d > 0
    assert Scalar(0).is_zero and not Scalar(0, 1).is_zero


def test_field_axioms_randomized():
    r = rng(7)
    values = [random_scalar(r, small=False) for _ in range(60)]
    for k in range(0, len(values) - 2, 3):
        a, b, c = values[k], values[k + 1], values[k + 2]
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a and a * b == b * a
        if not a.is_zero:
            assert a * a.inverse() == Scalar(1)
            assert (b / a) * a == b
        assert a - a == Scalar(0)


def test_imaginary_unit():
    assert I * I == Scalar(-1)
    assert (Scalar(2, 3)).conjugate() == Scalar(2, -3)
    assert Scalar(1, 1) * Scalar(1, -1) == Scalar(2)


def test_powers():
    a = Scalar(Fraction(1, 2), 1)
    assert a ** 0 == Scalar(1)
    assert a ** 3 == a * a * a
    assert a ** -2 == (a * a).inverse()


@pytest.mark.parametrize(
    "literal,expected",
    [
        ("3", Scalar(3)),
        ("-5/7", Scalar(Fraction(-5, 7))),
        ("i", Scalar(0, 1)),
        ("-i", Scalar(0, -1)),
        ("3/4*i", Scalar(0, Fraction(3, 4))),
        ("3i", Scalar(0, 3)),
        ("1/2+3i", Scalar(Fraction(1, 2), 3)),
        ("-1-i", Scalar(-1, -1)),
        ("2-1/3i", Scalar(2, Fraction(-1, 3))),
    ],
)
def test_parse_scalar(literal, expected):
    assert parse_scalar(literal) == expected


def test_parse_scalar_roundtrip():
    r = rng(11)
    for _ in range(40):
        s = random_scalar(r, small=False)
        assert parse_scalar(str(s)) == s


def test_puiseux_limits():
    t = PuiseuxPoly.t_power(1)
    assert puiseux_limit_at_zero(t ** 3) == Scalar(0)
    assert puiseux_limit_at_zero(PuiseuxPoly.const(5)) == Scalar(5)
    assert puiseux_limit_at_zero(PuiseuxPoly.t_power(-1) + PuiseuxPoly.const(1)) is DIVERGES


def test_puiseux_arithmetic():
    t = PuiseuxPoly.t_power(1)
    half = PuiseuxPoly.t_power(Fraction(3, 2), I)
    assert half * half == PuiseuxPoly.t_power(3, Scalar(-1))
    p = (t + PuiseuxPoly.const(1)) * (t - PuiseuxPoly.const(1))
    assert p == t ** 2 - PuiseuxPoly.const(1)
    assert (p - p).is_zero
    assert p.coeff(2) == Scalar(1) and p.coeff(0) == Scalar(-1)


def test_puiseux_exact_division():
    r = rng(3)
    for _ in range(30):
        a = random_puiseux_poly(r)
        b = random_puiseux_poly(r)
        if b.is_zero:
            continue
        q = (a * b).exact_div(b)
        assert q == a
    t = PuiseuxPoly.t_power(1)
    with pytest.raises(ArithmeticError):
        (t ** 2 + PuiseuxPoly.const(1)).exact_div(t + PuiseuxPoly.const(1))


def test_fraction_limits():
    t = PuiseuxPoly.t_power(1)
    assert PuiseuxFraction(t ** 2 + t ** 3, t ** 2).limit_at_zero() == Scalar(1)
    assert PuiseuxFraction(t ** 3, t ** 2).limit_at_zero() == Scalar(0)
    assert PuiseuxFraction(t, t ** 2).limit_at_zero() is DIVERGES
    # denominator with nonzero constant term
    fr = PuiseuxFraction(t * (PuiseuxPoly.const(2) + t), PuiseuxPoly.const(1) + t ** 2)
    assert fr.limit_at_zero() == Scalar(0)


def test_fraction_field_ops():
    t = PuiseuxPoly.t_power(1)
    a = PuiseuxFraction(t + PuiseuxPoly.const(1), t ** 2)
    b = PuiseuxFraction(t, PuiseuxPoly.const(1) - t)
    assert (a + b) - b == a
    assert (a * b) / b == a
    assert a * PuiseuxFraction(t ** 2, t + PuiseuxPoly.const(1)) == 1


def test_eval_at_one():
    t = PuiseuxPoly.t_power(1)
    p = PuiseuxPoly.const(2) + t * 3 + t ** 2 * Scalar(-1)
    assert p.eval_at_one() == Scalar(4)
