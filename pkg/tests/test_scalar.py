import cmath
import random
from fractions import Fraction

import pytest
from hypothesis import given

from hopfkit.scalar import (FieldElement, ParseError, ZERO, ONE, ZETA, XI, SQRT2, HALF,
                            fe, format_literal, parse_literal, xi_pow, is_root_of_unity)
from conftest import field_elements


def _rand(rng):
    return FieldElement(*[Fraction(rng.randint(-9, 9), rng.randint(1, 6)) for _ in range(4)])


def test_field_axioms_random_triples():
    rng = random.Random(8)
    for _ in range(10_000):
        a, b, c = _rand(rng), _rand(rng), _rand(rng)
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert (a + b) + c == a + (b + c)


@given(field_elements(nonzero=True))
def test_inverse(a):
    assert a * a.inverse() == ONE
    assert a / a == ONE


@given(field_elements(), field_elements())
def test_float_oracle(a, b):
    # sanity oracle: zeta -> exp(i pi/4)
    assert abs(complex(a * b) - complex(a) * complex(b)) < 1e-10 * (1 + abs(complex(a)) * abs(complex(b)))
    assert abs(complex(a + b) - complex(a) - complex(b)) < 1e-10 * (1 + abs(complex(a)) + abs(complex(b)))


@given(field_elements())
def test_literal_round_trip(a):
    assert parse_literal(format_literal(a)) == a


@given(field_elements(nonzero=True))
def test_norm_is_multiplicative_and_rational(a):
    n = a.norm()
    assert isinstance(n, Fraction) and n > 0
    assert (a * a).norm() == n * n


def test_named_constants():
    assert ZETA ** 8 == ONE and ZETA ** 4 == -ONE
    assert XI == ZETA ** 2 and XI * XI == -ONE
    assert SQRT2 * SQRT2 == fe(2)
    assert HALF * 2 == ONE
    assert abs(complex(ZETA) - cmath.exp(1j * cmath.pi / 4)) < 1e-12
    assert [xi_pow(n) for n in range(-1, 5)] == [-XI, ONE, XI, -ONE, -XI, ONE]
    assert is_root_of_unity(XI, 4) and not is_root_of_unity(XI, 2)


@pytest.mark.parametrize("text,value", [
    ("0", ZERO), ("1", ONE), ("xi", XI), ("z2", XI), ("sqrt2", SQRT2), ("z - z3", SQRT2),
    ("1/2", HALF), ("-1/2*z2", -HALF * XI), ("1/2 + z - z3", HALF + SQRT2), ("3*z", 3 * ZETA),
])
def test_parse(text, value):
    assert parse_literal(text) == value


@pytest.mark.parametrize("bad", ["", "1/0", "foo", "1 2", "*z", "2*", "z z"])
def test_parse_errors(bad):
    with pytest.raises(ParseError):
        parse_literal(bad)


def test_format_canonical():
    assert format_literal(ZERO) == "0"
    assert format_literal(HALF - HALF * XI) == "1/2 - 1/2*z2"
    assert format_literal(SQRT2) == "z - z3"


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()
