import random
from fractions import Fraction

import pytest

from finmat import mpoly
from finmat.fields import RATIONALS
from finmat.gf import FqField
from finmat.mpoly import Polynomial, exact_div, gcd, grlex_key, lcm


def P(terms, nvars=2, base=RATIONALS):
    return Polynomial(base, nvars, [(e, base.from_int(c)) for e, c in terms])


def rand_poly(rng, base, nvars, max_deg=3, max_terms=4):
    terms = {}
    for _ in range(rng.randrange(max_terms + 1)):
        exps = tuple(rng.randrange(max_deg + 1) for _ in range(nvars))
        c = base.from_int(rng.randrange(-5, 6))
        terms[exps] = base.add(terms.get(exps, base.zero), c)
    return Polynomial(base, nvars, terms.items())


def test_grlex_ordering():
    # total degree first, then lexicographic within a degree
    assert grlex_key((2, 0)) > grlex_key((1, 0))
    assert grlex_key((2, 0)) > grlex_key((0, 2))
    assert grlex_key((1, 1)) > grlex_key((0, 2))
    assert grlex_key((0, 3)) > grlex_key((1, 1))


def test_leading_coeff_under_grlex():
    f = P([((2, 0), 3), ((0, 2), 5), ((1, 1), -1)])
    assert f.leading_coeff() == Fraction(3)
    assert f.monic().leading_coeff() == Fraction(1)


def test_constructor_drops_zero_terms():
    f = P([((1, 0), 1), ((1, 0), -1), ((0, 0), 2)])
    assert f.is_constant()
    assert f.constant_value() == Fraction(2)
    assert P([]).is_zero()


def test_arithmetic_basics():
    x = Polynomial.variable(RATIONALS, 2, 0)
    y = Polynomial.variable(RATIONALS, 2, 1)
    assert (x + y) * (x - y) == x * x - y * y
    assert (x + y) ** 2 == x * x + x * y + x * y + y * y
    assert (x * y).degree_in(0) == 1
    assert (x * y ** 3).total_degree() == 4
    assert (-x) + x == Polynomial.zero(RATIONALS, 2)


@pytest.mark.parametrize("base", [RATIONALS, FqField(5)])
def test_ring_laws_random(base):
    rng = random.Random(77)
    for _ in range(400):
        f = rand_poly(rng, base, 2)
        g = rand_poly(rng, base, 2)
        h = rand_poly(rng, base, 2)
        assert (f + g) + h == f + (g + h)
        assert f + g == g + f
        assert (f * g) * h == f * (g * h)
        assert f * g == g * f
        assert f * (g + h) == f * g + f * h
        assert f - f == Polynomial.zero(base, 2)


def test_exact_div_roundtrip():
    rng = random.Random(91)
    for _ in range(300):
        f = rand_poly(rng, RATIONALS, 2)
        g = rand_poly(rng, RATIONALS, 2)
        if g.is_zero():
            continue
        assert exact_div(f * g, g) == f


def test_exact_div_rejects_nondivisor():
    x = Polynomial.variable(RATIONALS, 2, 0)
    y = Polynomial.variable(RATIONALS, 2, 1)
    with pytest.raises(ArithmeticError):
        exact_div(x * x + y, x)
    with pytest.raises(ZeroDivisionError):
        exact_div(x, Polynomial.zero(RATIONALS, 2))


def test_gcd_known_factorizations():
    x = Polynomial.variable(RATIONALS, 2, 0)
    y = Polynomial.variable(RATIONALS, 2, 1)
    one = Polynomial.one(RATIONALS, 2)
    f = (x + y) * (x - y)
    g = (x + y) * (x + y)
    assert gcd(f, g) == x + y
    assert gcd(x, y) == one
    assert gcd(f, Polynomial.zero(RATIONALS, 2)) == f.monic()
    h = (x * y + one) * (x - y)
    assert gcd(f * h, g * h) == ((x + y) * h).monic()


def test_gcd_divides_and_is_monic():
    rng = random.Random(13)
    for _ in range(120):
        f = rand_poly(rng, RATIONALS, 2, max_deg=2, max_terms=3)
        g = rand_poly(rng, RATIONALS, 2, max_deg=2, max_terms=3)
        d = gcd(f, g)
        if d.is_zero():
            assert f.is_zero() and g.is_zero()
            continue
        assert d.leading_coeff() == RATIONALS.one
        if not f.is_zero():
            assert exact_div(f, d) * d == f
        if not g.is_zero():
            assert exact_div(g, d) * d == g


def test_gcd_char_p():
    F2 = FqField(2)
    x = Polynomial.variable(F2, 1, 0)
    one = Polynomial.one(F2, 1)
    # x^2 + 1 = (x+1)^2 over F2
    assert gcd(x * x + one, x + one) == x + one


def test_lcm():
    x = Polynomial.variable(RATIONALS, 2, 0)
    y = Polynomial.variable(RATIONALS, 2, 1)
    f = x * y
    g = x * x
    assert lcm(f, g) == x * x * y
    assert lcm(f, Polynomial.zero(RATIONALS, 2)).is_zero()
    rng = random.Random(5)
    for _ in range(60):
        f = rand_poly(rng, RATIONALS, 2, max_deg=2, max_terms=2)
        g = rand_poly(rng, RATIONALS, 2, max_deg=2, max_terms=2)
        if f.is_zero() or g.is_zero():
            continue
        m = lcm(f, g)
        assert exact_div(m, f) is not None
        assert exact_div(m, g) is not None
        assert gcd(f, g) * m == (f * g).monic()


def test_evaluate_same_field():
    x = Polynomial.variable(RATIONALS, 2, 0)
    y = Polynomial.variable(RATIONALS, 2, 1)
    f = x * x + y + Polynomial.const(RATIONALS, 2, Fraction(1, 2))
    v = f.evaluate([Fraction(3), Fraction(-1)])
    assert v == Fraction(9) - 1 + Fraction(1, 2)


def test_evaluate_into_target_with_coeff_map():
    F7 = FqField(7)
    x = Polynomial.variable(RATIONALS, 1, 0)
    f = x * x + Polynomial.const(RATIONALS, 1, Fraction(3))
    v = f.evaluate([F7.from_int(4)], target=F7, coeff_map=lambda c: F7.from_int(int(c)))
    assert v == F7.from_int(19)


def test_evaluate_wrong_arity():
    x = Polynomial.variable(RATIONALS, 2, 0)
    with pytest.raises(ValueError):
        x.evaluate([Fraction(1)])


def test_polynomial_is_immutable():
    x = Polynomial.variable(RATIONALS, 1, 0)
    with pytest.raises(AttributeError):
        x.terms = ()
