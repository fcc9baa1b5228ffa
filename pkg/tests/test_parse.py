import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

import grps
from finmat.errors import InputError, ParseError
from finmat.fields import RATIONALS
from finmat.parse import (
    field_from_json,
    gen_letter,
    parse_value,
    parse_word,
    word_to_str,
)


def test_rational_basics():
    assert parse_value("0", RATIONALS) == 0
    assert parse_value("3/6", RATIONALS) == Fraction(1, 2)
    assert parse_value("1/2 + 1/3", RATIONALS) == Fraction(5, 6)
    assert parse_value("-2^3", RATIONALS) == -8
    assert parse_value("(1+2)*4", RATIONALS) == 12
    assert parse_value("2 - 3 - 4", RATIONALS) == -5  # left assoc
    assert parse_value("12/3/2", RATIONALS) == 2


def test_number_field_generator_binding():
    K = grps.gaussian_rationals()
    v = parse_value("(a+1)^2", K)
    assert K.to_user_coords(v) == (Fraction(0), Fraction(2))
    assert parse_value("a^2", K) == K.from_int(-1)
    assert parse_value("a*(-a)", K) == K.one


def test_function_field_cancellation():
    L = grps.qx()
    assert parse_value("(x^2-1)/(x-1)", L) == parse_value("x+1", L)
    assert parse_value("x*(1/x)", L) == L.one


def test_charp_function_field():
    F = grps.fpx(5)
    assert parse_value("x*(1/x)", F) == F.one
    assert parse_value("x^5+x", F) == parse_value("x^5+x", F)
    assert parse_value("5*x", F) == F.zero


def test_algebraic_function_field_generator():
    A = grps.sqrt_x_field()
    # the primitive element squares to the base variable
    s = parse_value("a", A)
    assert A.mul(s, s) == parse_value("x", A)
    assert parse_value("a^2 - x", A) == A.zero
    assert parse_value("(1/a)", A) == parse_value("a/x", A)


def test_parse_errors_carry_positions():
    with pytest.raises(ParseError) as ei:
        parse_value("x+", grps.qx())
    assert ei.value.pos == 2
    with pytest.raises(ParseError):
        parse_value("1/0", RATIONALS)
    with pytest.raises(ParseError) as ei:
        parse_value("1/(x-x)", grps.qx())
    assert "zero" in str(ei.value)
    with pytest.raises(ParseError) as ei:
        parse_value("y+1", grps.qx())
    assert "unknown symbol" in str(ei.value)
    with pytest.raises(ParseError):
        parse_value("2^x", RATIONALS)
    with pytest.raises(ParseError):
        parse_value("3 @ 4", RATIONALS)
    with pytest.raises(ParseError):
        parse_value("", RATIONALS)


def test_whitespace_insignificant():
    L = grps.qx()
    assert parse_value(" x ^ 2 + 1 ", L) == parse_value("x^2+1", L)


@pytest.mark.parametrize(
    "make_field",
    [
        lambda: RATIONALS,
        grps.gaussian_rationals,
        grps.cyclotomic5,
        grps.qx,
        lambda: grps.fpx(5),
        grps.sqrt_x_field,
        lambda: grps.sqrt_x_field(grps.fpx(3)),
    ],
)
def test_print_parse_round_trip(make_field):
    field = make_field()
    rng = random.Random(20260819)
    for _ in range(1000):
        v = grps.random_scalar(field, rng)
        printed = field.to_str(v)
        assert parse_value(printed, field) == v, printed


def test_word_printing():
    assert word_to_str([]) == "1"
    assert word_to_str([(0, 2), (1, -1)]) == "a^2*b^-1"
    assert word_to_str([(0, 1)]) == "a"
    assert gen_letter(0) == "a"
    assert gen_letter(25) == "z"
    assert gen_letter(26) == "g27"


def test_word_parsing_round_trip():
    for text, pairs in [
        ("1", ()),
        ("a", ((0, 1),)),
        ("a^2*b^-1", ((0, 2), (1, -1))),
        ("b^-3", ((1, -3),)),
    ]:
        assert parse_word(text, 2) == pairs
        assert word_to_str(parse_word(text, 2)) == text
    with pytest.raises(ParseError):
        parse_word("c", 2)
    with pytest.raises(ParseError):
        parse_word("a^", 2)


@given(st.lists(st.tuples(st.integers(0, 3), st.integers(-5, 5).filter(bool)), max_size=6))
def test_word_round_trip_random(pairs):
    # merge adjacent same-generator pairs the way canonical words look
    merged = []
    for g, e in pairs:
        if merged and merged[-1][0] == g:
            e += merged.pop()[1]
        if e:
            merged.append((g, e))
    text = word_to_str(merged)
    assert parse_word(text, 4) == tuple(merged)


def test_field_descriptor_round_trip():
    for make in [
        lambda: RATIONALS,
        grps.gaussian_rationals,
        grps.qx,
        lambda: grps.fpx(2),
        grps.sqrt_x_field,
    ]:
        field = make()
        desc = field.descriptor_json()
        rebuilt = field_from_json(json.loads(json.dumps(desc)))
        assert rebuilt == field


def test_field_from_json_rejects_garbage():
    with pytest.raises(InputError):
        field_from_json({"kind": "galaxy"})
    with pytest.raises(InputError):
        field_from_json({"kind": "number_field", "min_poly": [1, 1]})
    with pytest.raises(InputError):
        field_from_json({"kind": "rational_function", "vars": []})
    with pytest.raises(InputError):
        field_from_json("rationals")
