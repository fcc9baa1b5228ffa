"""Element and word syntax.

Scalar grammar (whitespace ignored):

    expr   := term (("+" | "-") term)*
    term   := factor (("*" | "/") factor)*
    factor := base ("^" nonneg-int)?
    base   := integer | identifier | "(" expr ")" | "-" base

Identifiers are the declared function-field variables plus "a" for the
generator of the innermost extension (number field, finite field with l > 1,
or algebraic function field).  When two levels of a tower both have a named
generator, "a" means the outermost one and the inner generator cannot be
written; that is a documented limitation, not a silent reinterpretation.

Group words use their own tiny syntax: "1" for the empty word, otherwise
letters with optional signed exponents joined by "*", e.g. "a^2*b^-1".
Letters name generators in order: a..z, then g27, g28, ...
"""

from __future__ import annotations

from fractions import Fraction

from . import gf
from .errors import FieldError, InputError, ParseError
from .fields import (
    RATIONALS,
    AlgebraicFunctionField,
    NumberField,
    RationalFunctionField,
    Scalar,
)


def _tokenize(text: str) -> list[tuple]:
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j]), i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("ident", text[i:j], i))
            i = j
            continue
        if ch in "+-*/^()":
            tokens.append((ch, ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(("end", None, len(text)))
    return tokens


def symbol_table(field) -> dict:
    """Identifier -> raw value for the given field."""
    kind = field.kind
    if kind == "rationals":
        return {}
    if kind == "number_field":
        return {"a": field.generator_value()}
    if kind == "finite_field":
        return {"a": field.generator()} if field.l > 1 else {}
    if kind == "rational_function":
        syms = {}
        b = field.base
        if b.kind == "number_field":
            syms["a"] = field.from_base(b.generator_value())
        elif b.kind == "finite_field" and b.l > 1:
            syms["a"] = field.from_base(b.generator())
        for i, v in enumerate(field.vars):
            syms[v] = field.variable_value(i)
        return syms
    if kind == "algebraic_function":
        syms = {
            name: field.from_base_value(val)
            for name, val in symbol_table(field.base).items()
        }
        syms["a"] = field.generator_value()
        return syms
    raise FieldError(f"unknown field kind {kind!r}")


class _Parser:
    def __init__(self, tokens, field, symbols):
        self.tokens = tokens
        self.field = field
        self.symbols = symbols
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def parse(self):
        v = self.expr()
        kind, _, pos = self.peek()
        if kind != "end":
            raise ParseError("unexpected trailing input", pos)
        return v

    def expr(self):
        v = self.term()
        while self.peek()[0] in ("+", "-"):
            op, _, _ = self.take()
            r = self.term()
            v = self.field.add(v, r) if op == "+" else self.field.sub(v, r)
        return v

    def term(self):
        v = self.factor()
        while self.peek()[0] in ("*", "/"):
            op, _, pos = self.take()
            r = self.factor()
            if op == "*":
                v = self.field.mul(v, r)
            else:
                try:
                    v = self.field.div(v, r)
                except ZeroDivisionError:
                    raise ParseError("division by zero", pos) from None
        return v

    def factor(self):
        v = self.base()
        if self.peek()[0] == "^":
            self.take()
            kind, value, pos = self.take()
            if kind != "int":
                raise ParseError("expected a non-negative integer exponent", pos)
            v = _field_pow(self.field, v, value)
        return v

    def base(self):
        kind, value, pos = self.take()
        if kind == "int":
            return self.field.from_int(value)
        if kind == "ident":
            if value not in self.symbols:
                raise ParseError(f"unknown symbol {value!r}", pos)
            return self.symbols[value]
        if kind == "(":
            v = self.expr()
            k2, _, p2 = self.take()
            if k2 != ")":
                raise ParseError("expected ')'", p2)
            return v
        if kind == "-":
            return self.field.neg(self.base())
        raise ParseError("expected a value", pos)


def _field_pow(field, v, n: int):
    result = field.one
    base = v
    while n:
        if n & 1:
            result = field.mul(result, base)
        base = field.mul(base, base)
        n >>= 1
    return result


def parse_value(text: str, field):
    """Parse element syntax to a raw value of the field."""
    tokens = _tokenize(text)
    return _Parser(tokens, field, symbol_table(field)).parse()


def parse_scalar(text: str, field) -> Scalar:
    return Scalar(field, parse_value(text, field))


# ---------------------------------------------------------------------------
# group words


def gen_letter(i: int) -> str:
    return chr(ord("a") + i) if i < 26 else f"g{i + 1}"


def word_to_str(word) -> str:
    if not word:
        return "1"
    pieces = []
    for gen, exp in word:
        letter = gen_letter(gen)
        pieces.append(letter if exp == 1 else f"{letter}^{exp}")
    return "*".join(pieces)


def parse_word(text: str, num_gens: int) -> tuple:
    """Inverse of word_to_str; returns ((gen_index, exponent), ...)."""
    names = {gen_letter(i): i for i in range(num_gens)}
    tokens = _tokenize(text)
    i = 0

    def take():
        nonlocal i
        tok = tokens[i]
        i += 1
        return tok

    kind, value, pos = tokens[0]
    if kind == "int" and value == 1 and tokens[1][0] == "end":
        return ()
    out = []
    while True:
        kind, value, pos = take()
        if kind != "ident" or value not in names:
            raise ParseError(f"expected a generator letter, got {value!r}", pos)
        gen = names[value]
        exp = 1
        if tokens[i][0] == "^":
            take()
            kind2, value2, pos2 = take()
            neg = False
            if kind2 == "-":
                neg = True
                kind2, value2, pos2 = take()
            if kind2 != "int":
                raise ParseError("expected an integer exponent", pos2)
            exp = -value2 if neg else value2
        if exp != 0:
            if out and out[-1][0] == gen:
                merged = out[-1][1] + exp
                out.pop()
                if merged:
                    out.append((gen, merged))
            else:
                out.append((gen, exp))
        kind3, _, pos3 = take()
        if kind3 == "end":
            return tuple(out)
        if kind3 != "*":
            raise ParseError("expected '*' between word letters", pos3)


# ---------------------------------------------------------------------------
# field descriptors (JSON shapes)


def _fraction_from_json(v) -> Fraction:
    if isinstance(v, bool):
        raise InputError("coefficients must be integers or fraction strings")
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        try:
            return Fraction(v)
        except (ValueError, ZeroDivisionError) as ex:
            raise InputError(f"bad coefficient {v!r}: {ex}") from None
    raise InputError(f"bad coefficient {v!r}: expected int or fraction string")


def field_from_json(desc) -> object:
    """Build a field from its JSON descriptor (see README for the shapes)."""
    if not isinstance(desc, dict):
        raise InputError("field descriptor must be an object")
    kind = desc.get("kind")
    if kind == "rationals":
        return RATIONALS
    if kind == "number_field":
        coeffs = desc.get("min_poly")
        if not isinstance(coeffs, list) or len(coeffs) < 3:
            raise InputError("number_field needs min_poly with degree >= 2")
        return NumberField([_fraction_from_json(c) for c in coeffs])
    if kind == "finite_field":
        p = desc.get("p")
        if not isinstance(p, int) or p < 2:
            raise InputError("finite_field needs a prime p")
        l = desc.get("l", 1)
        if not isinstance(l, int) or l < 1:
            raise InputError("finite_field extension degree l must be >= 1")
        modulus = desc.get("modulus")
        if modulus is None:
            return gf.standard_field(p, l)
        if not isinstance(modulus, list) or len(modulus) != l + 1:
            raise InputError("modulus must list l+1 coefficients, constant first")
        if l == 1:
            return gf.FqField(p)
        return gf.FqField(p, tuple(modulus))
    if kind == "rational_function":
        base = field_from_json(desc.get("base", {"kind": "rationals"}))
        names = desc.get("vars")
        if not isinstance(names, list) or not names:
            raise InputError("rational_function needs a non-empty vars list")
        return RationalFunctionField(base, names)
    if kind == "algebraic_function":
        base_desc = desc.get("base")
        if not isinstance(base_desc, dict) or base_desc.get("kind") != "rational_function":
            raise InputError("algebraic_function base must be a rational_function descriptor")
        base = field_from_json(base_desc)
        coeffs = desc.get("min_poly")
        if not isinstance(coeffs, list) or len(coeffs) < 3:
            raise InputError("algebraic_function needs min_poly with degree >= 2")
        parsed = []
        for c in coeffs:
            if isinstance(c, int):
                parsed.append(base.from_int(c))
            elif isinstance(c, str):
                parsed.append(parse_value(c, base))
            else:
                raise InputError("algebraic_function min_poly entries must be strings or ints")
        return AlgebraicFunctionField(base, parsed)
    raise InputError(f"unknown field kind {kind!r}")
