"""The scalar tower: rationals, number fields, rational function fields, and
algebraic function fields, plus the Scalar convenience wrapper.

Every field object is a context implementing one protocol: raw values plus
zero/one, from_int, add/neg/sub/mul/inv/div, is_zero, characteristic,
sort_key, to_str, descriptor_json, and the accounting hooks int_dens,
poly_dens, bit_size.  Matrices and polynomials store raw values and carry the
context alongside, so arithmetic never guesses the field.

Raw value shapes:
  rationals            Fraction
  number_field         tuple of k Fractions, coords w.r.t. powers of the
                       rescaled generator (monic integer minimal polynomial)
  rational_function    (numerator Polynomial, denominator Polynomial),
                       gcd-reduced with monic denominator
  algebraic_function   tuple of e rational_function values, coords w.r.t.
                       powers of the rescaled generator (polynomial
                       coefficients in the minimal polynomial)

Number field generators are rescaled internally (a_int = d * a) so the
minimal polynomial becomes integer monic; user-visible coordinates are always
w.r.t. the generator as the user declared it.  Algebraic function fields are
rescaled the same way with a polynomial factor.  The generator of the
innermost extension is always written "a" in element syntax; a tower with two
named generators leaves the inner one inexpressible, which parse/print report
explicitly rather than guessing.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

from . import gf, mpoly, primes, qpoly, upoly
from .errors import FieldError

_VAR_RE = re.compile(r"[a-z][a-z0-9_]*\Z")


def _needs_parens(s: str) -> bool:
    return "+" in s or "-" in s[1:]


def _fmt_upoly(coeffs, var: str = "t") -> str:
    """Pretty-print a rational univariate polynomial, ascending powers."""
    pieces = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        if i == 0:
            pieces.append(str(c))
            continue
        sym = var if i == 1 else f"{var}^{i}"
        if c == 1:
            pieces.append(sym)
        elif c == -1:
            pieces.append(f"-{sym}")
        else:
            pieces.append(f"{c}*{sym}")
    if not pieces:
        return "0"
    out = pieces[0]
    for p in pieces[1:]:
        out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return out


def _join_terms(pieces: list[str]) -> str:
    out = pieces[0]
    for p in pieces[1:]:
        out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return out


def _negated(part: str) -> str:
    """Print -1 * part so that re-parsing cannot bind '^' under the minus.

    "-a" is fine, but a leading "-a^2" would read back as (-a)^2, so any part
    whose first atom carries an exponent gets a literal -1 factor.
    """
    if "^" in part.split("*", 1)[0]:
        return f"-1*{part}"
    return f"-{part}"


# ---------------------------------------------------------------------------
# rationals


class _Rationals:
    kind = "rationals"
    zero = Fraction(0)
    one = Fraction(1)
    k = 1
    m = 0
    e = 1

    def from_int(self, n: int) -> Fraction:
        return Fraction(n)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero")
        return a / b

    def is_zero(self, a) -> bool:
        return a == 0

    def characteristic(self) -> int:
        return 0

    def sort_key(self, a):
        return a

    def to_str(self, a) -> str:
        return str(a)

    def descriptor_json(self) -> dict:
        return {"kind": "rationals"}

    def int_dens(self, a):
        return (a.denominator,)

    def poly_dens(self, a):
        return ()

    def bit_size(self, a) -> int:
        return max(a.numerator.bit_length(), a.denominator.bit_length())

    def __eq__(self, other) -> bool:
        return isinstance(other, _Rationals)

    def __hash__(self) -> int:
        return hash("rationals")

    def __repr__(self) -> str:
        return "Rationals"


RATIONALS = _Rationals()


# ---------------------------------------------------------------------------
# number fields


def normalize_minpoly(coeffs) -> tuple[tuple, int, tuple]:
    """(monic rational minpoly, rescale d, integer monic minpoly).

    The returned integer polynomial is d^k * f(t/d) for the smallest positive
    integer d making every coefficient integral; its root is d times the root
    of f.
    """
    cs = [Fraction(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    if len(cs) < 3:
        raise FieldError("minimal polynomial must have degree >= 2")
    lc = cs[-1]
    monic = tuple(c / lc for c in cs)
    k = len(monic) - 1
    need: dict[int, int] = {}
    for i in range(k):
        den = monic[i].denominator
        if den > 1:
            for q, v in primes.factorize(den).items():
                w = -(-v // (k - i))
                if need.get(q, 0) < w:
                    need[q] = w
    d = 1
    for q, w in need.items():
        d *= q**w
    f_int = []
    for i in range(k):
        v = monic[i] * d ** (k - i)
        assert v.denominator == 1
        f_int.append(int(v))
    f_int.append(1)
    return monic, d, tuple(f_int)


class NumberField:
    """Q(a) for a root a of a given irreducible polynomial over Q."""

    kind = "number_field"

    def __init__(self, min_poly, check: bool = True):
        monic, d, f_int = normalize_minpoly(min_poly)
        if check:
            fac = qpoly.factor_monic_rational(monic)
            if len(fac) > 1 or fac[0][1] > 1:
                witness = fac[0][0]
                raise FieldError(
                    "minimal polynomial is reducible: divisible by "
                    + _fmt_upoly(witness),
                    witness=witness,
                )
        self.f_monic = monic
        self.d = d
        self.f_int = f_int
        self.k = len(monic) - 1
        self.m = 0
        self.e = 1
        k = self.k
        self.zero = (Fraction(0),) * k
        self.one = (Fraction(1),) + (Fraction(0),) * (k - 1)
        # reduction rows: a_int^(k+i) as coordinate tuples, i = 0..k-2
        red = []
        cur = tuple(Fraction(-c) for c in f_int[:-1])
        red.append(cur)
        for _ in range(k - 2):
            carry = cur[-1]
            shifted = (Fraction(0),) + cur[:-1]
            cur = tuple(shifted[j] - carry * f_int[j] for j in range(k))
            red.append(cur)
        self._red = tuple(red)
        self._disc = None

    @property
    def disc(self) -> int:
        if self._disc is None:
            self._disc = gf.discriminant(self.f_int)
        return self._disc

    def __eq__(self, other) -> bool:
        return isinstance(other, NumberField) and self.f_monic == other.f_monic

    def __hash__(self) -> int:
        return hash(("number_field", self.f_monic))

    def __repr__(self) -> str:
        return f"NumberField({_fmt_upoly(self.f_monic)})"

    def characteristic(self) -> int:
        return 0

    def from_int(self, n: int):
        return (Fraction(n),) + (Fraction(0),) * (self.k - 1)

    def from_rational(self, r):
        return (Fraction(r),) + (Fraction(0),) * (self.k - 1)

    def from_user_coords(self, coords):
        cs = [Fraction(c) for c in coords]
        if len(cs) > self.k:
            raise FieldError(f"too many coordinates for degree {self.k}")
        cs += [Fraction(0)] * (self.k - len(cs))
        return tuple(c / self.d**i for i, c in enumerate(cs))

    def to_user_coords(self, value):
        return tuple(c * self.d**i for i, c in enumerate(value))

    def generator_value(self):
        return self.from_user_coords((0, 1))

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x for x in a)

    def sub(self, a, b):
        return tuple(x - y for x, y in zip(a, b))

    def mul(self, a, b):
        k = self.k
        prod = [Fraction(0)] * (2 * k - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        out = list(prod[:k])
        for i in range(k, 2 * k - 1):
            c = prod[i]
            if c:
                row = self._red[i - k]
                for j in range(k):
                    out[j] += c * row[j]
        return tuple(out)

    def inv(self, a):
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero field element")
        f = tuple(Fraction(c) for c in self.f_int)
        d, s, _ = upoly.ext_gcd(RATIONALS, upoly.trim(RATIONALS, a), f)
        assert upoly.deg(d) == 0
        s = upoly.scale(RATIONALS, s, 1 / d[0])
        return tuple(s[i] if i < len(s) else Fraction(0) for i in range(self.k))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return all(c == 0 for c in a)

    def sort_key(self, a):
        return a

    def to_str(self, a) -> str:
        u = self.to_user_coords(a)
        pieces = []
        for i, c in enumerate(u):
            if c == 0:
                continue
            if i == 0:
                pieces.append(str(c))
                continue
            sym = "a" if i == 1 else f"a^{i}"
            if c == 1:
                pieces.append(sym)
            elif c == -1:
                pieces.append(_negated(sym))
            else:
                pieces.append(f"{c}*{sym}")
        if not pieces:
            return "0"
        return _join_terms(pieces)

    def descriptor_json(self) -> dict:
        out = []
        for c in self.f_monic:
            out.append(int(c) if c.denominator == 1 else str(c))
        return {"kind": "number_field", "min_poly": out}

    def int_dens(self, a):
        return tuple(c.denominator for c in a)

    def poly_dens(self, a):
        return ()

    def bit_size(self, a) -> int:
        return max(
            max(c.numerator.bit_length(), c.denominator.bit_length()) for c in a
        )


# ---------------------------------------------------------------------------
# rational function fields


def _poly_sort_key(base, poly: mpoly.Polynomial):
    return tuple((exps, base.sort_key(c)) for exps, c in poly.terms)


def _poly_str(poly: mpoly.Polynomial, var_names, base) -> str:
    if poly.is_zero():
        return "0"
    pieces = []
    for exps, c in poly.terms:
        var_part = "*".join(
            v if e == 1 else f"{v}^{e}" for v, e in zip(var_names, exps) if e > 0
        )
        cs = base.to_str(c)
        if not var_part:
            pieces.append(cs)
        elif cs == "1":
            pieces.append(var_part)
        elif cs == "-1":
            pieces.append(_negated(var_part))
        else:
            if _needs_parens(cs):
                cs = f"({cs})"
            pieces.append(f"{cs}*{var_part}")
    return _join_terms(pieces)


class RationalFunctionField:
    """Fractions of polynomials in named variables over Q, a number field,
    or a finite field."""

    kind = "rational_function"

    def __init__(self, base, var_names):
        if getattr(base, "kind", None) not in ("rationals", "number_field", "finite_field"):
            raise FieldError("function field base must be rationals, a number field, or a finite field")
        names = tuple(str(v) for v in var_names)
        if not names:
            raise FieldError("at least one variable is required")
        if len(set(names)) != len(names):
            raise FieldError("variable names must be distinct")
        for v in names:
            if not _VAR_RE.match(v):
                raise FieldError(f"invalid variable name {v!r}")
            if v == "a":
                raise FieldError("variable name 'a' is reserved for field generators")
        self.base = base
        self.vars = names
        self.m = len(names)
        self.e = 1
        if base.characteristic() == 0:
            self.k = getattr(base, "k", 1)
        else:
            self.q = base.q
        self._zero_poly = mpoly.Polynomial.zero(base, self.m)
        self._one_poly = mpoly.Polynomial.one(base, self.m)
        self.zero = (self._zero_poly, self._one_poly)
        self.one = (self._one_poly, self._one_poly)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RationalFunctionField)
            and self.base == other.base
            and self.vars == other.vars
        )

    def __hash__(self) -> int:
        return hash(("rational_function", self.base, self.vars))

    def __repr__(self) -> str:
        return f"RationalFunctionField({self.base!r}, vars={','.join(self.vars)})"

    def characteristic(self) -> int:
        return self.base.characteristic()

    def _canon(self, num: mpoly.Polynomial, den: mpoly.Polynomial):
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            return self.zero
        g = mpoly.gcd(num, den)
        if not g.is_one():
            num = mpoly.exact_div(num, g)
            den = mpoly.exact_div(den, g)
        lc = den.leading_coeff()
        if lc != self.base.one:
            s = self.base.inv(lc)
            num = num.scale(s)
            den = den.scale(s)
        return (num, den)

    def from_int(self, n: int):
        return (mpoly.Polynomial.const(self.base, self.m, self.base.from_int(n)), self._one_poly)

    def from_poly(self, p: mpoly.Polynomial):
        return (p, self._one_poly)

    def from_base(self, c):
        return (mpoly.Polynomial.const(self.base, self.m, c), self._one_poly)

    def variable_value(self, index: int):
        return (mpoly.Polynomial.variable(self.base, self.m, index), self._one_poly)

    def add(self, a, b):
        n1, d1 = a
        n2, d2 = b
        return self._canon(n1 * d2 + n2 * d1, d1 * d2)

    def neg(self, a):
        return (-a[0], a[1])

    def sub(self, a, b):
        n1, d1 = a
        n2, d2 = b
        return self._canon(n1 * d2 - n2 * d1, d1 * d2)

    def mul(self, a, b):
        return self._canon(a[0] * b[0], a[1] * b[1])

    def inv(self, a):
        if a[0].is_zero():
            raise ZeroDivisionError("inverse of zero field element")
        return self._canon(a[1], a[0])

    def div(self, a, b):
        if b[0].is_zero():
            raise ZeroDivisionError("division by zero")
        return self._canon(a[0] * b[1], a[1] * b[0])

    def is_zero(self, a) -> bool:
        return a[0].is_zero()

    def evaluate(self, a, point, target, coeff_map):
        """Value at a point with coordinates in the target field; raises
        ZeroDivisionError when the denominator vanishes there."""
        nv = a[0].evaluate(point, target, coeff_map)
        dv = a[1].evaluate(point, target, coeff_map)
        if target.is_zero(dv):
            raise ZeroDivisionError("denominator vanishes at substitution point")
        return target.div(nv, dv)

    def sort_key(self, a):
        return (_poly_sort_key(self.base, a[0]), _poly_sort_key(self.base, a[1]))

    def to_str(self, a) -> str:
        num, den = a
        ns = _poly_str(num, self.vars, self.base)
        if den == self._one_poly:
            return ns
        ds = _poly_str(den, self.vars, self.base)
        return f"({ns})/({ds})"

    def descriptor_json(self) -> dict:
        return {
            "kind": "rational_function",
            "base": self.base.descriptor_json(),
            "vars": list(self.vars),
        }

    def int_dens(self, a):
        if self.characteristic() != 0:
            return ()
        out = []
        for poly in a:
            for _, c in poly.terms:
                out.extend(self.base.int_dens(c))
        return tuple(out)

    def poly_dens(self, a):
        if a[1] == self._one_poly:
            return ()
        return (a[1],)

    def bit_size(self, a) -> int:
        best = 0
        for poly in a:
            for _, c in poly.terms:
                b = self.base.bit_size(c)
                if b > best:
                    best = b
        return best


# ---------------------------------------------------------------------------
# algebraic function fields


class AlgebraicFunctionField:
    """An extension of a rational function field by a root of a separable
    monic polynomial.

    Irreducibility of the defining polynomial over the function field is not
    verified (that would need multivariate factorization); a reducible one
    surfaces later as a zero-divisor error during inversion.
    """

    kind = "algebraic_function"

    def __init__(self, base: RationalFunctionField, min_poly):
        if not isinstance(base, RationalFunctionField):
            raise FieldError("extension base must be a rational function field")
        cs = list(min_poly)
        while cs and base.is_zero(cs[-1]):
            cs.pop()
        if len(cs) < 3:
            raise FieldError("minimal polynomial must have degree >= 2")
        lc = cs[-1]
        if lc != base.one:
            cs = [base.div(c, lc) for c in cs]
        self.minpoly_user = tuple(cs)
        e = len(cs) - 1
        # rescale the generator by the lcm of coefficient denominators so the
        # minimal polynomial gets polynomial coefficients
        D = base._one_poly
        for c in cs[:-1]:
            if c[1] != base._one_poly:
                D = mpoly.lcm(D, c[1])
        f_tilde = []
        for i, c in enumerate(cs):
            Dv = base.from_poly(D ** (e - i)) if i < e else base.one
            v = base.mul(c, Dv)
            assert v[1] == base._one_poly
            f_tilde.append(v)
        self.minpoly_internal = tuple(f_tilde)
        sep = upoly.gcd(base, tuple(f_tilde), upoly.derivative(base, tuple(f_tilde)))
        if upoly.deg(sep) != 0:
            raise FieldError(
                "minimal polynomial is not separable (shares a factor with its derivative)"
            )
        self.base = base
        self.e = e
        self.m = base.m
        self.vars = base.vars
        if base.characteristic() == 0:
            self.k = base.k
        else:
            self.q = base.q
        self.rescale = base.from_poly(D)
        self._d_powers = [base.one]
        for _ in range(e - 1):
            self._d_powers.append(base.mul(self._d_powers[-1], self.rescale))
        self.zero = (base.zero,) * e
        self.one = (base.one,) + (base.zero,) * (e - 1)
        red = []
        cur = tuple(base.neg(c) for c in f_tilde[:-1])
        red.append(cur)
        for _ in range(e - 2):
            carry = cur[-1]
            shifted = (base.zero,) + cur[:-1]
            cur = tuple(
                base.sub(shifted[j], base.mul(carry, f_tilde[j])) for j in range(e)
            )
            red.append(cur)
        self._red = tuple(red)
        # true when the base scalars have their own generator written "a"
        b = base.base
        self._base_uses_a = b.kind == "number_field" or (
            b.kind == "finite_field" and b.l > 1
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, AlgebraicFunctionField)
            and self.base == other.base
            and self.minpoly_internal == other.minpoly_internal
        )

    def __hash__(self) -> int:
        return hash(("algebraic_function", self.base, self.minpoly_internal))

    def __repr__(self) -> str:
        return f"AlgebraicFunctionField(e={self.e} over {self.base!r})"

    def characteristic(self) -> int:
        return self.base.characteristic()

    def from_int(self, n: int):
        return (self.base.from_int(n),) + (self.base.zero,) * (self.e - 1)

    def from_base_value(self, v):
        return (v,) + (self.base.zero,) * (self.e - 1)

    def from_user_coords(self, coords):
        cs = list(coords)
        if len(cs) > self.e:
            raise FieldError(f"too many coordinates for degree {self.e}")
        cs += [self.base.zero] * (self.e - len(cs))
        return tuple(self.base.div(c, self._d_powers[i]) for i, c in enumerate(cs))

    def to_user_coords(self, value):
        return tuple(self.base.mul(c, self._d_powers[i]) for i, c in enumerate(value))

    def generator_value(self):
        return self.from_user_coords((self.base.zero, self.base.one))

    def add(self, a, b):
        return tuple(self.base.add(x, y) for x, y in zip(a, b))

    def neg(self, a):
        return tuple(self.base.neg(x) for x in a)

    def sub(self, a, b):
        return tuple(self.base.sub(x, y) for x, y in zip(a, b))

    def mul(self, a, b):
        B = self.base
        e = self.e
        prod = [B.zero] * (2 * e - 1)
        for i, x in enumerate(a):
            if not B.is_zero(x):
                for j, y in enumerate(b):
                    if not B.is_zero(y):
                        prod[i + j] = B.add(prod[i + j], B.mul(x, y))
        out = list(prod[:e])
        for i in range(e, 2 * e - 1):
            c = prod[i]
            if not B.is_zero(c):
                row = self._red[i - e]
                for j in range(e):
                    out[j] = B.add(out[j], B.mul(c, row[j]))
        return tuple(out)

    def inv(self, a):
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero field element")
        B = self.base
        d, s, _ = upoly.ext_gcd(B, upoly.trim(B, a), self.minpoly_internal)
        if upoly.deg(d) != 0:
            raise FieldError(
                "defining polynomial is reducible: element is a zero divisor"
            )
        s = upoly.scale(B, s, B.inv(d[0]))
        return tuple(s[i] if i < len(s) else B.zero for i in range(self.e))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return all(self.base.is_zero(c) for c in a)

    def sort_key(self, a):
        return tuple(self.base.sort_key(c) for c in a)

    def to_str(self, a) -> str:
        u = self.to_user_coords(a)
        if self._base_uses_a:
            for c in u:
                for poly in c:
                    for _, coeff in poly.terms:
                        if not self._coeff_is_plain(coeff):
                            raise FieldError(
                                "element not printable: inner and outer field "
                                "generators are both written 'a'"
                            )
        pieces = []
        for i, c in enumerate(u):
            if self.base.is_zero(c):
                continue
            cs = self.base.to_str(c)
            if i == 0:
                pieces.append(cs)
                continue
            sym = "a" if i == 1 else f"a^{i}"
            if cs == "1":
                pieces.append(sym)
            elif cs == "-1":
                pieces.append(_negated(sym))
            else:
                if _needs_parens(cs):
                    cs = f"({cs})"
                pieces.append(f"{cs}*{sym}")
        if not pieces:
            return "0"
        return _join_terms(pieces)

    def _coeff_is_plain(self, coeff) -> bool:
        b = self.base.base
        if b.kind == "number_field":
            return all(c == 0 for c in coeff[1:])
        return all(c == 0 for c in coeff[1:])

    def descriptor_json(self) -> dict:
        return {
            "kind": "algebraic_function",
            "base": self.base.descriptor_json(),
            "min_poly": [self.base.to_str(c) for c in self.minpoly_user],
        }

    def int_dens(self, a):
        out = []
        for c in a:
            out.extend(self.base.int_dens(c))
        return tuple(out)

    def poly_dens(self, a):
        out = []
        for c in a:
            out.extend(self.base.poly_dens(c))
        return tuple(out)

    def bit_size(self, a) -> int:
        return max(self.base.bit_size(c) for c in a)


# ---------------------------------------------------------------------------
# scalar wrapper


class Scalar:
    """A field element paired with its field; convenience for tests and CLI."""

    __slots__ = ("field", "value")

    def __init__(self, field, value):
        self.field = field
        self.value = value

    def _check(self, other) -> "Scalar":
        if not isinstance(other, Scalar):
            if isinstance(other, int):
                return Scalar(self.field, self.field.from_int(other))
            raise TypeError(f"cannot combine Scalar with {type(other).__name__}")
        if self.field != other.field:
            raise ValueError("scalars from different fields")
        return other

    def __add__(self, other):
        o = self._check(other)
        return Scalar(self.field, self.field.add(self.value, o.value))

    __radd__ = __add__

    def __neg__(self):
        return Scalar(self.field, self.field.neg(self.value))

    def __sub__(self, other):
        o = self._check(other)
        return Scalar(self.field, self.field.sub(self.value, o.value))

    def __rsub__(self, other):
        o = self._check(other)
        return Scalar(self.field, self.field.sub(o.value, self.value))

    def __mul__(self, other):
        o = self._check(other)
        return Scalar(self.field, self.field.mul(self.value, o.value))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._check(other)
        return Scalar(self.field, self.field.div(self.value, o.value))

    def __rtruediv__(self, other):
        o = self._check(other)
        return Scalar(self.field, self.field.div(o.value, self.value))

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise TypeError("exponent must be an integer")
        F = self.field
        v = self.value
        if n < 0:
            v = F.inv(v)
            n = -n
        result = F.one
        while n:
            if n & 1:
                result = F.mul(result, v)
            v = F.mul(v, v)
            n >>= 1
        return Scalar(F, result)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Scalar)
            and self.field == other.field
            and self.value == other.value
        )

    def __hash__(self) -> int:
        return hash((self.field, self.value))

    def is_zero(self) -> bool:
        return self.field.is_zero(self.value)

    def __str__(self) -> str:
        return self.field.to_str(self.value)

    def __repr__(self) -> str:
        return f"Scalar({self})"
