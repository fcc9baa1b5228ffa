"""Sparse multivariate polynomials over an arbitrary coefficient field.

Monomials are exponent tuples ordered graded-lexicographically (total degree
first, then lexicographic with the first declared variable most significant).
Terms are kept sorted in descending order with nonzero coefficients, so
structural equality of ``Polynomial`` values is mathematical equality.

The gcd is a primitive PRS in the highest occurring variable, recursing on
contents; coefficients live in a field, so no integer content handling is
needed and the univariate case collapses to the monic Euclidean algorithm.
This stays comfortably inside desk scale and is exact everywhere.
"""

from __future__ import annotations

from . import limits, upoly


def grlex_key(exps: tuple) -> tuple:
    return (sum(exps), exps)


class Polynomial:
    __slots__ = ("base", "nvars", "terms")

    def __init__(self, base, nvars: int, terms):
        """terms: iterable of (exponent tuple, coefficient); normalized here."""
        acc: dict[tuple, object] = {}
        for exps, coeff in terms:
            if len(exps) != nvars:
                raise ValueError("exponent tuple of wrong length")
            if exps in acc:
                acc[exps] = base.add(acc[exps], coeff)
            else:
                acc[exps] = coeff
        items = [(e, c) for e, c in acc.items() if not base.is_zero(c)]
        items.sort(key=lambda t: grlex_key(t[0]), reverse=True)
        limits.check_terms(len(items))
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", tuple(items))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, base, nvars: int) -> "Polynomial":
        return cls(base, nvars, ())

    @classmethod
    def const(cls, base, nvars: int, c) -> "Polynomial":
        return cls(base, nvars, (((0,) * nvars, c),))

    @classmethod
    def one(cls, base, nvars: int) -> "Polynomial":
        return cls.const(base, nvars, base.one)

    @classmethod
    def variable(cls, base, nvars: int, index: int) -> "Polynomial":
        exps = tuple(1 if i == index else 0 for i in range(nvars))
        return cls(base, nvars, ((exps, base.one),))

    # -- basic structure ---------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or sum(self.terms[0][0]) == 0

    def constant_value(self):
        if not self.terms:
            return self.base.zero
        if not self.is_constant():
            raise ValueError("not a constant polynomial")
        return self.terms[0][1]

    def is_one(self) -> bool:
        return (
            len(self.terms) == 1
            and sum(self.terms[0][0]) == 0
            and self.base.is_zero(self.base.sub(self.terms[0][1], self.base.one))
        )

    def total_degree(self) -> int:
        return sum(self.terms[0][0]) if self.terms else -1

    def degree_in(self, var: int) -> int:
        if not self.terms:
            return -1
        return max(e[var] for e, _ in self.terms)

    def leading_coeff(self):
        if not self.terms:
            return self.base.zero
        return self.terms[0][1]

    def occurring_vars(self) -> tuple[int, ...]:
        seen = set()
        for e, _ in self.terms:
            for i, k in enumerate(e):
                if k:
                    seen.add(i)
        return tuple(sorted(seen))

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: "Polynomial") -> None:
        if self.nvars != other.nvars or self.base != other.base:
            raise ValueError("polynomial ring mismatch")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        return Polynomial(self.base, self.nvars, self.terms + other.terms)

    def __neg__(self) -> "Polynomial":
        return Polynomial(
            self.base, self.nvars, tuple((e, self.base.neg(c)) for e, c in self.terms)
        )

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        base = self.base
        acc: dict[tuple, object] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = tuple(a + b for a, b in zip(e1, e2))
                p = base.mul(c1, c2)
                if e in acc:
                    acc[e] = base.add(acc[e], p)
                else:
                    acc[e] = p
        return Polynomial(base, self.nvars, acc.items())

    def scale(self, c) -> "Polynomial":
        if self.base.is_zero(c):
            return Polynomial.zero(self.base, self.nvars)
        return Polynomial(
            self.base, self.nvars, tuple((e, self.base.mul(co, c)) for e, co in self.terms)
        )

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        lc = self.leading_coeff()
        if self.base.is_zero(self.base.sub(lc, self.base.one)):
            return self
        return self.scale(self.base.inv(lc))

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Polynomial.one(self.base, self.nvars)
        b = self
        while n:
            if n & 1:
                result = result * b
            b = b * b
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Polynomial)
            and self.nvars == other.nvars
            and self.base == other.base
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.nvars, self.terms))

    def __repr__(self) -> str:
        return f"Polynomial({self.terms!r})"

    # -- evaluation --------------------------------------------------------

    def evaluate(self, values, target=None, coeff_map=None):
        """Value at the point ``values`` (one per variable).

        ``target`` is the field the point lives in (defaults to the
        coefficient field); ``coeff_map`` embeds coefficients into it.
        """
        T = target if target is not None else self.base
        cmap = coeff_map if coeff_map is not None else (lambda c: c)
        if len(values) != self.nvars:
            raise ValueError("wrong number of evaluation values")
        pow_cache: dict[tuple[int, int], object] = {}

        def vpow(i: int, k: int):
            if k == 0:
                return T.one
            got = pow_cache.get((i, k))
            if got is None:
                got = T.mul(vpow(i, k - 1), values[i])
                pow_cache[(i, k)] = got
            return got

        acc = T.zero
        for exps, coeff in self.terms:
            term = cmap(coeff)
            for i, k in enumerate(exps):
                if k:
                    term = T.mul(term, vpow(i, k))
            acc = T.add(acc, term)
        return acc


# -- division and gcd ------------------------------------------------------


def _monomial_divides(e1: tuple, e2: tuple) -> bool:
    return all(a <= b for a, b in zip(e1, e2))


def exact_div(f: Polynomial, g: Polynomial) -> Polynomial:
    """Quotient f/g when g divides f exactly; raises ArithmeticError if not."""
    if g.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    base = f.base
    rem = {e: c for e, c in f.terms}
    out: dict[tuple, object] = {}
    ge, gc = g.terms[0]
    g_rest = g.terms[1:]
    while rem:
        fe = max(rem, key=grlex_key)
        fc = rem.pop(fe)
        if not _monomial_divides(ge, fe):
            raise ArithmeticError("inexact polynomial division")
        qe = tuple(a - b for a, b in zip(fe, ge))
        qc = base.div(fc, gc)
        out[qe] = base.add(out.get(qe, base.zero), qc)
        for e2, c2 in g_rest:
            e = tuple(a + b for a, b in zip(qe, e2))
            v = base.sub(rem.get(e, base.zero), base.mul(qc, c2))
            if base.is_zero(v):
                rem.pop(e, None)
            else:
                rem[e] = v
    return Polynomial(base, f.nvars, out.items())


def _to_univar(f: Polynomial, var: int) -> list[Polynomial]:
    """Coefficient list of f seen as univariate in ``var`` (index = exponent).

    Coefficients are polynomials in the same ring with ``var``-exponent 0.
    """
    d = f.degree_in(var)
    buckets: list[list] = [[] for _ in range(d + 1)]
    for e, c in f.terms:
        k = e[var]
        e0 = tuple(0 if i == var else x for i, x in enumerate(e))
        buckets[k].append((e0, c))
    return [Polynomial(f.base, f.nvars, b) for b in buckets]


def _from_univar(coeffs: list[Polynomial], var: int, base, nvars: int) -> Polynomial:
    terms = []
    for k, poly in enumerate(coeffs):
        for e, c in poly.terms:
            e2 = tuple(k if i == var else x for i, x in enumerate(e))
            terms.append((e2, c))
    return Polynomial(base, nvars, terms)


def _utrim(coeffs: list[Polynomial]) -> list[Polynomial]:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1].is_zero():
        coeffs.pop()
    return coeffs


def _pseudo_rem(A: list[Polynomial], B: list[Polynomial]) -> list[Polynomial]:
    """Pseudo-remainder of univariate views (polynomial coefficients)."""
    lB = B[-1]
    dB = len(B) - 1
    R = list(A)
    while True:
        R = _utrim(R)
        if len(R) - 1 < dB or not R:
            return R
        lR = R[-1]
        shift = len(R) - 1 - dB
        R = [c * lB for c in R]
        for i, b in enumerate(B):
            R[shift + i] = R[shift + i] - lR * b
        R.pop()


def _gcd_list(polys: list[Polynomial], base, nvars: int) -> Polynomial:
    acc = Polynomial.zero(base, nvars)
    for p in polys:
        acc = gcd(acc, p)
        if acc.is_one():
            return acc
    return acc


def gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic gcd (leading coefficient 1 under graded lex)."""
    if f.is_zero():
        return g.monic()
    if g.is_zero():
        return f.monic()
    base, nvars = f.base, f.nvars
    occ = sorted(set(f.occurring_vars()) | set(g.occurring_vars()))
    if not occ:
        return Polynomial.one(base, nvars)
    if len(occ) == 1:
        # single-variable fast path: plain Euclid over the coefficient field
        v = occ[0]
        fu = [c.constant_value() for c in _to_univar(f, v)]
        gu = [c.constant_value() for c in _to_univar(g, v)]
        d = upoly.gcd(base, upoly.trim(base, fu), upoly.trim(base, gu))
        return _from_univar(
            [Polynomial.const(base, nvars, c) for c in d], v, base, nvars
        )
    v = occ[-1]
    fu = _to_univar(f, v)
    gu = _to_univar(g, v)
    cont_f = _gcd_list(fu, base, nvars)
    cont_g = _gcd_list(gu, base, nvars)
    cont = gcd(cont_f, cont_g)
    A = _utrim([exact_div(c, cont_f) for c in fu])
    B = _utrim([exact_div(c, cont_g) for c in gu])
    if len(A) < len(B):
        A, B = B, A
    while B:
        R = _utrim(_pseudo_rem(A, B))
        if R:
            c = _gcd_list(R, base, nvars)
            R = [exact_div(x, c) for x in R]
        A, B = B, R
    prim = _from_univar(A, v, base, nvars)
    c = _gcd_list(list(_to_univar(prim, v)), base, nvars)
    # A is already primitive from the loop except for the very first round
    if not c.is_one():
        prim = exact_div(prim, c)
    return (cont * prim).monic()


def lcm(f: Polynomial, g: Polynomial) -> Polynomial:
    if f.is_zero() or g.is_zero():
        return Polynomial.zero(f.base, f.nvars)
    return exact_div(f * g, gcd(f, g)).monic()
