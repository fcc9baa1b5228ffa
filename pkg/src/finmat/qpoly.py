"""Factorization of monic univariate polynomials over the rationals.

Pipeline: rescale t -> t/lambda to reach a monic integer polynomial, Yun
squarefree decomposition, then a big-prime split: reduce modulo one prime P
larger than twice the Landau-Mignotte coefficient bound, factor over GF(P),
and recombine modular factors by subset search with exact integer division
checks.  Subsets are tried smallest-cardinality-first, then lexicographically,
so the factor list is deterministic.

Coefficients are Fraction tuples, constant term first, like upoly.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

from . import gf, primes, upoly


class _RationalContext:
    """Minimal upoly coefficient protocol over Fraction (internal only)."""

    kind = "rationals"
    zero = Fraction(0)
    one = Fraction(1)

    @staticmethod
    def from_int(n: int) -> Fraction:
        return Fraction(n)

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def neg(a):
        return -a

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def inv(a):
        return 1 / a

    @staticmethod
    def div(a, b):
        return a / b

    @staticmethod
    def is_zero(a) -> bool:
        return a == 0


_QQ = _RationalContext()


def _check_monic(f) -> tuple:
    f = tuple(Fraction(c) for c in f)
    if len(f) < 2 or f[-1] != 1:
        raise ValueError("expected a monic polynomial of degree >= 1")
    return f


def _to_integer_monic(f: tuple) -> tuple[tuple, int]:
    """Monic rational f -> (monic integer g, lam) with g(t) = lam^k f(t/lam)."""
    k = len(f) - 1
    lam = 1
    for c in f[:-1]:
        lam = lam * c.denominator // math.gcd(lam, c.denominator)
    out = []
    for i in range(k):
        v = f[i] * lam ** (k - i)
        assert v.denominator == 1
        out.append(int(v))
    return tuple(out) + (1,), lam


def _from_integer_factor(h: tuple, lam: int) -> tuple:
    d = len(h) - 1
    return tuple(Fraction(h[i], lam ** (d - i)) for i in range(d + 1))


def _int_divmod(f: tuple, g: tuple) -> tuple[tuple, tuple]:
    """Integer polynomial division by a monic g."""
    assert g[-1] == 1
    r = list(f)
    dg = len(g) - 1
    q = [0] * max(len(f) - dg, 0)
    while len(r) - 1 >= dg and any(r):
        while r and r[-1] == 0:
            r.pop()
        if len(r) - 1 < dg:
            break
        c = r[-1]
        shift = len(r) - 1 - dg
        q[shift] = c
        for i, b in enumerate(g):
            r[shift + i] -= c * b
        r.pop()
    while r and r[-1] == 0:
        r.pop()
    return tuple(q), tuple(r)


def _yun_squarefree(f: tuple) -> list[tuple[tuple, int]]:
    """Squarefree decomposition of a monic rational polynomial (char 0)."""
    out = []
    fp = upoly.derivative(_QQ, f)
    u = upoly.gcd(_QQ, f, fp)
    v = upoly.divmod_poly(_QQ, f, u)[0]
    w = upoly.divmod_poly(_QQ, fp, u)[0]
    i = 1
    while upoly.deg(v) > 0:
        diff = upoly.sub(_QQ, w, upoly.derivative(_QQ, v))
        h = upoly.gcd(_QQ, v, diff)
        if upoly.deg(h) > 0:
            out.append((upoly.monic(_QQ, h), i))
        v = upoly.divmod_poly(_QQ, v, h)[0]
        w = upoly.divmod_poly(_QQ, diff, h)[0]
        i += 1
    return out


def _select_prime(g: tuple) -> tuple:
    """A prime above twice the factor-coefficient bound keeping g squarefree."""
    k = len(g) - 1
    norm2 = math.isqrt(sum(c * c for c in g)) + 1
    bound = (1 << k) * norm2
    p = primes.next_prime(2 * bound)
    while True:
        F = gf.FqField(p, check=False)
        gbar = upoly.trim(F, [c % p for c in g])
        if upoly.deg(gbar) == k:
            d = upoly.gcd(F, gbar, upoly.derivative(F, gbar))
            if upoly.deg(d) == 0:
                return p, F, gbar
        p = primes.next_prime(p)


def _lift_symmetric(F, h: tuple) -> tuple:
    half = F.p // 2
    return tuple(c if c <= half else c - F.p for c in h)


def _factor_squarefree_integer(g: tuple) -> list[tuple]:
    """Irreducible monic integer factors of a squarefree monic integer g."""
    if len(g) - 1 == 1:
        return [g]
    p, F, gbar = _select_prime(g)
    avail = [f for f, _ in gf.fq_poly_factor(F, gbar)]
    result = []
    remaining = g
    while True:
        if len(avail) == 1:
            result.append(remaining)
            break
        found = None
        for size in range(1, len(avail) // 2 + 1):
            for combo in itertools.combinations(range(len(avail)), size):
                prod = upoly.constant(F, F.one)
                for i in combo:
                    prod = upoly.mul(F, prod, avail[i])
                cand = _lift_symmetric(F, prod)
                quot, rem = _int_divmod(remaining, cand)
                if not rem:
                    found = (set(combo), cand, quot)
                    break
            if found:
                break
        if found is None:
            result.append(remaining)
            break
        used, cand, quot = found
        result.append(cand)
        remaining = quot
        avail = [f for i, f in enumerate(avail) if i not in used]
        if len(remaining) == 1:
            break
    return result


def factor_monic_rational(f) -> list[tuple[tuple, int]]:
    """[(monic irreducible Fraction-tuple factor, multiplicity)], sorted by
    (degree, coefficient sequence ascending)."""
    f = _check_monic(f)
    out = []
    for part, mult in _yun_squarefree(f):
        g, lam = _to_integer_monic(part)
        for h in _factor_squarefree_integer(g):
            out.append((_from_integer_factor(h, lam), mult))
    out.sort(key=lambda t: (len(t[0]), t[0]))
    return out


def is_irreducible_monic(f) -> bool:
    f = _check_monic(f)
    if len(f) == 2:
        return True
    fac = factor_monic_rational(f)
    return len(fac) == 1 and fac[0][1] == 1
