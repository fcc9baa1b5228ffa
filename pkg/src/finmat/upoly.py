"""Univariate polynomial arithmetic over an arbitrary coefficient field.

Polynomials are tuples of coefficient values, constant term first, with no
trailing zeros (the zero polynomial is the empty tuple).  Every function
takes the coefficient field context ``F`` as its first argument; ``F`` must
provide zero, one, add, sub, neg, mul, inv, div, is_zero and from_int.  The
same routines drive number-field reduction (over the rationals), extension
arithmetic over rational function fields, and the finite-field engine.
"""

from __future__ import annotations


def trim(F, coeffs) -> tuple:
    coeffs = list(coeffs)
    while coeffs and F.is_zero(coeffs[-1]):
        coeffs.pop()
    return tuple(coeffs)


def deg(f) -> int:
    """Degree; the zero polynomial gets -1."""
    return len(f) - 1


def is_zero(f) -> bool:
    return not f


def constant(F, c) -> tuple:
    return trim(F, (c,))


def add(F, f, g) -> tuple:
    n = max(len(f), len(g))
    out = []
    for i in range(n):
        a = f[i] if i < len(f) else F.zero
        b = g[i] if i < len(g) else F.zero
        out.append(F.add(a, b))
    return trim(F, out)


def neg(F, f) -> tuple:
    return tuple(F.neg(c) for c in f)


def sub(F, f, g) -> tuple:
    return add(F, f, neg(F, g))


def mul(F, f, g) -> tuple:
    if not f or not g:
        return ()
    out = [F.zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if F.is_zero(a):
            continue
        for j, b in enumerate(g):
            out[i + j] = F.add(out[i + j], F.mul(a, b))
    return trim(F, out)


def scale(F, f, c) -> tuple:
    return trim(F, tuple(F.mul(a, c) for a in f))


def divmod_poly(F, f, g) -> tuple[tuple, tuple]:
    """Quotient and remainder of f by nonzero g (field coefficients)."""
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(f)
    q = [F.zero] * max(0, len(f) - len(g) + 1)
    inv_lc = F.inv(g[-1])
    dg = len(g) - 1
    while len(r) >= len(g):
        while r and F.is_zero(r[-1]):
            r.pop()
        if len(r) < len(g):
            break
        c = F.mul(r[-1], inv_lc)
        shift = len(r) - 1 - dg
        q[shift] = c
        for i, b in enumerate(g):
            r[shift + i] = F.sub(r[shift + i], F.mul(c, b))
        r.pop()
    return trim(F, q), trim(F, r)


def mod(F, f, g) -> tuple:
    return divmod_poly(F, f, g)[1]


def monic(F, f) -> tuple:
    if not f:
        return ()
    lc = f[-1]
    if F.is_zero(F.sub(lc, F.one)):
        return tuple(f)
    return scale(F, f, F.inv(lc))


def gcd(F, f, g) -> tuple:
    """Monic gcd via the Euclidean algorithm."""
    a, b = tuple(f), tuple(g)
    while b:
        a, b = b, mod(F, a, b)
    return monic(F, a)


def ext_gcd(F, f, g) -> tuple[tuple, tuple, tuple]:
    """(d, s, t) with d = gcd monic and s*f + t*g = d."""
    r0, r1 = tuple(f), tuple(g)
    s0, s1 = constant(F, F.one), ()
    t0, t1 = (), constant(F, F.one)
    while r1:
        q, r = divmod_poly(F, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(F, s0, mul(F, q, s1))
        t0, t1 = t1, sub(F, t0, mul(F, q, t1))
    if not r0:
        return (), s0, t0
    c = F.inv(r0[-1])
    return scale(F, r0, c), scale(F, s0, c), scale(F, t0, c)


def pow_mod(F, f, n: int, m) -> tuple:
    """f**n mod m by binary powering."""
    result = constant(F, F.one)
    base = mod(F, f, m)
    while n > 0:
        if n & 1:
            result = mod(F, mul(F, result, base), m)
        base = mod(F, mul(F, base, base), m)
        n >>= 1
    return result


def evaluate(F, f, x):
    """Horner evaluation at a value x of the coefficient field."""
    acc = F.zero
    for c in reversed(f):
        acc = F.add(F.mul(acc, x), c)
    return acc


def derivative(F, f) -> tuple:
    out = []
    for i in range(1, len(f)):
        out.append(F.mul(f[i], F.from_int(i)))
    return trim(F, out)


def from_int_coeffs(F, coeffs) -> tuple:
    return trim(F, tuple(F.from_int(c) for c in coeffs))
