"""Finite-field engine: GF(p^l) arithmetic, univariate factorization over any
GF(q), integer discriminants, and multiplicative orders of matrices.

Elements of a prime field are plain ints in [0, p); extension elements are
coefficient tuples of length l over GF(p) with respect to the stored monic
modulus.  The canonical integer encoding sum(c_i * p**i) gives every field a
fixed element order, used for deterministic tie-breaking throughout.

Factorization is squarefree decomposition, then distinct-degree splitting,
then equal-degree splitting with a random sequence seeded from the input
polynomial itself, so results are reproducible across runs.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from . import primes, upoly
from .errors import FieldError, ResourceLimitError

_FOLD_MOD = (1 << 61) - 1


def _fold_seed(*values: int) -> int:
    acc = 0x51ED2701
    for v in values:
        acc = (acc * 1000003 + v + 0x9E37) % _FOLD_MOD
    return acc


class _SeedStream:
    """Tiny deterministic generator (xorshift) for splitting polynomials."""

    def __init__(self, seed: int):
        self.state = (seed or 1) & 0xFFFFFFFFFFFFFFFF

    def next_below(self, n: int) -> int:
        x = self.state
        x ^= (x << 13) & 0xFFFFFFFFFFFFFFFF
        x ^= x >> 7
        x ^= (x << 17) & 0xFFFFFFFFFFFFFFFF
        self.state = x
        return x % n


class FqField:
    """GF(p) for l == 1, else GF(p^l) = GF(p)[t]/(modulus)."""

    kind = "finite_field"

    def __init__(self, p: int, modulus: tuple | None = None, check: bool = True):
        if check and not primes.is_prime(p):
            raise FieldError(f"{p} is not prime")
        self.p = p
        if modulus is None or tuple(modulus) == (0, 1):
            self.l = 1
            self.modulus = (0, 1)
            self.zero = 0
            self.one = 1 % p
        else:
            mod = tuple(int(c) % p for c in modulus)
            if len(mod) < 3 or mod[-1] != 1:
                raise FieldError("modulus must be monic of degree >= 2")
            self.l = len(mod) - 1
            self.modulus = mod
            self.zero = (0,) * self.l
            self.one = (1,) + (0,) * (self.l - 1)
            prime = FqField(p, check=False)
            if check and not _is_irreducible(prime, mod):
                raise FieldError("modulus is reducible over the prime field")
            # reduction table: t^(l+i) mod modulus, for i = 0..l-2
            red = []
            cur = tuple(-c % p for c in mod[:-1])  # t^l
            red.append(cur)
            for _ in range(self.l - 2):
                shifted = (0,) + cur[:-1]
                carry = cur[-1]
                cur = tuple((shifted[j] - carry * mod[j]) % p for j in range(self.l))
                red.append(cur)
            self._red = tuple(red)
        self.q = p**self.l

    # -- identity ------------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FqField)
            and self.p == other.p
            and self.modulus == other.modulus
        )

    def __hash__(self) -> int:
        return hash((self.p, self.modulus))

    def __repr__(self) -> str:
        return f"FqField({self.p}^{self.l})" if self.l > 1 else f"FqField({self.p})"

    def characteristic(self) -> int:
        return self.p

    def descriptor_json(self) -> dict:
        return {"kind": "finite_field", "p": self.p, "l": self.l, "modulus": list(self.modulus)}

    # -- element arithmetic ----------------------------------------------------

    def from_int(self, n: int):
        n %= self.p
        if self.l == 1:
            return n
        return (n,) + (0,) * (self.l - 1)

    def add(self, a, b):
        if self.l == 1:
            return (a + b) % self.p
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def neg(self, a):
        if self.l == 1:
            return -a % self.p
        return tuple(-x % self.p for x in a)

    def sub(self, a, b):
        if self.l == 1:
            return (a - b) % self.p
        return tuple((x - y) % self.p for x, y in zip(a, b))

    def mul(self, a, b):
        p = self.p
        if self.l == 1:
            return a * b % p
        l = self.l
        prod = [0] * (2 * l - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        out = [c % p for c in prod[:l]]
        for i in range(l, 2 * l - 1):
            c = prod[i] % p
            if c:
                row = self._red[i - l]
                for j in range(l):
                    out[j] = (out[j] + c * row[j]) % p
        return tuple(out)

    def inv(self, a):
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero field element")
        if self.l == 1:
            return pow(a, self.p - 2, self.p)
        prime = FqField(self.p, check=False)
        d, s, _ = upoly.ext_gcd(prime, upoly.trim(prime, a), self.modulus)
        if upoly.deg(d) != 0:
            raise ZeroDivisionError("element is not invertible")
        s = upoly.scale(prime, s, prime.inv(d[0]))
        return tuple(s[i] if i < len(s) else 0 for i in range(self.l))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return a == self.zero

    def pow_el(self, a, n: int):
        if n < 0:
            return self.pow_el(self.inv(a), -n)
        result = self.one
        base = a
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    # -- canonical encoding ------------------------------------------------------

    def encode(self, a) -> int:
        if self.l == 1:
            return a
        v = 0
        for c in reversed(a):
            v = v * self.p + c
        return v

    def decode(self, n: int):
        if self.l == 1:
            return n % self.p
        out = []
        for _ in range(self.l):
            out.append(n % self.p)
            n //= self.p
        return tuple(out)

    def sort_key(self, a):
        return self.encode(a)

    def elements(self):
        for v in range(self.q):
            yield self.decode(v)

    def generator(self):
        """The residue class of t (only meaningful when l > 1)."""
        if self.l == 1:
            raise FieldError("prime field has no extension generator")
        return (0, 1) + (0,) * (self.l - 2)

    def to_str(self, a) -> str:
        if self.l == 1:
            return str(a)
        pieces = []
        for i, c in enumerate(a):
            if c == 0:
                continue
            if i == 0:
                pieces.append(str(c))
            else:
                sym = "a" if i == 1 else f"a^{i}"
                pieces.append(sym if c == 1 else f"{c}*{sym}")
        if not pieces:
            return "0"
        return " + ".join(pieces)

    # scalar-context hooks used by the denominator and size accounting
    def int_dens(self, a):
        return ()

    def poly_dens(self, a):
        return ()

    def bit_size(self, a) -> int:
        return 0


# -- irreducibility and standard fields ---------------------------------------


def _is_irreducible(F: FqField, f: tuple) -> bool:
    """Rabin's test for a monic polynomial over GF(q)."""
    n = upoly.deg(f)
    if n <= 0:
        return False
    if n == 1:
        return True
    x = (F.zero, F.one)
    xq = upoly.pow_mod(F, x, F.q**n, f)
    if upoly.sub(F, xq, x):
        return False
    for r in primes.factorize(n):
        h = upoly.pow_mod(F, x, F.q ** (n // r), f)
        if upoly.deg(upoly.gcd(F, upoly.sub(F, h, x), f)) != 0:
            return False
    return True


@lru_cache(maxsize=None)
def irreducible_poly(p: int, l: int) -> tuple:
    """First monic irreducible of degree l over GF(p), by ascending
    coefficient sequence (constant term first)."""
    if l == 1:
        return (0, 1)
    F = FqField(p, check=False)
    for v in range(p**l):
        coeffs = []
        n = v
        for _ in range(l):
            coeffs.append(n % p)
            n //= p
        cand = tuple(coeffs) + (1,)
        if _is_irreducible(F, cand):
            return cand
    raise FieldError("no irreducible polynomial found")  # unreachable


@lru_cache(maxsize=None)
def standard_field(p: int, l: int) -> FqField:
    """GF(p^l) with the canonical (first-in-order) modulus."""
    if l == 1:
        return FqField(p)
    return FqField(p, irreducible_poly(p, l), check=False)


class Embedding:
    """Field embedding src -> dst determined by the image of the generator.

    The image is the smallest root (canonical encoding order) of the source
    modulus inside dst, so embeddings are deterministic.
    """

    def __init__(self, src: FqField, dst: FqField):
        if src.p != dst.p or dst.l % src.l != 0:
            raise FieldError("no embedding between these fields")
        self.src = src
        self.dst = dst
        if src.l == 1:
            self.gen_image = None
        elif src == dst:
            self.gen_image = src.generator()
        else:
            lifted = tuple(dst.from_int(c) for c in src.modulus)
            roots = fq_poly_roots(dst, upoly.trim(dst, lifted))
            if not roots:
                raise FieldError("source modulus has no root in target")
            self.gen_image = roots[0]

    def __call__(self, a):
        if self.src.l == 1:
            return self.dst.from_int(a)
        if self.src == self.dst:
            return a
        acc = self.dst.zero
        for c in reversed(a):
            acc = self.dst.add(self.dst.mul(acc, self.gen_image), self.dst.from_int(c))
        return acc


# -- factorization over GF(q) ---------------------------------------------------


def _pth_root_poly(F: FqField, f: tuple) -> tuple:
    """Inverse of x -> x^p on a polynomial with zero derivative."""
    p = F.p
    out = []
    for i in range(0, len(f), p):
        c = f[i]
        if F.l > 1:
            c = F.pow_el(c, F.p ** (F.l - 1))
        out.append(c)
    return upoly.trim(F, out)


def squarefree_decomposition(F: FqField, f: tuple) -> list[tuple[tuple, int]]:
    """[(monic squarefree factor, multiplicity)] with pairwise coprime parts."""
    f = upoly.monic(F, f)
    if upoly.deg(f) < 1:
        return []
    out: list[tuple[tuple, int]] = []
    fp = upoly.derivative(F, f)
    if upoly.is_zero(fp):
        for h, m in squarefree_decomposition(F, _pth_root_poly(F, f)):
            out.append((h, m * F.p))
        return out
    c = upoly.gcd(F, f, fp)
    w = upoly.divmod_poly(F, f, c)[0]
    i = 1
    while upoly.deg(w) > 0:
        y = upoly.gcd(F, w, c)
        z = upoly.divmod_poly(F, w, y)[0]
        if upoly.deg(z) > 0:
            out.append((z, i))
        i += 1
        w = y
        c = upoly.divmod_poly(F, c, y)[0]
    if upoly.deg(c) > 0:
        for h, m in squarefree_decomposition(F, _pth_root_poly(F, c)):
            out.append((h, m * F.p))
    return out


def _distinct_degree(F: FqField, f: tuple) -> list[tuple[tuple, int]]:
    """[(product of irreducible factors of degree d, d)] for squarefree monic f."""
    out = []
    x = (F.zero, F.one)
    h = x
    fstar = f
    d = 0
    while upoly.deg(fstar) > 2 * d:
        d += 1
        h = upoly.pow_mod(F, h, F.q, fstar)
        g = upoly.gcd(F, upoly.sub(F, h, x), fstar)
        if upoly.deg(g) > 0:
            out.append((g, d))
            fstar = upoly.divmod_poly(F, fstar, g)[0]
            h = upoly.mod(F, h, fstar)
    if upoly.deg(fstar) > 0:
        out.append((fstar, upoly.deg(fstar)))
    return out


def _random_poly(F: FqField, degree: int, stream: _SeedStream) -> tuple:
    coeffs = [F.decode(stream.next_below(F.q)) for _ in range(degree + 1)]
    return upoly.trim(F, coeffs)


def _equal_degree(F: FqField, f: tuple, d: int, stream: _SeedStream) -> list[tuple]:
    """Split a squarefree monic product of degree-d irreducibles."""
    n = upoly.deg(f)
    if n == d:
        return [f]
    one = upoly.constant(F, F.one)
    while True:
        r = _random_poly(F, n - 1, stream)
        if upoly.deg(r) < 1:
            continue
        if F.p == 2:
            # absolute trace map down to GF(2)
            t = r
            acc = r
            for _ in range(d * F.l - 1):
                t = upoly.mod(F, upoly.mul(F, t, t), f)
                acc = upoly.add(F, acc, t)
            g = upoly.gcd(F, acc, f)
        else:
            s = upoly.pow_mod(F, r, (F.q**d - 1) // 2, f)
            g = upoly.gcd(F, upoly.sub(F, s, one), f)
        if 0 < upoly.deg(g) < n:
            rest = upoly.divmod_poly(F, f, g)[0]
            return _equal_degree(F, g, d, stream) + _equal_degree(F, rest, d, stream)


def fq_poly_factor(F: FqField, f: tuple) -> list[tuple[tuple, int]]:
    """Monic irreducible factors with multiplicities, sorted by (degree,
    coefficient sequence ascending in the canonical element encoding)."""
    if upoly.is_zero(f):
        raise ValueError("cannot factor the zero polynomial")
    seed = _fold_seed(F.p, F.l, *(F.encode(c) for c in f))
    stream = _SeedStream(seed)
    out: list[tuple[tuple, int]] = []
    for part, mult in squarefree_decomposition(F, f):
        for prod, d in _distinct_degree(F, part):
            for irr in _equal_degree(F, prod, d, stream):
                out.append((irr, mult))
    out.sort(key=lambda t: (upoly.deg(t[0]), tuple(F.encode(c) for c in t[0])))
    return out


def fq_poly_roots(F: FqField, f: tuple) -> list:
    """Roots in F of a nonzero polynomial, sorted by canonical encoding."""
    roots = []
    for factor, _ in fq_poly_factor(F, f):
        if upoly.deg(factor) == 1:
            roots.append(F.neg(factor[0]))
    roots.sort(key=F.encode)
    return roots


# -- integer resultants and discriminants ------------------------------------


def _int_prem(A: list[int], B: list[int]) -> list[int]:
    """Pseudo-remainder of lc(B)^(deg A - deg B + 1) * A by B."""
    dB = len(B) - 1
    lB = B[-1]
    R = list(A)
    e = len(A) - 1 - dB + 1
    while True:
        while R and R[-1] == 0:
            R.pop()
        if not R or len(R) - 1 < dB:
            break
        lR = R[-1]
        shift = len(R) - 1 - dB
        R = [c * lB for c in R]
        for i, b in enumerate(B):
            R[shift + i] -= lR * b
        R.pop()
        e -= 1
    factor = lB ** max(e, 0)
    return [c * factor for c in R]


def int_resultant(f: tuple, g: tuple) -> int:
    """Res(f, g) for integer polynomials via the subresultant PRS."""
    A = [int(c) for c in f]
    B = [int(c) for c in g]
    while A and A[-1] == 0:
        A.pop()
    while B and B[-1] == 0:
        B.pop()
    if not A or not B:
        return 0
    s = 1
    if len(A) < len(B):
        if ((len(A) - 1) * (len(B) - 1)) % 2 == 1:
            s = -s
        A, B = B, A
    if len(B) == 1:
        return s * B[0] ** (len(A) - 1)

    def content(P):
        c = 0
        for x in P:
            c = math.gcd(c, x)
        return max(c, 1)

    ca, cb = content(A), content(B)
    A = [x // ca for x in A]
    B = [x // cb for x in B]
    t = Fraction(ca) ** (len(B) - 1) * Fraction(cb) ** (len(A) - 1)
    g_ = Fraction(1)
    h = Fraction(1)
    while True:
        dA, dB = len(A) - 1, len(B) - 1
        if dA % 2 == 1 and dB % 2 == 1:
            s = -s
        d = dA - dB
        R = _int_prem(A, B)
        A = B
        denom = g_ * h**d
        B = []
        for c in R:
            quot = Fraction(c) / denom
            assert quot.denominator == 1
            B.append(int(quot))
        if not B:
            return 0
        g_ = Fraction(A[-1])
        h = g_**d / h ** (d - 1) if d >= 1 else h
        if len(B) - 1 <= 0:
            break
    h = Fraction(B[0]) ** (len(A) - 1) / h ** (len(A) - 2) if len(A) >= 2 else h
    res = s * t * h
    assert res.denominator == 1
    return int(res)


def discriminant(f: tuple) -> int:
    """Discriminant of an integer polynomial of degree >= 1."""
    k = len(f) - 1
    while k >= 0 and f[k] == 0:
        k -= 1
    coeffs = tuple(int(c) for c in f[: k + 1])
    if k < 1:
        raise ValueError("discriminant needs degree >= 1")
    deriv = tuple(i * coeffs[i] for i in range(1, k + 1))
    res = int_resultant(coeffs, deriv)
    sign = -1 if (k * (k - 1) // 2) % 2 else 1
    return sign * res // coeffs[k]


# -- matrix orders over GF(q) --------------------------------------------------

_exponent_cache: dict[tuple, dict[int, int]] = {}


def fq_group_exponent_factor(n: int, F: FqField, budget: int = 2_000_000) -> dict[int, int]:
    """Factored exponent p^ceil(log_p n) * lcm(q^i - 1, 1 <= i <= n) of GL(n, q).

    Raises ResourceLimitError when the factorization budget runs out; callers
    fall back to iterative powering.
    """
    key = (n, F.p, F.modulus)
    if budget == 2_000_000 and key in _exponent_cache:
        return _exponent_cache[key]
    a = 0
    while F.p**a < n:
        a += 1
    fac: dict[int, int] = {}
    if a:
        fac[F.p] = a
    for i in range(1, n + 1):
        for prime, mult in primes.factorize(F.q**i - 1, budget).items():
            if fac.get(prime, 0) < mult:
                fac[prime] = mult
    if budget == 2_000_000:
        _exponent_cache[key] = fac
    return fac


def exponent_value(fac: dict[int, int]) -> int:
    v = 1
    for p, m in fac.items():
        v *= p**m
    return v


def fq_matrix_order(M, budget: int = 2_000_000, iter_cap: int = 1_000_000) -> int:
    """Exact multiplicative order of an invertible matrix over an FqField."""
    F = M.field
    try:
        fac = fq_group_exponent_factor(M.n, F, budget)
    except ResourceLimitError:
        # exponent too hard to factor: walk powers directly
        a = 0
        while F.p**a < M.n:
            a += 1
        cap = F.p**a
        for i in range(1, M.n + 1):
            cap = cap * (F.q**i - 1) // math.gcd(cap, F.q**i - 1)
        cap = min(cap, iter_cap)
        A = M
        k = 1
        while not A.is_identity():
            A = A * M
            k += 1
            if k > cap:
                raise ResourceLimitError("order search cap exceeded")
        return k
    d = exponent_value(fac)
    for prime in fac:
        while d % prime == 0 and (M ** (d // prime)).is_identity():
            d //= prime
    return d
