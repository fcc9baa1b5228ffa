"""Congruence homomorphisms onto matrix groups over finite fields.

For a group input over an infinite field this module builds a map phi from
the matrix entries to a finite field such that phi is a group homomorphism on
the generated group and the kernel of the induced map on matrices is well
behaved: torsion-free in characteristic zero, and with every torsion element
unipotent in positive characteristic.  That kernel property is what the
decision procedures in decide.py consume, and each map carries a certificate
saying exactly which construction produced it and why the property holds.

Construction by source field kind:

  rationals            reduce entries mod an odd prime p not dividing any
                       entry denominator.
  number_field         reduce coordinates mod p and send the generator to a
                       root of the first irreducible factor of its minimal
                       polynomial mod p; p avoids the denominators and the
                       discriminant (fallback: p beyond the degree bound
                       n*k + 1 when the discriminant is unobtainable).
  rational_function    substitute a point that keeps all entry denominators
                       nonzero; in characteristic zero this lands in the base
                       scalars and composes with one of the maps above, in
                       characteristic p the substitution itself is the map,
                       with points drawn from GF(q), then the new points of
                       GF(q^2), GF(q^3), ...
  algebraic_function   substitute a point into the (rescaled) minimal
                       polynomial, pick the first irreducible factor of the
                       result, and send the field generator to one of its
                       roots; characteristic zero composes with the maps
                       above (over a number-field base: one reduction mod a
                       prime p > n*k*e + 1 for which the base minimal
                       polynomial has a root mod p).

Selection of primes, points, and factors is completely deterministic, and a
``skip`` parameter walks the selection schedule so that independent maps of
the same group can be produced on demand.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from . import gf, primes, qpoly, upoly
from .errors import FieldError, MapApplicationError, ResourceLimitError
from .fields import NumberField
from .matrices import GroupInput, Mat

JUST_DENOMS = "odd-prime-not-dividing-denominators"
JUST_DISC = "odd-prime-not-dividing-discriminant"
JUST_DEGREE = "prime-exceeds-degree-bound"
JUST_CHARP = "positive-characteristic-kernel"

KERNEL_TORSION_FREE = "torsion-free"
KERNEL_TORSION_UNIPOTENT = "torsion-unipotent"


@dataclass(frozen=True)
class CongruenceMap:
    """A congruence homomorphism with its certificate data.

    entry_map sends a raw scalar of the source field to a raw scalar of the
    target finite field; apply_sw lifts it to matrices.  For composed
    characteristic-zero maps, ``outer`` is the arithmetic stage applied after
    point substitution and the top-level justification mirrors it.
    """

    kind: str
    source: object
    target: gf.FqField
    kernel_property: str
    justification: str
    prime: int | None = None
    point: tuple | None = None
    point_field: gf.FqField | None = None
    factor: tuple | None = None
    outer: "CongruenceMap | None" = None
    entry_map: object = dc_field(default=None, compare=False, repr=False)


def apply_sw(cmap: CongruenceMap, M: Mat) -> Mat:
    """Image of a matrix under the congruence map."""
    if M.field != cmap.source:
        raise MapApplicationError("matrix is not over the map's source field")
    try:
        return M.map_entries(cmap.entry_map, cmap.target)
    except ZeroDivisionError:
        raise MapApplicationError(
            "congruence map is undefined on a matrix entry"
        ) from None


def sw_image(cmap: CongruenceMap, G: GroupInput) -> tuple[list[Mat], list[Mat]]:
    """Images of the generators and of their inverses."""
    return [apply_sw(cmap, g) for g in G.gens], [apply_sw(cmap, g) for g in G.invs]


# ---------------------------------------------------------------------------
# deterministic selection


def select_prime(skip: int = 0, min_exclusive: int = 2, forbid=()) -> int:
    """(skip+1)-th odd prime p with p > min_exclusive and p dividing no
    forbidden value."""
    count = 0
    for p in primes.primes_from(max(3, min_exclusive + 1)):
        if any(d % p == 0 for d in forbid):
            continue
        if count == skip:
            return p
        count += 1
    raise AssertionError("unreachable")  # pragma: no cover


def _rank_value(r: int) -> int:
    # 1, -1, 2, -2, 3, -3, ...  (never 0: substitution points stay generic)
    mag = (r + 1) // 2
    return mag if r % 2 == 1 else -mag


def select_point_char0(base, m: int, mu_poly, skip: int = 0) -> tuple:
    """(skip+1)-th integer point where mu_poly does not vanish.

    Points are ordered by shells of maximal coordinate rank, lexicographic by
    rank inside a shell, with per-coordinate values 1, -1, 2, -2, ...
    """
    count = 0
    for shell in itertools.count(1):
        for ranks in itertools.product(range(1, shell + 1), repeat=m):
            if max(ranks) != shell:
                continue
            pt = tuple(_rank_value(r) for r in ranks)
            vals = [base.from_int(v) for v in pt]
            if base.is_zero(mu_poly.evaluate(vals)):
                continue
            if count == skip:
                return pt
            count += 1


def _proper_subfield_levels(s: int) -> list[int]:
    return [t for t in range(1, s) if s % t == 0]


def select_point_charp(base_fq: gf.FqField, m: int, mu_poly, skip: int = 0):
    """(skip+1)-th valid substitution point in the tower GF(q) < GF(q^2) < ...

    Round s draws coordinates from the standard field E_s = GF(p^(l*s)); a
    tuple is new in round s only if its coordinates do not all lie in a
    proper subfield round, so each point is attempted exactly once.  Valid
    means mu_poly does not vanish there.  Returns (E, point, embedding of the
    base field into E).
    """
    p, l = base_fq.p, base_fq.l
    count = 0
    for s in itertools.count(1):
        E = gf.standard_field(p, l * s)
        embed = gf.Embedding(base_fq, E)
        sub_levels = _proper_subfield_levels(s)
        for combo in itertools.product(range(E.q), repeat=m):
            pt = tuple(E.decode(v) for v in combo)
            if sub_levels:
                stale = False
                for t in sub_levels:
                    size = p ** (l * t)
                    if all(E.pow_el(x, size) == x for x in pt):
                        stale = True
                        break
                if stale:
                    continue
            if E.is_zero(mu_poly.evaluate(pt, E, embed)):
                continue
            if count == skip:
                return E, pt, embed
            count += 1


# ---------------------------------------------------------------------------
# rational entries


def _phi1(G: GroupInput, skip: int) -> CongruenceMap:
    p = select_prime(skip=skip, forbid=(G.mu.integer,))
    T = gf.FqField(p, check=False)

    def entry(v: Fraction) -> int:
        den = v.denominator % p
        if den == 0:
            raise ZeroDivisionError
        return v.numerator % p * pow(den, p - 2, p) % p

    return CongruenceMap(
        kind="Phi1",
        source=G.field,
        target=T,
        kernel_property=KERNEL_TORSION_FREE,
        justification=JUST_DENOMS,
        prime=p,
        entry_map=entry,
    )


# ---------------------------------------------------------------------------
# number field entries


def _fraction_mod(v: Fraction, p: int) -> int:
    den = v.denominator % p
    if den == 0:
        raise ZeroDivisionError
    return v.numerator % p * pow(den, p - 2, p) % p


def _phi2_with_prime(G: GroupInput, p: int, justification: str) -> CongruenceMap:
    K = G.field
    Fp = gf.FqField(p, check=False)
    fbar = upoly.trim(Fp, [c % p for c in K.f_int])
    factors = gf.fq_poly_factor(Fp, fbar)
    fj = factors[0][0]
    dj = upoly.deg(fj)
    if dj == 1:
        T = Fp
        root = (-fj[0]) % p

        def entry(value):
            acc = 0
            for c in reversed(value):
                acc = (acc * root + _fraction_mod(c, p)) % p
            return acc

    else:
        T = gf.FqField(p, fj, check=False)

        def entry(value):
            coeffs = upoly.trim(Fp, [_fraction_mod(c, p) for c in value])
            rem = upoly.mod(Fp, coeffs, fj)
            return tuple(rem[i] if i < len(rem) else 0 for i in range(dj))

    return CongruenceMap(
        kind="Phi2",
        source=K,
        target=T,
        kernel_property=KERNEL_TORSION_FREE,
        justification=justification,
        prime=p,
        factor=fj,
        entry_map=entry,
    )


def _phi2(G: GroupInput, skip: int) -> CongruenceMap:
    K = G.field
    try:
        disc = K.disc
    except ResourceLimitError:
        bound = G.n * K.k + 1
        p = select_prime(skip=skip, min_exclusive=bound, forbid=(G.mu.integer,))
        return _phi2_with_prime(G, p, JUST_DEGREE)
    p = select_prime(skip=skip, forbid=(G.mu.integer, disc))
    return _phi2_with_prime(G, p, JUST_DISC)


# ---------------------------------------------------------------------------
# rational function field entries


def _phi3_char0(G: GroupInput, skip: int) -> CongruenceMap:
    L = G.field
    B = L.base
    pt = select_point_char0(B, L.m, G.mu.poly, skip)
    vals = [B.from_int(v) for v in pt]

    def subst(value):
        return L.evaluate(value, vals, B, None)

    mats = [g.map_entries(subst, B) for g in G.gens]
    H = GroupInput.build(B, mats, n=G.n)
    arith = _phi1(H, 0) if B.kind == "rationals" else _phi2(H, 0)
    inner_entry = arith.entry_map

    def entry(value):
        return inner_entry(subst(value))

    return CongruenceMap(
        kind="Phi3",
        source=L,
        target=arith.target,
        kernel_property=KERNEL_TORSION_FREE,
        justification=arith.justification,
        prime=arith.prime,
        point=pt,
        factor=arith.factor,
        outer=arith,
        entry_map=entry,
    )


def _phi3_charp(G: GroupInput, skip: int) -> CongruenceMap:
    L = G.field
    E, pt, embed = select_point_charp(L.base, L.m, G.mu.poly, skip)

    def entry(value):
        return L.evaluate(value, pt, E, embed)

    return CongruenceMap(
        kind="Phi3",
        source=L,
        target=E,
        kernel_property=KERNEL_TORSION_UNIPOTENT,
        justification=JUST_CHARP,
        prime=L.base.p,
        point=tuple(E.encode(x) for x in pt),
        point_field=E,
        entry_map=entry,
    )


# ---------------------------------------------------------------------------
# algebraic function field entries


def _phi4_char0(G: GroupInput, skip: int) -> CongruenceMap:
    A = G.field
    L = A.base
    B = L.base
    pt = select_point_char0(B, A.m, G.mu.poly, skip)
    vals = [B.from_int(v) for v in pt]
    fbar = tuple(L.evaluate(c, vals, B, None) for c in A.minpoly_internal)

    if B.kind == "rationals":
        fac = qpoly.factor_monic_rational(fbar)
        h = fac[0][0]
        if len(h) == 2:
            root = -h[0]

            def subst(value):
                acc = B.zero
                for c in reversed(value):
                    acc = acc * root + L.evaluate(c, vals, B, None)
                return acc

            mats = [g.map_entries(subst, B) for g in G.gens]
            H = GroupInput.build(B, mats, n=G.n)
            arith = _phi1(H, 0)
        else:
            mid = NumberField(h, check=False)
            gen = mid.generator_value()

            def subst(value):
                acc = mid.zero
                for c in reversed(value):
                    cv = L.evaluate(c, vals, B, None)
                    acc = mid.add(mid.mul(acc, gen), mid.from_rational(cv))
                return acc

            mats = [g.map_entries(subst, mid) for g in G.gens]
            H = GroupInput.build(mid, mats, n=G.n)
            arith = _phi2(H, 0)
        inner_entry = arith.entry_map

        def entry(value):
            return inner_entry(subst(value))

        return CongruenceMap(
            kind="Phi4",
            source=A,
            target=arith.target,
            kernel_property=KERNEL_TORSION_FREE,
            justification=arith.justification,
            prime=arith.prime,
            point=pt,
            factor=h,
            outer=arith,
            entry_map=entry,
        )

    # number-field base: a single reduction mod p collapses the whole tower,
    # requiring p beyond the degree bound and a root of the base minimal
    # polynomial mod p so all factoring stays over the prime field
    K = B
    mu2 = 1
    for M in G.gens + G.invs:
        for row in M.rows:
            for v in row:
                for c in v:
                    cv = L.evaluate(c, vals, K, None)
                    for d in K.int_dens(cv):
                        mu2 = math.lcm(mu2, d)
    for c in fbar:
        for d in K.int_dens(c):
            mu2 = math.lcm(mu2, d)
    bound = G.n * K.k * A.e + 1
    p, beta_root = _prime_with_root(K.f_int, bound, mu2)
    Fp = gf.FqField(p, check=False)

    def nf_red(value) -> int:
        acc = 0
        for coord in reversed(value):
            acc = (acc * beta_root + _fraction_mod(coord, p)) % p
        return acc

    fbb = upoly.trim(Fp, [nf_red(c) for c in fbar])
    g0 = gf.fq_poly_factor(Fp, fbb)[0][0]
    dg = upoly.deg(g0)
    if dg == 1:
        T = Fp
        abar = (-g0[0]) % p
    else:
        T = gf.FqField(p, g0, check=False)
        abar = T.generator()

    def entry(value):
        acc = T.zero
        for c in reversed(value):
            cv = L.evaluate(c, vals, K, None)
            acc = T.add(T.mul(acc, abar), T.from_int(nf_red(cv)))
        return acc

    return CongruenceMap(
        kind="Phi4",
        source=A,
        target=T,
        kernel_property=KERNEL_TORSION_FREE,
        justification=JUST_DEGREE,
        prime=p,
        point=pt,
        factor=g0,
        entry_map=entry,
    )


def _prime_with_root(f_int: tuple, min_exclusive: int, mu: int, skip: int = 0):
    """First prime beyond the bound, coprime to mu, where f_int has a root;
    returns (p, smallest root)."""
    count = 0
    for p in primes.primes_from(max(3, min_exclusive + 1)):
        if mu % p == 0:
            continue
        Fp = gf.FqField(p, check=False)
        fbar = upoly.trim(Fp, [c % p for c in f_int])
        roots = gf.fq_poly_roots(Fp, fbar)
        if not roots:
            continue
        if count == skip:
            return p, roots[0]
        count += 1
    raise AssertionError("unreachable")  # pragma: no cover


def _phi4_charp(G: GroupInput, skip: int) -> CongruenceMap:
    A = G.field
    L = A.base
    Fq = L.base
    E, pt, embed = select_point_charp(Fq, A.m, G.mu.poly, skip)
    fbar = upoly.trim(E, [L.evaluate(c, pt, E, embed) for c in A.minpoly_internal])
    g0 = gf.fq_poly_factor(E, fbar)[0][0]
    dg = upoly.deg(g0)
    T = gf.standard_field(E.p, E.l * dg)
    lift = gf.Embedding(E, T)
    if dg == 1:
        abar = lift(E.neg(g0[0]))
    else:
        g_lifted = upoly.trim(T, [lift(c) for c in g0])
        abar = gf.fq_poly_roots(T, g_lifted)[0]
    pt_T = tuple(lift(x) for x in pt)

    def comp_embed(c):
        return lift(embed(c))

    def entry(value):
        acc = T.zero
        for c in reversed(value):
            cv = L.evaluate(c, pt_T, T, comp_embed)
            acc = T.add(T.mul(acc, abar), cv)
        return acc

    return CongruenceMap(
        kind="Phi4",
        source=A,
        target=T,
        kernel_property=KERNEL_TORSION_UNIPOTENT,
        justification=JUST_CHARP,
        prime=Fq.p,
        point=tuple(E.encode(x) for x in pt),
        point_field=E,
        factor=g0,
        entry_map=entry,
    )


# ---------------------------------------------------------------------------
# dispatch and certificates


def build_sw(G: GroupInput, skip: int = 0) -> CongruenceMap:
    """Build the congruence map for this group, walking the deterministic
    selection schedule ``skip`` steps in."""
    kind = G.field.kind
    if kind == "rationals":
        return _phi1(G, skip)
    if kind == "number_field":
        return _phi2(G, skip)
    if kind == "rational_function":
        if G.field.characteristic() == 0:
            return _phi3_char0(G, skip)
        return _phi3_charp(G, skip)
    if kind == "algebraic_function":
        if G.field.characteristic() == 0:
            return _phi4_char0(G, skip)
        return _phi4_charp(G, skip)
    raise FieldError("group scalars must come from an infinite field")


def certificate_json(cmap: CongruenceMap) -> dict:
    out = {
        "kind": cmap.kind,
        "kernel_property": cmap.kernel_property,
        "justification": cmap.justification,
        "target": cmap.target.descriptor_json(),
    }
    if cmap.prime is not None:
        out["prime"] = cmap.prime
    if cmap.point is not None:
        if cmap.point_field is not None:
            E = cmap.point_field
            out["point"] = [E.to_str(E.decode(v)) for v in cmap.point]
            out["point_field"] = E.descriptor_json()
        else:
            out["point"] = list(cmap.point)
    if cmap.factor is not None:
        coeffs = []
        for c in cmap.factor:
            if isinstance(c, Fraction):
                coeffs.append(int(c) if c.denominator == 1 else str(c))
            elif isinstance(c, int):
                coeffs.append(c)
            else:
                coeffs.append(cmap.point_field.to_str(c))
        out["factor"] = coeffs
    if cmap.outer is not None:
        out["then"] = certificate_json(cmap.outer)
    return out
