"""Shared field and group fixtures for the test suite."""

import random
from fractions import Fraction

from finmat.fields import (
    RATIONALS,
    AlgebraicFunctionField,
    NumberField,
    RationalFunctionField,
)
from finmat.gf import FqField
from finmat.matrices import GroupInput, Mat


def mat(field, rows):
    return Mat.from_strings(field, [[str(v) for v in row] for row in rows])


def gaussian_rationals():
    return NumberField([1, 0, 1])


def cyclotomic5():
    return NumberField([1, 1, 1, 1, 1])


def qx():
    return RationalFunctionField(RATIONALS, ["x"])


def fpx(p):
    return RationalFunctionField(FqField(p), ["x"])


def sqrt_x_field(base=None):
    """Degree-2 extension of a rational function field by a root of t^2 - x."""
    L = base or qx()
    x = L.variable_value(0)
    return AlgebraicFunctionField(L, [L.neg(x), L.zero, L.one])


# --- standard groups ------------------------------------------------------


def rot90_group():
    Q = RATIONALS
    return GroupInput.build(Q, [mat(Q, [[0, -1], [1, 0]])], label="rot90")


def dihedral8_group():
    Q = RATIONALS
    return GroupInput.build(
        Q,
        [mat(Q, [[0, -1], [1, 0]]), mat(Q, [[1, 0], [0, -1]])],
        label="dihedral8",
    )


def quaternion_group():
    K = gaussian_rationals()
    return GroupInput.build(
        K,
        [mat(K, [["a", 0], [0, "-a"]]), mat(K, [[0, 1], [-1, 0]])],
        label="quaternion",
    )


def klein_f2x_group():
    F = fpx(2)
    return GroupInput.build(
        F,
        [mat(F, [[1, "x"], [0, 1]]), mat(F, [[1, 1], [0, 1]])],
        label="klein_f2x",
    )


def unipotent_q_group():
    Q = RATIONALS
    return GroupInput.build(Q, [mat(Q, [[1, 1], [0, 1]])], label="unipotent_q")


def random_int_conjugator(field, n, seed, bound=3):
    """Invertible integer matrix with entries in [-bound, bound]."""
    rng = random.Random(seed)
    while True:
        rows = [
            [str(rng.randint(-bound, bound)) for _ in range(n)] for _ in range(n)
        ]
        C = Mat.from_strings(field, rows)
        try:
            C.inverse()
        except Exception:
            continue
        return C


def wreath_zeta5_group(seed=None):
    """Monomial matrices over Q(zeta5): scalar zeta5 block and Sym(3),
    optionally conjugated by a random integer matrix.  Order 5^3 * 3!."""
    K = cyclotomic5()
    gens = [
        mat(K, [["a", 0, 0], [0, 1, 0], [0, 0, 1]]),
        mat(K, [[0, 0, 1], [1, 0, 0], [0, 1, 0]]),
        mat(K, [[0, 1, 0], [1, 0, 0], [0, 0, 1]]),
    ]
    if seed is not None:
        C = random_int_conjugator(K, 3, seed)
        gens = [g.conjugate_by(C) for g in gens]
    return GroupInput.build(K, gens, label="wreath_zeta5")


def signed_perm3_derived_group(seed=None):
    """Derived subgroup of the signed permutation group of degree 3 (the
    full monomial +-1 group), generated by commutators of its standard
    reflection generators, over Q(x), optionally conjugated."""
    L = qx()
    refl = [
        mat(L, [[-1, 0, 0], [0, 1, 0], [0, 0, 1]]),
        mat(L, [[0, 1, 0], [1, 0, 0], [0, 0, 1]]),
        mat(L, [[1, 0, 0], [0, 0, 1], [0, 1, 0]]),
    ]
    gens = []
    for i in range(3):
        for j in range(i + 1, 3):
            a, b = refl[i], refl[j]
            gens.append(a * b * a.inverse() * b.inverse())
    if seed is not None:
        C = mat(L, [[1, "x", 0], [0, 1, 0], [0, 0, 1]]) * random_int_conjugator(
            L, 3, seed, bound=2
        )
        gens = [g.conjugate_by(C) for g in gens]
    return GroupInput.build(L, gens, label="signed_perm3_derived")


# --- random 2x2 rational corpus -------------------------------------------

_SIGNED_PERMS = [
    [[1, 0], [0, 1]],
    [[-1, 0], [0, 1]],
    [[1, 0], [0, -1]],
    [[-1, 0], [0, -1]],
    [[0, 1], [1, 0]],
    [[0, -1], [1, 0]],
    [[0, 1], [-1, 0]],
    [[0, -1], [-1, 0]],
]

_ROTATIONS = [
    [[0, -1], [1, 0]],
    [[0, 1], [-1, 1]],
    [[0, -1], [1, -1]],
    [[1, -1], [1, 0]],
    [[-1, 1], [-1, 0]],
    [[1, 1], [-1, 1]],
    [[2, -1], [1, 0]],
    [[1, -2], [1, -1]],
]


def _unipotents():
    out = []
    for c in (-2, -1, 1, 2):
        out.append([[1, c], [0, 1]])
        out.append([[1, 0], [c, 1]])
    return out


def random_gl2q_group(seed):
    """Two-generator subgroup of GL(2, Q) drawn from signed permutations,
    rotation-like matrices, and unipotents with entries bounded by 2."""
    rng = random.Random(seed)
    pool = _SIGNED_PERMS + _ROTATIONS + _unipotents()
    Q = RATIONALS
    gens = []
    while len(gens) < 2:
        M = mat(Q, rng.choice(pool))
        try:
            M.inverse()
        except Exception:
            continue
        gens.append(M)
    return GroupInput.build(Q, gens, label=f"rand2q_{seed}")


# --- random scalars per field ---------------------------------------------


def random_rational(rng, bound=30):
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def random_scalar(field, rng):
    kind = field.kind
    if kind == "rationals":
        return random_rational(rng)
    if kind == "number_field":
        return field.from_user_coords(
            [random_rational(rng, 10) for _ in range(field.k)]
        )
    if kind == "finite_field":
        return field.decode(rng.randrange(field.q))
    if kind == "rational_function":
        num = _random_rff_poly(field, rng)
        den = _random_rff_poly(field, rng)
        while den.is_zero():
            den = _random_rff_poly(field, rng)
        return field._canon(num, den)
    if kind == "algebraic_function":
        return tuple(random_scalar(field.base, rng) for _ in range(field.e))
    raise ValueError(kind)


def _random_rff_poly(field, rng):
    from finmat import mpoly

    base = field.base
    m = len(field.vars)
    terms = {}
    for _ in range(rng.randint(1, 3)):
        exps = tuple(rng.randint(0, 2) for _ in range(m))
        if base.kind == "rationals":
            c = random_rational(rng, 5)
        else:
            c = base.decode(rng.randrange(base.q))
        if not base.is_zero(c):
            terms[exps] = c
    return mpoly.Polynomial(base, m, terms.items())


def word_pool(field):
    """Small invertible generators suitable for homomorphism-law words."""
    kind = field.kind
    if kind == "rationals":
        return [
            mat(field, [[0, -1], [1, 0]]),
            mat(field, [[1, 1], [0, 1]]),
            mat(field, [["1/2", 0], [0, 3]]),
        ]
    if kind == "number_field":
        return [
            mat(field, [["a", 0], [0, 1]]),
            mat(field, [[0, 1], [-1, 0]]),
            mat(field, [[1, "a/2"], [0, 1]]),
        ]
    if kind == "rational_function":
        return [
            mat(field, [["x", 0], [0, 1]]),
            mat(field, [[1, "x"], [0, 1]]),
            mat(field, [[0, -1], [1, 0]]),
        ]
    if kind == "algebraic_function":
        return [
            mat(field, [["a", 0], [0, 1]]),
            mat(field, [[1, "a"], [0, 1]]),
            mat(field, [[0, -1], [1, 0]]),
        ]
    raise ValueError(kind)


def check_hom_law(cmap, G, rng, samples, max_len=4):
    """Phi(uv) == Phi(u) Phi(v) for random words u, v in the generators and
    their inverses; returns the number of pairs checked."""
    from finmat.matrices import Mat
    from finmat.sw import apply_sw

    field = G.field
    pool = list(G.gens) + list(G.invs)
    checked = 0
    for _ in range(samples):
        u = Mat.identity(field, G.n)
        v = Mat.identity(field, G.n)
        for _ in range(rng.randrange(1, max_len + 1)):
            u = u * pool[rng.randrange(len(pool))]
        for _ in range(rng.randrange(1, max_len + 1)):
            v = v * pool[rng.randrange(len(pool))]
        lhs = apply_sw(cmap, u * v)
        rhs = apply_sw(cmap, u) * apply_sw(cmap, v)
        assert lhs == rhs
        checked += 1
    return checked
