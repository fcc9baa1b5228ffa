"""Deciding finiteness of finitely generated matrix groups over infinite
fields, via their congruence images.

The main entry point is :func:`is_finite`.  It builds two independent
congruence maps, enumerates the images, and settles the verdict from image
orders, torsion bounds, and a kernel survey:

  * differing image orders, an image order above the finite-subgroup bound,
    or torsion of a too-large prime order in the image all certify an
    infinite group without touching exact arithmetic again;
  * otherwise the relators of the first image are checked in the source
    group.  In characteristic zero the group is finite exactly when every
    relator closes (the kernel is trivial and the image is a faithful copy);
    in characteristic p it is finite exactly when the normal closure of the
    surviving kernel generators is unipotent.

Cyclic subgroups get a cheaper dedicated test, which also powers the random
precheck and the element-order command.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field

from . import fingrp, gf, limits, parse, primes, sw
from .errors import ResourceLimitError
from .matrices import GroupInput, Mat


@dataclass(frozen=True)
class Config:
    """Tuning knobs for the decision procedures; everything deterministic
    for a fixed seed."""

    seed: int = 0
    cap: int = 200_000
    skip_base: int = 0
    precheck: int = 10
    max_attempts: int = 64
    max_bits: int = limits.DEFAULT_MAX_BITS
    max_terms: int = limits.DEFAULT_MAX_TERMS
    pra_burn: int = 50
    nu1_table: dict | None = None


@dataclass(frozen=True)
class Bounds:
    """Torsion bounds for GL over the given field, after restricting scalars
    to degree n0 over the prime-ish base.

    nu2 bounds the order of any torsion element (in characteristic p: of its
    semisimple part, which covers full element orders as well).  nu1, when
    available, bounds the order of any finite subgroup in characteristic
    zero; outside its validity range it is None and order-cap arguments are
    simply not used.
    """

    n0: int
    nu2: int
    nu1: int | None


def torsion_bounds(n: int, field, nu1_table: dict | None = None) -> Bounds:
    k = getattr(field, "k", 1)
    e = getattr(field, "e", 1)
    if field.characteristic() == 0:
        n0 = n * k * e
        nu2 = 2 ** (n0.bit_length()) * 3 ** (n0 // 2)
        if nu1_table and n0 in nu1_table:
            nu1 = nu1_table[n0]
        elif n0 > 10 or n0 in (3, 5):
            nu1 = 2**n0 * math.factorial(n0)
        else:
            nu1 = None
        return Bounds(n0=n0, nu2=nu2, nu1=nu1)
    n0 = n * e
    q = field.q
    return Bounds(n0=n0, nu2=q**n0 - 1, nu1=None)


@dataclass
class Verdict:
    finite: bool | None
    order: int | None = None
    reason: str = ""
    certificate: dict = dc_field(default_factory=dict)


def is_unipotent_matrix(M: Mat) -> bool:
    N = M - Mat.identity(M.field, M.n)
    if N.is_zero():
        return True
    P = N
    for _ in range(M.n - 1):
        P = P * N
        if P.is_zero():
            return True
    return False


# ---------------------------------------------------------------------------
# cyclic groups


def _line_order(cmap: sw.CongruenceMap, g: Mat) -> int:
    return gf.fq_matrix_order(sw.apply_sw(cmap, g))


def is_finite_cyclic(field, g: Mat, config: Config = Config()) -> Verdict:
    """Finiteness and exact order of the group generated by one matrix."""
    G = GroupInput.build(field, [g])
    bounds = torsion_bounds(G.n, field, config.nu1_table)
    with limits.budget(config.max_bits, config.max_terms):
        try:
            return _cyclic_verdict(G, g, bounds, config)
        except ResourceLimitError as ex:
            return Verdict(finite=None, reason=f"resource-limit: {ex}")


def _cyclic_verdict(G: GroupInput, g: Mat, bounds: Bounds, config: Config) -> Verdict:
    map_a = sw.build_sw(G, config.skip_base)
    map_b = sw.build_sw(G, config.skip_base + 1)
    d = math.lcm(_line_order(map_a, g), _line_order(map_b, g))
    cert = {
        "maps": [sw.certificate_json(map_a), sw.certificate_json(map_b)],
        "image_order_lcm": d,
        "bounds": {"n0": bounds.n0, "nu2": bounds.nu2},
    }
    if d > bounds.nu2:
        return Verdict(
            finite=False, reason="image-order-exceeds-torsion-bound", certificate=cert
        )
    char = G.field.characteristic()
    if char == 0:
        for p in primes.factorize(d):
            if p > bounds.n0 + 1:
                cert["large_prime"] = p
                return Verdict(
                    finite=False,
                    reason="image-order-has-oversized-prime-factor",
                    certificate=cert,
                )
        if g**d == Mat.identity(G.field, G.n):
            return Verdict(
                finite=True, order=_exact_order(g, d, G), reason="power-closes", certificate=cert
            )
        return Verdict(finite=False, reason="power-does-not-close", certificate=cert)
    if is_unipotent_matrix(g**d):
        D = d * char ** _plog_ceil(G.n, char)
        return Verdict(
            finite=True, order=_exact_order(g, D, G), reason="power-unipotent", certificate=cert
        )
    return Verdict(finite=False, reason="power-not-unipotent", certificate=cert)


def _plog_ceil(n: int, p: int) -> int:
    a, v = 0, 1
    while v < n:
        v *= p
        a += 1
    return a


def _exact_order(g: Mat, multiple: int, G: GroupInput) -> int:
    """Order of g given a multiple of it, by stripping primes."""
    I = Mat.identity(G.field, G.n)
    assert g**multiple == I
    order = multiple
    for p in primes.factorize(multiple):
        while order % p == 0 and g ** (order // p) == I:
            order //= p
    return order


# ---------------------------------------------------------------------------
# kernel machinery


def _flatten(M: Mat) -> list:
    return [v for row in M.rows for v in row]


class _Span:
    """Row space over an exact field, kept in reduced form; add() reports
    whether the vector enlarged the span and returns its reduced residue."""

    def __init__(self, field):
        self.field = field
        self.rows = []  # (pivot_index, vector)

    def dim(self) -> int:
        return len(self.rows)

    def _reduce(self, vec):
        F = self.field
        vec = list(vec)
        for piv, row in self.rows:
            c = vec[piv]
            if not F.is_zero(c):
                for i in range(len(vec)):
                    vec[i] = F.sub(vec[i], F.mul(c, row[i]))
        return vec

    def add(self, vec) -> bool:
        F = self.field
        vec = self._reduce(vec)
        piv = next((i for i, c in enumerate(vec) if not F.is_zero(c)), None)
        if piv is None:
            return False
        inv = F.inv(vec[piv])
        vec = [F.mul(inv, c) for c in vec]
        for i, (other_piv, row) in enumerate(self.rows):
            c = row[piv]
            if not F.is_zero(c):
                self.rows[i] = (
                    other_piv,
                    [F.sub(row[j], F.mul(c, vec[j])) for j in range(len(row))],
                )
        self.rows.append((piv, vec))
        self.rows.sort(key=lambda r: r[0])
        return True


def normal_closure_unipotent(kernel_mats, G: GroupInput) -> bool:
    """Whether the normal closure of the given group elements consists of
    unipotent matrices.

    Spans the conjugation-closed algebra generated by {k - I} and checks the
    chain V, A.V, A.A.V, ... hits zero within n steps (it stalls otherwise).
    """
    F = G.field
    n = G.n
    I = Mat.identity(F, n)
    seeds = [k - I for k in kernel_mats]
    span = _Span(F)
    basis = []
    queue = [s for s in seeds if not s.is_zero()]
    while queue:
        X = queue.pop()
        if not span.add(_flatten(X)):
            continue
        basis.append(X)
        for g, ginv in zip(G.gens, G.invs):
            queue.append(g * X * ginv)
            queue.append(ginv * X * g)
        for B in basis:
            queue.append(X * B)
            if B is not X:
                queue.append(B * X)
    if not basis:
        return True
    # flag chain on column vectors
    vectors = []
    for j in range(n):
        vectors.append([F.one if i == j else F.zero for i in range(n)])
    dim = n
    for _ in range(n):
        nxt = _Span(F)
        for A in basis:
            for v in vectors:
                nxt.add([_dot(F, A.rows[i], v) for i in range(n)])
        if nxt.dim() == 0:
            return True
        if nxt.dim() >= dim:
            return False
        dim = nxt.dim()
        vectors = [row for _, row in nxt.rows]
    return False


def _dot(F, row, vec):
    acc = F.zero
    for a, b in zip(row, vec):
        if not F.is_zero(a) and not F.is_zero(b):
            acc = F.add(acc, F.mul(a, b))
    return acc


def _mirrors(enum: fingrp.Enumeration, G: GroupInput, with_inverses: bool = True):
    """Source-group products following the image BFS tree, with inverses
    maintained alongside so kernel elements never need a matrix inversion."""
    I = Mat.identity(G.field, G.n)
    M = [I]
    Minv = [I]
    for vi in range(1, len(enum.elements)):
        pi = enum.parent[vi]
        letter = enum.parent_letter[vi]
        if letter > 0:
            g, ginv = G.gens[letter - 1], G.invs[letter - 1]
        else:
            g, ginv = G.invs[-letter - 1], G.gens[-letter - 1]
        M.append(M[pi] * g)
        if with_inverses:
            Minv.append(ginv * Minv[pi])
    return M, Minv


# ---------------------------------------------------------------------------
# the main decision


def is_finite(G: GroupInput, config: Config = Config()) -> Verdict:
    """Decide finiteness of the group generated by G's generators."""
    if not G.gens:
        return Verdict(finite=True, order=1, reason="no-generators")
    bounds = torsion_bounds(G.n, G.field, config.nu1_table)
    with limits.budget(config.max_bits, config.max_terms):
        try:
            return _decide(G, bounds, config)
        except ResourceLimitError as ex:
            return Verdict(finite=None, reason=f"resource-limit: {ex}")


def _decide(G: GroupInput, bounds: Bounds, config: Config) -> Verdict:
    I = Mat.identity(G.field, G.n)
    if all(g == I for g in G.gens):
        return Verdict(finite=True, order=1, reason="all-generators-identity")

    precheck_tested = 0
    if config.precheck > 0:
        try:
            candidates = fingrp.product_replacement(
                I, G.gens, G.invs, config.seed, config.precheck, config.pra_burn
            )
        except ResourceLimitError:
            candidates = []
        for idx, cand in enumerate(candidates):
            if cand == I:
                continue
            try:
                v = _cyclic_verdict(
                    GroupInput.build(G.field, [cand]), cand, bounds, config
                )
            except ResourceLimitError:
                break
            precheck_tested += 1
            if v.finite is False:
                v.certificate["precheck_index"] = idx
                return Verdict(
                    finite=False,
                    reason=f"random-element-infinite: {v.reason}",
                    certificate=v.certificate,
                )

    # Order comparisons between independent images are sound only in
    # characteristic zero: there a finite group maps faithfully under every
    # congruence map (torsion-free kernel), so unequal image orders certify
    # infiniteness.  In characteristic p a finite group may hit a map whose
    # unipotent kernel is nontrivial, so only the kernel survey decides.
    char = G.field.characteristic()
    map_a = sw.build_sw(G, config.skip_base)
    cap = config.cap
    if bounds.nu1 is not None:
        cap = min(cap, bounds.nu1 + 1)

    gens_a, invs_a = sw.sw_image(map_a, G)
    enum_a = fingrp.enumerate_group(Mat.identity(map_a.target, G.n), gens_a, invs_a, cap)
    cert = {
        "maps": [sw.certificate_json(map_a)],
        "bounds": {"n0": bounds.n0, "nu2": bounds.nu2, "nu1": bounds.nu1},
        "precheck": {"tested": precheck_tested},
    }
    if not enum_a.complete:
        if bounds.nu1 is not None and enum_a.lower_bound >= bounds.nu1:
            cert["image_order_exceeds"] = enum_a.lower_bound
            return Verdict(finite=False, reason="image-order-exceeds-bound", certificate=cert)
        return Verdict(finite=None, reason="image-enumeration-capped", certificate=cert)

    if char == 0:
        map_b = sw.build_sw(G, config.skip_base + 1)
        cert["maps"].append(sw.certificate_json(map_b))
        gens_b, invs_b = sw.sw_image(map_b, G)
        enum_b = fingrp.enumerate_group(
            Mat.identity(map_b.target, G.n), gens_b, invs_b, cap
        )
        if not enum_b.complete:
            if bounds.nu1 is not None and enum_b.lower_bound >= bounds.nu1:
                cert["image_order_exceeds"] = enum_b.lower_bound
                return Verdict(
                    finite=False, reason="image-order-exceeds-bound", certificate=cert
                )
            return Verdict(finite=None, reason="image-enumeration-capped", certificate=cert)
        cert["image_orders"] = [enum_a.order, enum_b.order]
        if enum_a.order != enum_b.order:
            return Verdict(finite=False, reason="image-orders-differ", certificate=cert)
        if bounds.nu1 is not None and enum_a.order > bounds.nu1:
            return Verdict(finite=False, reason="image-order-exceeds-bound", certificate=cert)
        for p in primes.factorize(enum_a.order):
            if p > bounds.n0 + 1:
                cert["large_prime"] = p
                return Verdict(
                    finite=False,
                    reason="image-order-has-oversized-prime-factor",
                    certificate=cert,
                )
    else:
        cert["image_orders"] = [enum_a.order]

    # kernel survey along the first image's Cayley graph
    M, Minv = _mirrors(enum_a, G, with_inverses=(char != 0))
    kernel = []
    seen = set()
    surveyed = 0
    for ui, letter, vi in fingrp.iter_edges(enum_a):
        if enum_a.parent[vi] == ui and enum_a.parent_letter[vi] == letter:
            continue
        surveyed += 1
        g = G.gens[letter - 1] if letter > 0 else G.invs[-letter - 1]
        lhs = M[ui] * g
        if char == 0:
            if lhs != M[vi]:
                cert["kernel_witness"] = _edge_word(enum_a, ui, letter, vi)
                return Verdict(
                    finite=False, reason="kernel-not-torsion-free", certificate=cert
                )
        else:
            k = lhs * Minv[vi]
            if k == Mat.identity(G.field, G.n):
                continue
            if not is_unipotent_matrix(k):
                cert["kernel_witness"] = _edge_word(enum_a, ui, letter, vi)
                return Verdict(finite=False, reason="kernel-not-unipotent", certificate=cert)
            if k not in seen:
                seen.add(k)
                kernel.append(k)

    cert["relator_count"] = surveyed
    cert["kernel"] = {"nontrivial_generators": len(kernel), "generators_unipotent": True}
    if char == 0 or not kernel:
        return Verdict(
            finite=True,
            order=enum_a.order,
            reason="kernel-trivial-faithful-image",
            certificate=cert,
        )
    closure_ok = normal_closure_unipotent(kernel, G)
    cert["kernel"]["closure_unipotent"] = closure_ok
    if closure_ok:
        return Verdict(
            finite=True, order=None, reason="kernel-normal-closure-unipotent", certificate=cert
        )
    return Verdict(finite=False, reason="kernel-closure-not-unipotent", certificate=cert)


def _edge_word(enum: fingrp.Enumeration, ui: int, letter: int, vi: int) -> str:
    rel = fingrp.free_reduce(
        enum.words[ui] + (letter,) + fingrp.invert_word(enum.words[vi])
    )
    return parse.word_to_str(fingrp.word_pairs(rel))
