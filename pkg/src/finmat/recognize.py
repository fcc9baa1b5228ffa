"""Recognition of finite matrix groups over infinite fields: a faithful
finite-field copy, exact order, membership with word witnesses, and the
center and derived subgroup.

Everything runs through :func:`isomorphic_copy`: a congruence map whose
image enumeration closes all relators exactly in the source group, so the
image is an isomorphic copy and questions get answered there, then lifted
back along witness words and re-verified with exact arithmetic.

In characteristic zero any single congruence map is faithful on a finite
group, so one failed relator already proves the group infinite.  In
characteristic p a map can have a (unipotent) kernel even on a finite
group, so the substitution-point schedule is retried until the kernel is
trivial; the number of maps tried is reported as ``attempts``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from . import decide, fingrp, parse, sw
from .decide import Config
from .errors import (
    AttemptsExhaustedError,
    InputError,
    ResourceLimitError,
)
from . import limits
from .matrices import GroupInput, Mat


def _word_str(word) -> str:
    return parse.word_to_str(fingrp.word_pairs(word))


@dataclass
class IsoCopy:
    """A faithful congruence image of a finite group."""

    group: GroupInput
    cmap: sw.CongruenceMap
    enum: fingrp.Enumeration
    attempts: int

    @property
    def order(self) -> int:
        return self.enum.order

    def word_for(self, image_elem: Mat) -> tuple:
        return self.enum.words[self.enum.index[image_elem]]

    def lift_word(self, word) -> Mat:
        G = self.group
        return fingrp.evaluate_word(word, Mat.identity(G.field, G.n), G.gens, G.invs)


def isomorphic_copy(G: GroupInput, config: Config = Config()) -> IsoCopy:
    """Find a congruence map that is injective on the group and enumerate
    the image.  Raises InputError when the group turns out infinite,
    AttemptsExhaustedError when the retry budget runs out."""
    with limits.budget(config.max_bits, config.max_terms):
        return _isomorphic_copy(G, config)


def _isomorphic_copy(G: GroupInput, config: Config) -> IsoCopy:
    char = G.field.characteristic()
    attempts_budget = 1 if char == 0 else config.max_attempts
    for attempt in range(attempts_budget):
        cmap = sw.build_sw(G, config.skip_base + attempt)
        gens_i, invs_i = sw.sw_image(cmap, G)
        enum = fingrp.enumerate_group(
            Mat.identity(cmap.target, G.n), gens_i, invs_i, config.cap
        )
        if not enum.complete:
            raise ResourceLimitError(
                f"image enumeration exceeded the cap of {config.cap}"
            )
        M, Minv = decide._mirrors(enum, G, with_inverses=(char != 0))
        faithful = True
        for ui, letter, vi in fingrp.iter_edges(enum):
            if enum.parent[vi] == ui and enum.parent_letter[vi] == letter:
                continue
            g = G.gens[letter - 1] if letter > 0 else G.invs[-letter - 1]
            lhs = M[ui] * g
            if lhs == M[vi]:
                continue
            faithful = False
            if char == 0:
                raise InputError(
                    "group is infinite: its congruence image is not faithful"
                )
            k = lhs * Minv[vi]
            if not decide.is_unipotent_matrix(k):
                raise InputError(
                    "group is infinite: kernel contains a non-unipotent element"
                )
            break
        if faithful:
            return IsoCopy(group=G, cmap=cmap, enum=enum, attempts=attempt + 1)
    raise AttemptsExhaustedError(
        f"no faithful congruence image within {attempts_budget} attempts"
    )


def order_of_finite(G: GroupInput, config: Config = Config()) -> int:
    """Exact order of a finite group (via a faithful copy)."""
    return isomorphic_copy(G, config).order


@dataclass
class MembershipResult:
    member: bool
    word: str | None = None
    group_order: int | None = None
    extended_order: int | None = None
    reason: str = ""


def membership(G: GroupInput, x: Mat, config: Config = Config()) -> MembershipResult:
    """Whether x lies in the finite group G, with a word witness in G's
    generators when it does.

    The candidate is adjoined to the generators; if the extension stays
    finite, a copy faithful on the extension answers the question, and a
    positive answer is re-verified by exact evaluation of the witness word.
    """
    if x.field != G.field or x.n != G.n:
        raise InputError("candidate matrix must match the group's field and degree")
    vG = decide.is_finite(G, config)
    if vG.finite is not True:
        raise InputError("membership testing requires a finite group")
    H = GroupInput.build(G.field, tuple(G.gens) + (x,))
    vH = decide.is_finite(H, config)
    if vH.finite is None:
        raise ResourceLimitError("could not decide finiteness of the extension")
    if vH.finite is False:
        return MembershipResult(
            member=False, reason="adjoining-candidate-gives-infinite-group"
        )
    copy = isomorphic_copy(H, config)
    phi = copy.cmap
    img_gens = [sw.apply_sw(phi, g) for g in G.gens]
    img_invs = [sw.apply_sw(phi, g) for g in G.invs]
    sub = fingrp.enumerate_group(
        Mat.identity(phi.target, G.n), img_gens, img_invs, config.cap
    )
    if not sub.complete:
        raise ResourceLimitError(f"subgroup enumeration exceeded the cap {config.cap}")
    xi = sw.apply_sw(phi, x)
    idx = sub.index.get(xi)
    if idx is None:
        return MembershipResult(
            member=False,
            group_order=sub.order,
            extended_order=copy.order,
            reason="image-outside-generated-subgroup",
        )
    word = sub.words[idx]
    lifted = fingrp.evaluate_word(
        word, Mat.identity(G.field, G.n), G.gens, G.invs
    )
    assert lifted == x, "witness word failed exact verification"
    return MembershipResult(
        member=True,
        word=_word_str(word),
        group_order=sub.order,
        extended_order=copy.order,
        reason="witness-word-verified",
    )


@dataclass
class SubgroupInfo:
    order: int
    generator_words: list = dc_field(default_factory=list)


@dataclass
class StructureResult:
    order: int
    center: SubgroupInfo
    derived: SubgroupInfo
    attempts: int
    copy: IsoCopy = dc_field(default=None, repr=False)


def structural_queries(G: GroupInput, config: Config = Config()) -> StructureResult:
    """Center and derived subgroup of a finite group, computed in a faithful
    copy and lifted back through witness words.

    Center lifts are re-verified exactly against the source generators; the
    derived subgroup is the closure of the generator commutators under
    conjugation, computed entirely in the image.
    """
    copy = isomorphic_copy(G, config)
    enum = copy.enum
    T = copy.cmap.target
    I_img = Mat.identity(T, G.n)
    img_gens = list(enum.gens)
    img_invs = list(enum.invs)

    center_words = []
    for i, h in enumerate(enum.elements):
        if all(h * g == g * h for g in img_gens):
            center_words.append(enum.words[i])
    for w in center_words:
        lift = copy.lift_word(w)
        for g in G.gens:
            assert lift * g == g * lift, "center lift failed exact verification"

    # derived subgroup: start from generator commutators, close under
    # conjugation by the generators (each pass enumerates the subgroup so
    # products come for free)
    seeds = []
    seen = set()
    for i, (a, ainv) in enumerate(zip(img_gens, img_invs)):
        for j, (b, binv) in enumerate(zip(img_gens, img_invs)):
            if i == j:
                continue
            c = a * b * ainv * binv
            if c != I_img and c not in seen:
                seen.add(c)
                seeds.append(c)
    if seeds:
        while True:
            seed_invs = [s.inverse() for s in seeds]
            sub = fingrp.enumerate_group(I_img, seeds, seed_invs, config.cap)
            if not sub.complete:
                raise ResourceLimitError(
                    f"derived-subgroup enumeration exceeded the cap {config.cap}"
                )
            grown = False
            for h in sub.elements:
                for g, ginv in zip(img_gens, img_invs):
                    c = g * h * ginv
                    if c not in sub.index and c not in seen:
                        seen.add(c)
                        seeds.append(c)
                        grown = True
            if not grown:
                break
        derived_order = sub.order
        derived_words = [enum.words[enum.index[s]] for s in seeds]
    else:
        derived_order = 1
        derived_words = []

    non_identity_center = [w for w in center_words if w]
    return StructureResult(
        order=copy.order,
        center=SubgroupInfo(
            order=len(center_words),
            generator_words=[_word_str(w) for w in non_identity_center],
        ),
        derived=SubgroupInfo(
            order=derived_order,
            generator_words=[_word_str(w) for w in derived_words],
        ),
        attempts=copy.attempts,
        copy=copy,
    )
