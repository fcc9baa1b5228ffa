import random

import pytest

import grps
import oracles
from finmat.decide import Config
from finmat.errors import InputError
from finmat.fields import RATIONALS
from finmat.fingrp import evaluate_word
from finmat.matrices import GroupInput, Mat
from finmat.recognize import (
    isomorphic_copy,
    membership,
    order_of_finite,
    structural_queries,
)


def test_rot90_copy_single_attempt():
    copy = isomorphic_copy(grps.rot90_group())
    assert copy.attempts == 1
    assert copy.order == 4
    assert copy.cmap.kind == "Phi1"
    # witness words lift to exact source elements
    G = copy.group
    for i, img in enumerate(copy.enum.elements):
        lift = copy.lift_word(copy.enum.words[i])
        assert evaluate_word(copy.enum.words[i], copy.enum.identity,
                             copy.enum.gens, copy.enum.invs) == img
        assert lift.field is G.field


def test_klein_charp_retry_schedule():
    copy = isomorphic_copy(grps.klein_f2x_group())
    # points 0 and 1 each collapse one kernel generator; the third point,
    # in GF(4), is the first faithful one
    assert copy.attempts == 3
    assert copy.order == 4
    assert copy.cmap.target.q == 4
    assert copy.cmap.target.p == 2


def test_infinite_group_rejected():
    with pytest.raises(InputError) as ei:
        isomorphic_copy(grps.unipotent_q_group())
    assert "infinite" in str(ei.value)


def test_order_of_finite():
    assert order_of_finite(grps.rot90_group()) == 4
    assert order_of_finite(grps.dihedral8_group()) == 8
    assert order_of_finite(grps.quaternion_group()) == 8
    assert order_of_finite(grps.klein_f2x_group()) == 4
    assert order_of_finite(GroupInput.build(RATIONALS, [], n=2)) == 1


def test_membership_negative_then_positive():
    rot = grps.rot90_group()
    minus_i = grps.mat(RATIONALS, [[-1, 0], [0, -1]])
    res = membership(rot, minus_i)
    assert res.member is True
    assert res.word == "a^2"
    assert res.group_order == 4
    assert res.extended_order == 4

    flip = grps.mat(RATIONALS, [[1, 0], [0, -1]])
    res2 = membership(rot, flip)
    assert res2.member is False
    assert res2.group_order == 4
    assert res2.extended_order == 8


def test_membership_identity_is_empty_word():
    rot = grps.rot90_group()
    res = membership(rot, Mat.identity(RATIONALS, 2))
    assert res.member is True
    assert res.word == "1"


def test_membership_infinite_extension():
    rot = grps.rot90_group()
    u = grps.mat(RATIONALS, [[1, 1], [0, 1]])
    res = membership(rot, u)
    assert res.member is False
    assert "infinite" in res.reason


def test_membership_rejects_infinite_group():
    with pytest.raises(InputError):
        membership(grps.unipotent_q_group(), Mat.identity(RATIONALS, 2))


def test_membership_matches_brute_force():
    rng = random.Random(515151)
    checked = 0
    seed = 0
    while checked < 12:
        seed += 1
        G = grps.random_gl2q_group(seed)
        elements, complete = oracles.closure(G.gens, cap=500)
        if not complete:
            continue
        # one member (random product) and one candidate that may or may not be
        pool = list(elements)
        x_in = pool[rng.randrange(len(pool))]
        res = membership(G, x_in)
        assert res.member is True
        lifted = evaluate_word(_parse_word(res.word, len(G.gens)),
                               Mat.identity(RATIONALS, 2), G.gens, G.invs)
        assert lifted == x_in

        probe = grps.mat(RATIONALS, [[1, 3], [0, 1]])
        res2 = membership(G, probe)
        assert res2.member == (probe in elements)
        checked += 1


def _parse_word(text, num_gens):
    """word text -> flat signed letters for evaluate_word"""
    from finmat.parse import parse_word

    flat = []
    for gen, exp in parse_word(text, num_gens):
        letter = gen + 1 if exp > 0 else -(gen + 1)
        flat.extend([letter] * abs(exp))
    return tuple(flat)


def test_center_and_derived_quaternion():
    Q8 = grps.quaternion_group()
    res = structural_queries(Q8)
    assert res.order == 8
    assert res.center.order == 2
    assert res.derived.order == 2
    elements, complete = oracles.closure(Q8.gens, cap=100)
    assert complete
    assert oracles.center_order(elements) == 2
    assert oracles.derived_subgroup_order(elements) == 2
    # center generator words lift to elements commuting with every generator
    for w in res.center.generator_words:
        z = evaluate_word(_parse_word(w, len(Q8.gens)),
                          Mat.identity(Q8.field, 2), Q8.gens, Q8.invs)
        for g in Q8.gens:
            assert z * g == g * z


def test_center_abelian_group_is_whole():
    rot = grps.rot90_group()
    res = structural_queries(rot)
    assert res.center.order == 4
    assert res.derived.order == 1
    assert res.derived.generator_words == []


def test_dihedral_derived():
    res = structural_queries(grps.dihedral8_group())
    assert res.order == 8
    assert res.center.order == 2
    assert res.derived.order == 2
    elements, _ = oracles.closure(grps.dihedral8_group().gens, cap=100)
    assert oracles.derived_subgroup_order(elements) == 2


def test_klein_structural():
    res = structural_queries(grps.klein_f2x_group())
    assert res.order == 4
    assert res.center.order == 4  # abelian
    assert res.derived.order == 1
    assert res.attempts == 3
    assert res.copy is not None


def test_signed_perm_derived_matches_oracle():
    G = grps.signed_perm3_derived_group(seed=2026)
    res = structural_queries(G)
    assert res.order == 12
    elements, complete = oracles.closure(G.gens, cap=2000)
    assert complete and len(elements) == 12
    assert res.derived.order == oracles.derived_subgroup_order(elements) == 4
    # derived generator words lift into the source group
    for w in res.derived.generator_words:
        d = evaluate_word(_parse_word(w, len(G.gens)),
                          Mat.identity(G.field, G.n), G.gens, G.invs)
        assert d in elements


def test_structural_rejects_infinite():
    with pytest.raises(InputError):
        structural_queries(grps.unipotent_q_group())


def test_copy_respects_config_attempt_limit():
    from finmat.errors import AttemptsExhaustedError

    with pytest.raises(AttemptsExhaustedError):
        isomorphic_copy(grps.klein_f2x_group(), Config(max_attempts=2))
