"""Breadth-first enumeration of finite matrix groups, Cayley presentations,
and product-replacement random elements.

Words are tuples of signed 1-based letters: ``k > 0`` means generator k,
``k < 0`` means its inverse.  The enumeration records a witness word and a
spanning-tree parent for every element, which is what the presentation and
the recognition lifts are built from.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field

from .matrices import Mat


def free_reduce(word) -> tuple:
    out = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def invert_word(word) -> tuple:
    return tuple(-x for x in reversed(word))


def word_pairs(word) -> tuple:
    """Signed-letter word to merged (generator_index, exponent) pairs."""
    out = []
    for x in word:
        gen = abs(x) - 1
        exp = 1 if x > 0 else -1
        if out and out[-1][0] == gen:
            merged = out[-1][1] + exp
            if merged == 0:
                out.pop()
            else:
                out[-1] = (gen, merged)
        else:
            out.append((gen, exp))
    return tuple(out)


def evaluate_word(word, identity: Mat, gens, invs) -> Mat:
    acc = identity
    for x in word:
        acc = acc * (gens[x - 1] if x > 0 else invs[-x - 1])
    return acc


@dataclass
class Enumeration:
    """BFS closure of a generating set.

    When ``complete`` is false the enumeration was cut off: the true order is
    strictly greater than ``lower_bound`` and the element data covers only
    what was discovered before the cap hit.
    """

    complete: bool
    identity: Mat
    gens: tuple
    invs: tuple
    elements: list = dc_field(repr=False)
    words: list = dc_field(repr=False)
    parent: list = dc_field(repr=False)
    parent_letter: list = dc_field(repr=False)
    index: dict = dc_field(repr=False)
    lower_bound: int | None = None

    @property
    def order(self) -> int:
        if not self.complete:
            raise ValueError("enumeration was capped; order unknown")
        return len(self.elements)

    def directions(self):
        out = [(i + 1, g) for i, g in enumerate(self.gens)]
        out += [(-(i + 1), g) for i, g in enumerate(self.invs)]
        return out


def enumerate_group(identity: Mat, gens, invs, cap: int) -> Enumeration:
    """Enumerate the group generated by ``gens`` (finite field entries, or
    any exactly hashable matrices), visiting by generators first and their
    inverses second, breadth first."""
    gens = tuple(gens)
    invs = tuple(invs)
    elements = [identity]
    words = [()]
    parent = [-1]
    parent_letter = [0]
    index = {identity: 0}
    enum = Enumeration(
        complete=True,
        identity=identity,
        gens=gens,
        invs=invs,
        elements=elements,
        words=words,
        parent=parent,
        parent_letter=parent_letter,
        index=index,
    )
    directions = enum.directions()
    qi = 0
    while qi < len(elements):
        u = elements[qi]
        wu = words[qi]
        for letter, g in directions:
            v = u * g
            if v in index:
                continue
            index[v] = len(elements)
            elements.append(v)
            words.append(wu + (letter,))
            parent.append(qi)
            parent_letter.append(letter)
            if len(elements) > cap:
                enum.complete = False
                enum.lower_bound = cap
                return enum
        qi += 1
    return enum


def iter_edges(enum: Enumeration):
    """All directed Cayley edges (u_index, letter, v_index), recomputed."""
    directions = enum.directions()
    for ui, u in enumerate(enum.elements):
        for letter, g in directions:
            yield ui, letter, enum.index[u * g]


def cayley_presentation(enum: Enumeration) -> list[tuple]:
    """Relators of the presentation read off the spanning tree: one per
    directed non-tree edge, the word w(u) * letter * w(v)^-1 freely reduced.

    Relators that reduce to the empty word are kept so the relator list
    matches the edge count exactly (2 * r * |H| minus the |H| - 1 tree
    edges); consumers that evaluate relators skip empty ones cheaply.
    """
    if not enum.complete:
        raise ValueError("cannot present a capped enumeration")
    relators = []
    for ui, letter, vi in iter_edges(enum):
        if enum.parent[vi] == ui and enum.parent_letter[vi] == letter:
            continue
        rel = free_reduce(enum.words[ui] + (letter,) + invert_word(enum.words[vi]))
        relators.append(rel)
    return relators


def product_replacement(
    identity: Mat, gens, invs, seed: int, count: int, burn: int = 50
) -> list[Mat]:
    """Pseudo-random group elements by the product-replacement walk with an
    accumulator; fully deterministic for a given seed."""
    gens = list(gens)
    invs = list(invs)
    if not gens:
        return [identity] * count
    size = max(len(gens), 4)
    slots = [gens[i % len(gens)] for i in range(size)]
    slot_invs = [invs[i % len(invs)] for i in range(size)]
    rng = random.Random(seed)
    acc = identity
    out = []
    total = burn + count
    for step in range(total):
        i = rng.randrange(size)
        j = rng.randrange(size - 1)
        if j >= i:
            j += 1
        right = rng.randrange(2)
        use_inv = rng.randrange(2)
        t = slot_invs[j] if use_inv else slots[j]
        t_inv = slots[j] if use_inv else slot_invs[j]
        if right:
            slots[i] = slots[i] * t
            slot_invs[i] = t_inv * slot_invs[i]
        else:
            slots[i] = t * slots[i]
            slot_invs[i] = slot_invs[i] * t_inv
        acc = acc * slots[i]
        if step >= burn:
            out.append(acc)
    return out
