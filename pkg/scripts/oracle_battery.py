#!/usr/bin/env python3
"""Cross-check the decision procedure against brute-force closure enumeration.

Draws seeded random 2x2 groups over Q from a pool of signed permutations,
finite-order rotations, and unipotent translations, then compares is_finite
against an exact oracle: probe elements for non-torsion behavior (any torsion
element of GL(2, Q) satisfies M^12 = I), and otherwise enumerate the closure
outright.  Any disagreement is printed and the script exits nonzero.
"""

import argparse
import itertools
import random
import sys
from fractions import Fraction

from finmat import GroupInput, Mat, is_finite
from finmat.fields import RATIONALS


def q(rows):
    return Mat(RATIONALS, [[Fraction(v) for v in row] for row in rows])


POOL = [
    q([[0, 1], [1, 0]]),
    q([[-1, 0], [0, 1]]),
    q([[1, 0], [0, -1]]),
    q([[-1, 0], [0, -1]]),
    q([[0, -1], [1, 0]]),
    q([[0, -1], [1, -1]]),
    q([[0, -1], [1, 1]]),
    q([[1, 1], [-1, 1]]),
    q([[2, -1], [1, 0]]),
    q([[1, -2], [1, -1]]),
    q([[1, 1], [0, 1]]),
    q([[1, -2], [0, 1]]),
    q([[1, 0], [2, 1]]),
]


def draw_group(seed):
    rng = random.Random(seed)
    gens = [POOL[rng.randrange(len(POOL))] for _ in range(2)]
    return GroupInput.build(RATIONALS, gens)


def closure(gens, cap):
    I = Mat.identity(RATIONALS, 2)
    dirs = list(gens) + [g.inverse() for g in gens]
    seen = {I}
    queue = [I]
    while queue:
        u = queue.pop()
        for d in dirs:
            v = u * d
            if v not in seen:
                if len(seen) >= cap:
                    return seen, False
                seen.add(v)
                queue.append(v)
    return seen, True


def oracle(gens, cap):
    I = Mat.identity(RATIONALS, 2)
    probes = list(gens)
    probes += [a * b for a, b in itertools.product(gens, repeat=2)]
    probes += [a * b.inverse() for a, b in itertools.product(gens, repeat=2)]
    probes += [a * b * a.inverse() * b.inverse() for a, b in
               itertools.permutations(gens, 2)]
    for m in probes:
        if not (m ** 12 - I).is_zero():  # torsion in GL(2, Q) divides 12
            return False
    elements, complete = closure(gens, cap)
    return True if complete else None


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=200, help="groups to draw")
    ap.add_argument("--cap", type=int, default=10_000,
                    help="closure-size cutoff for the oracle")
    ap.add_argument("--seed-base", type=int, default=0)
    args = ap.parse_args()

    agree = undecided = 0
    disagreements = []
    for i in range(args.count):
        seed = args.seed_base + i
        G = draw_group(seed)
        verdict = is_finite(G)
        expected = oracle(G.gens, args.cap)
        if verdict.finite is None or expected is None:
            undecided += 1
            continue
        if verdict.finite == expected:
            agree += 1
        else:
            disagreements.append((seed, verdict.finite, expected, verdict.reason))
    print(f"groups: {args.count}   agree: {agree}   "
          f"undecided (either side): {undecided}   "
          f"disagree: {len(disagreements)}")
    for seed, got, want, reason in disagreements:
        print(f"  seed {seed}: is_finite={got} oracle={want} ({reason})")
    return 1 if disagreements else 0


if __name__ == "__main__":
    sys.exit(main())
