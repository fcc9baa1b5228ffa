#!/usr/bin/env python3
"""End-to-end tour of the library on the bundled sample groups.

Loads each group file from scripts/sample_groups/, decides finiteness, and
runs the recognition features on the finite ones.  Everything here goes
through the same public API the CLI uses.
"""

import json
import pathlib
import time

from finmat import (
    GroupInput,
    Mat,
    field_from_json,
    is_finite,
    isomorphic_copy,
    membership,
    structural_queries,
)

SAMPLES = pathlib.Path(__file__).resolve().parent / "sample_groups"


def load(name):
    data = json.loads((SAMPLES / name).read_text())
    field = field_from_json(data["field"])
    gens = [Mat.from_strings(field, rows) for rows in data["generators"]]
    return GroupInput.build(field, gens, label=data.get("label"))


def banner(text):
    print()
    print(f"== {text} ==")


def main():
    for name in ["rot90.json", "unipotent_q.json", "gauss_diag.json",
                 "wreath_zeta5.json", "klein_f2x.json"]:
        G = load(name)
        banner(f"{name}: {G.label}")
        start = time.monotonic()
        verdict = is_finite(G)
        elapsed = time.monotonic() - start
        print(f"finite: {verdict.finite}   reason: {verdict.reason}   [{elapsed:.2f}s]")
        if verdict.order is not None:
            print(f"order (from the faithful image): {verdict.order}")
        for cmap in verdict.certificate.get("maps", []):
            target = cmap["target"]
            print(f"map {cmap['kind']}: target GF({target['p']}^{target['l']}),"
                  f" justified by {cmap['justification']}")

    banner("recognition on the F2(x) group")
    G = load("klein_f2x.json")
    copy = isomorphic_copy(G)
    print(f"faithful copy found on attempt {copy.attempts}: "
          f"GF({copy.cmap.target.p}^{copy.cmap.target.l}), order {copy.order}")
    res = structural_queries(G)
    print(f"center order {res.center.order}, derived subgroup order {res.derived.order}")

    banner("membership in the rotation group")
    rot = load("rot90.json")
    x = Mat.from_strings(rot.field, [["-1", "0"], ["0", "-1"]])
    answer = membership(rot, x)
    print(f"-I in <rot90>: {answer.member}, witness word: {answer.word}")
    y = Mat.from_strings(rot.field, [["1", "0"], ["0", "-1"]])
    answer = membership(rot, y)
    print(f"diag(1,-1) in <rot90>: {answer.member} "
          f"(group order {answer.group_order}, extended {answer.extended_order})")


if __name__ == "__main__":
    main()
