"""Command-line interface.

Commands (all take a group file; results go to stdout as one line of
key-sorted JSON, diagnostics to stderr):

  isfinite FILE             decide finiteness of the group
  eltorder FILE             finiteness and order of a single element
  swimage FILE              congruence map certificate and image generators
  recognize FILE            faithful copy: order, attempts, center, derived
  member FILE --element F   membership test with a verified word witness
  order FILE                exact order of a finite group

Exit status: 0 when the question was decided, 1 when it was not (resource
caps, attempt budgets), 2 on invalid input.

A group file is a JSON object::

    {"field": {...}, "degree": 2, "generators": [[["0","-1"],["1","0"]]],
     "label": "rot90"}

with field descriptors as produced by the library (kinds: rationals,
number_field, finite_field, rational_function, algebraic_function), entries
as expression strings, and an element file is ``{"matrix": [["..."]]}``.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import decide, limits, parse, recognize, sw
from .decide import Config
from .errors import (
    AttemptsExhaustedError,
    FinmatError,
    InputError,
    ResourceLimitError,
)
from .matrices import GroupInput, Mat

SCHEMA = "finmat/1"

EXIT_DECIDED = 0
EXIT_UNDECIDED = 1
EXIT_INVALID = 2


def _load_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as ex:
        raise InputError(f"cannot read {path}: {ex}") from None
    except json.JSONDecodeError as ex:
        raise InputError(f"{path} is not valid JSON: {ex}") from None


def _string_grid(raw, what: str):
    if not isinstance(raw, list) or not raw:
        raise InputError(f"{what} must be a non-empty list of rows")
    grid = []
    for row in raw:
        if not isinstance(row, list) or not all(isinstance(s, str) for s in row):
            raise InputError(f"{what} rows must be lists of entry strings")
        grid.append(row)
    return grid


def load_group(path: str) -> GroupInput:
    data = _load_json(path)
    if not isinstance(data, dict):
        raise InputError("group file must be a JSON object")
    for key in ("field", "generators"):
        if key not in data:
            raise InputError(f"group file is missing the '{key}' key")
    field = parse.field_from_json(data["field"])
    if field.kind == "finite_field":
        raise InputError(
            "group scalars must come from an infinite field; a finite-field "
            "group is already finite and needs no congruence image"
        )
    raw_gens = data["generators"]
    if not isinstance(raw_gens, list):
        raise InputError("'generators' must be a list of matrices")
    mats = [
        Mat.from_strings(field, _string_grid(g, f"generator {i + 1}"))
        for i, g in enumerate(raw_gens)
    ]
    degree = data.get("degree")
    if degree is not None and not isinstance(degree, int):
        raise InputError("'degree' must be an integer")
    label = data.get("label")
    return GroupInput.build(field, mats, n=degree, label=label)


def load_element(path: str, G: GroupInput) -> Mat:
    data = _load_json(path)
    if not isinstance(data, dict) or "matrix" not in data:
        raise InputError("element file must be a JSON object with a 'matrix' key")
    return Mat.from_strings(G.field, _string_grid(data["matrix"], "matrix"))


def _config(args) -> Config:
    table = None
    if args.nu1_table:
        try:
            raw = json.loads(args.nu1_table)
            table = {int(k): int(v) for k, v in raw.items()}
        except (ValueError, AttributeError) as ex:
            raise InputError(f"--nu1-table must be a JSON object: {ex}") from None
    return Config(
        seed=args.seed,
        cap=args.cap,
        skip_base=args.skip,
        precheck=args.precheck,
        max_attempts=args.max_attempts,
        max_bits=args.budget_bits,
        max_terms=args.budget_terms,
        nu1_table=table,
    )


def _emit(command: str, payload: dict) -> None:
    out = {"schema": SCHEMA, "command": command}
    out.update(payload)
    sys.stdout.write(json.dumps(out, sort_keys=True) + "\n")


def _verdict_payload(v: decide.Verdict) -> dict:
    return {
        "finite": "undecided" if v.finite is None else v.finite,
        "order": v.order,
        "reason": v.reason,
        "certificate": v.certificate,
    }


def _cmd_isfinite(args) -> int:
    G = load_group(args.group)
    v = decide.is_finite(G, _config(args))
    _emit("isfinite", _verdict_payload(v))
    return EXIT_DECIDED if v.finite is not None else EXIT_UNDECIDED


def _cmd_eltorder(args) -> int:
    G = load_group(args.group)
    if args.word is not None and args.gen_index is not None:
        raise InputError("give either --gen-index or --word, not both")
    if args.word is not None:
        pairs = parse.parse_word(args.word, len(G.gens))
        elem = Mat.identity(G.field, G.n)
        for gen, exp in pairs:
            elem = elem * (G.gens[gen] ** exp)
        which = {"word": args.word}
    else:
        idx = 1 if args.gen_index is None else args.gen_index
        if not 1 <= idx <= len(G.gens):
            raise InputError(f"--gen-index must be in 1..{len(G.gens)}")
        elem = G.gens[idx - 1]
        which = {"gen_index": idx}
    v = decide.is_finite_cyclic(G.field, elem, _config(args))
    payload = _verdict_payload(v)
    payload["element"] = which
    _emit("eltorder", payload)
    return EXIT_DECIDED if v.finite is not None else EXIT_UNDECIDED


def _cmd_swimage(args) -> int:
    G = load_group(args.group)
    cfg = _config(args)
    with limits.budget(cfg.max_bits, cfg.max_terms):
        cmap = sw.build_sw(G, cfg.skip_base)
        imgs, _ = sw.sw_image(cmap, G)
    _emit(
        "swimage",
        {
            "certificate": sw.certificate_json(cmap),
            "image_generators": [m.to_strings() for m in imgs],
        },
    )
    return EXIT_DECIDED


def _cmd_recognize(args) -> int:
    G = load_group(args.group)
    st = recognize.structural_queries(G, _config(args))
    copy = st.copy
    _emit(
        "recognize",
        {
            "order": st.order,
            "attempts": st.attempts,
            "certificate": sw.certificate_json(copy.cmap),
            "image_generators": [
                sw.apply_sw(copy.cmap, g).to_strings() for g in G.gens
            ],
            "center": {
                "order": st.center.order,
                "generator_words": st.center.generator_words,
            },
            "derived": {
                "order": st.derived.order,
                "generator_words": st.derived.generator_words,
            },
        },
    )
    return EXIT_DECIDED


def _cmd_member(args) -> int:
    G = load_group(args.group)
    x = load_element(args.element, G)
    res = recognize.membership(G, x, _config(args))
    _emit(
        "member",
        {
            "member": res.member,
            "witness": res.word,
            "group_order": res.group_order,
            "extended_order": res.extended_order,
            "reason": res.reason,
        },
    )
    return EXIT_DECIDED


def _cmd_order(args) -> int:
    G = load_group(args.group)
    n = recognize.order_of_finite(G, _config(args))
    _emit("order", {"order": n})
    return EXIT_DECIDED


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("group", help="path to the group JSON file")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized prechecks")
    common.add_argument("--cap", type=int, default=200_000, help="enumeration cap")
    common.add_argument("--skip", type=int, default=0, help="steps to skip in the selection schedule")
    common.add_argument("--max-attempts", type=int, default=64, help="map retries in recognition")
    common.add_argument("--budget-bits", type=int, default=limits.DEFAULT_MAX_BITS, help="scalar size budget (bits)")
    common.add_argument("--budget-terms", type=int, default=limits.DEFAULT_MAX_TERMS, help="polynomial size budget (terms)")
    common.add_argument("--precheck", type=int, default=10, help="random elements to pretest (0 disables)")
    common.add_argument("--nu1-table", default=None, help="JSON object mapping n0 to a finite-subgroup order bound")

    p = argparse.ArgumentParser(prog="finmat", description=__doc__.split("\n\n")[0])
    subs = p.add_subparsers(dest="command", required=True)

    sp = subs.add_parser("isfinite", parents=[common], help="decide finiteness")
    sp.set_defaults(fn=_cmd_isfinite)

    sp = subs.add_parser("eltorder", parents=[common], help="order of one element")
    sp.add_argument("--gen-index", type=int, default=None, help="1-based generator index")
    sp.add_argument("--word", default=None, help="word in the generators, e.g. a^2*b^-1")
    sp.set_defaults(fn=_cmd_eltorder)

    sp = subs.add_parser("swimage", parents=[common], help="congruence image and certificate")
    sp.set_defaults(fn=_cmd_swimage)

    sp = subs.add_parser("recognize", parents=[common], help="faithful copy and structure")
    sp.set_defaults(fn=_cmd_recognize)

    sp = subs.add_parser("member", parents=[common], help="membership test")
    sp.add_argument("--element", required=True, help="path to the element JSON file")
    sp.set_defaults(fn=_cmd_member)

    sp = subs.add_parser("order", parents=[common], help="order of a finite group")
    sp.set_defaults(fn=_cmd_order)
    return p


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ResourceLimitError, AttemptsExhaustedError) as ex:
        print(f"undecided: {ex}", file=sys.stderr)
        return EXIT_UNDECIDED
    except FinmatError as ex:
        print(f"error: {ex}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
