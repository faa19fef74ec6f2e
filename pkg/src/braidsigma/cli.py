"""Command-line front end: braid-sigma <subcommand>.

Reports are JSON by default (--format text renders simple tables).  All
options can also come from a JSON config file via --config; explicit flags
win.  Exit codes: 0 success, 1 computation error, 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from typing import Sequence

from . import (
    Character,
    Permutation,
    braids_equal,
    chi_m_n,
    classify_links,
    delta_value,
    erase_strands,
    invariants_of,
    join,
    maximal_vertices,
    meet,
    minimal_vertices,
    mirror,
    nerve_of_stars,
    normal_form,
    one_positive_pair,
    order_complex,
    parse_braid_word,
    parse_character,
    prefix_leq,
    pw_vertices,
    reduced_homology,
    rev_vertices,
    sandwich,
    weak_leq,
    word_to_text,
)


class UsageError(ValueError):
    pass


def _parse_pair(text: str) -> tuple[int, int]:
    m = re.fullmatch(r"\s*(\d+)\s*,\s*(\d+)\s*", text)
    if not m:
        raise UsageError(f"expected a pair like '1,3', got {text!r}")
    return int(m.group(1)), int(m.group(2))


def _parse_perm(text: str) -> Permutation:
    body = text.strip()
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1]
    try:
        return Permutation(tuple(int(t) for t in body.split(",")))
    except ValueError as e:
        raise UsageError(str(e)) from None


def _resolve_character(text: str, n: int) -> Character:
    m = re.fullmatch(r"\s*chi\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*", text)
    if m:
        mm, nn = int(m.group(1)), int(m.group(2))
        if nn != n:
            raise UsageError(f"chi({mm},{nn}) does not match --n {n}")
        return chi_m_n(mm, nn)
    return parse_character(text, n)


def _invariants_json(word) -> dict:
    inv = invariants_of(word)
    return {
        "perm": list(inv.perm.bracket),
        "kappa": inv.kappa,
        "twice_windings": {f"{i},{j}": v for (i, j), v in sorted(inv.twice_windings.items())},
    }


def cmd_braid(args) -> dict:
    w = parse_braid_word(args.word, args.n)
    if args.mirror:
        w = mirror(w)
    report = {"n": w.n, "word": word_to_text(w), **_invariants_json(w)}
    if args.erase:
        kept = sorted({int(t) for t in args.erase.split(",")})
        sub = erase_strands(w, kept)
        report["erased"] = {
            "kept": kept,
            "n": sub.n,
            "word": word_to_text(sub),
            **_invariants_json(sub),
        }
    return report


def cmd_nf(args) -> dict:
    nf = normal_form(parse_braid_word(args.word, args.n))
    return nf.to_json()


def cmd_eq(args) -> dict:
    ln = args.left_n or args.n
    rn = args.right_n or args.n
    if ln != rn:
        raise UsageError(f"mismatched strand counts {ln} and {rn}")
    x = parse_braid_word(args.left, ln)
    y = parse_braid_word(args.right, rn)
    return {"n": ln, "left": args.left, "right": args.right, "equal": braids_equal(x, y)}


def cmd_leq(args) -> dict:
    x = parse_braid_word(args.left, args.n)
    y = parse_braid_word(args.right, args.n)
    return {
        "n": args.n,
        "left": args.left,
        "right": args.right,
        "prefix_leq": prefix_leq(x, y),
        "sandwich": sandwich(x, y),
    }


def _homology_report(vertices, max_degree) -> dict:
    cx = order_complex(vertices, weak_leq)
    profile = reduced_homology(cx, max_degree=max_degree)
    return {**cx.to_json(), **profile.to_json()}


def cmd_rev_homology(args) -> dict:
    i, j = _parse_pair(args.pair)
    report = _homology_report(rev_vertices(args.n, i, j), args.max_degree)
    return {"n": args.n, "pair": [i, j], **report}


def cmd_pw_homology(args) -> dict:
    return {"n": args.n, **_homology_report(pw_vertices(args.n), args.max_degree)}


def cmd_nerve(args) -> dict:
    n = args.n
    if args.pair:
        i, j = _parse_pair(args.pair)
    else:
        i, j = 1, n
    ambient = rev_vertices(n, i, j)
    if args.mode == "max":
        centers = [v for v in maximal_vertices(pw_vertices(n)) if v in ambient]
    else:
        centers = minimal_vertices(ambient)
    nerve = nerve_of_stars(centers, ambient, args.mode)
    return {
        "n": n,
        "pair": [i, j],
        "mode": args.mode,
        "centers": [list(c.bracket) for c in nerve.vertices],
        **nerve.to_json(),
        "full_simplex": nerve.is_full_simplex(),
        "simplex_boundary": nerve.is_simplex_boundary(),
    }


def cmd_joinmeet(args) -> dict:
    perms = [_parse_perm(t) for t in args.perms.split(";") if t.strip()]
    if not perms:
        raise UsageError("no permutations given")
    op = join if args.op == "join" else meet
    return {
        "op": args.op,
        "perms": [list(p.bracket) for p in perms],
        "result": list(op(perms).bracket),
    }


def cmd_chi(args) -> dict:
    chi = chi_m_n(args.m, args.n)
    opp = one_positive_pair(chi)
    return {
        "m": args.m,
        "n": args.n,
        "character": chi.to_text(),
        "coefficients": {f"{i},{j}": str(a) for (i, j), a in chi.coefficients},
        "coefficient_sum": str(sum(a for _, a in chi.coefficients)),
        "delta_value": str(delta_value(chi)),
        "one_positive_pair": None
        if opp is None
        else {
            "pair": list(opp.pair),
            "negated": opp.negated,
            "strict": opp.strict,
            "generic": opp.generic,
        },
    }


def cmd_classify(args) -> dict:
    chi = _resolve_character(args.char, args.n)
    if chi.is_zero():
        raise UsageError("the trivial character cannot be classified")
    if delta_value(chi) != 0:
        raise UsageError(
            f"character value on Delta is {delta_value(chi)} != 0; every "
            "ascending link is contractible and there is nothing to classify"
        )
    k_values = None
    if args.k:
        k_values = sorted({int(t) for t in args.k.split(",")})
    sigmas = None
    if args.sigma:
        sigmas = [_parse_perm(t) for t in args.sigma.split(";") if t.strip()]
    report = classify_links(
        chi,
        k_values=k_values,
        sigmas=sigmas,
        max_degree=args.max_degree,
        jobs=args.jobs,
    )
    return report.to_json()


def _render_text(report: dict, out) -> None:
    def walk(value, indent: str) -> None:
        if isinstance(value, dict):
            for key, sub in value.items():
                if isinstance(sub, (dict, list)) and sub:
                    print(f"{indent}{key}:", file=out)
                    walk(sub, indent + "  ")
                else:
                    print(f"{indent}{key}: {sub}", file=out)
        elif isinstance(value, list):
            for item in value:
                if isinstance(item, (dict, list)):
                    print(f"{indent}-", file=out)
                    walk(item, indent + "  ")
                else:
                    print(f"{indent}- {item}", file=out)
        else:
            print(f"{indent}{value}", file=out)

    walk(report, "")


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--n", type=int, help="strand count")
    sub.add_argument("--config", help="JSON file supplying any of the options")
    sub.add_argument("--format", choices=("json", "text"), default="json")
    sub.add_argument("--output", help="write the report to this path")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="braid-sigma",
        description="Braid invariants, Garside normal forms, weak Bruhat "
        "homology, and ascending-link classification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("braid", help="invariants of a braid word")
    _add_common(p)
    p.add_argument("--word", help="braid word, e.g. '2 2 1 -2'")
    p.add_argument("--erase", help="comma-separated labels to keep, e.g. '1,3'")
    p.add_argument("--mirror", action="store_true", help="mirror the word first")
    p.set_defaults(func=cmd_braid, required=("n", "word"))

    p = sub.add_parser("nf", help="left-greedy normal form")
    _add_common(p)
    p.add_argument("--word")
    p.set_defaults(func=cmd_nf, required=("n", "word"))

    p = sub.add_parser("eq", help="braid equality")
    _add_common(p)
    p.add_argument("--left")
    p.add_argument("--right")
    p.add_argument("--left-n", type=int, dest="left_n")
    p.add_argument("--right-n", type=int, dest="right_n")
    p.set_defaults(func=cmd_eq, required=("left", "right"))

    p = sub.add_parser("leq", help="prefix order and the sandwich relation")
    _add_common(p)
    p.add_argument("--left")
    p.add_argument("--right")
    p.set_defaults(func=cmd_leq, required=("n", "left", "right"))

    p = sub.add_parser("rev-homology", help="homology of a reversing subcomplex")
    _add_common(p)
    p.add_argument("--pair", help="pair i,j with i<j")
    p.add_argument("--max-degree", type=int, dest="max_degree")
    p.set_defaults(func=cmd_rev_homology, required=("n", "pair"))

    p = sub.add_parser("pw-homology", help="homology of the proper weak-order part")
    _add_common(p)
    p.add_argument("--max-degree", type=int, dest="max_degree")
    p.set_defaults(func=cmd_pw_homology, required=("n",))

    p = sub.add_parser("nerve", help="nerve of the covering by vertex stars")
    _add_common(p)
    p.add_argument("--pair", help="pair i,j; default 1,n")
    p.add_argument("--mode", choices=("min", "max"), default="max")
    p.set_defaults(func=cmd_nerve, required=("n",))

    p = sub.add_parser("joinmeet", help="lattice join or meet of permutations")
    _add_common(p)
    p.add_argument("--perms", help="semicolon-separated brackets, e.g. '[4,3,1,2];[3,4,2,1]'")
    p.add_argument("--op", choices=("join", "meet"), default="join")
    p.set_defaults(func=cmd_joinmeet, required=("perms",))

    p = sub.add_parser("chi", help="the separating character chi(m,n) and its checks")
    _add_common(p)
    p.add_argument("--m", type=int)
    p.set_defaults(func=cmd_chi, required=("m", "n"))

    p = sub.add_parser("classify", help="ascending-link homology sweep")
    _add_common(p)
    p.add_argument("--char", help="character text, e.g. '2*w[1,2]-w[1,3]-w[2,3]' or 'chi(4,4)'")
    p.add_argument("--k", help="comma-separated k values; default: the whole window")
    p.add_argument("--sigma", help="semicolon-separated brackets restricting the sweep")
    p.add_argument("--max-degree", type=int, dest="max_degree")
    p.add_argument("--jobs", type=int, help="worker processes (default: BRAID_SIGMA_JOBS or cores)")
    p.set_defaults(func=cmd_classify, required=("n", "char"))

    return parser


def _apply_config(args: argparse.Namespace) -> None:
    if not getattr(args, "config", None):
        return
    with open(args.config) as f:
        config = json.load(f)
    if not isinstance(config, dict):
        raise UsageError("config file must hold a JSON object")
    for key, value in config.items():
        attr = key.replace("-", "_")
        if not hasattr(args, attr):
            raise UsageError(f"unknown config key {key!r}")
        if getattr(args, attr) in (None, False):
            setattr(args, attr, value)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _apply_config(args)
        missing = [k for k in args.required if getattr(args, k, None) is None]
        if missing:
            raise UsageError(
                "missing required option(s): " + ", ".join(f"--{k}" for k in missing)
            )
        if getattr(args, "jobs", None) is None and hasattr(args, "jobs"):
            env = os.environ.get("BRAID_SIGMA_JOBS")
            args.jobs = int(env) if env else (os.cpu_count() or 1)
        report = args.func(args)
    except (UsageError, ValueError) as e:
        print(f"braid-sigma: error: {e}", file=sys.stderr)
        return 2
    except Exception as e:  # computation failure
        print(f"braid-sigma: computation failed: {e}", file=sys.stderr)
        return 1
    out = open(args.output, "w") if args.output else sys.stdout
    try:
        if args.format == "json":
            json.dump(report, out, indent=2)
            out.write("\n")
        else:
            _render_text(report, out)
    finally:
        if args.output:
            out.close()
    return 0


if __name__ == "__main__":
    sys.exit(main())
