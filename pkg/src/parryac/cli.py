"""Command-line surface.

One executable with subcommands:

    ac      complexity values over a range of n (closed form / Sturmian)
    oracle  brute-force window interval for one n
    verify  closed form vs prefix-difference vs oracle over 1..n_max
    urep    greedy U-representation digits of n
    word    emit a prefix of the fixed point, v, or w
    maxac   maximum complexity and optimal balance bound

Exit codes: 0 success, 1 verification mismatch, 2 oracle instability,
64 usage error, 65 unsupported construction.  Output is deterministic;
--format selects plain, csv, or json where applicable.
"""

from __future__ import annotations

import argparse
import json
import sys

from .complexity import ac, ac_via_prefix_counts, balance_bound, max_ac
from .extremal import w_prefix_nonsimple, wv_prefix_simple
from .numeration import normal_u_rep
from .oracle import ORACLE_N_CAP, OracleInstabilityError, oracle_ac, parikh_extrema
from .words import (
    CapExceededError,
    Family,
    Morphism,
    UnsupportedConstructionError,
    UBETA,
    V,
    W,
    fixed_point_prefix,
)

EX_OK = 0
EX_MISMATCH = 1
EX_UNSTABLE = 2
EX_USAGE = 64
EX_UNSUPPORTED = 65


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad usage; the contract here is 64
    def error(self, message):
        raise _UsageError(message)


def _decimal(text: str) -> int:
    try:
        return int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a decimal integer: {text!r}")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--family", required=True, choices=[f.value for f in Family])
    common.add_argument("--p", type=int, required=True, help="image of A is A^p B")
    common.add_argument("--q", type=int, required=True,
                        help="image of B is A^q (simple) or A^q B (non-simple)")
    common.add_argument("--format", choices=["plain", "csv", "json"], default="plain")

    parser = _Parser(prog="parryac",
                     description="Abelian complexity of quadratic Parry fixed points")
    sub = parser.add_subparsers(dest="command", required=True)

    p_ac = sub.add_parser("ac", parents=[common],
                          help="complexity over a range of n", add_help=True)
    p_ac.add_argument("--n", type=_decimal, required=True,
                      help="first length (decimal, arbitrary size)")
    p_ac.add_argument("--n-end", type=_decimal, default=None,
                      help="last length, inclusive (default: --n)")
    p_ac.set_defaults(handler=_cmd_ac)

    p_oracle = sub.add_parser("oracle", parents=[common],
                              help="brute-force window interval for one n")
    p_oracle.add_argument("--n", type=int, required=True)
    p_oracle.add_argument("--prefix-len", type=int, default=None,
                          help="scan exactly this prefix instead of stabilizing")
    p_oracle.set_defaults(handler=_cmd_oracle)

    p_verify = sub.add_parser("verify", parents=[common],
                              help="three-way agreement over 1..n_max")
    p_verify.add_argument("--n-max", type=int, required=True)
    p_verify.set_defaults(handler=_cmd_verify)

    p_urep = sub.add_parser("urep", parents=[common],
                            help="greedy U-representation digits of n")
    p_urep.add_argument("--n", type=_decimal, required=True)
    p_urep.add_argument("--places", type=int, default=None,
                        help="left-pad with zeros to this many places")
    p_urep.set_defaults(handler=_cmd_urep)

    p_word = sub.add_parser("word", parents=[common], help="emit a word prefix")
    p_word.add_argument("--which", required=True, choices=[UBETA, V, W])
    p_word.add_argument("--len", type=int, required=True, dest="length")
    p_word.set_defaults(handler=_cmd_word)

    p_maxac = sub.add_parser("maxac", parents=[common],
                             help="maximum complexity and balance bound")
    p_maxac.set_defaults(handler=_cmd_maxac)

    return parser


def _cmd_ac(m: Morphism, args) -> int:
    n_start = args.n
    n_end = args.n_end if args.n_end is not None else n_start
    if n_start < 1 or n_end < n_start:
        raise ValueError(f"need 1 <= n <= n_end, got n={n_start}, n_end={n_end}")
    results = [ac(m, n) for n in range(n_start, n_end + 1)]
    if args.format == "csv":
        print("n,ac,method")
        for r in results:
            print(f"{r.n},{r.value},{r.method}")
    elif args.format == "json":
        print(json.dumps({
            "p": m.p, "q": m.q, "family": m.family.value,
            "results": [{"n": str(r.n), "ac": r.value, "method": r.method}
                        for r in results],
        }))
    else:
        for r in results:
            print(f"{r.n} {r.value} {r.method}")
    return EX_OK


def _cmd_oracle(m: Morphism, args) -> int:
    if args.prefix_len is not None:
        interval = parikh_extrema(m, args.n, args.prefix_len)
    else:
        interval = oracle_ac(m, args.n)
    fields = [("n", interval.n), ("min_b", interval.min_b), ("max_b", interval.max_b),
              ("ac", interval.ac), ("prefix_len_used", interval.prefix_len_used),
              ("stabilized", str(interval.stabilized).lower())]
    if args.format == "csv":
        print(",".join(name for name, _ in fields))
        print(",".join(str(value) for _, value in fields))
    elif args.format == "json":
        payload = {"p": m.p, "q": m.q, "family": m.family.value}
        payload.update({name: value for name, value in fields})
        payload["stabilized"] = interval.stabilized
        print(json.dumps(payload))
    else:
        print(" ".join(f"{name}={value}" for name, value in fields))
    return EX_OK


def _cmd_verify(m: Morphism, args) -> int:
    n_max = args.n_max
    if n_max < 1:
        raise ValueError(f"n_max must be at least 1, got {n_max}")
    if n_max > ORACLE_N_CAP:
        raise ValueError(f"n_max={n_max} exceeds the oracle cap {ORACLE_N_CAP}")
    sturmian_simple = m.family is Family.SIMPLE and m.q == 1
    mismatches = []
    unstable = []
    for n in range(1, n_max + 1):
        closed = ac(m, n).value
        diff = None if sturmian_simple else ac_via_prefix_counts(m, n)
        try:
            brute = oracle_ac(m, n).ac
        except OracleInstabilityError:
            unstable.append(n)
            continue
        if closed != brute or (diff is not None and diff != closed):
            mismatches.append((n, closed, diff, brute))
    if unstable:
        print(f"UNSTABLE {len(unstable)} of {n_max}: oracle did not stabilize for "
              + ", ".join(map(str, unstable[:20])))
        return EX_UNSTABLE
    if mismatches:
        for n, closed, diff, brute in mismatches:
            shown = "n/a" if diff is None else diff
            print(f"MISMATCH n={n}: closed_form={closed} prefix_difference={shown} oracle={brute}")
        return EX_MISMATCH
    print(f"OK {n_max} checked")
    return EX_OK


def _cmd_urep(m: Morphism, args) -> int:
    if args.n < 0:
        raise ValueError(f"n must be nonnegative, got {args.n}")
    digits = normal_u_rep(m, args.n, min_places=args.places)
    if args.format == "json":
        print(json.dumps({"p": m.p, "q": m.q, "family": m.family.value,
                          "n": str(args.n), "digits": list(digits)}))
    else:
        print(",".join(map(str, digits)))
    return EX_OK


def _cmd_word(m: Morphism, args) -> int:
    if args.length < 0:
        raise ValueError(f"len must be nonnegative, got {args.length}")
    if args.which == UBETA:
        text = fixed_point_prefix(m, args.length)
    elif m.family is Family.NONSIMPLE:
        text = (w_prefix_nonsimple(m, args.length) if args.which == W
                else fixed_point_prefix(m, args.length))
    else:
        text = wv_prefix_simple(m, args.which, args.length)
    print(text)
    return EX_OK


def _cmd_maxac(m: Morphism, args) -> int:
    top = max_ac(m)
    bound = balance_bound(m)
    if args.format == "csv":
        print("max_ac,balance_bound")
        print(f"{top},{bound}")
    elif args.format == "json":
        print(json.dumps({"p": m.p, "q": m.q, "family": m.family.value,
                          "max_ac": top, "balance_bound": bound}))
    else:
        print(f"{top} {bound}")
    return EX_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EX_USAGE
    try:
        morphism = Morphism(args.p, args.q, args.family)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_USAGE
    try:
        return args.handler(morphism, args)
    except UnsupportedConstructionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_UNSUPPORTED
    except OracleInstabilityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_UNSTABLE
    except (ValueError, CapExceededError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_USAGE


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
