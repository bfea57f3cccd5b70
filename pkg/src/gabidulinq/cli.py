"""Command-line front end.

Subcommands: encode, decode, simulate, bench, weights.  All files are JSON
with exact rationals as "num/den" strings.  Exit codes: 0 success, 1
decoding failure (decode subcommand), 2 input contract violation.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import campaign, jsonio
from .code import encode, make_code
from .decoder import decode
from .field import FieldTower
from .rankmetric import rank_weights


def _pair(text: str, what: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"--{what} expects two comma-separated integers")
    return int(parts[0]), int(parts[1])


def _int_list(text: str) -> list[int]:
    return [int(t) for t in text.split(",") if t]


def _tau_list(text: str) -> list[int]:
    """Either a single value '2', a list '0,1,2', or a range '0:3' (inclusive)."""
    if ":" in text:
        lo, hi = text.split(":")
        return list(range(int(lo), int(hi) + 1))
    return _int_list(text)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="gabidulinq",
                                 description="Gabidulin codes over Q(zeta_p)")
    sub = ap.add_subparsers(dest="command", required=True)

    def add_field(p):
        p.add_argument("--field", required=True, metavar="P,G",
                       help="prime p and primitive root g, e.g. 13,2")

    def add_code(p):
        p.add_argument("--code", required=True, metavar="N,K",
                       help="code length n and dimension k, e.g. 12,4")

    p = sub.add_parser("encode", help="encode a message file to a codeword file")
    add_field(p)
    add_code(p)
    p.add_argument("message", help="input message JSON")
    p.add_argument("-o", "--output", required=True, help="output codeword JSON")

    p = sub.add_parser("decode", help="decode a received-word file")
    add_field(p)
    add_code(p)
    p.add_argument("received", help="input received-word JSON")
    p.add_argument("-o", "--output", required=True, help="output message JSON")
    p.add_argument("--solver", choices=["popov", "eea"], default="popov")
    p.add_argument("--trace", action="store_true",
                   help="emit per-stage op counts and degrees to stderr")

    p = sub.add_parser("simulate", help="Monte-Carlo decoding campaign")
    add_field(p)
    add_code(p)
    p.add_argument("--tau", required=True, metavar="T|A,B|LO:HI",
                   help="error ranks to simulate")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--solver", choices=["popov", "eea", "both"], default="popov")
    p.add_argument("-o", "--output", help="report JSON (default: stdout)")

    p = sub.add_parser("bench", help="operation-count scaling bench")
    add_field(p)
    p.add_argument("--sizes", required=True, help="comma-separated sizes, e.g. 6,12")
    p.add_argument("--mode", choices=["decode", "annihilator"], default="decode")
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--solver", choices=["popov", "eea"], default="popov")
    p.add_argument("-o", "--output", help="table JSON (default: stdout)")

    p = sub.add_parser("weights", help="rank-weight report for a vector file")
    add_field(p)
    p.add_argument("vector", help="input vector JSON (codeword schema)")

    return ap


def _emit(obj: dict, path: str | None) -> None:
    text = jsonio.dumps(obj)
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def run(args) -> int:
    if args.command == "encode":
        p, g = _pair(args.field, "field")
        n, k = _pair(args.code, "code")
        tower = FieldTower(p, g)
        code = make_code(tower, n, k)
        mk, f = jsonio.message_from_json(tower, jsonio.load(args.message))
        if mk != k:
            raise ValueError(f"message file declares k={mk}, code has k={k}")
        if f.degree >= k:
            raise ValueError(f"message degree exceeds k-1")
        c = encode(code, f)
        jsonio.dump(jsonio.vector_to_json(c), args.output)
        return 0

    if args.command == "decode":
        p, g = _pair(args.field, "field")
        n, k = _pair(args.code, "code")
        tower = FieldTower(p, g)
        code = make_code(tower, n, k)
        r = jsonio.vector_from_json(tower, jsonio.load(args.received))
        if len(r) != n:
            raise ValueError(f"received word has length {len(r)}, code has n={n}")
        result = decode(code, r, solver=args.solver, trace=args.trace)
        if args.trace and result.trace is not None:
            sys.stderr.write(json.dumps(result.trace, indent=2) + "\n")
        if not result.ok:
            sys.stderr.write(f"decoding failure: {result.failure}\n")
            return 1
        jsonio.dump(jsonio.message_to_json(k, result.message), args.output)
        return 0

    if args.command == "simulate":
        p, g = _pair(args.field, "field")
        n, k = _pair(args.code, "code")
        config = campaign.CampaignConfig(
            p=p, g=g, n=n, k=k, taus=_tau_list(args.tau),
            trials=args.trials, seed=args.seed, solver=args.solver)
        report = campaign.run_campaign(config)
        _emit(report, args.output)
        return 0

    if args.command == "bench":
        p, g = _pair(args.field, "field")
        sizes = _int_list(args.sizes)
        if args.mode == "decode":
            table = campaign.run_decode_bench(p, g, sizes, trials=args.trials,
                                              seed=args.seed, solver=args.solver)
        else:
            table = campaign.run_annihilator_bench(p, g, sizes, seed=args.seed)
        _emit(table, args.output)
        return 0

    if args.command == "weights":
        p, g = _pair(args.field, "field")
        tower = FieldTower(p, g)
        v = jsonio.vector_from_json(tower, jsonio.load(args.vector))
        prof = rank_weights(tower, v)
        _emit({"n": len(v), "weights": {"w1": prof.w1, "w2": prof.w2,
                                        "w3": prof.w3, "w4": prof.w4}}, None)
        return 0

    raise ValueError(f"unknown command {args.command!r}")


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return run(args)
    except (ValueError, KeyError, TypeError, OSError,
            json.JSONDecodeError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
