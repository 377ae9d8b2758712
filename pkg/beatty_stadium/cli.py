"""
cli.py
======

Command-line interface (CLI) for **beatty-stadium**.

Every verb prints one JSON document on stdout; status lines go to stderr.
Numbers are exact-real literals (``5/2``, ``1/2+1/2*sqrt(5)``,
``-1*sqrt(2)``); decimals are rejected.

Subcommands
-----------
- ``gen``             : terms of S(alpha, beta) for an index range
- ``member``          : is k a value of S(alpha, beta), and at which index
- ``check-partition`` : exact verdict; exit 0 iff the pair partitions Z
- ``check-eventual``  : exact verdict; exit 0 iff the pair partitions Z up to
                        the exceptional pair
- ``check-disjoint``  : disjointness necessary condition (+ window search)
- ``coprime``         : do disjoint offsets exist for two moduli
- ``simulate``        : running-stadium events (two athletes or ``--athlete`` x n)
- ``witness``         : disjoint offsets for r*gamma, s*gamma (gamma > 2)
- ``verify-window``   : brute-force coverage report on a window
- ``battery``         : the full verification battery

Exit codes
----------
0 = criterion holds / verification passed, 1 = criterion fails or
anomalies found (the JSON carries witnesses), 2 = usage, parse or
precondition error (JSON ``{"error": ..., "message": ...}``).

Window-testable verbs take ``--window LO HI``; when omitted they fall back to
``BEATTY_DEFAULT_WINDOW`` and echo the window and its source in the output.

Typical Usage
-------------
    $ beatty-stadium check-eventual --a1 "1/2+1/2*sqrt(5)" --b1 0 \\
          --a2 "3/2+1/2*sqrt(5)" --b2 0 --window -10000 10000

    $ beatty-stadium coprime --a1 3/2 --a2 5/2

    $ beatty-stadium battery --scale quick --output output
"""

import argparse
import json
import sys
import time

from . import config, logs
from .errors import BeattyError, InvalidRange, NoWitness

NEGATIVE_ANSWERS = (NoWitness,)
"""Errors that answer the question negatively: exit 1 rather than 2."""


# ---------------------------
# Argument helpers
# ---------------------------
def _real_arg(text):
    from .parsing import parse_real

    try:
        return parse_real(text)
    except BeattyError as e:
        raise argparse.ArgumentTypeError(str(e))


def _add_pair_args(p):
    p.add_argument("--a1", type=_real_arg, required=True, help="modulus alpha1")
    p.add_argument("--b1", type=_real_arg, default="0", help="offset beta1 (default: 0)")
    p.add_argument("--a2", type=_real_arg, required=True, help="modulus alpha2")
    p.add_argument("--b2", type=_real_arg, default="0", help="offset beta2 (default: 0)")


def _add_window_arg(p):
    p.add_argument("--window", type=int, nargs=2, metavar=("LO", "HI"), default=None,
                   help=f"half-open window [LO, HI) (default: ${config.DEFAULT_WINDOW_ENV})")


def _resolve_window(args, required):
    """``(lo, hi, source)`` from ``--window`` or the environment, else None."""
    if args.window is not None:
        return args.window[0], args.window[1], "flag"
    env = config.default_window()
    if env is not None:
        return env[0], env[1], "env"
    if required:
        raise InvalidRange(f"--window is required (or set {config.DEFAULT_WINDOW_ENV})")
    return None


def _echo_window(payload, window):
    if window is not None:
        lo, hi, source = window
        payload["window"] = [str(lo), str(hi)]
        payload["window_source"] = source
    return payload


def _pair(args):
    from .sequences import BeattySeq

    return BeattySeq(args.a1, args.b1), BeattySeq(args.a2, args.b2)


# ---------------------------
# Subcommand parsers
# ---------------------------
def _add_gen_parser(sub):
    p = sub.add_parser("gen", help="Terms floor(n*alpha + beta) for n in [FROM, TO]")
    p.add_argument("--alpha", type=_real_arg, required=True)
    p.add_argument("--beta", type=_real_arg, default="0")
    p.add_argument("--from", dest="n_from", type=int, required=True)
    p.add_argument("--to", dest="n_to", type=int, required=True)
    return p


def _add_member_parser(sub):
    p = sub.add_parser("member", help="Membership of K in S(alpha, beta)")
    p.add_argument("--alpha", type=_real_arg, required=True)
    p.add_argument("--beta", type=_real_arg, default="0")
    p.add_argument("--k", type=int, required=True)
    return p


def _add_check_parser(sub, name, help_text):
    p = sub.add_parser(name, help=help_text)
    _add_pair_args(p)
    _add_window_arg(p)
    return p


def _add_coprime_parser(sub):
    p = sub.add_parser("coprime", help="Whether every choice of offsets gives intersecting sequences")
    p.add_argument("--a1", type=_real_arg, required=True)
    p.add_argument("--a2", type=_real_arg, required=True)
    return p


def _add_simulate_parser(sub):
    p = sub.add_parser("simulate", help="Running-stadium events during [FROM, TO)")
    p.add_argument("--a1", type=_real_arg, help="two-athlete model: modulus of X")
    p.add_argument("--b1", type=_real_arg, default="0")
    p.add_argument("--a2", type=_real_arg, help="two-athlete model: modulus of Y")
    p.add_argument("--b2", type=_real_arg, default="0")
    p.add_argument("--athlete", type=_real_arg, nargs=2, action="append", metavar=("ALPHA", "BETA"),
                   help="one-direction model: repeat once per athlete X1..Xn")
    p.add_argument("--base-speed", type=_real_arg, default="0", help="speed of X0 (default: 0)")
    p.add_argument("--from", dest="t_from", type=int, required=True)
    p.add_argument("--to", dest="t_to", type=int, required=True)
    p.add_argument("--trace", type=str, default=None, help="also write events as JSONL")
    p.add_argument("--occupancy", type=str, default=None,
                   help="also write domain occupancy as CSV (two complementary athletes)")
    return p


def _add_witness_parser(sub):
    p = sub.add_parser("witness", help="Disjoint offsets for r*gamma and s*gamma")
    p.add_argument("--gamma", type=_real_arg, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    _add_window_arg(p)
    return p


def _add_verify_parser(sub):
    p = sub.add_parser("verify-window", help="Coverage of a window by one or more sequences")
    p.add_argument("--seq", type=_real_arg, nargs=2, action="append", required=True,
                   metavar=("ALPHA", "BETA"), help="repeat once per sequence")
    _add_window_arg(p)
    p.add_argument("--chunk", type=int, default=None, help="scan in sub-windows of this width")
    p.add_argument("--progress", action="store_true", help="show a progress bar")
    return p


def _add_battery_parser(sub):
    p = sub.add_parser("battery", help="Run the verification battery")
    p.add_argument("--scale", choices=sorted(config.SCALES), default="quick")
    p.add_argument("--seed", type=int, default=config.RANDOM_SEED)
    p.add_argument("--output", type=str, default="output",
                   help="directory for battery.json / battery.md (default: output)")
    p.add_argument("--progress", action="store_true")
    return p


# ---------------------------
# Subcommands
# ---------------------------
def cmd_gen(args):
    from .sequences import BeattySeq, generate

    s = BeattySeq(args.alpha, args.beta)
    values = [str(v) for _, v in generate(s, args.n_from, args.n_to)]
    return {"seq": s.to_dict(), "from": str(args.n_from), "to": str(args.n_to), "values": values}, 0


def cmd_member(args):
    from .sequences import BeattySeq, contains

    s = BeattySeq(args.alpha, args.beta)
    n = contains(s, args.k)
    payload = {"seq": s.to_dict(), "k": str(args.k), "member": n is not None,
               "index": None if n is None else str(n)}
    return payload, 0 if n is not None else 1


def _verdict_payload(args, accepted):
    from .criteria import classify_pair
    from .oracle import verify_eventual

    s1, s2 = _pair(args)
    verdict = classify_pair(s1, s2)
    payload = verdict.to_dict()
    window = _resolve_window(args, required=False)
    code = 0 if verdict.kind in accepted else 1
    if window is not None:
        found = verify_eventual(s1, s2, window[0], window[1])
        payload["oracle"] = found.to_dict()
        payload["agrees"] = found.kind == verdict.kind and found.n0 == verdict.n0
    return _echo_window(payload, window), code


def cmd_check_partition(args):
    from .data_model import PARTITION

    return _verdict_payload(args, (PARTITION,))


def cmd_check_eventual(args):
    from .data_model import EVENTUAL, PARTITION

    return _verdict_payload(args, (PARTITION, EVENTUAL))


def cmd_check_disjoint(args):
    from .data_model import NEITHER
    from .disjointness import skolem_necessary
    from .oracle import disjoint_window

    s1, s2 = _pair(args)
    finding = skolem_necessary(s1, s2)
    payload = {"finding": finding.to_dict()}
    code = 1 if finding.kind == NEITHER else 0
    window = _resolve_window(args, required=False)
    if window is not None:
        common = disjoint_window(s1, s2, window[0], window[1])
        payload["intersection"] = [str(k) for k in common[:20]]
        payload["intersection_count"] = str(len(common))
        if common:
            code = 1
    return _echo_window(payload, window), code


def cmd_coprime(args):
    from .disjointness import coprime_moduli

    report = coprime_moduli(args.a1, args.a2)
    return report.to_dict(), 0 if report.coprime else 1


def cmd_simulate(args):
    from .exporters import export_occupancy_csv, export_trace_jsonl
    from .stadium import MultiConfig, StadiumConfig, simulate_multi, simulate_two

    if args.athlete:
        c = MultiConfig(tuple((a, b) for a, b in args.athlete), base_speed=args.base_speed)
        events = simulate_multi(c, args.t_from, args.t_to)
        payload = {"model": "multi", "initial_gaps": [g.to_dict() for g in c.initial_gaps()]}
    elif args.a1 is not None and args.a2 is not None:
        c = StadiumConfig(args.a1, args.a2, args.b1, args.b2)
        events = simulate_two(c, args.t_from, args.t_to)
        payload = {"model": "two", "d0": c.d0.to_dict()}
        if args.occupancy:
            export_occupancy_csv(c, args.t_from, args.t_to, args.occupancy)
    else:
        raise InvalidRange("give --a1/--a2 (two athletes) or at least one --athlete")

    if args.trace:
        export_trace_jsonl(events, args.trace)
    payload.update({"from": str(args.t_from), "to": str(args.t_to),
                    "events": [e.to_dict() for e in events]})
    return payload, 0


def cmd_witness(args):
    from .disjointness import gamma_witness

    window = _resolve_window(args, required=False)
    bounds = config.WITNESS_CHECK_WINDOW if window is None else window[:2]
    beta1, beta2 = gamma_witness(args.gamma, args.r, args.s, window=bounds)
    payload = {"alpha1": (args.r * args.gamma).to_dict(), "alpha2": (args.s * args.gamma).to_dict(),
               "beta1": beta1.to_dict(), "beta2": beta2.to_dict(),
               "checked": [str(bounds[0]), str(bounds[1])]}
    return _echo_window(payload, window), 0


def cmd_verify_window(args):
    from .oracle import window_report
    from .sequences import BeattySeq

    window = _resolve_window(args, required=True)
    lo, hi = window[0], window[1]
    seqs = [BeattySeq(a, b) for a, b in args.seq]
    report = window_report(seqs, lo, hi, chunk=args.chunk, progress=args.progress)
    return _echo_window(report.to_dict(), window), 0 if report.clean else 1


def cmd_battery(args):
    from .battery import VerificationBattery

    results = VerificationBattery(scale=args.scale, seed=args.seed, output_dir=args.output,
                                  progress=args.progress).run()
    passed = all(r.passed for r in results)
    return {"passed": passed, "checks": [r.to_dict() for r in results]}, 0 if passed else 1


HANDLERS = {
    "gen": cmd_gen,
    "member": cmd_member,
    "check-partition": cmd_check_partition,
    "check-eventual": cmd_check_eventual,
    "check-disjoint": cmd_check_disjoint,
    "coprime": cmd_coprime,
    "simulate": cmd_simulate,
    "witness": cmd_witness,
    "verify-window": cmd_verify_window,
    "battery": cmd_battery,
}


def build_parser():
    ap = argparse.ArgumentParser(
        prog="beatty-stadium",
        description="Beatty sequences over exact arithmetic: criteria, oracles, stadium model",
    )
    sub = ap.add_subparsers(dest="command", required=True)
    _add_gen_parser(sub)
    _add_member_parser(sub)
    _add_check_parser(sub, "check-partition", "Exact partition verdict for a pair")
    _add_check_parser(sub, "check-eventual", "Exact eventual-partition verdict for a pair")
    _add_check_parser(sub, "check-disjoint", "Disjointness necessary condition for a pair")
    _add_coprime_parser(sub)
    _add_simulate_parser(sub)
    _add_witness_parser(sub)
    _add_verify_parser(sub)
    _add_battery_parser(sub)
    return ap


def _error_body(exc):
    return {"error": type(exc).__name__, "message": str(exc)}


def _loggable(args):
    return {k: v if isinstance(v, (bool, type(None))) else str(v)
            for k, v in vars(args).items() if k != "command"}


def main(argv=None):
    """Entry point; returns the exit code."""
    args = build_parser().parse_args(argv)
    logdir = config.log_dir()
    start = time.time()
    try:
        payload, code = HANDLERS[args.command](args)
    except NEGATIVE_ANSWERS as e:
        payload, code = _error_body(e), 1
    except BeattyError as e:
        payload, code = _error_body(e), 2
    except Exception as e:
        if logdir:
            logs.log_error(logdir, e)
        raise

    print(json.dumps(payload))
    if logdir and args.command != "battery":
        logs.append_run_log(logdir, args.command, _loggable(args),
                            status=str(code), error_msg=payload.get("message") if code == 2 else None,
                            seconds=time.time() - start)
    return code


if __name__ == "__main__":
    sys.exit(main())
