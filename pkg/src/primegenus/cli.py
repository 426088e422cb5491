"""Command-line interface: ``python3 -m primegenus <command> ...``.

Exit codes: 0 success, 1 verification failure (or an exhausted search
budget), 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from sympy import isprime

from . import census
from .epi import SEARCH_BUDGET, enumerate_epimorphisms
from .errors import BudgetExceeded, GroupSpecError, SignatureError, VerificationError
from .groups import group
from .jacobian import JACOBIAN_CASES, decompose_jacobian, jacobian_cases_for
from .signatures import enumerate_signatures, parse_signature


class UsageError(Exception):
    pass


def _rational(text: str) -> Fraction:
    try:
        v = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"bad rational {text!r}")
    if v <= 0:
        raise argparse.ArgumentTypeError(f"rho must be positive, got {text!r}")
    return v


def _prime(text: str) -> int:
    try:
        p = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad prime {text!r}")
    if not isprime(p):
        raise argparse.ArgumentTypeError(f"{text!r} is not prime")
    return p


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad integer {text!r}")
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return n


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="primegenus", description="Group actions of order divisible by p on genus p+1.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, help, **flags):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.add_argument("--threads", type=_positive, default=1)
        sp.add_argument("--budget", type=_positive, default=SEARCH_BUDGET, help="search budget (candidate tuples)")
        for flag, kw in flags.items():
            sp.add_argument(flag, **kw)
        return sp

    add("enumerate-signatures", "signatures with 2/area = rho", **{"--rho": dict(type=_rational, required=True)})
    add("classify", "actions with rho >= 3 at a prime p",
        **{"--p": dict(type=_prime, required=True), "--rho": dict(type=_rational, default=Fraction(3),
                                                                  help="only report rho >= this")})
    add("hypermaps", "orientably regular hypermaps of genus p+1", **{"--p": dict(type=_prime, required=True)})
    add("nonorientable", "non-orientable regular quotients of characteristic -p",
        **{"--p": dict(type=_prime, required=True)})
    add("count-kernels", "normal surface subgroups K with Gamma(sig)/K = G",
        **{"--sig": dict(required=True), "--group": dict(required=True)})
    add("jacobian", "isogeny decomposition of J(S)",
        **{"--p": dict(type=_prime, required=True), "--case": dict(choices=sorted(JACOBIAN_CASES))})
    add("verify", "recompute every embedded table", **{"--p": dict(type=_prime, action="append",
                                                                    help="restrict the case tables to these primes")})
    return ap


def _emit(args, obj, text_lines):
    if args.json:
        print(json.dumps(obj, indent=2, sort_keys=False))
    else:
        for line in text_lines:
            print(line)


def cmd_enumerate(args) -> int:
    sigs = enumerate_signatures(args.rho)
    _emit(args, {"rho": str(args.rho), "signatures": [str(s) for s in sigs]}, [str(s) for s in sigs])
    return 0


def cmd_classify(args) -> int:
    if args.p < 5:
        raise UsageError(f"--p {args.p}: primes below 5 are not covered")
    recs = [r for r in census.classify(args.p, threads=args.threads, budget=args.budget) if r.rho >= args.rho]
    lines = [f"({r.case_id}) rho={r.rho} {r.sig.short()} G={r.group_spec} kernels={r.kernel_count} "
             f"{r.surface_count_description}; full group {r.full_group}" for r in recs]
    _emit(args, {"p": args.p, "genus": args.p + 1, "records": [r.to_json() for r in recs]}, lines)
    return 0


def cmd_hypermaps(args) -> int:
    if args.p < 5:
        raise UsageError(f"--p {args.p}: primes below 5 are not covered")
    recs = census.hypermap_census(args.p, threads=args.threads)
    lines = []
    for r in recs:
        ty = r.tuple.to_json()["type"]
        lines.append(f"({r.case_id}) {r.tuple.G.name} type {ty} petrie={r.petrie} "
                     f"{'reflexible' if r.reflexible else 'chiral'} full={r.full_group_type} "
                     f"orbit={r.orbit_id} conder={r.conder_ref or '-'}")
    _emit(args, {"p": args.p, "records": [r.to_json() for r in recs]}, lines)
    return 0


def cmd_nonorientable(args) -> int:
    if args.p < 5:
        raise UsageError(f"--p {args.p}: primes below 5 are not covered")
    recs = census.nonorientable_census(args.p)
    lines = [f"({r.base.case_id}) cover {r.base.conder_ref or '-'} type {r.base.tuple.to_json()['type']} "
             f"G={r.base.tuple.G.name} genus {2 - r.characteristic} petrie={r.petrie} "
             f"entry={r.conder_ref or '-'}" for r in recs]
    _emit(args, {"p": args.p, "records": [r.to_json() for r in recs]}, lines)
    return 0


def cmd_count(args) -> int:
    try:
        sig = parse_signature(args.sig)
    except SignatureError as e:
        raise UsageError(f"malformed signature {args.sig!r}: {e}")
    try:
        G = group(args.group)
    except GroupSpecError as e:
        raise UsageError(f"malformed group {args.group!r}: {e}")
    ks = enumerate_epimorphisms(sig, G, budget=args.budget, threads=args.threads)
    _emit(args, {"signature": str(sig), "group": G.name, "kernels": ks.count,
                 "epimorphisms": ks.n_epimorphisms, "aut_order": ks.aut_order,
                 "representatives": [t.to_json() for t in ks.classes]}, [str(ks.count)])
    return 0


def cmd_jacobian(args) -> int:
    cases = [args.case] if args.case else jacobian_cases_for(args.p)
    if args.case and args.case not in jacobian_cases_for(args.p):
        raise UsageError(f"--case {args.case}: not available at p={args.p}")
    reps = [decompose_jacobian(c, args.p) for c in cases]
    _emit(args, {"p": args.p, "reports": [r.to_json() for r in reps]},
          [f"({r.case_id}) {r.group}: {r.text()}" for r in reps])
    return 0


def cmd_verify(args) -> int:
    primes = tuple(args.p) if args.p else (7, 11, 13, 17, 19, 23, 29, 31)
    rep = census.verify_embedded_tables(primes, threads=args.threads)
    lines = [f"{'PASS' if i.passed else 'FAIL'} {i.name}" + (f"  [{i.detail}]" if i.detail else "")
             for i in rep.items]
    lines.append(f"{sum(i.passed for i in rep.items)}/{len(rep.items)} passed")
    _emit(args, rep.to_json(), lines)
    return 0 if rep.all_passed else 1


COMMANDS = {"enumerate-signatures": cmd_enumerate, "classify": cmd_classify, "hypermaps": cmd_hypermaps,
            "nonorientable": cmd_nonorientable, "count-kernels": cmd_count, "jacobian": cmd_jacobian,
            "verify": cmd_verify}


def run(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:  # argparse already printed the offending token
        return int(e.code or 0)
    try:
        return COMMANDS[args.command](args)
    except UsageError as e:
        print(f"primegenus {args.command}: error: {e}", file=sys.stderr)
        return 2
    except BudgetExceeded as e:
        print(f"primegenus {args.command}: search budget exhausted: {e}", file=sys.stderr)
        return 1
    except VerificationError as e:
        print(f"primegenus {args.command}: verification failed: {e}", file=sys.stderr)
        return 1


def main():
    sys.exit(run())
