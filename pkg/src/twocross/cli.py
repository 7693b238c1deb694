"""Command line entry point: ``twocross <command> ...``.

Analysis commands print one JSON result document on stdout; generators
print a SOC-style profile. Errors go to stderr with a nonzero exit code.
"""

from __future__ import annotations

import argparse
import math
import sys

import numpy as np

from . import __version__
from .cc import brute_force_cc, cc_solve
from .core import (
    EGALITARIAN,
    STRONG,
    UTILITARIAN,
    WEAK,
    InconsistentMisrepError,
    NotTwoCrossingError,
    ProfileError,
    VoterOrder,
    borda_misrep,
    condorcet_winners,
    crossing_counts,
    majority_margins,
)
from .io import (
    FormatError,
    ResultDocument,
    digest,
    format_profile_soc,
    parse_profile_soc,
    parse_rho,
    parse_tournament,
)
from .recognition import random_horseshoe, recognize_two_crossing
from .tournament import ParityError, double_bubblesort_profile, synthesize_two_crossing
from .young import brute_force_young, young_score, young_winners

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


class CLIError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise CLIError(f"cannot read {path}: {exc.strerror}") from None


def _parse_order(text: str, n: int) -> VoterOrder:
    try:
        perm = tuple(int(tok) for tok in text.replace(" ", "").split(","))
        order = VoterOrder(perm)
    except ValueError as exc:
        raise CLIError(f"--order: {exc}") from None
    if len(order) != n:
        raise CLIError(f"--order has {len(order)} voters, profile has {n}")
    return order


def _score(x):
    return "inf" if x == math.inf else int(x)


def _print_table(rows, header):
    widths = [max(len(str(r[i])) for r in [header] + rows) for i in range(len(header))]
    fmt = "  ".join("{:>%d}" % w for w in widths)
    print(fmt.format(*header), file=sys.stderr)
    for r in rows:
        print(fmt.format(*r), file=sys.stderr)


def cmd_recognize(args):
    text = _read(args.profile)
    p = parse_profile_soc(text)
    doc = ResultDocument("recognize", digest(text))
    if args.order is not None or args.max_k is not None:
        order = _parse_order(args.order, p.num_voters) if args.order else VoterOrder.identity(p.num_voters)
        rep = crossing_counts(p, order)
        doc.result = {
            "order": list(order.perm),
            "max_crossings": rep.maximum,
            "pair_crossings": {f"{a},{b}": x for (a, b), x in rep.counts.items()},
        }
        if args.max_k is not None:
            doc.result["k"] = args.max_k
            doc.result["within_k"] = rep.maximum <= args.max_k
        if args.table:
            _print_table([(f"{a},{b}", x) for (a, b), x in rep.counts.items()], ("pair", "crossings"))
        return doc
    order = recognize_two_crossing(p)
    if order is None:
        doc.status = "not-two-crossing"
        doc.result = {"two_crossing": False, "order": None}
    else:
        doc.result = {
            "two_crossing": True,
            "order": list(order.perm),
            "max_crossings": crossing_counts(p, order).maximum,
        }
    if args.table:
        print("not two-crossing" if order is None else "two-crossing order: " + " ".join(map(str, order.perm)),
              file=sys.stderr)
    return doc


def cmd_margins(args):
    text = _read(args.profile)
    p = parse_profile_soc(text)
    mm = majority_margins(p)
    doc = ResultDocument("margins", digest(text))
    doc.result = {"num_voters": p.num_voters, "num_candidates": p.num_candidates, "margins": mm.values.tolist()}
    if args.condorcet:
        doc.result["condorcet"] = {"variant": args.condorcet, "winners": sorted(condorcet_winners(p, args.condorcet))}
    if args.table:
        _print_table([(c, *row) for c, row in zip(p.candidates, mm.values.tolist())], ("", *p.candidates))
    return doc


def _young_entry(r):
    return {"candidate": r.candidate, "score": _score(r.score),
            "kept_voters": None if r.kept_voters is None else list(r.kept_voters)}


def cmd_young(args):
    text = _read(args.profile)
    p = parse_profile_soc(text)
    doc = ResultDocument("young", digest(text))
    doc.result = {"variant": args.variant, "method": "brute-force" if args.oracle else "difference-constraints"}
    if args.candidate is not None:
        if args.candidate not in p.candidates:
            raise CLIError(f"--candidate must be in 1..{p.num_candidates}")
        fn = brute_force_young if args.oracle else young_score
        r = fn(p, args.candidate, args.variant)
        doc.result.update(_young_entry(r))
        rows = [r]
    else:
        winners, results = young_winners(p, args.variant, oracle=args.oracle)
        doc.result["scores"] = [_young_entry(results[c]) for c in p.candidates]
        doc.result["winners"] = sorted(winners)
        rows = [results[c] for c in p.candidates]
    if args.table:
        _print_table([(r.candidate, _score(r.score)) for r in rows], ("candidate", "score"))
    return doc


def cmd_cc(args):
    text = _read(args.profile)
    p = parse_profile_soc(text)
    inputs = [text]
    if args.rho == "borda":
        rho = borda_misrep(p)
    else:
        rho_text = _read(args.rho)
        inputs.append(rho_text)
        rho = parse_rho(rho_text)
        rho.check(p)
    doc = ResultDocument("cc", digest(*inputs))
    if args.oracle:
        res = brute_force_cc(p, rho, args.k, args.mode)
    else:
        res = cc_solve(p, rho, args.k, args.mode, pad=args.pad)
    doc.result = {
        "k": args.k,
        "mode": args.mode,
        "rho": rho.provenance,
        "scale": rho.scale,
        "value": res.value,
        "committee": sorted(res.committee),
        "assignment": list(res.assignment.rep),
        "method": "brute-force" if args.oracle else "dynamic-programming",
    }
    if args.table:
        _print_table([(v, c) for v, c in enumerate(res.assignment.rep, start=1)], ("voter", "representative"))
    return doc


def cmd_synthesize(args):
    text = _read(args.tournament)
    t = parse_tournament(text)
    p = synthesize_two_crossing(t)
    return format_profile_soc(p, [
        f"synthesized two-crossing profile: {p.num_voters} voters, {p.num_candidates} candidates",
        f"tournament digest {digest(text)}",
    ])


def cmd_gen(args):
    if args.kind == "horseshoe":
        if args.voters is None or args.voters < 1:
            raise CLIError("gen horseshoe needs --voters >= 1")
        if args.candidates < 1:
            raise CLIError("--candidates must be >= 1")
        p, _, _ = random_horseshoe(args.voters, args.candidates, np.random.default_rng(args.seed))
        return format_profile_soc(p, [f"horseshoe profile: voters={args.voters} candidates={args.candidates} seed={args.seed}"])
    p = double_bubblesort_profile(args.candidates)
    return format_profile_soc(p, [f"double bubblesort base profile: candidates={args.candidates}"])


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="twocross", description="Tools for two-crossing elections.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_profile(sp):
        sp.add_argument("profile", help="SOC-style profile file ('-' for stdin)")
        sp.add_argument("--table", action="store_true", help="also print a human-readable table on stderr")

    sp = sub.add_parser("recognize", help="find a two-crossing voter order")
    add_profile(sp)
    sp.add_argument("--order", help="comma-separated voter ids; report crossings under this order")
    sp.add_argument("--max-k", type=int, dest="max_k", help="check crossings <= k under --order (identity if omitted)")
    sp.set_defaults(func=cmd_recognize)

    sp = sub.add_parser("margins", help="majority margin matrix")
    add_profile(sp)
    sp.add_argument("--condorcet", choices=(WEAK, STRONG))
    sp.set_defaults(func=cmd_margins)

    sp = sub.add_parser("young", help="Young scores and winners")
    add_profile(sp)
    sp.add_argument("--candidate", type=int)
    sp.add_argument("--variant", choices=(WEAK, STRONG), default=WEAK)
    sp.add_argument("--oracle", action="store_true", help="use exhaustive search instead")
    sp.set_defaults(func=cmd_young)

    sp = sub.add_parser("cc", help="Chamberlin-Courant committee")
    add_profile(sp)
    sp.add_argument("-k", type=int, required=True)
    sp.add_argument("--rho", default="borda", help="'borda' or a file of n rows with m values each")
    sp.add_argument("--mode", choices=(UTILITARIAN, EGALITARIAN), default=UTILITARIAN)
    sp.add_argument("--oracle", action="store_true", help="use exhaustive search instead")
    sp.add_argument("--pad", action="store_true", help="pad small committees with lowest unused ids")
    sp.set_defaults(func=cmd_cc)

    sp = sub.add_parser("synthesize", help="two-crossing profile realizing a weighted tournament")
    sp.add_argument("--tournament", required=True)
    sp.set_defaults(func=cmd_synthesize)

    sp = sub.add_parser("gen", help="generate structured profiles")
    sp.add_argument("kind", choices=("horseshoe", "bubblesort"))
    sp.add_argument("--voters", type=int)
    sp.add_argument("--candidates", type=int, required=True)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_gen)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out = args.func(args)
    except (CLIError, FormatError, ProfileError, ParityError, InconsistentMisrepError) as exc:
        print(f"twocross {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NotTwoCrossingError, ValueError) as exc:
        print(f"twocross {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    sys.stdout.write(out.to_json() + "\n" if isinstance(out, ResultDocument) else out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
