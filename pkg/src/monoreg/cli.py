"""Command line interface: ``monoreg <command> <ideal> --n N``.

Exit status is 0 on success, 1 when ``verify`` finds failures and 2 for
usage, parse or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .betti import multigraded_betti, regularity
from .harness import HarnessConfig, run_all, write_results
from .ideal import MonomialIdeal, ResourceLimitError, sort_key
from .layers import ConditionError, check_condition_double_star, check_condition_star, layer_decompose
from .newton import delta, integral_closure
from .quotients import betti_splitting_report, linear_quotients_order, polarize, split_by_variable
from .textio import format_ideal, format_monomial, ideal_to_json, parse_ideal

EXIT_OK, EXIT_FAILURES, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def _emit(args, text: str, payload) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def cmd_reg(I: MonomialIdeal, args) -> int:
    r = regularity(I, args.char)
    _emit(args, str(r), {"ideal": ideal_to_json(I), "regularity": r, "char": args.char})
    return EXIT_OK


def cmd_betti(I: MonomialIdeal, args) -> int:
    table = multigraded_betti(I, args.char)
    if args.multigraded:
        lines = [f"{i}  {format_monomial(a)}  {v}"
                 for (i, a), v in sorted(table.multigraded.items(),
                                         key=lambda kv: (kv[0][0], sort_key(kv[0][1])))]
        text = "\n".join(lines)
    else:
        text = table.format()
    payload = {"ideal": ideal_to_json(I), "char": args.char,
               "graded": [[i, j, v] for (i, j), v in table.graded.items()],
               "multigraded": [[i, list(a), v] for (i, a), v in sorted(table.multigraded.items())]}
    _emit(args, text, payload)
    return EXIT_OK


def cmd_closure(I: MonomialIdeal, args) -> int:
    J = integral_closure(I)
    _emit(args, format_ideal(J), ideal_to_json(J))
    return EXIT_OK


def cmd_delta(I: MonomialIdeal, args) -> int:
    value = delta(I)
    _emit(args, str(value), {"ideal": ideal_to_json(I), "delta": value})
    return EXIT_OK


def cmd_lq(I: MonomialIdeal, args) -> int:
    cert = linear_quotients_order(I)
    if cert is None:
        _emit(args, "none", {"ordering": None, "witnesses": None})
    else:
        _emit(args, cert.format(), {"ordering": [list(u) for u in cert.ordering],
                                    "witnesses": [[v + 1 for v in w] for w in cert.witnesses]})
    return EXIT_OK


def cmd_polarize(I: MonomialIdeal, args) -> int:
    P, mapping = polarize(I)
    names = [f"x{i + 1} = x{j}_{k}" for i, (j, k) in enumerate(mapping)]
    _emit(args, format_ideal(P) + "\n" + "\n".join(names),
          {"ideal": ideal_to_json(P), "variables": [list(m) for m in mapping]})
    return EXIT_OK


def _report_payload(report) -> dict:
    return {"holds": report.holds, "clauses": report.clauses, "notes": report.notes}


def cmd_check_star(I: MonomialIdeal, args) -> int:
    report = check_condition_star(layer_decompose(I))
    _emit(args, report.format(), _report_payload(report))
    return EXIT_OK


def cmd_check_dstar(I: MonomialIdeal, args) -> int:
    report = check_condition_double_star(I)
    payload = _report_payload(report)
    payload["holds_without_furthermore"] = report.holds_without_furthermore
    _emit(args, report.format(), payload)
    return EXIT_OK


def cmd_split(I: MonomialIdeal, args) -> int:
    var = args.var - 1
    if not 0 <= var < I.ambient_n:
        raise ValueError(f"--var must be between 1 and {I.ambient_n}")
    J, K = split_by_variable(I, var)
    report = betti_splitting_report(I, J, K, args.char)
    lines = [f"J: {format_ideal(J)}", f"K: {format_ideal(K)}",
             f"splitting identity holds: {report.holds}"]
    lines += [f"  beta_{i},{j}: {lhs} != {rhs}" for i, j, lhs, rhs in report.mismatches]
    _emit(args, "\n".join(lines),
          {"J": ideal_to_json(J), "K": ideal_to_json(K), "holds": report.holds,
           "mismatches": [list(m) for m in report.mismatches]})
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.n not in (2, 3):
        raise ValueError("--n must be 2 or 3")
    if args.dmax < 1:
        raise ValueError("--dmax must be positive")
    config = HarnessConfig(
        ns=(args.n,), seed=args.seed, workers=args.workers,
        n2_dmax=args.dmax, n3_dmax=args.dmax,
        n2_random_trials=args.random_trials,
        betti_oracle_trials=args.oracle_trials,
        aux_trials=args.aux_trials, induced_trials=min(args.aux_trials, 100),
        n3_sample_size=args.sample)
    reports = run_all(config)
    for r in reports:
        print(r.summary())
    if args.json:
        write_results(reports, args.json)
    return EXIT_FAILURES if any(r.failures for r in reports) else EXIT_OK


IDEAL_COMMANDS = {
    "reg": (cmd_reg, "regularity reg(I)"),
    "betti": (cmd_betti, "graded (or multigraded) Betti numbers of I"),
    "closure": (cmd_closure, "integral closure of I"),
    "delta": (cmd_delta, "max degree of a Newton polyhedron vertex"),
    "lq": (cmd_lq, "linear quotients ordering with witnesses, or 'none'"),
    "polarize": (cmd_polarize, "polarization of I"),
    "check-star": (cmd_check_star, "condition (*) on the two layers along x3"),
    "check-dstar": (cmd_check_dstar, "condition (**) on the layers along x3"),
    "split": (cmd_split, "Betti splitting along the generators divisible by x_i"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="monoreg", description="Regularity tools for monomial ideals.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, (_, help_text) in IDEAL_COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        p.add_argument("ideal", help='generators, e.g. "x1^2, x1*x2"')
        p.add_argument("--n", type=int, required=True, help="number of variables")
        p.add_argument("--json", action="store_true", help="print JSON")
        if name in ("reg", "betti", "split"):
            p.add_argument("--char", type=int, default=2, help="field characteristic (0 or prime)")
        if name == "betti":
            p.add_argument("--multigraded", action="store_true")
        if name == "split":
            p.add_argument("--var", type=int, required=True, help="variable index (1-based)")
    v = sub.add_parser("verify", help="run the verification harness")
    v.add_argument("--n", type=int, required=True, choices=(2, 3))
    v.add_argument("--dmax", type=int, required=True)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--json", metavar="OUT", help="write the results file here")
    v.add_argument("--workers", type=int, default=1)
    v.add_argument("--random-trials", type=int, default=10_000,
                   help="seeded arbitrary ideals for the n=2 closure checks")
    v.add_argument("--oracle-trials", type=int, default=1000)
    v.add_argument("--aux-trials", type=int, default=500)
    v.add_argument("--sample", type=int, default=0,
                   help="seeded degree-5 ideals for n=3 (0 skips)")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            return cmd_verify(args)
        I = parse_ideal(args.ideal, args.n)
        return IDEAL_COMMANDS[args.command][0](I, args)
    except (ValueError, ConditionError, ResourceLimitError) as exc:
        print(f"monoreg {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
