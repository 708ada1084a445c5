"""Command-line entry point.

Exit codes: 0 success or true, 1 property false (a witness is printed),
2 input error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import random
import sys
from fractions import Fraction
from typing import Sequence

from .budget import Budget
from .density import mad_bruteforce, mad_exact
from .discharging import RULE_FOR_K, audit_theorem, discharge, min_final_charge
from .dp import dp_chromatic, find_transversal, is_dp_k_colorable
from .enumeration import random_subcubic
from .errors import BudgetError, InputError
from .formats import format_cover, format_graph, read_cover, read_graph
from .generators import generate_marked
from .graph import Graph, girth, square
from .reducibility import audit_minimal_structure, detect_reducible, lemma_ids, verify_lemma
from .sweep import theorem_sweep, tightness_report

EXIT_OK, EXIT_FALSE, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


def fmt(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def _gen_spec(values: list[str]) -> tuple[str, tuple[int, ...]]:
    name, *rest = values
    try:
        return name, tuple(int(x) for x in rest)
    except ValueError:
        raise InputError(f"generator parameters must be integers, got {rest}") from None


def load_graph(args: argparse.Namespace) -> Graph:
    if args.input and args.gen:
        raise InputError("give either -i or --gen, not both")
    if args.input:
        try:
            g = read_graph(args.input)
        except OSError as exc:
            raise InputError(f"cannot read {args.input}: {exc.strerror}") from None
    elif args.gen:
        name, params = _gen_spec(args.gen)
        g = generate_marked(name, *params).graph
    else:
        raise InputError("no graph given; use -i <file> or --gen <name> <params>")
    return square(g) if getattr(args, "square", False) else g


def budget_of(args: argparse.Namespace) -> Budget:
    budget = Budget.from_env()
    if getattr(args, "budget", None):
        budget = budget.with_overrides(args.budget)
    return budget


def cmd_square(args) -> int:
    print(format_graph(square(load_graph(args))), end="")
    return EXIT_OK


def cmd_girth(args) -> int:
    g = girth(load_graph(args))
    print("acyclic" if g is None else g)
    return EXIT_OK


def cmd_mad(args) -> int:
    g = load_graph(args)
    print(fmt(mad_bruteforce(g) if args.method == "bruteforce" else mad_exact(g)))
    return EXIT_OK


def cmd_dp_check(args) -> int:
    verdict = is_dp_k_colorable(load_graph(args), args.k, budget_of(args))
    if verdict.colorable:
        print(f"true covers={verdict.covers_checked}")
        return EXIT_OK
    print(f"false covers={verdict.covers_checked}")
    print(format_cover(verdict.witness), end="")
    return EXIT_FALSE


def cmd_dp_chromatic(args) -> int:
    try:
        print(dp_chromatic(load_graph(args), budget_of(args)))
    except BudgetError as exc:
        if exc.bracket:
            print(f"BUDGET bracket=[{exc.bracket[0]},{exc.bracket[1]}]")
        raise
    return EXIT_OK


def cmd_transversal(args) -> int:
    base = load_graph(args) if (args.input or args.gen) else None
    try:
        cover = read_cover(args.cover, base)
    except OSError as exc:
        raise InputError(f"cannot read {args.cover}: {exc.strerror}") from None
    choice = find_transversal(cover, budget_of(args).nodes)
    if choice is None:
        print("none")
        return EXIT_FALSE
    print(format_cover(cover, choice), end="")
    return EXIT_OK


def cmd_gen(args) -> int:
    name, params = _gen_spec(args.spec)
    marked = generate_marked(name, *params)
    if marked.boundary:
        print("c boundary " + " ".join(str(v + 1) for v in sorted(marked.boundary)))
    g = square(marked.graph) if args.square else marked.graph
    print(format_graph(g), end="")
    return EXIT_OK


def cmd_detect(args) -> int:
    for occ in detect_reducible(load_graph(args), args.k):
        print(occ.kind + " " + " ".join(str(v + 1) for v in occ.vertices))
    return EXIT_OK


def _parse_overrides(items: Sequence[str]) -> dict[int, int]:
    out = {}
    for item in items:
        left, sep, right = item.partition("=")
        try:
            if not sep:
                raise ValueError
            out[int(left) - 1] = int(right)
        except ValueError:
            raise InputError(f"ext2 overrides look like <vertex>=<count>, got {item!r}") from None
    return out


def _lemma_exit(reports) -> int:
    statuses = {r.status for r in reports}
    if "REFUTED" in statuses:
        return EXIT_FALSE
    if "BUDGET" in statuses:
        return EXIT_BUDGET
    return EXIT_OK


def cmd_verify_lemma(args) -> int:
    report = verify_lemma(args.lemma_id, budget_of(args), _parse_overrides(args.ext2), args.exhaustive)
    print(report.line())
    for case in report.cases:
        if case.witness is not None:
            print(format_cover(case.witness), end="")
    return _lemma_exit([report])


def cmd_verify_all(args) -> int:
    reports = []
    for lemma_id in lemma_ids(args.max_face):
        report = verify_lemma(lemma_id, budget_of(args), exhaustive=args.exhaustive)
        print(report.line(), flush=True)
        reports.append(report)
    verified = sum(r.status == "VERIFIED" for r in reports)
    print(f"TOTAL {verified}/{len(reports)} VERIFIED")
    return _lemma_exit(reports)


def cmd_sweep(args) -> int:
    budget = budget_of(args)
    report = theorem_sweep(args.k, args.max_n, budget, limit=max(args.max_n, 10))
    lines = report.lines()
    bad = bool(report.counterexamples)
    over = bool(report.budget_errors)
    if args.samples:
        rng = random.Random(args.seed)
        sampled = checked = 0
        for _ in range(args.samples):
            g = random_subcubic(args.sample_n, rng)
            sampled += 1
            if mad_exact(g) >= report.bound:
                continue
            checked += 1
            try:
                if not is_dp_k_colorable(square(g), args.k, budget):
                    bad = True
                    lines.append("COUNTEREXAMPLE " + format_graph(g).replace("\n", " ").strip())
            except BudgetError:
                over = True
        lines.append(f"SAMPLED seed={args.seed} n={args.sample_n} graphs={sampled} checked={checked}")
    print("\n".join(lines))
    return EXIT_FALSE if bad else EXIT_BUDGET if over else EXIT_OK


def cmd_discharge(args) -> int:
    rule = args.rule or RULE_FOR_K[args.k]
    ledger = discharge(load_graph(args), rule)
    for v, (a, b) in enumerate(zip(ledger.initial, ledger.final)):
        print(f"v {v + 1} init={fmt(a)} final={fmt(b)}")
    print(f"MIN {fmt(min_final_charge(ledger))}")
    return EXIT_OK


def cmd_audit(args) -> int:
    g = load_graph(args)
    audit = audit_theorem(g, args.k)
    structure = audit_minimal_structure(g, args.k)
    if not audit.applicable:
        print(f"AUDIT k={args.k} {audit.reason}")
        return EXIT_OK
    print(f"AUDIT k={args.k} {audit.reason} min_final={fmt(audit.min_charge)} "
          f"bound={fmt(audit.bound)} mad={fmt(audit.mad)} consistent={'yes' if audit.consistent else 'no'}")
    for v, prof in sorted(structure.profiles.items()):
        print(f"profile {v + 1} " + ",".join(map(str, prof)))
    for v, prof in structure.violations:
        print(f"VIOLATION {v + 1} " + ",".join(map(str, prof)))
    return EXIT_OK if audit.consistent and structure.ok else EXIT_FALSE


def cmd_tightness(args) -> int:
    report = tightness_report(args.scan_n, args.k6_scan_n, args.covers)
    print("\n".join(report.lines))
    if report.witness:
        print(report.witness, end="")
    return EXIT_OK


def _graph_args(p: argparse.ArgumentParser, squarable: bool = True) -> None:
    p.add_argument("-i", "--input", help="graph file (p edge / e lines, 1-based)")
    p.add_argument("--gen", nargs="+", metavar="NAME", help="generator name followed by integer parameters")
    if squarable:
        p.add_argument("--square", action="store_true", help="work on the square of the graph")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dpsq", description="DP-colouring of squares of subcubic graphs.")
    parser.add_argument("--budget", help="override budgets, e.g. 'covers=100000,nodes=50000'")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("square", help="print the square graph")
    _graph_args(p, squarable=False)
    p.set_defaults(func=cmd_square)

    p = sub.add_parser("girth", help="shortest cycle length")
    _graph_args(p)
    p.set_defaults(func=cmd_girth)

    p = sub.add_parser("mad", help="exact maximum average degree")
    _graph_args(p)
    p.add_argument("--method", choices=("exact", "bruteforce"), default="exact")
    p.set_defaults(func=cmd_mad)

    p = sub.add_parser("dp-check", help="is every k-cover transversal-admitting?")
    _graph_args(p)
    p.add_argument("-k", type=int, required=True)
    p.set_defaults(func=cmd_dp_check)

    p = sub.add_parser("dp-chromatic", help="DP-chromatic number")
    _graph_args(p)
    p.set_defaults(func=cmd_dp_chromatic)

    p = sub.add_parser("transversal", help="find a transversal of a cover file")
    _graph_args(p)
    p.add_argument("-c", "--cover", required=True, help="cover file (l / m lines)")
    p.set_defaults(func=cmd_transversal)

    p = sub.add_parser("gen", help="print a generated graph")
    p.add_argument("spec", nargs="+", metavar="NAME", help="generator name followed by integer parameters")
    p.add_argument("--square", action="store_true")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("detect", help="list reducible configurations")
    _graph_args(p, squarable=False)
    p.add_argument("-k", type=int, choices=(5, 6), required=True)
    p.set_defaults(func=cmd_detect)

    p = sub.add_parser("verify-lemma", help="verify one reducibility lemma")
    p.add_argument("lemma_id")
    p.add_argument("--exhaustive", action="store_true", help="run exhaustion even when a greedy order exists")
    p.add_argument("--ext2", nargs="*", default=[], metavar="V=N", help="override ext2 of internal vertex V (1-based)")
    p.set_defaults(func=cmd_verify_lemma)

    p = sub.add_parser("verify-all", help="verify every lemma id")
    p.add_argument("--max-face", type=int, default=8)
    p.add_argument("--exhaustive", action="store_true")
    p.set_defaults(func=cmd_verify_all)

    p = sub.add_parser("sweep", help="small-n check of the colouring theorems")
    p.add_argument("-k", type=int, choices=(5, 6), required=True)
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--samples", type=int, default=0, help="extra random graphs beyond the enumeration")
    p.add_argument("--sample-n", type=int, default=12)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("discharge", help="run a discharging rule")
    _graph_args(p, squarable=False)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--rule", choices=("R1", "R2"))
    group.add_argument("-k", type=int, choices=(5, 6), default=5)
    p.set_defaults(func=cmd_discharge)

    p = sub.add_parser("audit", help="theorem and structure audit of one graph")
    _graph_args(p, squarable=False)
    p.add_argument("-k", type=int, choices=(5, 6), required=True)
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("tightness", help="search for a mad = 9/4 graph with non-DP-5-colourable square")
    p.add_argument("--scan-n", type=int, default=10)
    p.add_argument("--k6-scan-n", type=int, default=10)
    p.add_argument("--covers", type=int, default=10**7)
    p.set_defaults(func=cmd_tightness)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except BudgetError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
