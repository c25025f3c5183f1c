"""Command line entry point: ``supermat <command> ...`` (or ``python -m supermat``).

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 budget exhausted.
"""

from __future__ import annotations

import argparse
import contextlib
import io
import json
import sys

from . import __version__
from . import bounds as bd
from .census import census_enumerated, census_formula, euler_phi
from .classic import ashlock_tillotson, classic_bounds, is_superpermutation
from .graph import BudgetExceeded, build_graph, verify_universal_word
from .pathfinder import exact_min_word, greedy_cycle_path, nearest_neighbor_path
from .perms import format_word
from .toric import UniversalWord, dump_matrix, is_superpermutation_matrix, load_matrix, word_to_matrix

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _positive_float(text: str) -> float:
    value = float(text)
    if value <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def _frac(x) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


# -- bounds ------------------------------------------------------------------

def _best_lengths(upto: int, time_limit: float) -> dict[int, tuple[int, bool]]:
    best = {}
    for n in range(1, upto + 1):
        if n <= 5:
            r = exact_min_word(n, time_limit=time_limit)
            best[n] = (r.length, r.optimal)
        else:
            g = build_graph(n)
            best[n] = (min(greedy_cycle_path(n, g).length, nearest_neighbor_path(n, graph=g).length), False)
    return best


def cmd_bounds(args, out) -> int:
    rows = bd.bounds_table(args.max, _best_lengths(min(args.best_upto, args.max), args.time_limit))
    notes = bd.published_discrepancies(rows)
    if args.format == "json":
        out.write(_dump_json({"rows": [r.as_dict() for r in rows], "notes": notes}))
    elif args.format == "csv":
        out.write("n,I,C,best,B,Bprime,S\n")
        for r in rows:
            best = "" if r.best_found is None else str(r.best_found)
            bp = _frac(r.Bprime)
            out.write(f"{r.n},{r.I},{r.C},{best},{r.B},{bp},{r.S}\n")
        for note in notes:
            print(f"note: {note}", file=sys.stderr)
    else:
        out.write("| n | I(n) | C(n) | Best found | B(n) | B'(n) | S(n) |\n")
        out.write("|---|---|---|---|---|---|---|\n")
        for r in rows:
            best = "" if r.best_found is None else f"{r.best_found}{'' if r.best_optimal else '*'}"
            bp = _frac(r.Bprime)
            out.write(f"| {r.n} | {r.I} | {r.C} | {best} | {r.B} | {bp} | {r.S} |\n")
        if any(r.best_found is not None for r in rows):
            out.write("\n`*` best length found, optimality not proven\n")
        if notes:
            out.write("\n")
            for note in notes:
                out.write(f"- {note}\n")
    return EXIT_OK


# -- census ------------------------------------------------------------------

def cmd_census(args, out) -> int:
    formula = census_formula(args.n)
    enumerated = None
    if args.n <= args.max_n:
        enumerated = census_enumerated(args.n, max_n=args.max_n)
    agree = enumerated is None or enumerated.counts == formula.counts
    payload = formula.as_dict()
    payload["enumeration_agrees"] = None if enumerated is None else agree
    if args.format == "json":
        out.write(_dump_json(payload))
    else:
        out.write(f"n = {args.n}\n")
        out.write("d\tcycles\n")
        for d, c in sorted(formula.counts.items()):
            out.write(f"{d}\t{c}\n")
        out.write(f"phi(n) = {euler_phi(args.n)}  counts[1] = {formula.counts[1]}\n")
        out.write(f"sum d*c_d = {formula.covered}  (n-1)! = {payload['vertices']}\n")
        out.write(f"L(n) = {formula.total}\n")
        if enumerated is not None:
            out.write(f"enumeration agrees: {'yes' if agree else 'NO'}\n")
    return EXIT_OK if agree else EXIT_FAIL


# -- graph -------------------------------------------------------------------

def cmd_graph(args, out) -> int:
    g = build_graph(args.n, args.kind, max_n=args.max_n)
    labels = [g.vertex_label(i) for i in range(len(g))]
    if args.emit == "csv":
        out.write("vertex," + ",".join(labels) + "\n")
        for i, label in enumerate(labels):
            out.write(label + "," + ",".join(str(int(x)) for x in g.weight_row(i)) + "\n")
    else:
        cls = "inc" if g.kind == "H" else "rot"
        out.write(f"digraph {g.kind}{args.n} {{\n")
        for i, label in enumerate(labels):
            out.write(f'  v{i} [label="{cls}({label})"];\n')
        for i, j, w in g.edges(args.max_weight):
            out.write(f'  v{i} -> v{j} [label="{w}"];\n')
        out.write("}\n")
    return EXIT_OK


# -- construct ---------------------------------------------------------------

def cmd_construct(args, out) -> int:
    if args.method == "greedy":
        result = greedy_cycle_path(args.n, build_graph(args.n, max_n=args.max_n))
    elif args.method == "nn":
        result = nearest_neighbor_path(args.n, graph=build_graph(args.n, max_n=args.max_n))
    else:
        if args.n > 6:
            raise UsageError("exact search supports n <= 6")

        def report(r):
            print(f"incumbent: length {r.length} after {r.elapsed:.2f}s", file=sys.stderr)

        result = exact_min_word(args.n, time_limit=args.time_limit, node_limit=args.node_limit,
                                on_improve=report)
    if args.emit == "word":
        out.write(f"{result.word}\n")
    elif args.emit == "matrix":
        out.write(dump_matrix(word_to_matrix(result.word), args.n))
    elif args.emit == "path":
        out.write(" ".join(str(c.rep) for c in result.path.classes) + "\n")
    else:
        payload = result.as_dict()
        payload.pop("elapsed")
        out.write(_dump_json(payload))
    print(f"{result.method}: length {result.length} (weight {result.weight}), "
          f"optimal={result.optimal}", file=sys.stderr)
    if args.method == "exact" and not result.optimal:
        return EXIT_BUDGET
    return EXIT_OK


# -- verification ------------------------------------------------------------

def cmd_verify_word(args, out) -> int:
    try:
        word = UniversalWord.parse(args.word, args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    report = verify_universal_word(word)
    if report:
        out.write(f"PASS: {word} is universal for n={args.n} (length {len(word)})\n")
        return EXIT_OK
    out.write(f"FAIL: {len(report.missing)} classes missing\n")
    for c in report.missing:
        out.write(f"  {c}\n")
    return EXIT_FAIL


def cmd_verify_matrix(args, out) -> int:
    try:
        with open(args.file) as fh:
            t, n_file = load_matrix(fh.read())
    except (OSError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    n = args.n if args.n is not None else n_file
    try:
        report = is_superpermutation_matrix(t, n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if report:
        out.write(f"PASS: {t.m}x{t.p} matrix contains every {n}x{n} permutation matrix\n")
        return EXIT_OK
    out.write(f"FAIL: {len(report.missing)} permutations missing\n")
    for q in report.missing:
        out.write(f"  {q}\n")
    return EXIT_FAIL


# -- classic -----------------------------------------------------------------

def cmd_classic(args, out) -> int:
    if not (args.construct or args.verify or args.bounds):
        args.construct = args.verify = args.bounds = True
    status = EXIT_OK
    word = ashlock_tillotson(args.n) if (args.construct or args.verify) else None
    if args.construct:
        out.write(f"ashlock-tillotson n={args.n} length {len(word)}: {format_word(word, args.n)}\n")
    if args.verify:
        report = is_superpermutation(word, args.n)
        out.write(f"verify: {'PASS' if report else 'FAIL'}\n")
        if not report:
            status = EXIT_FAIL
    if args.bounds:
        if args.n >= 4:
            lo, hi = classic_bounds(args.n)
            out.write(f"bounds: lower {lo}, upper {hi}\n")
        else:
            out.write("bounds: formulas need n >= 4 (lower bound n >= 3)\n")
    return status


# -- acceptance --------------------------------------------------------------

def cmd_acceptance(args, out) -> int:
    from .acceptance import run_all

    failed = 0
    for result in run_all(args.only):
        out.write(result.line() + "\n")
        out.flush()
        failed += not result.passed
    out.write(f"{failed} criteria failed\n")
    return EXIT_FAIL if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="supermat", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version",
                        version=f"%(prog)s {__version__} (formulas: {FORMULA_REVISION})")
    parser.add_argument("--output", "-o", help="write the artifact here instead of standard output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bounds", help="table of I, C, best, B, B', S")
    p.add_argument("--max", type=_positive, default=8)
    p.add_argument("--format", choices=["csv", "md", "json"], default="md")
    p.add_argument("--best-upto", type=int, default=0,
                   help="fill the best-found column for n up to this value")
    p.add_argument("--time-limit", type=_positive_float, default=30.0)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("census", help="1-cycle counts per divisor")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--format", choices=["json", "table"], default="table")
    p.add_argument("--max-n", type=_positive, default=9, help="largest n to enumerate")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("graph", help="export H_n or K_n")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--kind", choices=["H", "K"], default="H")
    p.add_argument("--emit", choices=["dot", "csv"], default="dot")
    p.add_argument("--max-weight", type=_positive, default=1, help="DOT edge cutoff")
    p.add_argument("--max-n", type=_positive, default=9)
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("construct", help="build a short universal word")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--method", choices=["greedy", "nn", "exact"], default="greedy")
    p.add_argument("--time-limit", type=_positive_float, default=None)
    p.add_argument("--node-limit", type=_positive, default=None)
    p.add_argument("--emit", choices=["word", "matrix", "path", "json"], default="word")
    p.add_argument("--max-n", type=_positive, default=9)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify-word", help="check a universal word")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--word", required=True)
    p.set_defaults(func=cmd_verify_word)

    p = sub.add_parser("verify-matrix", help="check a superpermutation matrix file")
    p.add_argument("--file", required=True)
    p.add_argument("--n", type=_positive, default=None)
    p.set_defaults(func=cmd_verify_matrix)

    p = sub.add_parser("classic", help="classical superpermutations")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--construct", action="store_true")
    p.add_argument("--verify", action="store_true")
    p.add_argument("--bounds", action="store_true")
    p.set_defaults(func=cmd_classic)

    p = sub.add_parser("acceptance", help="run the acceptance criteria")
    p.add_argument("--only", type=int, nargs="*", default=None)
    p.set_defaults(func=cmd_acceptance)
    return parser


FORMULA_REVISION = "census=divisor-recursion/1, C=(n-1)!+n-2+L(n)"


def run(argv=None, stdout=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    out = stdout or sys.stdout
    try:
        if args.output:
            with open(args.output, "w") as fh:
                return args.func(args, fh)
        return args.func(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET


def run_capture(argv) -> tuple[int, str, str]:
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stderr(err):
        code = run(argv, stdout=out)
    return code, out.getvalue(), err.getvalue()


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
