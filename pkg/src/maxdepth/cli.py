"""Command line interface.

    maxdepth depth "x1*x2, x2*x3" --vars 3
    maxdepth maxdepth --family cycle --n 4
    maxdepth veronese --d 5 --bounds 3,2,1 --assprimes
    maxdepth repro line --max-n 12

Exit codes: 0 success, 1 domain error, 2 budget exceeded, 3 usage error,
4 a repro suite produced a FAIL row.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import families
from .errors import BudgetExceeded, DomainError
from .homology import DEFAULT_CHAR, MAX_FACES, SWEEP_CHARS, check_prime
from .ideal import MonomialIdeal, format_monomial, power
from .invariants import betti_table, depth, has_maximal_depth, witness_monomial
from .parsing import dump_ideal, parse_ideal
from .powers import power_maxdepth_report
from .primes import alexander_dual, ass, format_prime, prime_order
from .repro import BUDGET, FAIL, SUITES, format_rows, repro_suite, rows_document

EXIT_OK, EXIT_DOMAIN, EXIT_BUDGET, EXIT_USAGE, EXIT_FAIL = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _add_ideal_input(p: argparse.ArgumentParser):
    p.add_argument("ideal", nargs="?", help="symbolic ideal 'x1*x2, x2^2' or a JSON ideal document")
    p.add_argument("--file", help="read the ideal from a file ('-' for stdin)")
    p.add_argument("--vars", type=int, help="number of variables for symbolic input")
    p.add_argument("--names", help="comma-separated variable names for symbolic input")
    p.add_argument("--family", choices=families.FAMILY_KINDS, help="use a named edge ideal")
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)


def _add_compute_options(p: argparse.ArgumentParser):
    p.add_argument("--char", default=str(DEFAULT_CHAR),
                   help="prime characteristic, or 'sweep' for 2,3,5,32003")
    p.add_argument("--budget-faces", type=int, default=MAX_FACES)
    p.add_argument("--jobs", type=int, default=1)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="maxdepth", description="Depth, mdepth and maximal depth of monomial ideals.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name, help_ in [("depth", "depth of S/I"), ("mdepth", "mdepth of S/I"),
                        ("betti", "graded Betti table of S/I"),
                        ("assprimes", "associated primes with witnesses"),
                        ("dual", "Alexander dual of a squarefree ideal"),
                        ("maxdepth", "whether depth S/I equals mdepth S/I")]:
        p = sub.add_parser(name, help=help_)
        _add_ideal_input(p)
        _add_compute_options(p)
        p.add_argument("--json", action="store_true", help="structured output")

    p = sub.add_parser("family", help="closed forms and computed values for a named family")
    p.add_argument("kind", choices=families.FAMILY_KINDS)
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    _add_compute_options(p)

    p = sub.add_parser("transversal", help="transversal polymatroidal ideal p_F1...p_Fr")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--sets", required=True, help='factors, e.g. "1,2;2,3"')
    p.add_argument("--assprimes", action="store_true")
    _add_compute_options(p)

    p = sub.add_parser("veronese", help="ideal of Veronese type")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--bounds", required=True, help="per-variable caps a1,a2,...")
    p.add_argument("--assprimes", action="store_true")
    _add_compute_options(p)

    p = sub.add_parser("power", help="depth and mdepth of I^k for k = 1..K")
    _add_ideal_input(p)
    _add_compute_options(p)
    p.add_argument("--k", type=int, default=3)

    p = sub.add_parser("repro", help="run a reproduction suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--max-n", type=int)
    p.add_argument("--count", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--char", default=str(DEFAULT_CHAR))
    p.add_argument("--json", dest="json_path", help="also write the report document here")
    return parser


def _chars(args) -> list[int]:
    if args.char == "sweep":
        return list(SWEEP_CHARS)
    try:
        p = int(args.char)
    except ValueError:
        raise UsageError(f"--char must be a prime or 'sweep', got {args.char!r}") from None
    check_prime(p)
    return [p]


def _kw(args) -> dict:
    return {"max_faces": args.budget_faces, "jobs": args.jobs}


def _read_ideal(args) -> MonomialIdeal:
    if args.family:
        if args.n is None and args.m is None:
            raise UsageError("--family needs --n (and --m for complete_bipartite)")
        return families.family_ideal(args.family, args.n, args.m)
    if args.file:
        text = sys.stdin.read() if args.file == "-" else open(args.file).read()
    elif args.ideal is not None:
        text = args.ideal
    else:
        raise UsageError("give an ideal, --file or --family")
    names = args.names.split(",") if args.names else None
    return parse_ideal(text, args.vars, names)


def _per_char(values: dict[int, int]) -> str:
    agree = len(set(values.values())) == 1
    per = " ".join(f"{p}:{v}" for p, v in values.items())
    return f"char=sweep {per} agree={str(agree).lower()} (characteristic 0 approximated by agreement)"


def _fmt_prime(F, I: MonomialIdeal) -> str:
    return format_prime(F, I.variable_names())


def cmd_depth(args, out):
    I = _read_ideal(args)
    values = {p: depth(I, p, **_kw(args)) for p in _chars(args)}
    first = next(iter(values.values()))
    if args.json:
        out.write(json.dumps({"depth": first, "by_char": values}) + "\n")
    elif len(values) > 1:
        out.write(f"depth={first} {_per_char(values)}\n")
    else:
        out.write(f"depth={first}\n")


def cmd_mdepth(args, out):
    I = _read_ideal(args)
    primes = ass(I)
    w = max(primes, key=prime_order)
    md = I.nvars - len(w)
    if args.json:
        out.write(json.dumps({"mdepth": md, "witness": sorted(w)}) + "\n")
    else:
        out.write(f"mdepth={md} witness={_fmt_prime(w, I)}\n")


def cmd_betti(args, out):
    I = _read_ideal(args)
    if not I.is_squarefree:
        from .ideal import polarize

        J, added = polarize(I)
        out.write(f"# polarized into {J.nvars} variables (+{added}); Betti numbers are unchanged\n")
        I = J
    for p in _chars(args):
        B = betti_table(I, p, **_kw(args))
        if args.json:
            out.write(json.dumps({"char": p, "pd": B.pd, "reg": B.reg,
                                  "betti": [[i, j, b] for (i, j), b in B.entries.items()]}) + "\n")
        else:
            out.write(f"char={p} pd={B.pd} reg(S/I)={B.reg}\n{B.format()}\n")


def cmd_assprimes(args, out):
    I = _read_ideal(args)
    primes = ass(I)
    if args.json:
        out.write(json.dumps([{"prime": sorted(F), "witness": list(witness_monomial(I, F))}
                              for F in primes]) + "\n")
        return
    names = I.variable_names()
    for F in primes:
        u = witness_monomial(I, F)
        out.write(f"{_fmt_prime(F, I)} witness={format_monomial(u, names)}\n")


def cmd_dual(args, out):
    I = _read_ideal(args)
    D = alexander_dual(I)
    out.write((dump_ideal(D) if args.json else str(D)) + "\n")


def cmd_maxdepth(args, out):
    I = _read_ideal(args)
    results = {p: has_maximal_depth(I, p, **_kw(args)) for p in _chars(args)}
    r = next(iter(results.values()))
    if args.json:
        out.write(json.dumps({"maximal_depth": r.holds, "depth": r.depth, "mdepth": r.mdepth,
                              "witness": sorted(r.witness)}) + "\n")
        return
    line = f"{str(r.holds).lower()} depth={r.depth} mdepth={r.mdepth} witness={_fmt_prime(r.witness, I)}"
    if len(results) > 1:
        line += " " + _per_char({p: x.depth for p, x in results.items()})
    out.write(line + "\n")


def cmd_family(args, out):
    kind, n, m = args.kind, args.n, args.m
    I = families.family_ideal(kind, n, m)
    p = _chars(args)[0]
    r = has_maximal_depth(I, p, **_kw(args))
    out.write(f"ideal={I}\n")
    if kind == "line":
        out.write(f"depth_formula={families.line_depth_formula(n)}\n")
    elif kind == "cycle":
        out.write(f"depth_formula={families.cycle_depth_formula(n)} "
                  f"maxdepth_formula={str(families.cycle_has_maximal_depth(n)).lower()}\n")
    if kind in ("line", "cycle", "whisker_cycle"):
        out.write(f"cover_pattern={format_prime(families.maximum_minimal_cover(kind, n))}\n")
    out.write(f"depth={r.depth} mdepth={r.mdepth} maximal_depth={str(r.holds).lower()} "
              f"witness={format_prime(r.witness)}\n")


def _parse_sets(text: str, n: int) -> families.TransversalSpec:
    try:
        sets = tuple(frozenset(int(x) for x in part.split(",") if x.strip())
                     for part in text.split(";"))
    except ValueError:
        raise UsageError(f"cannot parse --sets {text!r}") from None
    return families.TransversalSpec(n, sets)


def cmd_transversal(args, out):
    from .invariants import depth_general
    from .primes import ass_general

    spec = _parse_sets(args.sets, args.n)
    I = families.transversal_ideal(spec)
    p = _chars(args)[0]
    if args.assprimes:
        for F in families.transversal_ass(spec):
            out.write(format_prime(F) + "\n")
        return
    g = families.intersection_graph(spec)
    holds, classified = families.transversal_maxdepth(spec)
    computed_primes = ass_general(I)
    out.write(f"ideal={I}\n")
    out.write(f"components={len(g.components())} depth_formula={families.transversal_depth(spec)} "
              f"depth_computed={depth_general(I, p, **_kw(args))}\n")
    out.write(f"ass_formula_matches={str(computed_primes == families.transversal_ass(spec)).lower()}\n")
    out.write(f"maximal_depth={str(holds).lower()} "
              f"at_most_one_nonprincipal={str(classified).lower()}\n")


def cmd_veronese(args, out):
    from .invariants import depth_general

    try:
        bounds = tuple(int(x) for x in args.bounds.split(","))
    except ValueError:
        raise UsageError(f"cannot parse --bounds {args.bounds!r}") from None
    spec = families.VeroneseSpec(args.d, bounds)
    if args.assprimes:
        for F in families.veronese_ass(spec):
            out.write(format_prime(F) + "\n")
        return
    I = families.veronese_ideal(spec)
    p = _chars(args)[0]
    r = has_maximal_depth(I, p, **_kw(args))
    out.write(f"ideal={I}\n")
    out.write(f"depth_formula={families.veronese_depth(spec)} "
              f"depth_computed={depth_general(I, p, **_kw(args))}\n")
    out.write(f"criterion={str(families.veronese_maxdepth(spec)).lower()} "
              f"maximal_depth={str(r.holds).lower()} mdepth={r.mdepth}\n")


def cmd_power(args, out):
    p = _chars(args)[0]
    if args.family in ("complete_bipartite", "star", "line") or (
            args.family == "cycle" and args.n is not None and args.n % 2 == 0):
        G = families.family_graph(args.family, args.n, args.m)
        report = power_maxdepth_report(G, args.k, p, **_kw(args))
        out.write("k\tdepth\tmdepth\tmaximal_depth\n")
        for e in report.entries:
            if e.error:
                out.write(f"{e.k}\tBUDGET\t{e.error}\n")
            else:
                out.write(f"{e.k}\t{e.depth}\t{e.mdepth}\t{str(e.holds).lower()}\n")
        out.write(f"# {report.note}\n")
        return
    I = _read_ideal(args)
    out.write("k\tdepth\tmdepth\tmaximal_depth\n")
    for k in range(1, args.k + 1):
        try:
            r = has_maximal_depth(power(I, k), p, **_kw(args))
            out.write(f"{k}\t{r.depth}\t{r.mdepth}\t{str(r.holds).lower()}\n")
        except BudgetExceeded as exc:
            out.write(f"{k}\tBUDGET\t{exc}\n")
    out.write(f"# stabilization checked only for k <= {args.k}\n")


def cmd_repro(args, out) -> int:
    p = _chars(args)
    options = {"max_n": args.max_n, "count": args.count, "seed": args.seed}
    if args.suite != "char-sweep":
        options["p"] = p[0]
    rows = repro_suite(args.suite, **options)
    out.write(format_rows(rows) + "\n")
    if args.json_path:
        with open(args.json_path, "w") as fh:
            json.dump(rows_document(rows), fh, indent=1)
            fh.write("\n")
    if any(r.status == FAIL for r in rows):
        return EXIT_FAIL
    if any(r.status == BUDGET for r in rows):
        return EXIT_BUDGET
    return EXIT_OK


COMMANDS = {
    "depth": cmd_depth, "mdepth": cmd_mdepth, "betti": cmd_betti, "assprimes": cmd_assprimes,
    "dual": cmd_dual, "maxdepth": cmd_maxdepth, "family": cmd_family,
    "transversal": cmd_transversal, "veronese": cmd_veronese, "power": cmd_power,
    "repro": cmd_repro,
}


def run_command(argv: list[str], out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args, out) or EXIT_OK
    except UsageError as exc:
        err.write(f"error[usage]: {exc}\n")
        return EXIT_USAGE
    except BudgetExceeded as exc:
        err.write(f"error[budget]: {exc}\n")
        return EXIT_BUDGET
    except DomainError as exc:
        err.write(f"error[domain]: {exc}\n")
        return EXIT_DOMAIN
    except OSError as exc:
        err.write(f"error[usage]: {exc}\n")
        return EXIT_USAGE


def main(argv: list[str] | None = None):
    sys.exit(run_command(sys.argv[1:] if argv is None else argv))
