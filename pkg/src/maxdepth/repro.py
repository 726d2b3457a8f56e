"""Reproduction suites: closed forms checked against brute-force homology.

Every suite returns a list of ``Row``; budget problems become BUDGET rows
instead of aborting, and known disagreements with a stated classification
are INFO rows.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import asdict, dataclass

from .errors import BudgetExceeded
from .families import (TransversalSpec, VeroneseSpec, complete_bipartite_graph, cycle_graph,
                       cycle_depth_formula, cycle_has_maximal_depth, line_depth_formula,
                       line_graph, maximum_minimal_cover, transversal_ass, transversal_depth,
                       transversal_ideal, transversal_maxdepth, veronese_ass, veronese_depth,
                       veronese_ideal, veronese_maxdepth, whisker_cycle_graph, Graph)
from .homology import DEFAULT_CHAR, SWEEP_CHARS, mask_of
from .ideal import MonomialIdeal
from .invariants import (betti_table_koszul, depth, depth_general, has_maximal_depth,
                         maximal_depth_by_dual, projective_dimension, regularity)
from .powers import bipartite_power_ass, is_star, power_maxdepth_report
from .primes import (alexander_dual, ass_general, bight, format_prime, mdepth_general,
                     minimal_primes)

PASS, FAIL, INFO, BUDGET = "PASS", "FAIL", "INFO", "BUDGET"


@dataclass
class Row:
    suite: str
    case: str
    expected: str
    computed: str
    status: str


def _fmt_primes(primes) -> str:
    return "[" + " ".join(format_prime(F) for F in primes) + "]"


def _row(suite, case, expected, computed, ok=None) -> Row:
    if ok is None:
        ok = expected == computed
    return Row(suite, case, str(expected), str(computed), PASS if ok else FAIL)


def _guard(suite: str, case: str, fn) -> list[Row]:
    try:
        return fn()
    except BudgetExceeded as exc:
        return [Row(suite, case, "-", str(exc), BUDGET)]


def _is_minimal_cover(cover: frozenset, G: Graph) -> bool:
    edges = [mask_of(e) for e in G.edges]
    c = mask_of(cover)
    return (all(e & c for e in edges)
            and all(any(e & c == 1 << (v - 1) for e in edges) for v in cover))


def suite_line(max_n: int = 13, p: int = DEFAULT_CHAR, **_) -> list[Row]:
    rows = []
    for n in range(2, max_n + 1):
        G = line_graph(n)
        I = G.edge_ideal()
        rows.append(_row("line", f"n={n}", line_depth_formula(n), depth(I, p)))
        C = maximum_minimal_cover("line", n)
        rows.append(_row("line", f"n={n} cover", f"minimal size={bight(I)}",
                         f"{'minimal' if _is_minimal_cover(C, G) else 'not-minimal'} size={len(C)}"))
    return rows


def suite_cycle(max_n: int = 13, p: int = DEFAULT_CHAR, **_) -> list[Row]:
    rows = []
    for n in range(3, max_n + 1):
        G = cycle_graph(n)
        I = G.edge_ideal()
        rows.append(_row("cycle", f"n={n}", cycle_depth_formula(n), depth(I, p)))
        C = maximum_minimal_cover("cycle", n)
        rows.append(_row("cycle", f"n={n} cover", f"minimal size={bight(I)}",
                         f"{'minimal' if _is_minimal_cover(C, G) else 'not-minimal'} size={len(C)}"))
    return rows


def suite_cycle_classify(max_n: int = 13, p: int = DEFAULT_CHAR, **_) -> list[Row]:
    rows = []
    for n in range(3, max_n + 1):
        r = has_maximal_depth(cycle_graph(n).edge_ideal(), p)
        rows.append(_row("cycle-classify", f"n={n}", str(cycle_has_maximal_depth(n)).lower(),
                         str(r.holds).lower()))
    return rows


def suite_whisker(max_n: int = 11, p: int = DEFAULT_CHAR, **_) -> list[Row]:
    rows = []
    for n in range(3, max_n + 1):
        W = whisker_cycle_graph(n)
        I = W.edge_ideal()
        rows.append(_row("whisker", f"n={n} depth", depth(cycle_graph(n).edge_ideal(), p),
                         depth(I, p)))
        rows.append(_row("whisker", f"n={n} maxdepth", "true", str(has_maximal_depth(I, p).holds).lower()))
        C = maximum_minimal_cover("whisker_cycle", n)
        rows.append(_row("whisker", f"n={n} cover", f"minimal size={bight(I)}",
                         f"{'minimal' if _is_minimal_cover(C, W) else 'not-minimal'} size={len(C)}"))
    return rows


def random_squarefree_ideal(rng: random.Random, max_vars: int = 8) -> MonomialIdeal:
    n = rng.randint(2, max_vars)
    gens = set()
    for _ in range(rng.randint(1, 6)):
        k = rng.randint(1, min(n, 4))
        gens.add(tuple(sorted(rng.sample(range(n), k))))
    return MonomialIdeal(n, tuple(tuple(1 if i in g else 0 for i in range(n)) for g in gens))


def suite_terai(count: int = 100, seed: int = 20240601, p: int = DEFAULT_CHAR, **_) -> list[Row]:
    rng = random.Random(seed)
    rows = []
    for k in range(count):
        I = random_squarefree_ideal(rng)
        pd = projective_dimension(I, p)
        reg_dual = regularity(alexander_dual(I), p)
        via_depth = has_maximal_depth(I, p).holds
        via_dual = maximal_depth_by_dual(I, p)
        rows.append(_row("terai", f"#{k} {I}", f"pd={pd} routes=agree",
                         f"reg_dual={reg_dual} routes={'agree' if via_depth == via_dual else 'differ'}",
                         pd == reg_dual and via_depth == via_dual))
    return rows


def random_transversal_spec(rng: random.Random, max_r: int = 4, max_n: int = 8,
                            max_set: int = 3) -> TransversalSpec:
    n = rng.randint(1, max_n)
    r = rng.randint(1, max_r)
    sets = tuple(frozenset(rng.sample(range(1, n + 1), rng.randint(1, min(n, max_set))))
                 for _ in range(r))
    return TransversalSpec(n, sets)


def _spec_label(spec: TransversalSpec) -> str:
    return f"n={spec.n} sets=" + ";".join(",".join(map(str, sorted(F))) for F in spec.sets)


def _transversal_rows(spec: TransversalSpec, p: int) -> list[Row]:
    label = _spec_label(spec)
    I = transversal_ideal(spec)
    rows = [
        _row("transversal", f"{label} depth", transversal_depth(spec), depth_general(I, p)),
        _row("transversal", f"{label} ass", _fmt_primes(transversal_ass(spec)),
             _fmt_primes(ass_general(I))),
    ]
    holds, classified = transversal_maxdepth(spec)
    if holds != classified:
        rows.append(Row("transversal", f"{label} classification",
                        f"at-most-one-nonprincipal={str(classified).lower()}",
                        f"maxdepth={str(holds).lower()}", INFO))
    return rows


def suite_transversal(count: int = 50, seed: int = 20240602, p: int = DEFAULT_CHAR,
                      max_n: int = 7, **_) -> list[Row]:
    rng = random.Random(seed)
    rows = []
    specs = [TransversalSpec(3, (frozenset({1, 2}), frozenset({2, 3})))]
    specs += [random_transversal_spec(rng) for _ in range(count)]
    for spec in specs:
        rows += _guard("transversal", _spec_label(spec), lambda: _transversal_rows(spec, p))
    # principal factors followed by one prime: (x_1)...(x_{k-1})(x_k,...,x_n)
    for n in range(1, max_n + 1):
        for k in range(1, n + 1):
            spec = TransversalSpec(n, tuple(frozenset({i}) for i in range(1, k))
                                   + (frozenset(range(k, n + 1)),))
            r = has_maximal_depth(transversal_ideal(spec), p)
            rows.append(_row("transversal", f"{_spec_label(spec)} (b)=>(a)", "true",
                             str(r.holds).lower()))
    return rows


def veronese_specs(max_n: int = 3, max_d: int = 6):
    for n in range(1, max_n + 1):
        for d in range(1, max_d + 1):
            for bounds in itertools.product(range(1, d + 1), repeat=n):
                if sum(bounds) >= d:
                    yield VeroneseSpec(d, bounds)


def _veronese_rows(spec: VeroneseSpec, p: int) -> list[Row]:
    label = f"d={spec.d} bounds={','.join(map(str, spec.bounds))}"
    I = veronese_ideal(spec)
    brute_depth = depth_general(I, p)
    koszul_depth = I.nvars - betti_table_koszul(I, p).pd
    primes = ass_general(I)
    rows = [
        _row("veronese", f"{label} depth", veronese_depth(spec), brute_depth),
        _row("veronese", f"{label} depth-koszul", brute_depth, koszul_depth),
        _row("veronese", f"{label} ass", _fmt_primes(veronese_ass(spec)), _fmt_primes(primes)),
    ]
    brute_max = brute_depth == I.nvars - max(len(F) for F in primes)
    if veronese_maxdepth(spec) != brute_max:
        rows.append(Row("veronese", f"{label} criterion",
                        f"criterion={str(veronese_maxdepth(spec)).lower()}",
                        f"maxdepth={str(brute_max).lower()}", INFO))
    return rows


def suite_veronese(max_n: int = 3, max_d: int = 6, p: int = DEFAULT_CHAR, **_) -> list[Row]:
    example = VeroneseSpec(5, (3, 2, 1))
    I = veronese_ideal(example)
    r = has_maximal_depth(I, p)
    rows = [
        _row("veronese", "example gens", "(x1^3*x2^2, x1^3*x2*x3, x1^2*x2^2*x3)", str(I)),
        _row("veronese", "example ass", "[{x1} {x2} {x1,x2} {x1,x3} {x2,x3}]",
             _fmt_primes(ass_general(I))),
        _row("veronese", "example depth/mdepth", "depth=1 mdepth=1",
             f"depth={r.depth} mdepth={mdepth_general(I)}"),
    ]
    for spec in veronese_specs(max_n, max_d):
        rows += _guard("veronese", f"d={spec.d} bounds={spec.bounds}",
                       lambda: _veronese_rows(spec, p))
    return rows


def suite_bipartite(max_m: int = 4, p: int = DEFAULT_CHAR, **_) -> list[Row]:
    rows = []
    for n in range(1, max_m + 1):
        for m in range(n, max_m + 1):
            I = complete_bipartite_graph(n, m).edge_ideal()
            r = has_maximal_depth(I, p)
            rows.append(_row("bipartite", f"K_{n},{m} gap", n - 1, r.mdepth - r.depth))
            rows.append(_row("bipartite", f"K_{n},{m} maxdepth", str(n == 1).lower(),
                             str(r.holds).lower()))
    return rows


def suite_powers(p: int = DEFAULT_CHAR, **_) -> list[Row]:
    rows = []
    plan = [((1, m), 3) for m in (1, 2, 3)] + [((2, 2), 2)]
    for (n, m), kmax in plan:
        G = complete_bipartite_graph(n, m)
        star = is_star(G)
        report = power_maxdepth_report(G, kmax, p)
        Min = minimal_primes(G.edge_ideal())
        for e in report.entries:
            case = f"K_{n},{m} k={e.k}"
            if e.error:
                rows.append(Row("powers", case, "-", e.error, BUDGET))
                continue
            if star:
                rows.append(_row("powers", f"{case} depth", 1, e.depth))
                rows.append(_row("powers", f"{case} ass", _fmt_primes(Min), _fmt_primes(e.ass)))
                bipartite_power_ass(G, e.k)
            rows.append(_row("powers", f"{case} maxdepth", str(star).lower(), str(e.holds).lower()))
    return rows


def suite_char_sweep(max_n: int = 13, **_) -> list[Row]:
    rows = []
    graphs = [(f"line n={n}", line_graph(n)) for n in range(2, max_n + 1)]
    graphs += [(f"cycle n={n}", cycle_graph(n)) for n in range(3, max_n + 1)]
    graphs += [(f"whisker n={n}", whisker_cycle_graph(n)) for n in range(3, min(max_n, 11) + 1)]
    for name, G in graphs:
        I = G.edge_ideal()
        values = [depth(I, q) for q in SWEEP_CHARS]
        rows.append(_row("char-sweep", name, f"all={values[0]}",
                         "/".join(map(str, values)), len(set(values)) == 1))
    return rows


def random_tree(rng: random.Random, nverts: int) -> Graph:
    """Uniform labelled tree from a random Pruefer sequence."""
    if nverts == 2:
        return Graph.from_edges(2, [(1, 2)])
    seq = [rng.randint(1, nverts) for _ in range(nverts - 2)]
    degree = [1] * (nverts + 1)
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        leaf = next(u for u in range(1, nverts + 1) if degree[u] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = [x for x in range(1, nverts + 1) if degree[x] == 1]
    edges.append((u, w))
    return Graph.from_edges(nverts, edges)


def suite_trees(count: int = 25, seed: int = 20240603, max_vertices: int = 10,
                p: int = DEFAULT_CHAR, **_) -> list[Row]:
    rng = random.Random(seed)
    rows = []
    for k in range(count):
        G = random_tree(rng, rng.randint(2, max_vertices))
        r = has_maximal_depth(G.edge_ideal(), p)
        edges = " ".join(f"{a}-{b}" for a, b in sorted(G.edges))
        rows.append(_row("trees", f"#{k} {edges}", "true", str(r.holds).lower()))
    return rows


SUITES = {
    "line": suite_line,
    "cycle": suite_cycle,
    "cycle-classify": suite_cycle_classify,
    "whisker": suite_whisker,
    "terai": suite_terai,
    "transversal": suite_transversal,
    "veronese": suite_veronese,
    "bipartite": suite_bipartite,
    "powers": suite_powers,
    "char-sweep": suite_char_sweep,
    "trees": suite_trees,
}


def repro_suite(name: str, **options) -> list[Row]:
    return SUITES[name](**{k: v for k, v in options.items() if v is not None})


def rows_document(rows: list[Row]) -> list[dict]:
    return [asdict(r) for r in rows]


def format_rows(rows: list[Row]) -> str:
    lines = ["suite\tcase\texpected\tcomputed\tstatus"]
    lines += [f"{r.suite}\t{r.case}\t{r.expected}\t{r.computed}\t{r.status}" for r in rows]
    return "\n".join(lines)
