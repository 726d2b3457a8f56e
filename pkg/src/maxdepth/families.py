"""Named families of ideals and their closed-form invariants.

Edge ideals of paths, cycles, a cycle with one whisker, complete bipartite
graphs and stars; transversal polymatroidal ideals p_{F_1}...p_{F_r}; ideals
of Veronese type.  Vertices are 1-based throughout.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import DomainError
from .ideal import MonomialIdeal, prime_ideal, product, squarefree_monomial
from .primes import sort_primes


@dataclass(frozen=True)
class Graph:
    nverts: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        canon = set()
        for e in self.edges:
            a, b = sorted(e)
            if a == b:
                raise DomainError(f"loop at vertex {a}")
            if a < 1 or b > self.nverts:
                raise DomainError(f"edge {(a, b)} outside vertex range 1..{self.nverts}")
            canon.add((a, b))
        object.__setattr__(self, "edges", frozenset(canon))

    @classmethod
    def from_edges(cls, nverts: int, edges) -> "Graph":
        edges = list(edges)
        if len({tuple(sorted(e)) for e in edges}) != len(edges):
            raise DomainError("duplicate edge")
        return cls(nverts, frozenset(tuple(e) for e in edges))

    def neighbors(self, v: int) -> set[int]:
        return {b if a == v else a for a, b in self.edges if v in (a, b)}

    def components(self) -> list[frozenset[int]]:
        seen: set[int] = set()
        comps = []
        for v in range(1, self.nverts + 1):
            if v in seen:
                continue
            comp, stack = {v}, [v]
            while stack:
                for w in self.neighbors(stack.pop()):
                    if w not in comp:
                        comp.add(w)
                        stack.append(w)
            seen |= comp
            comps.append(frozenset(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    def bipartition(self) -> tuple[frozenset[int], frozenset[int]] | None:
        color: dict[int, int] = {}
        for start in range(1, self.nverts + 1):
            if start in color:
                continue
            color[start] = 0
            stack = [start]
            while stack:
                v = stack.pop()
                for w in self.neighbors(v):
                    if w not in color:
                        color[w] = 1 - color[v]
                        stack.append(w)
                    elif color[w] == color[v]:
                        return None
        return (frozenset(v for v, c in color.items() if c == 0),
                frozenset(v for v, c in color.items() if c == 1))

    def edge_ideal(self) -> MonomialIdeal:
        n = self.nverts
        return MonomialIdeal(n, tuple(squarefree_monomial(e, n) for e in sorted(self.edges)))


def line_graph(n: int) -> Graph:
    if n < 2:
        raise DomainError("line graph needs n >= 2")
    return Graph.from_edges(n, [(j, j + 1) for j in range(1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise DomainError("cycle needs n >= 3")
    return Graph.from_edges(n, [(j, j % n + 1) for j in range(1, n + 1)])


def whisker_cycle_graph(n: int) -> Graph:
    """C_n with a pendant vertex n+1 attached at vertex 1."""
    c = cycle_graph(n)
    return Graph.from_edges(n + 1, sorted(c.edges) + [(1, n + 1)])


def complete_bipartite_graph(n: int, m: int) -> Graph:
    """K_{n,m}: vertices 1..n on one side, n+1..n+m on the other."""
    if n < 1 or m < 1:
        raise DomainError("complete bipartite graph needs n, m >= 1")
    return Graph.from_edges(n + m, [(i, n + j) for i in range(1, n + 1) for j in range(1, m + 1)])


def star_graph(m: int) -> Graph:
    return complete_bipartite_graph(1, m)


FAMILY_KINDS = ("line", "cycle", "whisker_cycle", "complete_bipartite", "star")


def family_graph(kind: str, n: int | None = None, m: int | None = None) -> Graph:
    if kind == "line":
        return line_graph(n)
    if kind == "cycle":
        return cycle_graph(n)
    if kind == "whisker_cycle":
        return whisker_cycle_graph(n)
    if kind == "complete_bipartite":
        return complete_bipartite_graph(n, m)
    if kind == "star":
        return star_graph(m if m is not None else n)
    raise DomainError(f"unknown family {kind!r}; choose from {', '.join(FAMILY_KINDS)}")


def family_ideal(kind: str, n: int | None = None, m: int | None = None,
                 graph: Graph | None = None) -> MonomialIdeal:
    if kind == "edge_ideal":
        if graph is None:
            raise DomainError("edge_ideal needs a graph")
        return graph.edge_ideal()
    if n is None and m is None:
        raise DomainError(f"family {kind!r} needs a size")
    return family_graph(kind, n, m).edge_ideal()


# --- closed forms for paths and cycles ------------------------------------------


def line_depth_formula(n: int) -> int:
    if n < 2:
        raise DomainError("line graph needs n >= 2")
    return {0: n // 3, 1: (n + 2) // 3, 2: (n + 1) // 3}[n % 3]


def cycle_depth_formula(n: int) -> int:
    if n < 3:
        raise DomainError("cycle needs n >= 3")
    return {0: n // 3, 1: (n - 1) // 3, 2: (n + 1) // 3}[n % 3]


def cycle_has_maximal_depth(n: int) -> bool:
    if n < 3:
        raise DomainError("cycle needs n >= 3")
    return n % 3 != 1


def _pairs(starts) -> list[int]:
    return [v for s in starts for v in (s, s + 1)]


def maximum_minimal_cover(kind: str, n: int) -> frozenset[int]:
    """The explicit maximum minimal vertex cover used for each residue of n mod 3."""
    r = n % 3
    if kind == "line":
        line_graph(n)
        if r == 0:
            return frozenset([1, n] + _pairs(range(3, n - 2, 3)))
        if r == 1:
            return frozenset(_pairs(range(2, n - 1, 3)))
        return frozenset(_pairs(range(2, n - 2, 3)) + [n])
    if kind == "cycle":
        cycle_graph(n)
        if r == 0:
            return frozenset(_pairs(range(1, n, 3)))
        if r == 2:
            return frozenset(_pairs(range(1, n - 3, 3)) + [n - 1])
        return frozenset([1] + _pairs(range(3, n - 3, 3)) + [n - 1])
    if kind == "whisker_cycle":
        cycle_graph(n)
        if r == 0:
            return frozenset([n + 1] + _pairs(range(2, n, 3)))
        if r == 1:
            return frozenset([n + 1] + _pairs(range(2, n - 4, 3)) + [n - 2, n])
        return frozenset([n + 1] + _pairs(range(2, n - 2, 3)) + [n])
    raise DomainError(f"no cover pattern for family {kind!r}")


# --- transversal polymatroidal ideals --------------------------------------------


@dataclass(frozen=True)
class TransversalSpec:
    n: int
    sets: tuple[frozenset[int], ...]

    def __post_init__(self):
        sets = tuple(frozenset(F) for F in self.sets)
        if not sets:
            raise DomainError("need at least one factor")
        for F in sets:
            if not F:
                raise DomainError("factors must be nonempty")
            if min(F) < 1 or max(F) > self.n:
                raise DomainError(f"factor {sorted(F)} outside 1..{self.n}")
        object.__setattr__(self, "sets", sets)

    @property
    def union(self) -> frozenset[int]:
        return frozenset().union(*self.sets)


def transversal_ideal(spec: TransversalSpec) -> MonomialIdeal:
    I = prime_ideal(sorted(spec.sets[0]), spec.n)
    for F in spec.sets[1:]:
        I = product(I, prime_ideal(sorted(F), spec.n))
    return I


def intersection_graph(spec: TransversalSpec) -> Graph:
    r = len(spec.sets)
    return Graph.from_edges(r, [
        (i + 1, j + 1) for i, j in itertools.combinations(range(r), 2)
        if spec.sets[i] & spec.sets[j]
    ])


def transversal_depth(spec: TransversalSpec) -> int:
    c = len(intersection_graph(spec).components())
    return c - 1 + spec.n - len(spec.union)


def _connected_subsets(g: Graph) -> list[frozenset[int]]:
    out = []
    verts = range(1, g.nverts + 1)
    for k in range(1, g.nverts + 1):
        for V in itertools.combinations(verts, k):
            V = frozenset(V)
            start = min(V)
            comp, stack = {start}, [start]
            while stack:
                for w in g.neighbors(stack.pop()) & V:
                    if w not in comp:
                        comp.add(w)
                        stack.append(w)
            if comp == V:
                out.append(V)
    return out


def transversal_ass(spec: TransversalSpec) -> tuple[frozenset[int], ...]:
    """Unions of the factors over connected vertex sets of the intersection graph."""
    g = intersection_graph(spec)
    return sort_primes(frozenset().union(*(spec.sets[i - 1] for i in V))
                       for V in _connected_subsets(g))


def transversal_maxdepth(spec: TransversalSpec) -> tuple[bool, bool]:
    """(depth == mdepth from the closed forms, at most one non-principal factor)."""
    holds = transversal_depth(spec) == spec.n - max(len(F) for F in transversal_ass(spec))
    classified = sum(1 for F in spec.sets if len(F) > 1) <= 1
    return holds, classified


# --- Veronese type ----------------------------------------------------------------


@dataclass(frozen=True)
class VeroneseSpec:
    d: int
    bounds: tuple[int, ...]

    def __post_init__(self):
        bounds = tuple(int(a) for a in self.bounds)
        if self.d < 1:
            raise DomainError("d must be positive")
        if not bounds:
            raise DomainError("need at least one bound")
        if any(a < 1 or a > self.d for a in bounds):
            raise DomainError(f"bounds must lie in 1..{self.d}: {list(bounds)}")
        if sum(bounds) < self.d:
            raise DomainError("bounds sum below d: the ideal would have no generators")
        object.__setattr__(self, "bounds", bounds)

    @property
    def n(self) -> int:
        return len(self.bounds)


def veronese_ideal(spec: VeroneseSpec) -> MonomialIdeal:
    gens = tuple(u for u in itertools.product(*(range(a + 1) for a in spec.bounds))
                 if sum(u) == spec.d)
    return MonomialIdeal(spec.n, gens)


def veronese_ass(spec: VeroneseSpec) -> tuple[frozenset[int], ...]:
    total = sum(spec.bounds)
    out = []
    for k in range(spec.n + 1):
        for F in itertools.combinations(range(1, spec.n + 1), k):
            rest = sum(a for i, a in enumerate(spec.bounds, 1) if i not in F)
            if total >= spec.d - 1 + k and rest <= spec.d - 1:
                out.append(frozenset(F))
    return sort_primes(out)


def veronese_depth(spec: VeroneseSpec) -> int:
    return max(0, spec.d + spec.n - 1 - sum(spec.bounds))


def veronese_maxdepth(spec: VeroneseSpec) -> bool:
    target = sum(spec.bounds) - (spec.d - 1)
    return any(len(F) == target for F in veronese_ass(spec))
