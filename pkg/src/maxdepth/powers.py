"""Depth and maximal depth along the powers I, I^2, ..., I^kmax.

Results are per-k only: nothing here claims anything about k beyond the
tested range.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import BudgetExceeded, DomainError
from .families import Graph
from .homology import DEFAULT_CHAR
from .ideal import MonomialIdeal, power
from .invariants import depth_general
from .primes import WITNESS_BUDGET, ass, minimal_primes, prime_order


def power_depth(I: MonomialIdeal, k: int, p: int = DEFAULT_CHAR, **kw) -> int:
    return depth_general(power(I, k), p, **kw)


def _require_bipartite(G: Graph):
    if G.bipartition() is None:
        raise DomainError("graph is not bipartite")


def bipartite_power_ass(G: Graph, k: int, check: bool = True,
                        budget: int = WITNESS_BUDGET) -> tuple[frozenset[int], ...]:
    """Ass(I(G)^k), which for bipartite G is the set of minimal vertex covers.

    With ``check`` the witness search on I(G)^k is run too (skipped silently
    when over budget) and must agree.
    """
    _require_bipartite(G)
    I = G.edge_ideal()
    primes = minimal_primes(I)
    if check:
        try:
            found = ass(power(I, k), budget)
        except BudgetExceeded:
            return primes
        if found != primes:
            raise RuntimeError(f"Ass(I^{k}) differs from Min(I) for {sorted(G.edges)}")
    return primes


def is_star(G: Graph) -> bool:
    if not G.is_connected():
        raise DomainError("is_star expects a connected graph")
    if not G.edges:
        return False
    return any(all(v in e for e in G.edges) for v in range(1, G.nverts + 1))


@dataclass
class PowerEntry:
    k: int
    depth: int | None = None
    mdepth: int | None = None
    holds: bool | None = None
    ass: tuple[frozenset[int], ...] = ()
    error: str | None = None


@dataclass
class PowerReport:
    entries: list[PowerEntry] = field(default_factory=list)
    note: str = ""

    def flags(self) -> list[bool | None]:
        return [e.holds for e in self.entries]


def power_maxdepth_report(G: Graph, kmax: int = 3, p: int = DEFAULT_CHAR,
                          budget: int = WITNESS_BUDGET, **kw) -> PowerReport:
    if not G.is_connected():
        raise DomainError("power report expects a connected graph")
    _require_bipartite(G)
    I = G.edge_ideal()
    report = PowerReport(note=f"stabilization checked only for k <= {kmax}")
    for k in range(1, kmax + 1):
        entry = PowerEntry(k)
        try:
            Ik = power(I, k)
            entry.ass = ass(Ik, budget)
            entry.mdepth = Ik.nvars - max(len(F) for F in entry.ass)
            entry.depth = depth_general(Ik, p, **kw)
            entry.holds = entry.depth == entry.mdepth
        except BudgetExceeded as exc:
            entry.error = str(exc)
        report.entries.append(entry)
    return report


def mdepth_sequence(I: MonomialIdeal, kmax: int, budget: int = WITNESS_BUDGET) -> list[int]:
    return [I.nvars - len(max(ass(power(I, k), budget), key=prime_order))
            for k in range(1, kmax + 1)]


def persistence_check(I: MonomialIdeal, kmax: int, budget: int = WITNESS_BUDGET) -> bool:
    """Ass(I^k) is contained in Ass(I^{k+1}) for every k < kmax."""
    primes = [set(ass(power(I, k), budget)) for k in range(1, kmax + 1)]
    holds = all(a <= b for a, b in zip(primes, primes[1:]))
    if holds:
        md = [I.nvars - max(len(F) for F in a) for a in primes]
        if any(b > a for a, b in zip(md, md[1:])):
            raise RuntimeError("persistent Ass but mdepth increased")
    return holds
