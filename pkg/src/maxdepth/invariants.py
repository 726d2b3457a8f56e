"""Betti tables, depth, regularity and the maximal-depth predicate.

Squarefree ideals go through Hochster's formula

    beta_{i,W}(S/I) = dim H~_{|W|-i-1}(Delta_W; F_p),

where Delta is the Stanley-Reisner complex.  Two shortcuts keep the sweep
small, neither changes the numbers:

* Only W that are unions of generator supports are visited.  Any other W has
  a vertex lying in no generator inside W, so Delta_W is a cone on it.
* For each W the homology is read off whichever of Delta_W and the upper
  Koszul complex K^W = {F in W : x_{W-F} in I} is smaller, using
  beta_{i,W}(S/I) = dim H~_{i-2}(K^W).  The two complexes partition the
  subsets of W, so one of them has at most 2^(|W|-1) faces.

General monomial ideals are polarized first.  ``betti_table_koszul`` is an
independent multigraded route that works on the original ideal.
"""

from __future__ import annotations

import functools
import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import NamedTuple

from .errors import BudgetExceeded, DomainError
from .homology import (DEFAULT_CHAR, MAX_FACES, check_prime, group_by_size,
                       homology_from_groups, independent_faces, koszul_faces)
from .ideal import MonomialIdeal, lcm, polarize
from .primes import alexander_dual, ass, associated_primes_with_witnesses, minimal_primes, \
    prime_order, WITNESS_BUDGET

#: Largest ring (after polarization) the Hochster sweep accepts.
MAX_VARS = 18


@dataclass(frozen=True)
class BettiTable:
    """Graded Betti numbers beta_{i,j} of S/I (only nonzero entries stored)."""

    entries: dict[tuple[int, int], int]
    nvars: int
    characteristic: int

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.entries.get(key, 0)

    @property
    def pd(self) -> int:
        return max(i for i, _ in self.entries)

    @property
    def reg(self) -> int:
        """Regularity of S/I."""
        return max(j - i for i, j in self.entries)

    def total(self, i: int) -> int:
        return sum(b for (k, _), b in self.entries.items() if k == i)

    def rows(self) -> list[list[int]]:
        """Macaulay2-style layout: row r, column i holds beta_{i, i+r}."""
        return [[self[i, i + r] for i in range(self.pd + 1)] for r in range(self.reg + 1)]

    def format(self) -> str:
        width = max(len(str(b)) for b in self.entries.values()) + 1
        head = "     " + "".join(f"{i:>{width}}" for i in range(self.pd + 1))
        lines = [head]
        for r, row in enumerate(self.rows()):
            cells = "".join(f"{(b if b else '.'):>{width}}" for b in row)
            lines.append(f"{r:>3}: {cells}")
        return "\n".join(lines)


def union_closure(masks: list[int], limit: int | None = None) -> list[int]:
    family = {0}
    for g in sorted(set(masks)):
        family |= {w | g for w in family}
        if limit is not None and len(family) > limit:
            raise BudgetExceeded(f"more than {limit} candidate multidegrees")
    return sorted(family)


def _betti_at(gens: list[int], W: int, p: int, max_faces: int) -> dict[int, int]:
    """{i: beta_{i,W}(S/I)} for a squarefree ideal with generator masks ``gens``."""
    size = bin(W).count("1")
    if W == 0:
        return {0: 1}
    inside = [g for g in gens if g & W == g]
    koszul_bound = sum(1 << (size - bin(g).count("1")) for g in inside)
    if koszul_bound < 1 << (size - 1):
        h = homology_from_groups(group_by_size(koszul_faces(inside, W, max_faces)), p)
        return {d + 2: r for d, r in h.items()}
    h = homology_from_groups(group_by_size(independent_faces(inside, W, max_faces)), p)
    return {size - d - 1: r for d, r in h.items()}


def _sweep(args) -> list[tuple[int, int, int]]:
    gens, Ws, p, max_faces = args
    out = []
    for W in Ws:
        j = bin(W).count("1")
        for i, b in _betti_at(gens, W, p, max_faces).items():
            out.append((i, j, b))
    return out


def betti_table(I: MonomialIdeal, p: int = DEFAULT_CHAR, max_vars: int = MAX_VARS,
                max_faces: int = MAX_FACES, jobs: int = 1) -> BettiTable:
    """Graded Betti table of S/I for squarefree I via Hochster's formula."""
    if not I.is_squarefree:
        raise DomainError("betti_table needs a squarefree ideal; polarize first")
    if I.nvars > max_vars:
        raise BudgetExceeded(f"{I.nvars} variables exceeds the Hochster cap of {max_vars}")
    check_prime(p)
    return _betti_table_cached(I, p, max_faces, jobs)


@functools.lru_cache(maxsize=512)
def _betti_table_cached(I: MonomialIdeal, p: int, max_faces: int, jobs: int) -> BettiTable:
    gens = I.supports()
    Ws = union_closure(gens)
    if jobs > 1 and len(Ws) > 64:
        chunks = [(gens, Ws[k::jobs], p, max_faces) for k in range(jobs)]
        with ProcessPoolExecutor(jobs) as pool:
            parts = list(pool.map(_sweep, chunks))
    else:
        parts = [_sweep((gens, Ws, p, max_faces))]
    entries: dict[tuple[int, int], int] = {}
    for part in parts:
        for i, j, b in part:
            entries[i, j] = entries.get((i, j), 0) + b
    return BettiTable(dict(sorted(entries.items())), I.nvars, p)


def lcm_lattice(I: MonomialIdeal, limit: int = 10**6) -> list[tuple[int, ...]]:
    family = {(0,) * I.nvars}
    for g in I.gens:
        family |= {lcm(w, g) for w in family}
        if len(family) > limit:
            raise BudgetExceeded(f"lcm lattice larger than {limit}")
    return sorted(family)


def betti_table_koszul(I: MonomialIdeal, p: int = DEFAULT_CHAR) -> BettiTable:
    """Graded Betti table of S/I for any monomial ideal from upper Koszul complexes.

    beta_{i,b}(S/I) = dim H~_{i-2}(K^b) with K^b = {F in supp(b) : x^(b-F) in I};
    only multidegrees b in the lcm lattice can contribute.
    """
    check_prime(p)
    n = I.nvars
    entries: dict[tuple[int, int], int] = {(0, 0): 1}
    for b in lcm_lattice(I):
        if not any(b):
            continue
        supp = [i for i in range(n) if b[i]]
        faces = []
        for r in range(len(supp) + 1):
            for F in itertools.combinations(supp, r):
                c = list(b)
                for i in F:
                    c[i] -= 1
                if I.contains(tuple(c)):
                    faces.append(sum(1 << i for i in F))
        j = sum(b)
        for d, r in homology_from_groups(group_by_size(faces), p).items():
            entries[d + 2, j] = entries.get((d + 2, j), 0) + r
    return BettiTable(dict(sorted(entries.items())), n, p)


def projective_dimension(I: MonomialIdeal, p: int = DEFAULT_CHAR, **kw) -> int:
    if I.is_zero:
        return 0
    return betti_table(I, p, **kw).pd


def depth_squarefree(I: MonomialIdeal, p: int = DEFAULT_CHAR, **kw) -> int:
    """depth S/I = n - pd S/I."""
    return I.nvars - projective_dimension(I, p, **kw)


def regularity(I: MonomialIdeal, p: int = DEFAULT_CHAR, **kw) -> int:
    """reg(I) = reg(S/I) + 1 for a nonzero squarefree ideal."""
    if I.is_zero:
        raise DomainError("regularity of the zero ideal is not defined")
    return betti_table(I, p, **kw).reg + 1


def depth_general(I: MonomialIdeal, p: int = DEFAULT_CHAR, max_vars: int = MAX_VARS, **kw) -> int:
    """depth S/I through the polarization: depth of the polarized quotient minus added variables."""
    J, added = polarize(I)
    if J.nvars > max_vars:
        raise BudgetExceeded(f"polarization has {J.nvars} variables, cap is {max_vars}")
    return depth_squarefree(J, p, max_vars=max_vars, **kw) - added


def depth(I: MonomialIdeal, p: int = DEFAULT_CHAR, **kw) -> int:
    if I.is_squarefree:
        return depth_squarefree(I, p, **kw)
    return depth_general(I, p, **kw)


class MaxDepth(NamedTuple):
    holds: bool
    depth: int
    mdepth: int
    witness: frozenset  # associated prime of maximal height


def maximal_depth_by_dual(I: MonomialIdeal, p: int = DEFAULT_CHAR, **kw) -> bool:
    """reg(I^dual) equals the largest degree of a generator of I^dual."""
    if I.is_zero:
        return True
    dual = alexander_dual(I)
    return regularity(dual, p, **kw) == max(sum(g) for g in dual.gens)


def has_maximal_depth(I: MonomialIdeal, p: int = DEFAULT_CHAR,
                      budget: int = WITNESS_BUDGET, **kw) -> MaxDepth:
    """depth S/I == mdepth S/I.

    Squarefree ideals are also decided through the Alexander dual; a
    disagreement between the two routes raises ``RuntimeError``.
    """
    if I.is_zero:
        return MaxDepth(True, I.nvars, I.nvars, frozenset())
    primes = ass(I, budget)
    witness = max(primes, key=prime_order)
    md = I.nvars - len(witness)
    d = depth(I, p, **kw)
    holds = d == md
    if I.is_squarefree and maximal_depth_by_dual(I, p, **kw) != holds:
        raise RuntimeError(f"maximal-depth routes disagree on {I}")
    return MaxDepth(holds, d, md, witness)


def witness_monomial(I: MonomialIdeal, F: frozenset) -> tuple[int, ...]:
    """A monomial u with (I : u) = p_F."""
    if I.is_squarefree:
        if F not in minimal_primes(I):
            raise DomainError(f"{sorted(F)} is not an associated prime")
        return tuple(0 if i + 1 in F else 1 for i in range(I.nvars))
    return associated_primes_with_witnesses(I)[F]
