"""Minimal primes, big height, Alexander duality and associated primes.

Prime supports are frozensets of 1-based variable indices; ``{1, 3}`` stands
for the prime ``(x1, x3)``.  Collections of primes are returned sorted by
(size, lex).
"""

from __future__ import annotations

import itertools
from typing import Iterable

import numpy as np

from .errors import BudgetExceeded, DomainError
from .homology import vertices_of
from .ideal import (MonomialIdeal, depolarization_map, grlex_key, polarize,
                    squarefree_monomial)

PrimeSupport = frozenset

#: Cap on the number of candidate witness monomials in ``ass_general``.
WITNESS_BUDGET = 10**7


def prime_order(F):
    return (len(F), sorted(F))


def sort_primes(primes: Iterable[frozenset[int]]) -> tuple[frozenset[int], ...]:
    return tuple(sorted(set(primes), key=prime_order))


def format_prime(F: Iterable[int], names=None) -> str:
    F = sorted(F)
    if names is None:
        return "{" + ",".join(f"x{i}" for i in F) + "}"
    return "{" + ",".join(names[i - 1] for i in F) + "}"


def _require_squarefree(I: MonomialIdeal):
    if not I.is_squarefree:
        raise DomainError("operation needs a squarefree ideal")


def minimal_transversals(edges: list[int]) -> list[int]:
    """Minimal transversals of a hypergraph given as bitmask edges.

    Branches on the lowest-index uncovered edge; partial covers already
    containing a found transversal are pruned.
    """
    if not edges:
        return [0]
    edges = sorted(set(edges))
    found: list[int] = []

    def minimal(c: int) -> bool:
        for v in vertices_of(c):
            b = 1 << (v - 1)
            if not any(e & c == b for e in edges):
                return False
        return True

    def search(cover: int):
        if any(f & cover == f for f in found):
            return
        for e in edges:
            if not e & cover:
                break
        else:
            if minimal(cover):
                found.append(cover)
            return
        rest = e
        while rest:
            b = rest & -rest
            rest ^= b
            search(cover | b)

    search(0)
    return found


def minimal_primes(I: MonomialIdeal) -> tuple[frozenset[int], ...]:
    """Minimal vertex covers of the support hypergraph, i.e. the minimal primes."""
    _require_squarefree(I)
    return sort_primes(vertices_of(c) for c in minimal_transversals(I.supports()))


def bight(I: MonomialIdeal) -> int:
    _require_squarefree(I)
    if I.is_zero:
        raise DomainError("big height of the zero ideal is undefined")
    return max(len(F) for F in minimal_primes(I))


def mdepth_squarefree(I: MonomialIdeal) -> int:
    _require_squarefree(I)
    if I.is_zero:
        return I.nvars
    return I.nvars - bight(I)


def alexander_dual(I: MonomialIdeal) -> MonomialIdeal:
    _require_squarefree(I)
    if I.is_zero:
        raise DomainError("Alexander dual of the zero ideal is not defined here")
    n = I.nvars
    return MonomialIdeal(n, tuple(squarefree_monomial(F, n) for F in minimal_primes(I)), I.names)


def associated_primes_with_witnesses(I: MonomialIdeal, budget: int = WITNESS_BUDGET
                                     ) -> dict[frozenset[int], tuple[int, ...]]:
    """Map each associated prime p_F of S/I to a witness u with (I : u) = p_F.

    Candidates u range over the box 0 <= u_i <= max exponent of x_i among the
    generators.  The witness reported is the smallest in graded lex order.
    """
    n = I.nvars
    if I.is_zero:
        return {frozenset(): (0,) * n}
    bounds = I.max_exponents()
    size = 1
    for b in bounds:
        size *= b + 1
    if size > budget:
        raise BudgetExceeded(f"witness search needs {size} candidates, budget is {budget}")

    G = np.array(I.gens, dtype=np.int16)
    chunk = max(64, 4_000_000 // (len(I.gens) * n))
    weights = (1 << np.arange(n, dtype=np.int64))
    found: dict[int, tuple[int, ...]] = {}
    boxes = itertools.product(*(range(b + 1) for b in bounds))
    while True:
        block = list(itertools.islice(boxes, chunk))
        if not block:
            break
        U = np.array(block, dtype=np.int16)
        Q = np.maximum(G[None, :, :] - U[:, None, :], 0)  # colon generators g / gcd(g, u)
        deg = Q.sum(axis=2)
        outside = (deg > 0).all(axis=1)  # u not in I
        supp = ((Q > 0).astype(np.int64) * weights).sum(axis=2)
        linear = deg == 1
        F = np.bitwise_or.reduce(np.where(linear, supp, 0), axis=1)
        # every colon generator must be divisible by one of the linear ones
        hit = ((supp & F[:, None]) != 0).all(axis=1)
        ok = outside & hit & (F != 0)
        for idx in np.flatnonzero(ok):
            f = int(F[idx])
            u = tuple(int(x) for x in U[idx])
            if f not in found or grlex_key(u) < grlex_key(found[f]):
                found[f] = u
    return {vertices_of(f): u for f, u in found.items()}


def ass_general(I: MonomialIdeal, budget: int = WITNESS_BUDGET) -> tuple[frozenset[int], ...]:
    return sort_primes(associated_primes_with_witnesses(I, budget))


def mdepth_general(I: MonomialIdeal, budget: int = WITNESS_BUDGET) -> int:
    return I.nvars - max(len(F) for F in ass_general(I, budget))


def ass_via_polarization(I: MonomialIdeal) -> tuple[frozenset[int], ...]:
    """Associated primes as images of the minimal primes of the polarization."""
    if I.is_zero:
        return (frozenset(),)
    J, _ = polarize(I)
    back = depolarization_map(I)
    return sort_primes(frozenset(back[v - 1] for v in F) for F in minimal_primes(J))


def ass(I: MonomialIdeal, budget: int = WITNESS_BUDGET) -> tuple[frozenset[int], ...]:
    """Associated primes: minimal primes when squarefree, witness search otherwise."""
    if I.is_squarefree:
        return minimal_primes(I)
    return ass_general(I, budget)


def mdepth(I: MonomialIdeal, budget: int = WITNESS_BUDGET) -> int:
    return I.nvars - max(len(F) for F in ass(I, budget))

