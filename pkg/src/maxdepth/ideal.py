"""Exact monomial and monomial-ideal arithmetic.

A monomial is a plain tuple of nonnegative exponents, position ``i`` holding the
exponent of ``x_{i+1}``.  Variables are labelled 1..n everywhere a *set* of
variables appears (prime supports, vertex covers, faces); only exponent tuples
are positional.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import DomainError

Monomial = tuple[int, ...]

#: Largest total degree accepted for a generator.
MAX_DEGREE = 64


def degree(u: Monomial) -> int:
    return sum(u)


def is_squarefree(u: Monomial) -> bool:
    return all(e <= 1 for e in u)


def divides(u: Monomial, v: Monomial) -> bool:
    return all(a <= b for a, b in zip(u, v))


def mul(u: Monomial, v: Monomial) -> Monomial:
    return tuple(a + b for a, b in zip(u, v))


def lcm(u: Monomial, v: Monomial) -> Monomial:
    return tuple(max(a, b) for a, b in zip(u, v))


def quotient_by_gcd(g: Monomial, u: Monomial) -> Monomial:
    """g / gcd(g, u)."""
    return tuple(a - b if a > b else 0 for a, b in zip(g, u))


def support(u: Monomial) -> frozenset[int]:
    """1-based indices of the variables dividing ``u``."""
    return frozenset(i + 1 for i, e in enumerate(u) if e)


def support_mask(u: Monomial) -> int:
    m = 0
    for i, e in enumerate(u):
        if e:
            m |= 1 << i
    return m


def squarefree_monomial(vertices: Iterable[int], n: int) -> Monomial:
    """The product of ``x_i`` over 1-based ``vertices``."""
    vs = set(vertices)
    if any(v < 1 or v > n for v in vs):
        raise DomainError(f"vertex out of range 1..{n}: {sorted(vs)}")
    return tuple(1 if i + 1 in vs else 0 for i in range(n))


def grlex_key(u: Monomial):
    # ascending degree, then x1 > x2 > ... within a degree
    return (sum(u), tuple(-e for e in u))


def format_monomial(u: Monomial, names: Sequence[str] | None = None) -> str:
    names = names or [f"x{i + 1}" for i in range(len(u))]
    parts = []
    for name, e in zip(names, u):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def _minimize(gens: Iterable[Monomial]) -> tuple[Monomial, ...]:
    kept: list[Monomial] = []
    for g in sorted(set(gens), key=grlex_key):
        if not any(divides(h, g) for h in kept):
            kept.append(g)
    return tuple(kept)


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal of ``K[x_1..x_n]`` stored by its minimal generators.

    Construction canonicalizes: duplicates and non-minimal generators are
    dropped and the rest sorted in graded lex order.  An empty generator set is
    the zero ideal; the unit ideal is rejected.
    """

    nvars: int
    gens: tuple[Monomial, ...]
    names: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.nvars < 1:
            raise DomainError(f"need at least one variable, got nvars={self.nvars}")
        raw = [tuple(int(e) for e in g) for g in self.gens]
        for g in raw:
            if len(g) != self.nvars:
                raise DomainError(
                    f"exponent vector {list(g)} has length {len(g)}, expected {self.nvars}"
                )
            if any(e < 0 for e in g):
                raise DomainError(f"negative exponent in {list(g)}")
            if sum(g) == 0:
                raise DomainError("the unit ideal is not allowed")
            if sum(g) > MAX_DEGREE:
                raise DomainError(f"generator degree {sum(g)} exceeds cap {MAX_DEGREE}")
        if self.names is not None and len(self.names) != self.nvars:
            raise DomainError("names must have one entry per variable")
        object.__setattr__(self, "gens", _minimize(raw))
        if self.names is not None:
            object.__setattr__(self, "names", tuple(self.names))

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_squarefree(self) -> bool:
        return all(is_squarefree(g) for g in self.gens)

    def max_exponents(self) -> tuple[int, ...]:
        return tuple(max((g[i] for g in self.gens), default=0) for i in range(self.nvars))

    def contains(self, u: Monomial) -> bool:
        return any(divides(g, u) for g in self.gens)

    def supports(self) -> list[int]:
        """Generator supports as bitmasks (bit i-1 for x_i)."""
        return [support_mask(g) for g in self.gens]

    def variable_names(self) -> tuple[str, ...]:
        return self.names or tuple(f"x{i + 1}" for i in range(self.nvars))

    def __str__(self):
        if self.is_zero:
            return "(0)"
        names = self.variable_names()
        return "(" + ", ".join(format_monomial(g, names) for g in self.gens) + ")"


def minimal_generators(raw: Iterable[Sequence[int]], n: int) -> MonomialIdeal:
    return MonomialIdeal(n, tuple(tuple(g) for g in raw))


def prime_ideal(F: Iterable[int], n: int) -> MonomialIdeal:
    """The monomial prime ``p_F = (x_i : i in F)``."""
    return MonomialIdeal(n, tuple(squarefree_monomial([i], n) for i in F))


def _check_same_ring(I: MonomialIdeal, J: MonomialIdeal):
    if I.nvars != J.nvars:
        raise DomainError(f"ring mismatch: {I.nvars} vs {J.nvars} variables")


def product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check_same_ring(I, J)
    return MonomialIdeal(I.nvars, tuple(mul(g, h) for g in I.gens for h in J.gens), I.names)


def intersection(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check_same_ring(I, J)
    return MonomialIdeal(I.nvars, tuple(lcm(g, h) for g in I.gens for h in J.gens), I.names)


def colon(I: MonomialIdeal, u: Sequence[int]) -> MonomialIdeal:
    u = tuple(u)
    if len(u) != I.nvars:
        raise DomainError(f"monomial length {len(u)} does not match {I.nvars} variables")
    if I.contains(u):
        raise DomainError("colon by a monomial inside the ideal gives the unit ideal")
    return MonomialIdeal(I.nvars, tuple(quotient_by_gcd(g, u) for g in I.gens), I.names)


def power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    if k < 1:
        raise DomainError(f"power exponent must be >= 1, got {k}")
    result = I
    for _ in range(k - 1):
        result = product(result, I)
    return result


def polarize(I: MonomialIdeal) -> tuple[MonomialIdeal, int]:
    """Standard polarization.

    ``x_i^e`` becomes ``x_{i,1} ... x_{i,e}``; variable ``i`` receives
    ``max(1, max exponent of x_i)`` slots, laid out as
    ``(x_{1,1}, .., x_{1,m_1}, x_{2,1}, ..)``.  Returns the squarefree ideal and
    the number of variables added.
    """
    slots = [max(1, m) for m in I.max_exponents()]
    offsets = [0]
    for s in slots:
        offsets.append(offsets[-1] + s)
    total = offsets[-1]
    gens = []
    for g in I.gens:
        v = [0] * total
        for i, e in enumerate(g):
            for j in range(e):
                v[offsets[i] + j] = 1
        gens.append(tuple(v))
    names = None
    if I.names is not None:
        names = tuple(
            name if s == 1 else f"{name}_{j + 1}"
            for name, s in zip(I.names, slots)
            for j in range(s)
        )
    return MonomialIdeal(total, tuple(gens), names), total - I.nvars


def depolarization_map(I: MonomialIdeal) -> list[int]:
    """For each polarized variable (1-based, in order), the original variable it came from."""
    out = []
    for i, m in enumerate(I.max_exponents()):
        out.extend([i + 1] * max(1, m))
    return out
