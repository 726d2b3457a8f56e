"""Simplicial complexes, boundary matrices and reduced homology over F_p.

Faces are handled internally as bitmasks (bit i-1 for vertex i); the public
``SimplicialComplex`` stores facets as frozensets of 1-based vertices.
Orientation: vertices of a face in increasing order, the face obtained by
dropping the j-th vertex gets sign (-1)^j.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import BudgetExceeded, DomainError
from .ideal import MonomialIdeal

DEFAULT_CHAR = 32003
SWEEP_CHARS = (2, 3, 5, 32003)

#: Refuse to build complexes with more faces than this.
MAX_FACES = 1 << 24


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def check_prime(p: int):
    if not is_prime(p):
        raise DomainError(f"characteristic must be prime, got {p}")


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << (v - 1)
    return m


def vertices_of(mask: int) -> frozenset[int]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return frozenset(out)


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low)
        mask ^= low
    return out


def _maximal(masks: Iterable[int]) -> list[int]:
    ms = sorted(set(masks), key=lambda m: -bin(m).count("1"))
    kept: list[int] = []
    for m in ms:
        if not any(m & k == m for k in kept):
            kept.append(m)
    return kept


@dataclass(frozen=True)
class SimplicialComplex:
    """A complex on vertices 1..nverts given by its facets.

    ``facets == (frozenset(),)`` is the complex whose only face is the empty
    face; ``facets == ()`` is the void complex with no faces at all.
    """

    nverts: int
    facets: tuple[frozenset[int], ...]

    def __post_init__(self):
        masks = [mask_of(f) for f in self.facets]
        for f in self.facets:
            if any(v < 1 or v > self.nverts for v in f):
                raise DomainError(f"facet {sorted(f)} outside vertex range 1..{self.nverts}")
        canon = sorted(_maximal(masks), key=lambda m: (bin(m).count("1"), sorted(vertices_of(m))))
        object.__setattr__(self, "facets", tuple(vertices_of(m) for m in canon))

    @classmethod
    def from_masks(cls, nverts: int, masks: Iterable[int]) -> "SimplicialComplex":
        return cls(nverts, tuple(vertices_of(m) for m in masks))

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def dim(self) -> int:
        return max((len(f) - 1 for f in self.facets), default=-2)

    def facet_masks(self) -> list[int]:
        return [mask_of(f) for f in self.facets]

    def __contains__(self, face) -> bool:
        m = mask_of(face)
        return any(m & f == m for f in self.facet_masks())

    def faces_by_size(self, max_faces: int = MAX_FACES) -> list[list[int]]:
        """All faces as bitmasks, grouped by cardinality, each group sorted."""
        seen: set[int] = set()
        for f in self.facet_masks():
            stack = [f]
            while stack:
                g = stack.pop()
                if g in seen:
                    continue
                seen.add(g)
                if len(seen) > max_faces:
                    raise BudgetExceeded(f"complex has more than {max_faces} faces")
                for b in _bits(g):
                    stack.append(g ^ b)
        return group_by_size(seen)

    def f_vector(self) -> dict[int, int]:
        """Number of faces per dimension, starting at -1."""
        return {k - 1: len(g) for k, g in enumerate(self.faces_by_size()) if g}


def group_by_size(faces: Iterable[int]) -> list[list[int]]:
    groups: list[list[int]] = []
    for f in faces:
        k = bin(f).count("1")
        while len(groups) <= k:
            groups.append([])
        groups[k].append(f)
    for g in groups:
        g.sort()
    return groups


def stanley_reisner(I: MonomialIdeal) -> SimplicialComplex:
    """Faces are the vertex sets W with prod_{i in W} x_i not in I."""
    if not I.is_squarefree:
        raise DomainError("Stanley-Reisner complex needs a squarefree ideal")
    n = I.nvars
    faces = independent_faces(I.supports(), (1 << n) - 1)
    return SimplicialComplex.from_masks(n, _maximal(faces))


def induced(delta: SimplicialComplex, W: Iterable[int]) -> SimplicialComplex:
    w = mask_of(W)
    return SimplicialComplex.from_masks(delta.nverts, _maximal(f & w for f in delta.facet_masks()))


def independent_faces(gens: Sequence[int], W: int, limit: int = MAX_FACES) -> list[int]:
    """Subsets of ``W`` containing no generator mask (faces of the induced SR complex).

    Depth-first, adding vertices in increasing order; only generators whose
    highest vertex is the one just added can become contained.
    """
    by_top: dict[int, list[int]] = {}
    for g in gens:
        if g & W == g:
            by_top.setdefault(g.bit_length() - 1, []).append(g)
    verts = [i for i in range(W.bit_length()) if W >> i & 1]
    out = [0]
    stack = [(0, 0)]
    while stack:
        face, start = stack.pop()
        for idx in range(start, len(verts)):
            v = verts[idx]
            new = face | (1 << v)
            if any(g & new == g for g in by_top.get(v, ())):
                continue
            out.append(new)
            if len(out) > limit:
                raise BudgetExceeded(f"complex has more than {limit} faces")
            stack.append((new, idx + 1))
    return out


def koszul_faces(gens: Sequence[int], W: int, limit: int = MAX_FACES) -> list[int]:
    """Subsets F of ``W`` such that ``W \\ F`` still contains a generator."""
    inside = [g for g in gens if g & W == g]
    if not inside:
        return []
    verts = [i for i in range(W.bit_length()) if W >> i & 1]
    out = [0]
    stack = [(0, 0, inside)]
    while stack:
        face, start, alive = stack.pop()
        for idx in range(start, len(verts)):
            b = 1 << verts[idx]
            still = [g for g in alive if not g & b]
            if not still:
                continue
            new = face | b
            out.append(new)
            if len(out) > limit:
                raise BudgetExceeded(f"complex has more than {limit} faces")
            stack.append((new, idx + 1, still))
    return out


# --- boundary matrices and ranks -------------------------------------------------


def boundary_column(face: int, index: dict[int, int], p: int) -> dict[int, int]:
    """Sparse boundary of ``face`` mod p as {row: coefficient}.

    Removing the j-th smallest vertex carries the sign (-1)^j; ``index`` maps
    the faces one size down to row numbers.
    """
    return {index[face ^ b]: 1 if j % 2 == 0 else p - 1 for j, b in enumerate(_bits(face))}


def boundary_matrix(groups: Sequence[Sequence[int]], k: int, p: int) -> list[list[int]]:
    """Dense matrix of the map from k-vertex faces to (k-1)-vertex faces, mod p.

    ``groups`` is the output of ``faces_by_size``; rows follow ``groups[k-1]``,
    columns follow ``groups[k]``.
    """
    rows = groups[k - 1] if 0 < k <= len(groups) else []
    cols = groups[k] if k < len(groups) else []
    index = {f: r for r, f in enumerate(rows)}
    M = [[0] * len(cols) for _ in rows]
    for c, f in enumerate(cols):
        for r, v in boundary_column(f, index, p).items():
            M[r][c] = v
    return M


def rank_mod_p(M: Sequence[Sequence[int]], p: int) -> int:
    """Rank over F_p by row reduction with modular inverses."""
    rows = [[x % p for x in row] for row in M]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][c], p - 2, p)
        prow = [x * inv % p for x in rows[rank]]
        rows[rank] = prow
        for r in range(len(rows)):
            if r != rank and rows[r][c]:
                f = rows[r][c]
                rows[r] = [(x - f * y) % p for x, y in zip(rows[r], prow)]
        rank += 1
        if rank == len(rows):
            break
    return rank


def _boundary_ranks_gf2(groups: list[list[int]]) -> list[int]:
    top = len(groups) - 1
    ranks = [0] * (top + 2)
    cleared: set[int] = set()
    for k in range(top, 0, -1):
        index = {f: r for r, f in enumerate(groups[k - 1])}
        pivots: dict[int, int] = {}
        new_cleared = set()
        for c, f in enumerate(groups[k]):
            if c in cleared:
                continue
            col = 0
            for b in _bits(f):
                col |= 1 << index[f ^ b]
            while col:
                low = col.bit_length() - 1
                other = pivots.get(low)
                if other is None:
                    pivots[low] = col
                    new_cleared.add(low)
                    break
                col ^= other
        ranks[k] = len(pivots)
        cleared = new_cleared
    return ranks


def _boundary_ranks_modp(groups: list[list[int]], p: int) -> list[int]:
    top = len(groups) - 1
    ranks = [0] * (top + 2)
    cleared: set[int] = set()
    for k in range(top, 0, -1):
        index = {f: r for r, f in enumerate(groups[k - 1])}
        pivots: dict[int, dict[int, int]] = {}
        new_cleared = set()
        for c, f in enumerate(groups[k]):
            if c in cleared:
                continue
            col = boundary_column(f, index, p)
            while col:
                low = max(col)
                other = pivots.get(low)
                if other is None:
                    inv = pow(col[low], p - 2, p)
                    pivots[low] = {r: v * inv % p for r, v in col.items()}
                    new_cleared.add(low)
                    break
                factor = col[low]
                for r, v in other.items():
                    x = (col.get(r, 0) - factor * v) % p
                    if x:
                        col[r] = x
                    else:
                        col.pop(r, None)
        ranks[k] = len(pivots)
        cleared = new_cleared
    return ranks


def homology_from_groups(groups: list[list[int]], p: int) -> dict[int, int]:
    """Reduced Betti numbers {dim: rank} from faces grouped by size.

    ``groups[0]`` must be ``[0]`` (the empty face) unless the complex is void.
    Only nonzero ranks are returned.
    """
    if not groups or not groups[0]:
        return {}
    ranks = _boundary_ranks_gf2(groups) if p == 2 else _boundary_ranks_modp(groups, p)
    out = {}
    for k, faces in enumerate(groups):
        h = len(faces) - ranks[k] - ranks[k + 1]
        if h:
            out[k - 1] = h
    return out


@dataclass(frozen=True)
class HomologyProfile:
    ranks: dict[int, int]
    characteristic: int

    def __getitem__(self, d: int) -> int:
        return self.ranks.get(d, 0)

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * r for d, r in self.ranks.items())


def reduced_homology(delta: SimplicialComplex, p: int = DEFAULT_CHAR,
                     max_faces: int = MAX_FACES) -> HomologyProfile:
    check_prime(p)
    if delta.is_void:
        return HomologyProfile({}, p)
    return HomologyProfile(homology_from_groups(delta.faces_by_size(max_faces), p), p)
