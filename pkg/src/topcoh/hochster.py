"""Graded local cohomology of Stanley-Reisner rings via Hochster's formula.

This module is an independent check on the annihilator engine: it never
looks at primary decompositions or cohomological dimension tables. For a
squarefree monomial ideal I with complex D and a multidegree a <= 0 with
negative support F,

    dim_k H^i_m(R/I)_a = dim_k H~^{i-|F|-1}(lk_D F; k)   if F is a face of D,

and 0 otherwise (also 0 when some entry of a is positive).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Iterable, Optional

from .errors import InvalidArgument
from .groebner import Ideal
from .primdec import monomial_generators


@dataclass(frozen=True)
class SimplicialComplex:
    """A complex on an ordered vertex list, stored by its facets.

    Facets are frozensets of vertex names. The complex {∅} has the single
    facet ``frozenset()``; the void complex has no facets at all.
    """

    vertices: tuple
    facets: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        facets = {frozenset(f) for f in self.facets}
        unknown = set().union(*facets) - set(self.vertices) if facets else set()
        if unknown:
            raise InvalidArgument(f"facets use unknown vertices {sorted(unknown)}")
        maximal = frozenset(f for f in facets if not any(f < g for g in facets))
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "facets", maximal)

    @property
    def dim(self) -> int:
        if not self.facets:
            return -2
        return max(len(f) for f in self.facets) - 1

    def __contains__(self, face) -> bool:
        face = frozenset(face)
        return any(face <= f for f in self.facets)

    def faces(self) -> set:
        out = set()
        for f in self.facets:
            members = sorted(f, key=self.vertices.index)
            for k in range(len(members) + 1):
                out.update(frozenset(c) for c in combinations(members, k))
        return out

    def faces_of_dim(self, i: int) -> list:
        """i-faces as index tuples sorted in vertex order."""
        pos = {v: k for k, v in enumerate(self.vertices)}
        return sorted(tuple(sorted(pos[v] for v in f)) for f in self.faces() if len(f) == i + 1)


def stanley_reisner(I: Ideal) -> SimplicialComplex:
    """Complex whose faces are the variable sets with squarefree product outside I."""
    if I.is_unit():
        raise InvalidArgument("the unit ideal has no Stanley-Reisner complex")
    ring = I.ring
    gens = monomial_generators(I) if not I.is_zero() else ()
    if any(e > 1 for m in gens for e in m):
        raise InvalidArgument(f"{I} is not squarefree")
    nonfaces = [frozenset(i for i, e in enumerate(m) if e) for m in gens]
    faces = []
    for k in range(ring.n + 1):
        for S in combinations(range(ring.n), k):
            S = frozenset(S)
            if not any(nf <= S for nf in nonfaces):
                faces.append(S)
    names = ring.variables
    return SimplicialComplex(names, frozenset(frozenset(names[i] for i in S) for S in faces))


def link(C: SimplicialComplex, face: Iterable[str]) -> SimplicialComplex:
    face = frozenset(face)
    if face not in C:
        raise InvalidArgument(f"{sorted(face)} is not a face")
    return SimplicialComplex(C.vertices, frozenset(f - face for f in C.facets if face <= f))


def matrix_rank(rows: list, characteristic: int = 0) -> int:
    """Rank of an integer matrix over Q (fraction-free elimination) or F_p."""
    M = [list(r) for r in rows]
    if not M or not M[0]:
        return 0
    nrows, ncols = len(M), len(M[0])
    p = characteristic
    if p:
        M = [[x % p for x in r] for r in M]
    r = 0
    prev = 1
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        top = M[r]
        if p:
            inv = pow(top[c], -1, p)
            for i in range(r + 1, nrows):
                f = M[i][c] * inv % p
                if f:
                    row = M[i]
                    for j in range(c, ncols):
                        row[j] = (row[j] - f * top[j]) % p
        else:
            for i in range(r + 1, nrows):
                row = M[i]
                lead = row[c]
                for j in range(c + 1, ncols):
                    row[j] = (top[c] * row[j] - lead * top[j]) // prev
                row[c] = 0
            prev = top[c]
        r += 1
        if r == nrows:
            break
    return r


def coboundary(C: SimplicialComplex, i: int) -> list:
    """Matrix of δ: C^i -> C^{i+1} (rows: (i+1)-faces, columns: i-faces)."""
    lower = C.faces_of_dim(i)
    upper = C.faces_of_dim(i + 1)
    col = {f: k for k, f in enumerate(lower)}
    matrix = []
    for tau in upper:
        row = [0] * len(lower)
        for k in range(len(tau)):
            sigma = tau[:k] + tau[k + 1:]
            row[col[sigma]] = -1 if k % 2 else 1
        matrix.append(row)
    return matrix


def reduced_cohomology_ranks(C: SimplicialComplex, characteristic: int = 0) -> dict:
    """{i: dim H~^i(C; k)} for i = -1 .. dim C."""
    top = max(C.dim, -1)
    if not C.facets:
        return {-1: 0}
    ranks = {}
    delta = {i: matrix_rank(coboundary(C, i), characteristic) for i in range(-2, top + 1)}
    for i in range(-1, top + 1):
        f_i = len(C.faces_of_dim(i))
        ranks[i] = f_i - delta[i] - delta[i - 1]
    return ranks


def euler_characteristic_check(C: SimplicialComplex, characteristic: int = 0) -> bool:
    """Alternating sums of face numbers and of reduced cohomology ranks agree."""
    ranks = reduced_cohomology_ranks(C, characteristic)
    faces = sum((-1) ** i * len(C.faces_of_dim(i)) for i in range(-1, max(C.dim, -1) + 1))
    return faces == sum((-1) ** i * r for i, r in ranks.items())


def local_cohomology_rank(C: SimplicialComplex, i: int, degree: tuple, characteristic: int = 0) -> int:
    """dim_k H^i_m(k[C])_degree by Hochster's formula."""
    if any(e > 0 for e in degree):
        return 0
    F = frozenset(C.vertices[k] for k, e in enumerate(degree) if e < 0)
    if F not in C:
        return 0
    return reduced_cohomology_ranks(link(C, F), characteristic).get(i - len(F) - 1, 0)


@dataclass(frozen=True)
class TopRanks:
    d: int
    ranks: dict  # multidegree -> rank of H^d_m(R/I) there
    nonvanishing: bool


def squarefree_box(n: int) -> list:
    return [tuple(-e for e in bits) for bits in product((0, 1), repeat=n)]


def top_local_cohomology_ranks(
    I: Ideal, degrees: Optional[Iterable[tuple]] = None, characteristic: Optional[int] = None
) -> TopRanks:
    """Ranks of H^d_m(R/I), d = dim R/I, over ``degrees`` (default: squarefree box)."""
    C = stanley_reisner(I)
    n = I.ring.n
    p = I.ring.characteristic if characteristic is None else characteristic
    d = C.dim + 1
    box = squarefree_box(n)
    cache = {}

    def rank(degree):
        if len(degree) != n:
            raise InvalidArgument(f"degree {degree} has the wrong length")
        if any(e > 0 for e in degree):
            return 0
        F = tuple(e < 0 for e in degree)
        if F not in cache:
            cache[F] = local_cohomology_rank(C, d, tuple(-1 if f else 0 for f in F), p)
        return cache[F]

    requested = box if degrees is None else [tuple(x) for x in degrees]
    ranks = {deg: rank(deg) for deg in requested}
    nonvanishing = any(rank(deg) > 0 for deg in box)
    return TopRanks(d, ranks, nonvanishing)

