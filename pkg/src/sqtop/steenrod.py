"""Steenrod squares on simplicial cochains over GF(2).

For a degree-j cochain c and a (j+n)-simplex s = [z_0, ..., z_{j+n}],

    Sq^n(c)(s) = sum over admissible (U, V) of c(s minus U) * c(s minus V)

where ``s minus U`` deletes the vertices at the (0-based) positions in U.  A
pair (U, V) of disjoint increasing n-tuples from {0, ..., j+n} is admissible
when every u in U sits at a 1-based position of the sorted union U ∪ V with the
same parity as u, and every v in V at a position of the opposite parity.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import NamedTuple

from .cohomology import Cochain, CohomologyBasis, cohomology_basis, is_cocycle
from .complex import SimplicialComplex
from .errors import InvalidInput
from .f2 import BitMatrix, rank

__all__ = [
    "IndexPair",
    "SteenrodMatrix",
    "ProfileEntry",
    "admissible_index_pairs",
    "sq_cochain",
    "sq_cochain_pasting",
    "sq1_cochain_special",
    "sq_matrix",
    "sq_profile",
]


class IndexPair(NamedTuple):
    U: tuple[int, ...]
    V: tuple[int, ...]


class SteenrodMatrix(NamedTuple):
    n: int
    degree: int
    matrix: BitMatrix

    @property
    def rank(self) -> int:
        return rank(self.matrix)


class ProfileEntry(NamedTuple):
    n: int
    degree: int
    rank: int


@lru_cache(maxsize=None)
def _pairs(n: int, j: int) -> tuple[IndexPair, ...]:
    out = []
    for union in combinations(range(j + n + 1), 2 * n):
        U = tuple(w for k, w in enumerate(union, start=1) if (k - w) % 2 == 0)
        if len(U) == n:
            V = tuple(w for w in union if w not in U)
            out.append(IndexPair(U, V))
    return tuple(out)


def admissible_index_pairs(n: int, j: int) -> list[IndexPair]:
    """Admissible (U, V) for Sq^n on degree j, ordered by (sorted union, U).

    Within a fixed union the split is forced: an element goes to U exactly
    when its position and value have equal parity.
    """
    if n < 0 or j < 0:
        raise InvalidInput("n and j must be non-negative")
    return list(_pairs(n, j))


def _vertex_bits(s: int) -> list[int]:
    out = []
    while s:
        b = s & -s
        out.append(b)
        s ^= b
    return out


def _prepare(K: SimplicialComplex, n: int, c: Cochain) -> tuple[int, set[int]] | None:
    if c.complex is not K and c.complex != K:
        raise InvalidInput("cochain does not live on the given complex")
    if n < 0:
        raise InvalidInput("n must be non-negative")
    if c.degree < 0:
        raise InvalidInput("Steenrod squares are defined on cochains of degree >= 0")
    return c.degree, set(c.support_masks())


def sq_cochain(K: SimplicialComplex, n: int, c: Cochain) -> Cochain:
    """Sq^n(c), evaluated simplex by simplex."""
    j, supp = _prepare(K, n, c)
    out = 0
    if supp:
        pairs = _pairs(n, j)
        for i, s in enumerate(K.face_masks(j + n)):
            vb = _vertex_bits(s)
            acc = 0
            for U, V in pairs:
                su = s
                for u in U:
                    su ^= vb[u]
                if su not in supp:
                    continue
                sv = s
                for v in V:
                    sv ^= vb[v]
                if sv in supp:
                    acc ^= 1
            if acc:
                out |= 1 << i
    return Cochain(K, j + n, out)


def sq_cochain_pasting(K: SimplicialComplex, n: int, c: Cochain) -> Cochain:
    """Sq^n(c) summed over ordered pairs of generators of c.

    For generators x, y with union S of size j+n+1, S a face with sorted
    vertices z, the pair contributes [z]* once for each admissible (U, V)
    with S minus x = {z_v : v in V} and S minus y = {z_u : u in U}.
    A union S that is not a face of K contributes nothing.  Quadratic in the
    support of c; kept as a cross-check of ``sq_cochain``.
    """
    j, supp = _prepare(K, n, c)
    pairs = _pairs(n, j)
    gens = sorted(supp)
    hits = 0
    size = j + n + 1
    for x in gens:
        for y in gens:
            S = x | y
            if S.bit_count() != size or not K.has_face(S):
                continue
            z = _vertex_bits(S)
            for U, V in pairs:
                vmask = 0
                for v in V:
                    vmask |= z[v]
                umask = 0
                for u in U:
                    umask |= z[u]
                if S & ~x == vmask and S & ~y == umask:
                    hits ^= 1 << K.index_of(S)
    return Cochain(K, j + n, hits)


def sq1_cochain_special(K: SimplicialComplex, c: Cochain) -> Cochain:
    """Sq^1(c) via the sum over face pairs u < v with u + v even."""
    j, supp = _prepare(K, 1, c)
    out = 0
    if supp:
        for i, s in enumerate(K.face_masks(j + 1)):
            vb = _vertex_bits(s)
            acc = 0
            for u in range(j + 2):
                if s ^ vb[u] not in supp:
                    continue
                for v in range(u + 2, j + 2, 2):
                    if s ^ vb[v] in supp:
                        acc ^= 1
            if acc:
                out |= 1 << i
    return Cochain(K, j + 1, out)


def sq_matrix(K: SimplicialComplex, n: int, j: int, basis: CohomologyBasis | None = None) -> SteenrodMatrix:
    """Matrix of Sq^n: H^j -> H^{j+n}; column k is the image of representative k."""
    if basis is None:
        basis = cohomology_basis(K, reduced=True)
    reps = basis.representatives(j)
    rows = basis.dim(j + n)
    if j < 0:
        mat = BitMatrix.identity(len(reps)) if n == 0 else BitMatrix.zeros(rows, len(reps))
        return SteenrodMatrix(n, j, mat)
    cols = []
    for z in reps:
        img = sq_cochain(K, n, z)
        if not is_cocycle(img):
            raise RuntimeError(f"internal error: Sq^{n} of a degree-{j} cocycle is not a cocycle")
        coords = basis.reduce(img)
        cols.append(sum(b << r for r, b in enumerate(coords)))
    return SteenrodMatrix(n, j, BitMatrix.from_columns(rows, cols))


def sq_profile(K: SimplicialComplex, basis: CohomologyBasis | None = None) -> frozenset[ProfileEntry]:
    """All (n, j, rank) with 1 <= n <= j and Sq^n: H^j -> H^{j+n} nonzero."""
    if basis is None:
        basis = cohomology_basis(K, reduced=True)
    d = K.dimension()
    out = set()
    for j in range(1, d + 1):
        if not basis.dim(j):
            continue
        for n in range(1, min(j, d - j) + 1):
            if not basis.dim(j + n):
                continue
            r = sq_matrix(K, n, j, basis).rank
            if r:
                out.add(ProfileEntry(n, j, r))
    return frozenset(out)
