"""Simplicial cochains over GF(2), Betti numbers, cohomology bases and cup products.

A degree-j cochain is a bit mask over ``K.face_masks(j)`` (bit i is the
coefficient of the i-th j-face in canonical order).  Reduced cohomology uses
the augmented complex: degree -1 has the single empty face and the
augmentation sends it to every vertex.
"""

from __future__ import annotations

from typing import Iterable

from .complex import SimplicialComplex, full_subcomplex, mask_of, vertices_of
from .errors import InvalidInput
from .f2 import BitMatrix, BitVector, Quotient, kernel_basis, quotient_basis, rank_of_rows

__all__ = [
    "Cochain",
    "CohomologyBasis",
    "coboundary_matrix",
    "coboundary",
    "betti",
    "cohomology_basis",
    "cup",
    "is_cocycle",
    "is_coboundary",
    "restrict",
]


class Cochain:
    """A GF(2) cochain on the faces of one dimension of a complex."""

    __slots__ = ("complex", "degree", "bits")

    def __init__(self, K: SimplicialComplex, degree: int, bits: int = 0):
        if degree < -1:
            raise InvalidInput("cochain degree must be >= -1")
        n = len(K.face_masks(degree))
        if bits < 0 or bits >> n:
            raise InvalidInput(f"cochain bits exceed the {n} faces of degree {degree}")
        self.complex = K
        self.degree = degree
        self.bits = bits

    @classmethod
    def zero(cls, K: SimplicialComplex, degree: int) -> "Cochain":
        return cls(K, degree, 0)

    @classmethod
    def from_masks(cls, K: SimplicialComplex, degree: int, masks: Iterable[int]) -> "Cochain":
        bits = 0
        for x in masks:
            if x.bit_count() != degree + 1 or not K.has_face(x):
                raise InvalidInput(f"{list(vertices_of(x))} is not a {degree}-face of the complex")
            bits ^= 1 << K.index_of(x)
        return cls(K, degree, bits)

    @classmethod
    def from_simplices(cls, K: SimplicialComplex, simplices: Iterable[Iterable[int]], degree: int | None = None) -> "Cochain":
        """Sum of the duals of the given simplices (repeats cancel)."""
        masks = []
        for s in simplices:
            s = list(s)
            if len(set(s)) != len(s):
                raise InvalidInput(f"repeated vertex in simplex {s}")
            if any(v < 1 or v > K.m for v in s):
                raise InvalidInput(f"simplex {s} has a vertex outside 1..{K.m}")
            if degree is None:
                degree = len(s) - 1
            elif len(s) - 1 != degree:
                raise InvalidInput("simplices of mixed dimension in one cochain")
            masks.append(mask_of(s))
        if degree is None:
            raise InvalidInput("cannot infer the degree of an empty cochain")
        return cls.from_masks(K, degree, masks)

    @property
    def length(self) -> int:
        return len(self.complex.face_masks(self.degree))

    @property
    def coefficients(self) -> BitVector:
        return BitVector(self.length, self.bits)

    def support_masks(self) -> list[int]:
        layer = self.complex.face_masks(self.degree)
        return [layer[i] for i in range(len(layer)) if self.bits >> i & 1]

    def simplices(self) -> list[tuple[int, ...]]:
        return [vertices_of(x) for x in self.support_masks()]

    def value(self, simplex: Iterable[int]) -> int:
        x = mask_of(simplex)
        if not self.complex.has_face(x) or x.bit_count() != self.degree + 1:
            return 0
        return self.bits >> self.complex.index_of(x) & 1

    def is_zero(self) -> bool:
        return self.bits == 0

    def _check(self, other: "Cochain") -> None:
        if other.complex is not self.complex and other.complex != self.complex:
            raise InvalidInput("cochains live on different complexes")
        if other.degree != self.degree:
            raise InvalidInput("cochains have different degrees")

    def __add__(self, other: "Cochain") -> "Cochain":
        self._check(other)
        return Cochain(self.complex, self.degree, self.bits ^ other.bits)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Cochain):
            return NotImplemented
        return (self.degree, self.bits) == (other.degree, other.bits) and self.complex == other.complex

    def __hash__(self) -> int:
        return hash((self.degree, self.bits))

    def __repr__(self) -> str:
        if not self.bits:
            return f"Cochain(0, degree={self.degree})"
        return " + ".join("[" + ",".join(map(str, s)) + "]*" for s in self.simplices())


# -- incidence ----------------------------------------------------------------


def _coface_columns(K: SimplicialComplex, j: int) -> list[int]:
    """For each j-face t, the mask of (j+1)-faces containing t."""
    key = ("cofaces", j)
    hit = K.cache.get(key)
    if hit is not None:
        return hit
    lower = K.face_masks(j)
    upper = K.face_masks(j + 1)
    cols = [0] * len(lower)
    if lower:
        for si, s in enumerate(upper):
            bit = 1 << si
            rest = s
            while rest:
                v = rest & -rest
                rest ^= v
                cols[K.index_of(s ^ v)] |= bit
    K.cache[key] = cols
    return cols


def _face_rows(K: SimplicialComplex, j: int) -> list[int]:
    """For each (j+1)-face s, the mask of its j-faces: the rows of delta^j."""
    key = ("faces", j)
    hit = K.cache.get(key)
    if hit is not None:
        return hit
    rows = []
    for s in K.face_masks(j + 1):
        r = 0
        rest = s
        while rest:
            v = rest & -rest
            rest ^= v
            r |= 1 << K.index_of(s ^ v)
        rows.append(r)
    K.cache[key] = rows
    return rows


def _cochain_dim(K: SimplicialComplex, j: int, reduced: bool) -> int:
    if j == -1 and not reduced:
        return 0
    return len(K.face_masks(j))


def _delta_rows(K: SimplicialComplex, j: int, reduced: bool) -> list[int]:
    if j < -1:
        return []
    if j == -1 and not reduced:
        return [0] * len(K.face_masks(0))
    return _face_rows(K, j)


def coboundary_matrix(K: SimplicialComplex, j: int, reduced: bool = True) -> BitMatrix:
    """Matrix of delta: C^j -> C^{j+1}; entry (s, t) = 1 iff t is a face of s."""
    rows = _delta_rows(K, j, reduced)
    return BitMatrix(len(rows), _cochain_dim(K, j, reduced), tuple(rows))


def coboundary(c: Cochain) -> Cochain:
    K = c.complex
    cols = _coface_columns(K, c.degree)
    out = 0
    bits = c.bits
    i = 0
    while bits:
        if bits & 1:
            out ^= cols[i]
        bits >>= 1
        i += 1
    return Cochain(K, c.degree + 1, out)


def _rank_delta(K: SimplicialComplex, j: int, reduced: bool) -> int:
    key = ("rank", j, reduced)
    hit = K.cache.get(key)
    if hit is None:
        hit = rank_of_rows(_delta_rows(K, j, reduced))
        K.cache[key] = hit
    return hit


def betti(K: SimplicialComplex, reduced: bool = True) -> dict[int, int]:
    """Nonzero (reduced) Betti numbers over GF(2), keyed by degree."""
    out = {}
    for j in range(-1 if reduced else 0, K.dimension() + 1):
        b = _cochain_dim(K, j, reduced) - _rank_delta(K, j, reduced) - _rank_delta(K, j - 1, reduced)
        if b:
            out[j] = b
    return out


def is_cocycle(c: Cochain) -> bool:
    return coboundary(c).bits == 0


def is_coboundary(c: Cochain, reduced: bool = False) -> bool:
    """Whether c lies in the image of delta (augmented when ``reduced``)."""
    K, j = c.complex, c.degree
    if c.bits == 0:
        return True
    if j == -1 or (j == 0 and not reduced):
        return False
    image = _coface_columns(K, j - 1)
    return rank_of_rows(image + [c.bits]) == rank_of_rows(image)


# -- bases ---------------------------------------------------------------------


class CohomologyBasis:
    """Per-degree cohomology bases of one complex, built on demand.

    ``representatives(j)`` are cocycles; ``reduce(c)`` gives the coordinates
    of the class of a cocycle ``c`` in that basis.
    """

    def __init__(self, K: SimplicialComplex, reduced: bool = True):
        self.complex = K
        self.reduced = reduced
        self._quotients: dict[int, Quotient] = {}

    def quotient(self, j: int) -> Quotient:
        q = self._quotients.get(j)
        if q is None:
            K = self.complex
            n = _cochain_dim(K, j, self.reduced)
            if n == 0:
                q = quotient_basis([], [], 0)
            else:
                delta = coboundary_matrix(K, j, self.reduced)
                Z = [v.bits for v in kernel_basis(delta)]
                B = _coface_columns(K, j - 1) if (j >= 1 or (j == 0 and self.reduced)) else []
                q = quotient_basis(Z, B, n)
            self._quotients[j] = q
        return q

    def dim(self, j: int) -> int:
        return self.quotient(j).dim

    def representatives(self, j: int) -> list[Cochain]:
        return [Cochain(self.complex, j, r.bits) for r in self.quotient(j).representatives]

    def reduce(self, c: Cochain) -> tuple[int, ...]:
        if c.complex is not self.complex and c.complex != self.complex:
            raise InvalidInput("cochain lives on a different complex")
        if not is_cocycle(c):
            raise InvalidInput("only cocycles have a cohomology class")
        return self.quotient(c.degree).reduce(c.bits)

    def degrees(self) -> list[int]:
        lo = -1 if self.reduced else 0
        return [j for j in range(lo, self.complex.dimension() + 1) if self.dim(j)]


def cohomology_basis(K: SimplicialComplex, reduced: bool = True) -> CohomologyBasis:
    key = ("basis", reduced)
    hit = K.cache.get(key)
    if hit is None:
        hit = CohomologyBasis(K, reduced)
        K.cache[key] = hit
    return hit


# -- products and restriction ----------------------------------------------------


def _same_complex(a: Cochain, b: Cochain) -> SimplicialComplex:
    if a.complex is not b.complex and a.complex != b.complex:
        raise InvalidInput("cochains live on different complexes")
    return a.complex


def cup(K: SimplicialComplex, a: Cochain, b: Cochain) -> Cochain:
    """Alexander-Whitney cup product: front p-face of a times back q-face of b."""
    if _same_complex(a, b) != K:
        raise InvalidInput("cochains do not live on the given complex")
    p, q = a.degree, b.degree
    if p < 0 or q < 0:
        raise InvalidInput("cup product needs degrees >= 0")
    A = set(a.support_masks())
    B = set(b.support_masks())
    out = 0
    if A and B:
        for i, s in enumerate(K.face_masks(p + q)):
            vs = vertices_of(s)
            if mask_of(vs[: p + 1]) in A and mask_of(vs[p:]) in B:
                out |= 1 << i
    return Cochain(K, p + q, out)


def restrict(c: Cochain, J: Iterable[int]) -> Cochain:
    """Restriction of c to the full subcomplex on J (relabelled as in full_subcomplex)."""
    K = c.complex
    sub = full_subcomplex(K, J)
    keep = sub.labels
    supp = set(c.support_masks())
    out = 0
    for i, x in enumerate(sub.face_masks(c.degree)):
        if mask_of(keep[v - 1] for v in vertices_of(x)) in supp:
            out |= 1 << i
    return Cochain(sub, c.degree, out)
