"""Face ring GF(2)[K] with the Steenrod action Sq(x_i) = x_i + x_i^2.

Monomials are exponent tuples of length m.  Generators have topological
degree ``d`` (1 or 2), so a monomial of polynomial degree k sits in
topological degree d*k.  All degree arguments below are topological.
"""

from __future__ import annotations

from itertools import combinations, combinations_with_replacement, product
from typing import Iterable

from .complex import SimplicialComplex
from .errors import InvalidInput
from .f2 import BitMatrix

__all__ = [
    "Monomial",
    "SRElement",
    "support_mask",
    "monomial_basis",
    "sr_reduce",
    "sq_total_monomial",
    "sq_graded_matrix",
    "minimal_nonfaces",
    "a_ideal_counterexample",
    "verify_a_ideal",
    "hilbert_count",
    "render_monomial",
]

Monomial = tuple  # exponent vector (e_1, ..., e_m)


def support_mask(mono: Monomial) -> int:
    mask = 0
    for i, e in enumerate(mono):
        if e:
            mask |= 1 << i
    return mask


def render_monomial(mono: Monomial) -> str:
    parts = [f"x{i}" if e == 1 else f"x{i}^{e}" for i, e in enumerate(mono, start=1) if e]
    return "*".join(parts) if parts else "1"


def _compositions(k: int, parts: int):
    """Tuples of ``parts`` positive integers summing to k."""
    for cuts in combinations(range(1, k), parts - 1):
        bounds = (0,) + cuts + (k,)
        yield tuple(bounds[i + 1] - bounds[i] for i in range(parts))


def monomial_basis(K: SimplicialComplex, k: int) -> list[Monomial]:
    """Degree-k monomials supported on faces, in decreasing lexicographic order."""
    if k < 0:
        raise InvalidInput("degree must be non-negative")
    if k == 0:
        return [(0,) * K.m]
    out = []
    for size in range(1, min(k, K.dimension() + 1) + 1):
        for face in K.face_masks(size - 1):
            idx = [i for i in range(K.m) if face >> i & 1]
            for comp in _compositions(k, size):
                e = [0] * K.m
                for i, c in zip(idx, comp):
                    e[i] = c
                out.append(tuple(e))
    out.sort(reverse=True)
    return out


def hilbert_count(K: SimplicialComplex, k: int) -> int:
    """Dimension of the degree-k part computed from the f-vector."""
    from math import comb

    if k == 0:
        return 1
    return sum(comb(k - 1, i) * f for i, f in enumerate(K.f_vector()))


class SRElement:
    """Homogeneous element of the polynomial ring, as a set of monomials."""

    __slots__ = ("complex", "d", "monomials")

    def __init__(self, K: SimplicialComplex, d: int, monomials: Iterable[Monomial] = ()):
        if d not in (1, 2):
            raise InvalidInput("generator degree must be 1 or 2")
        terms: set = set()
        for mono in monomials:
            mono = tuple(mono)
            if len(mono) != K.m or any(e < 0 for e in mono):
                raise InvalidInput(f"bad exponent vector {mono}")
            terms ^= {mono}
        if len({sum(mono) for mono in terms}) > 1:
            raise InvalidInput("element is not homogeneous")
        self.complex = K
        self.d = d
        self.monomials = frozenset(terms)

    @property
    def degree(self) -> int | None:
        for mono in self.monomials:
            return self.d * sum(mono)
        return None

    def __add__(self, other: "SRElement") -> "SRElement":
        return SRElement(self.complex, self.d, self.monomials ^ other.monomials)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SRElement):
            return NotImplemented
        return self.d == other.d and self.monomials == other.monomials and self.complex == other.complex

    def __hash__(self) -> int:
        return hash((self.d, self.monomials))

    def is_zero(self) -> bool:
        return not self.monomials

    def __repr__(self) -> str:
        if not self.monomials:
            return "0"
        return " + ".join(render_monomial(mono) for mono in sorted(self.monomials, reverse=True))


def sr_reduce(e: SRElement) -> SRElement:
    K = e.complex
    return SRElement(K, e.d, [mono for mono in e.monomials if K.has_face(support_mask(mono))])


def _submask_values(e: int) -> list[int]:
    # t with C(e, t) odd, i.e. the bits of t are a subset of the bits of e
    out = []
    t = e
    while True:
        out.append(t)
        if t == 0:
            return sorted(out)
        t = (t - 1) & e


def sq_total_monomial(mono: Monomial, d: int) -> dict[int, list[Monomial]]:
    """Total square of a monomial, grouped as {n: monomials of Sq^n}."""
    if d not in (1, 2):
        raise InvalidInput("generator degree must be 1 or 2")
    choices = [_submask_values(e) for e in mono]
    out: dict[int, list[Monomial]] = {}
    for t in product(*choices):
        n = d * sum(t)
        out.setdefault(n, []).append(tuple(e + s for e, s in zip(mono, t)))
    return {n: sorted(v, reverse=True) for n, v in sorted(out.items())}


def sq_graded_matrix(K: SimplicialComplex, n: int, D: int, d: int) -> BitMatrix:
    """Matrix of Sq^n from topological degree D to D + n on monomial bases."""
    if d not in (1, 2):
        raise InvalidInput("generator degree must be 1 or 2")
    if n < 0 or D < 0 or D % d:
        raise InvalidInput(f"degree {D} is not a multiple of {d}")
    source = monomial_basis(K, D // d)
    if (D + n) % d:
        return BitMatrix.zeros(0, len(source))
    target = monomial_basis(K, (D + n) // d)
    where = {mono: i for i, mono in enumerate(target)}
    cols = []
    for mono in source:
        col = 0
        for img in sq_total_monomial(mono, d).get(n, []):
            i = where.get(img)
            if i is not None:
                col ^= 1 << i
        cols.append(col)
    return BitMatrix.from_columns(len(target), cols)


def minimal_nonfaces(K: SimplicialComplex) -> list[int]:
    """Masks of the minimal non-faces (generators of the face ideal)."""
    out = []
    for size in range(1, K.m + 1):
        for combo in combinations(range(K.m), size):
            S = sum(1 << i for i in combo)
            if K.has_face(S):
                continue
            if all(K.has_face(S ^ (1 << i)) for i in combo):
                out.append(S)
    return out


def a_ideal_counterexample(K: SimplicialComplex, d: int, max_degree: int):
    """First (generator, multiple, n, monomial) with Sq^n(multiple) leaving the ideal, or None."""
    for g in minimal_nonfaces(K):
        base = tuple(g >> i & 1 for i in range(K.m))
        for extra in range(0, max_degree // d - sum(base) + 1):
            for combo in combinations_with_replacement(range(K.m), extra):
                mono = list(base)
                for i in combo:
                    mono[i] += 1
                mono = tuple(mono)
                for n, images in sq_total_monomial(mono, d).items():
                    for img in images:
                        if K.has_face(support_mask(img)):
                            return g, mono, n, img
    return None


def verify_a_ideal(K: SimplicialComplex, d: int, max_degree: int) -> bool:
    """Whether Sq maps the face ideal into itself up to topological degree max_degree."""
    return a_ideal_counterexample(K, d, max_degree) is None
