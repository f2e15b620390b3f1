"""Finite abstract simplicial complexes on the vertex set {1, ..., m}.

Faces are stored as integer bit masks (bit ``v - 1`` for vertex ``v``) and
materialised lazily, grouped by dimension and sorted lexicographically on their
vertex tuples.  Vertices of [m] lying in no face are *ghost* vertices.

The complex containing only the empty face is a legitimate value (``{∅}``,
dimension -1); a complex with no faces at all cannot be built.

>>> K = from_facets(3, [[1, 2], [2, 3], [1, 3]])
>>> K.f_vector()
(3, 3)
>>> faces(K, 1)
[(1, 2), (1, 3), (2, 3)]
"""

from __future__ import annotations

import random
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

from .errors import InvalidInput

__all__ = [
    "SimplicialComplex",
    "mask_of",
    "vertices_of",
    "from_facets",
    "faces",
    "full_subcomplex",
    "link",
    "star",
    "join",
    "cone",
    "is_connected",
    "f_vector",
    "dimension",
    "euler_characteristic",
    "simplex",
    "boundary",
    "points",
    "cycle",
    "path",
    "empty",
    "P26",
    "P26_FACETS",
    "random_complex",
]

Simplex = tuple  # strictly increasing tuple of 1-based vertex ids


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << (v - 1)
    return mask


def vertices_of(mask: int) -> tuple[int, ...]:
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def _submasks(mask: int):
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def _maximal(masks: Iterable[int]) -> list[int]:
    kept: list[int] = []
    for f in sorted(set(masks), key=lambda x: -x.bit_count()):
        if not any(f & g == f for g in kept):
            kept.append(f)
    return kept


class SimplicialComplex:
    """Immutable simplicial complex on ``m`` vertices.

    ``labels`` records, for each vertex, the vertex it came from when the
    complex was cut out of a larger one (full subcomplex, link).  It is
    metadata only and does not take part in equality.
    """

    def __init__(self, m: int, facet_masks: Iterable[int], labels: Sequence[int] | None = None):
        self.m = m
        masks = _maximal(facet_masks) or [0]
        self._facet_masks = tuple(sorted(masks, key=vertices_of))
        self.labels = tuple(labels) if labels is not None else tuple(range(1, m + 1))

    # -- basic data ---------------------------------------------------------

    @property
    def facets(self) -> tuple[Simplex, ...]:
        return tuple(vertices_of(f) for f in self._facet_masks)

    @property
    def facet_masks(self) -> tuple[int, ...]:
        return self._facet_masks

    @cached_property
    def _by_dim(self) -> tuple[tuple[int, ...], ...]:
        seen: set[int] = set()
        for f in self._facet_masks:
            seen.update(_submasks(f))
        top = max(x.bit_count() for x in seen)
        layers: list[list[int]] = [[] for _ in range(top + 1)]
        for x in seen:
            layers[x.bit_count()].append(x)
        return tuple(tuple(sorted(layer, key=vertices_of)) for layer in layers)

    @cached_property
    def _index(self) -> dict[int, int]:
        return {x: i for layer in self._by_dim for i, x in enumerate(layer)}

    @cached_property
    def cache(self) -> dict:
        """Scratch space for derived data (incidence tables, bases)."""
        return {}

    def face_masks(self, j: int) -> tuple[int, ...]:
        """Masks of the j-faces in canonical order (j = -1 gives the empty face)."""
        k = j + 1
        if k < 0 or k >= len(self._by_dim):
            return ()
        return self._by_dim[k]

    def faces(self, j: int) -> list[Simplex]:
        return [vertices_of(x) for x in self.face_masks(j)]

    def index_of(self, mask: int) -> int:
        """Position of a face within its dimension; KeyError for non-faces."""
        return self._index[mask]

    def has_face(self, mask: int) -> bool:
        return mask in self._index

    def all_face_masks(self) -> set[int]:
        return set(self._index)

    @property
    def vertex_mask(self) -> int:
        mask = 0
        for f in self._facet_masks:
            mask |= f
        return mask

    @property
    def vertices(self) -> tuple[int, ...]:
        return vertices_of(self.vertex_mask)

    @property
    def ghost_vertices(self) -> tuple[int, ...]:
        full = (1 << self.m) - 1
        return vertices_of(full & ~self.vertex_mask)

    # -- invariants ---------------------------------------------------------

    def dimension(self) -> int:
        return len(self._by_dim) - 2

    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(layer) for layer in self._by_dim[1:])

    def euler_characteristic(self) -> int:
        return sum((-1) ** i * f for i, f in enumerate(self.f_vector()))

    def is_connected(self) -> bool:
        verts = self.vertex_mask
        if not verts:
            return False
        reached = verts & -verts
        edges = self.face_masks(1)
        while True:
            grown = reached
            for e in edges:
                if e & grown:
                    grown |= e
            if grown == reached:
                return reached == verts
            reached = grown

    # -- dunder -------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.m == other.m and self._facet_masks == other._facet_masks

    def __hash__(self) -> int:
        return hash((self.m, self._facet_masks))

    def __repr__(self) -> str:
        body = ", ".join("[" + ",".join(map(str, f)) + "]" for f in self.facets)
        return f"SimplicialComplex(m={self.m}, facets=[{body}])"


# -- construction -----------------------------------------------------------


def from_facets(m: int, facets: Iterable[Iterable[int]]) -> SimplicialComplex:
    """Build a complex from (possibly redundant, unsorted) facet lists."""
    if not isinstance(m, int) or m < 0:
        raise InvalidInput(f"vertex count must be a non-negative integer, got {m!r}")
    masks = []
    for facet in facets:
        facet = list(facet)
        for v in facet:
            if not isinstance(v, int) or v < 1 or v > m:
                raise InvalidInput(f"vertex {v!r} out of range 1..{m}")
        if len(set(facet)) != len(facet):
            raise InvalidInput(f"repeated vertex in facet {facet}")
        masks.append(mask_of(facet))
    return SimplicialComplex(m, masks)


def faces(K: SimplicialComplex, j: int) -> list[Simplex]:
    return K.faces(j)


def dimension(K: SimplicialComplex) -> int:
    return K.dimension()


def f_vector(K: SimplicialComplex) -> tuple[int, ...]:
    return K.f_vector()


def euler_characteristic(K: SimplicialComplex) -> int:
    return K.euler_characteristic()


def is_connected(K: SimplicialComplex) -> bool:
    return K.is_connected()


def _compress(mask: int, keep: Sequence[int]) -> int:
    """Re-index the bits of ``mask`` along the sorted vertex list ``keep``."""
    out = 0
    for i, v in enumerate(keep):
        if mask >> (v - 1) & 1:
            out |= 1 << i
    return out


def full_subcomplex(K: SimplicialComplex, J: Iterable[int]) -> SimplicialComplex:
    """Faces of K inside J, relabelled 1..|J| in increasing order."""
    keep = sorted(set(J))
    for v in keep:
        if v < 1 or v > K.m:
            raise InvalidInput(f"vertex {v} out of range 1..{K.m}")
    jmask = mask_of(keep)
    restricted = [_compress(f & jmask, keep) for f in K.facet_masks]
    return SimplicialComplex(len(keep), restricted, labels=keep)


def link(K: SimplicialComplex, v: int) -> SimplicialComplex:
    """Link of v, on the other m - 1 vertices (relabelled, labels kept)."""
    if v < 1 or v > K.m:
        raise InvalidInput(f"vertex {v} out of range 1..{K.m}")
    bit = 1 << (v - 1)
    keep = [u for u in range(1, K.m + 1) if u != v]
    masks = [_compress(f & ~bit, keep) for f in K.facet_masks if f & bit]
    return SimplicialComplex(K.m - 1, masks, labels=keep)


def star(K: SimplicialComplex, v: int) -> SimplicialComplex:
    """Closed star of v, on the same vertex set as K."""
    if v < 1 or v > K.m:
        raise InvalidInput(f"vertex {v} out of range 1..{K.m}")
    bit = 1 << (v - 1)
    return SimplicialComplex(K.m, [f for f in K.facet_masks if f & bit])


def join(A: SimplicialComplex, B: SimplicialComplex) -> SimplicialComplex:
    """Join, with B's vertices shifted up by A.m."""
    masks = [a | (b << A.m) for a in A.facet_masks for b in B.facet_masks]
    return SimplicialComplex(A.m + B.m, masks)


def cone(K: SimplicialComplex) -> SimplicialComplex:
    return join(K, simplex(0))


# -- named complexes --------------------------------------------------------

P26_FACETS = (
    (1, 2, 3), (1, 2, 6), (1, 3, 5), (1, 4, 5), (1, 4, 6),
    (2, 3, 4), (2, 4, 5), (2, 5, 6), (3, 4, 6), (3, 5, 6),
)


def simplex(n: int) -> SimplicialComplex:
    """The full n-simplex on n + 1 vertices."""
    if n < 0:
        raise InvalidInput("simplex dimension must be >= 0")
    return SimplicialComplex(n + 1, [(1 << (n + 1)) - 1])


def boundary(n: int) -> SimplicialComplex:
    """Boundary of the n-simplex, a sphere of dimension n - 1."""
    if n < 1:
        raise InvalidInput("boundary needs n >= 1")
    full = (1 << (n + 1)) - 1
    return SimplicialComplex(n + 1, [full ^ (1 << i) for i in range(n + 1)])


def points(k: int) -> SimplicialComplex:
    if k < 1:
        raise InvalidInput("points needs k >= 1")
    return SimplicialComplex(k, [1 << i for i in range(k)])


def cycle(n: int) -> SimplicialComplex:
    if n < 3:
        raise InvalidInput("cycle needs n >= 3")
    return SimplicialComplex(n, [mask_of((i, i % n + 1)) for i in range(1, n + 1)])


def path(n: int) -> SimplicialComplex:
    """Path graph on n vertices."""
    if n < 1:
        raise InvalidInput("path needs n >= 1")
    if n == 1:
        return points(1)
    return SimplicialComplex(n, [mask_of((i, i + 1)) for i in range(1, n)])


def empty(m: int = 0) -> SimplicialComplex:
    """The complex {∅}, with m ghost vertices."""
    return SimplicialComplex(m, [0])


def _check_p26(K: SimplicialComplex) -> None:
    edges = K.face_masks(1)
    tris = K.face_masks(2)
    problems = []
    if K.f_vector() != (6, 15, 10):
        problems.append("f-vector")
    if K.euler_characteristic() != 1:
        problems.append("euler characteristic")
    if len(edges) != 15:
        problems.append("1-skeleton is not complete")
    if any(sum(1 for t in tris if t & e == e) != 2 for e in edges):
        problems.append("edge not in exactly two triangles")
    lk = {vertices_of(t & ~1) for t in tris if t & 1}
    if lk != {(2, 3), (2, 6), (3, 5), (4, 5), (4, 6)}:
        problems.append("link of vertex 1")
    for e in [(1, 4), (1, 6), (2, 5), (2, 6), (4, 5)]:
        if mask_of(e) not in edges:
            problems.append(f"missing edge {e}")
    for t in [(1, 4, 5), (1, 2, 6), (1, 4, 6), (3, 4, 6)]:
        if mask_of(t) not in tris:
            problems.append(f"missing triangle {t}")
    if problems:
        raise RuntimeError("P26 facet list failed its self-check: " + ", ".join(problems))


@lru_cache(maxsize=None)
def P26() -> SimplicialComplex:
    """Six-vertex triangulation of the real projective plane."""
    K = from_facets(6, P26_FACETS)
    _check_p26(K)
    return K


def random_complex(m: int, rng: random.Random, max_dim: int = 3, max_facets: int | None = None) -> SimplicialComplex:
    """Random complex on [m]; ghost vertices may occur."""
    if max_facets is None:
        max_facets = 2 * m
    count = rng.randint(1, max(1, max_facets))
    masks = []
    for _ in range(count):
        size = rng.randint(1, min(m, max_dim + 1))
        masks.append(mask_of(rng.sample(range(1, m + 1), size)))
    return SimplicialComplex(m, masks)
