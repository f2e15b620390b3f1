"""Additive cohomology and Steenrod action of moment-angle complexes.

H^n(Z_K) = [n = 0] + Σ_{J ∉ K} H̃^{n-|J|-1}(K_J), and the Steenrod squares act
summand by summand.  Subsets J containing ghost vertices give K_J = {∅},
which contributes through H̃^{-1}({∅}) = GF(2).
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .cohomology import betti, cohomology_basis
from .complex import SimplicialComplex, full_subcomplex, vertices_of
from .errors import InvalidInput, VertexCapExceeded
from .steenrod import ProfileEntry, SteenrodMatrix, sq_matrix

__all__ = [
    "DEFAULT_VERTEX_CAP",
    "vertex_cap",
    "HochsterTable",
    "ZkSqProfile",
    "hochster_table",
    "za_betti",
    "za_sq_profile",
    "sq_dim_bound_violations",
    "sq_dim_bound_check",
    "low_degree_sq1_violations",
    "low_degree_sq1_check",
]

DEFAULT_VERTEX_CAP = 16


def vertex_cap(cap: int | None = None) -> int:
    if cap is not None:
        return cap
    raw = os.environ.get("SQTOP_VERTEX_CAP")
    if raw is None:
        return DEFAULT_VERTEX_CAP
    try:
        return int(raw)
    except ValueError:
        raise InvalidInput(f"SQTOP_VERTEX_CAP must be an integer, got {raw!r}") from None


def _check_cap(K: SimplicialComplex, cap: int | None) -> None:
    limit = vertex_cap(cap)
    if K.m > limit:
        raise VertexCapExceeded(f"{K.m} vertices exceeds the cap of {limit} (2^m subsets)")


def _nonface_subsets(K: SimplicialComplex) -> list[int]:
    masks = [J for J in range(1, 1 << K.m) if not K.has_face(J)]
    masks.sort(key=lambda J: (J.bit_count(), J))
    return masks


def _run(worker, K: SimplicialComplex, masks: list[int], jobs: int) -> list:
    if jobs <= 1 or len(masks) < 2:
        return worker(K.m, K.facet_masks, masks)
    chunks = [masks[i::jobs] for i in range(jobs)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        parts = list(pool.map(worker, [K.m] * jobs, [K.facet_masks] * jobs, chunks))
    merged = [item for part in parts for item in part]
    merged.sort(key=lambda item: (item[0].bit_count(), item[0]))
    return merged


def _betti_chunk(m: int, facets: tuple[int, ...], masks: list[int]) -> list:
    K = SimplicialComplex(m, facets)
    return [(J, betti(full_subcomplex(K, vertices_of(J)))) for J in masks]


@dataclass(frozen=True)
class HochsterTable:
    complex: SimplicialComplex
    entries: dict[tuple[int, ...], dict[int, int]]


def hochster_table(K: SimplicialComplex, cap: int | None = None, jobs: int = 1) -> HochsterTable:
    """Reduced Betti numbers of K_J for every non-face J, ordered by (|J|, bitmask)."""
    _check_cap(K, cap)
    rows = _run(_betti_chunk, K, _nonface_subsets(K), jobs)
    return HochsterTable(K, {vertices_of(J): b for J, b in rows})


def za_betti(K: SimplicialComplex, cap: int | None = None, jobs: int = 1, table: HochsterTable | None = None) -> dict[int, int]:
    if table is None:
        table = hochster_table(K, cap, jobs)
    out = {0: 1}
    for J, b in table.entries.items():
        for j, dim in b.items():
            n = j + len(J) + 1
            out[n] = out.get(n, 0) + dim
    return dict(sorted(out.items()))


def _sq_chunk(m: int, facets: tuple[int, ...], masks: list[int]) -> list:
    K = SimplicialComplex(m, facets)
    out = []
    for J in masks:
        sub = full_subcomplex(K, vertices_of(J))
        basis = cohomology_basis(sub)
        d = sub.dimension()
        mats = []
        for j in range(1, d + 1):
            if not basis.dim(j):
                continue
            for n in range(1, min(j, d - j) + 1):
                if basis.dim(j + n):
                    mats.append(sq_matrix(sub, n, j, basis))
        out.append((J, tuple(mats)))
    return out


@dataclass(frozen=True)
class ZkSqProfile:
    """Steenrod matrices of every K_J and the aggregated profile on Z_K.

    ``matrices[J]`` lists Sq^n: H^j(K_J) -> H^{j+n}(K_J) for 1 <= n <= j,
    skipping maps between zero groups.  ``profile`` holds
    (n, j + |J| + 1, total rank) over all J.
    """

    complex: SimplicialComplex
    matrices: dict[tuple[int, ...], tuple[SteenrodMatrix, ...]]
    profile: frozenset[ProfileEntry] = field(default_factory=frozenset)


def za_sq_profile(K: SimplicialComplex, cap: int | None = None, jobs: int = 1) -> ZkSqProfile:
    _check_cap(K, cap)
    rows = _run(_sq_chunk, K, _nonface_subsets(K), jobs)
    totals: dict[tuple[int, int], int] = {}
    matrices = {}
    for J, mats in rows:
        verts = vertices_of(J)
        matrices[verts] = mats
        for sm in mats:
            r = sm.rank
            if r:
                key = (sm.n, sm.degree + len(verts) + 1)
                totals[key] = totals.get(key, 0) + r
    profile = frozenset(ProfileEntry(n, D, r) for (n, D), r in totals.items())
    return ZkSqProfile(K, matrices, profile)


def sq_dim_bound_violations(K: SimplicialComplex, profile: ZkSqProfile | None = None) -> list[ProfileEntry]:
    """Entries with n > floor(dim K / 2); there should be none."""
    if profile is None:
        profile = za_sq_profile(K)
    bound = max(K.dimension(), 0) // 2
    return sorted(e for e in profile.profile if e.n > bound)


def sq_dim_bound_check(K: SimplicialComplex, profile: ZkSqProfile | None = None) -> bool:
    return not sq_dim_bound_violations(K, profile)


def low_degree_sq1_violations(K: SimplicialComplex, profile: ZkSqProfile | None = None) -> list[ProfileEntry]:
    """Sq^1 entries on Z_K classes of degree <= 7; there should be none."""
    if profile is None:
        profile = za_sq_profile(K)
    return sorted(e for e in profile.profile if e.n == 1 and e.degree <= 7)


def low_degree_sq1_check(K: SimplicialComplex, profile: ZkSqProfile | None = None) -> bool:
    return not low_degree_sq1_violations(K, profile)
