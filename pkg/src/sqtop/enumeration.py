"""Exhaustive enumeration of labelled simplicial complexes on [n] and the Sq^1 scan.

Complexes are generated by walking the non-empty subsets of [n] in rank
order (by size, then lexicographically) and deciding for each one whether it
is a face; a subset may be added only when all of its codimension-one subsets
are already present.  Every downward-closed family containing ∅ is produced
exactly once.  Ghost vertices are allowed, so the complexes on [n] include
every complex on fewer vertices, padded with ghosts.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .cohomology import betti, cohomology_basis
from .complex import SimplicialComplex, vertices_of
from .errors import InvalidInput
from .steenrod import ProfileEntry, sq_matrix, sq_profile

__all__ = [
    "enumerate_complexes",
    "count_complexes",
    "ScanReport",
    "scan",
    "scan_sq1",
    "passes_sq1_prefilter",
]

MAX_N = 6


def _check_n(n: int, long_running: bool) -> None:
    if not 1 <= n <= MAX_N:
        raise InvalidInput(f"n must be between 1 and {MAX_N}")
    if n == MAX_N and not long_running:
        raise InvalidInput("n = 6 is a long run; pass long_running=True to allow it")


def _vertex_choices(n: int) -> list[int]:
    """Vertex sets in DFS order (vertex 1 decided first, 'absent' before 'present')."""
    out = []
    for bits in range(1 << n):
        mask = 0
        for v in range(n):
            if bits >> (n - 1 - v) & 1:
                mask |= 1 << v
        out.append(mask)
    return out


def _candidates(vmask: int) -> list[int]:
    verts = [v for v in range(vmask.bit_length()) if vmask >> v & 1]
    out = []
    for size in range(2, len(verts) + 1):
        for combo in combinations(verts, size):
            out.append(sum(1 << v for v in combo))
    return out


def _families(vmask: int) -> Iterator[set[int]]:
    """Downward-closed families whose vertex set is exactly ``vmask``."""
    cands = _candidates(vmask)
    present = {0} | {1 << v for v in range(vmask.bit_length()) if vmask >> v & 1}

    def walk(idx: int):
        while idx < len(cands):
            S = cands[idx]
            rest = S
            ok = True
            while rest:
                b = rest & -rest
                rest ^= b
                if S ^ b not in present:
                    ok = False
                    break
            if ok:
                break
            idx += 1
        if idx == len(cands):
            yield present
            return
        yield from walk(idx + 1)
        present.add(cands[idx])
        yield from walk(idx + 1)
        present.discard(cands[idx])

    yield from walk(0)


def _facets(present: set[int], n: int) -> list[int]:
    out = []
    for S in present:
        if not any((S | (1 << v)) in present for v in range(n) if not S >> v & 1):
            out.append(S)
    return out


def _subtree(n: int, vmask: int) -> Iterator[SimplicialComplex]:
    for present in _families(vmask):
        yield SimplicialComplex(n, _facets(present, n))


def enumerate_complexes(n: int, long_running: bool = False) -> Iterator[SimplicialComplex]:
    """Every simplicial complex on [n] (labelled, ghosts allowed), each once."""
    _check_n(n, long_running)
    for vmask in _vertex_choices(n):
        yield from _subtree(n, vmask)


def _count_subtree(n: int, vmask: int) -> int:
    return sum(1 for _ in _families(vmask))


def count_complexes(n: int, long_running: bool = False, jobs: int = 1) -> int:
    _check_n(n, long_running)
    choices = _vertex_choices(n)
    if jobs <= 1:
        return sum(_count_subtree(n, v) for v in choices)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return sum(pool.map(_count_subtree, [n] * len(choices), choices))


def passes_sq1_prefilter(K: SimplicialComplex) -> bool:
    """Sq^1: H^1 -> H^2 can be nonzero only if both groups are."""
    b = betti(K)
    return b.get(1, 0) >= 1 and b.get(2, 0) >= 1


@dataclass(frozen=True)
class ScanReport:
    n: int
    count: int
    examined: int
    hits: list[tuple[SimplicialComplex, frozenset[ProfileEntry]]]


def _scan_subtree(n: int, vmask: int, full_sq: bool):
    count = examined = 0
    hits = []
    for K in _subtree(n, vmask):
        count += 1
        if full_sq:
            examined += 1
            prof = sq_profile(K)
        else:
            if not passes_sq1_prefilter(K):
                continue
            examined += 1
            r = sq_matrix(K, 1, 1, cohomology_basis(K)).rank
            prof = frozenset({ProfileEntry(1, 1, r)}) if r else frozenset()
        if prof:
            hits.append((K.m, K.facet_masks, prof))
    return count, examined, hits


def scan(n: int, full_sq: bool = False, jobs: int = 1, long_running: bool = False) -> ScanReport:
    """Enumerate complexes on [n] and report those with a nontrivial Sq^1 (or any Sq^k)."""
    _check_n(n, long_running)
    choices = _vertex_choices(n)
    if jobs <= 1:
        parts = [_scan_subtree(n, v, full_sq) for v in choices]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_scan_subtree, [n] * len(choices), choices, [full_sq] * len(choices)))
    count = sum(p[0] for p in parts)
    examined = sum(p[1] for p in parts)
    raw = sorted((h for p in parts for h in p[2]), key=lambda h: (h[0], [vertices_of(f) for f in h[1]]))
    hits = [(SimplicialComplex(m, facets), prof) for m, facets, prof in raw]
    return ScanReport(n, count, examined, hits)


def scan_sq1(n: int, jobs: int = 1, long_running: bool = False) -> list[tuple[SimplicialComplex, frozenset[ProfileEntry]]]:
    """Complexes on [n] whose Steenrod profile has an entry with n = 1."""
    report = scan(n, full_sq=False, jobs=jobs, long_running=long_running)
    return report.hits
