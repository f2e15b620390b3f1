"""Polyhedral joins of simplicial pairs and their special cases.

Given K on [m] and pairs (K_i, L_i) with L_i a subcomplex of K_i, the
polyhedral join has faces ⊔ σ_i (σ_i ∈ K_i) such that {i : σ_i ∉ L_i} is a face
of K.  With every L_i = {∅} this is the substitution complex K⟨K_1, ..., K_m⟩;
with every K_i a full simplex it is the composition K(L_1, ..., L_m).

Vertex v_{i,j} (j-th vertex of K_i) gets a global label from a labeling:

* ``"inplace"``: v_{i,1} -> i, the other copies -> m+1, m+2, ... in (i, j) order;
* ``"block"``: consecutive blocks, K_1 first.
"""

from __future__ import annotations

from itertools import product
from typing import Sequence

from .cohomology import Cochain, betti, cohomology_basis, is_coboundary, is_cocycle
from .complex import SimplicialComplex, empty, link, mask_of, points, simplex, vertices_of
from .errors import InvalidInput, VerificationFailed
from .steenrod import ProfileEntry, sq_matrix, sq_profile

__all__ = [
    "LABELINGS",
    "join_labeling",
    "polyhedral_join",
    "substitution",
    "substitution_sequence",
    "composition",
    "join_betti",
    "predicted_betti_substitution",
    "predicted_betti_composition",
    "join_sq_ranks",
    "predicted_sq_profile_substitution",
    "extend_cocycle_substitution",
    "locate_full_subcomplexes",
]

LABELINGS = ("inplace", "block")

Pair = tuple[SimplicialComplex, SimplicialComplex]


def join_labeling(sizes: Sequence[int], mode: str = "inplace") -> list[list[int]]:
    """table[i][j] = global label of vertex j+1 of the (i+1)-th factor."""
    if mode == "block":
        table, nxt = [], 1
        for n in sizes:
            table.append(list(range(nxt, nxt + n)))
            nxt += n
        return table
    if mode != "inplace":
        raise InvalidInput(f"unknown labeling {mode!r}; use one of {LABELINGS}")
    if any(n < 1 for n in sizes):
        raise InvalidInput("inplace labeling needs every factor to have at least one vertex")
    nxt = len(sizes) + 1
    table = []
    for i, n in enumerate(sizes):
        row = [i + 1]
        for _ in range(1, n):
            row.append(nxt)
            nxt += 1
        table.append(row)
    return table


def _relabel(mask: int, row: Sequence[int]) -> int:
    out = 0
    for v in vertices_of(mask):
        out |= 1 << (row[v - 1] - 1)
    return out


def _is_subcomplex(L: SimplicialComplex, K: SimplicialComplex) -> bool:
    return all(K.has_face(f) for f in L.facet_masks)


def polyhedral_join(K: SimplicialComplex, pairs: Sequence[Pair], labeling: str = "inplace") -> SimplicialComplex:
    if len(pairs) != K.m:
        raise InvalidInput(f"need {K.m} pairs, got {len(pairs)}")
    for i, (Ki, Li) in enumerate(pairs, start=1):
        if Li.vertex_mask >> Ki.m or not _is_subcomplex(Li, Ki):
            raise InvalidInput(f"L_{i} is not a subcomplex of K_{i}")
    table = join_labeling([Ki.m for Ki, _ in pairs], labeling)
    total = sum(Ki.m for Ki, _ in pairs)
    big = [[_relabel(f, table[i]) for f in Ki.facet_masks] for i, (Ki, _) in enumerate(pairs)]
    small = [[_relabel(f, table[i]) for f in Li.facet_masks] for i, (_, Li) in enumerate(pairs)]
    masks = set()
    for tau in K.facet_masks:
        choices = [big[i] if tau >> i & 1 else small[i] for i in range(K.m)]
        for combo in product(*choices):
            acc = 0
            for f in combo:
                acc |= f
            masks.add(acc)
    return SimplicialComplex(total, masks)


def substitution(K: SimplicialComplex, complexes: Sequence[SimplicialComplex], labeling: str = "inplace") -> SimplicialComplex:
    return polyhedral_join(K, [(Ki, empty(Ki.m)) for Ki in complexes], labeling)


def composition(K: SimplicialComplex, links: Sequence[SimplicialComplex], labeling: str = "inplace") -> SimplicialComplex:
    pairs = []
    for Li in links:
        if Li.m < 1:
            raise InvalidInput("each L_i needs at least one vertex")
        pairs.append((simplex(Li.m - 1), Li))
    return polyhedral_join(K, pairs, labeling)


def substitution_sequence(K: SimplicialComplex, complexes: Sequence[SimplicialComplex]) -> list[SimplicialComplex]:
    """K^0 = K and K^i = K^{i-1} with K_i substituted at vertex i (inplace labeling)."""
    if len(complexes) != K.m:
        raise InvalidInput(f"need {K.m} complexes, got {len(complexes)}")
    seq = [K]
    cur = K
    dot = points(1)
    for i, Ki in enumerate(complexes):
        factors = [dot] * cur.m
        factors[i] = Ki
        cur = substitution(cur, factors, "inplace")
        seq.append(cur)
    return seq


# -- predictions -------------------------------------------------------------


def join_betti(a: dict[int, int], b: dict[int, int]) -> dict[int, int]:
    """Reduced Betti numbers of a join from those of its factors."""
    out: dict[int, int] = {}
    for p, x in a.items():
        for q, y in b.items():
            out[p + q + 1] = out.get(p + q + 1, 0) + x * y
    return {k: v for k, v in sorted(out.items()) if v}


def _require_connected(K: SimplicialComplex) -> None:
    if not K.is_connected():
        raise InvalidInput("the splitting prediction needs a connected K")
    if K.ghost_vertices:
        raise InvalidInput("the splitting prediction needs K without ghost vertices")


def _add(acc: dict, extra: dict) -> None:
    for k, v in extra.items():
        acc[k] = acc.get(k, 0) + v


def predicted_betti_substitution(K: SimplicialComplex, complexes: Sequence[SimplicialComplex]) -> dict[int, int]:
    """b(K) + sum_i b(link of v_i in K^{i-1} joined with K_i), reduced."""
    _require_connected(K)
    seq = substitution_sequence(K, complexes)
    total = dict(betti(K))
    for i, Ki in enumerate(complexes, start=1):
        _add(total, join_betti(betti(link(seq[i - 1], i)), betti(Ki)))
    return {k: v for k, v in sorted(total.items()) if v}


def predicted_betti_composition(K: SimplicialComplex, links: Sequence[SimplicialComplex]) -> dict[int, int]:
    """Reduced Betti numbers of K(L_1, ..., L_m): tensor product shifted by m."""
    acc = dict(betti(K))
    for Li in links:
        nxt: dict[int, int] = {}
        for p, x in acc.items():
            for q, y in betti(Li).items():
                nxt[p + q] = nxt.get(p + q, 0) + x * y
        acc = nxt
    shift = len(links)
    return {k + shift: v for k, v in sorted(acc.items()) if v}


def _factor_matrices(X: SimplicialComplex):
    basis = cohomology_basis(X, reduced=True)
    dims = {j: basis.dim(j) for j in basis.degrees()}

    def mat(p: int, a: int) -> list[int] | None:
        """Rows of Sq^p: H^a -> H^{a+p}, or None when the map is zero."""
        if p == 0:
            return [1 << r for r in range(dims[a])]
        if p > a or not dims.get(a + p):
            return None
        m = sq_matrix(X, p, a, basis).matrix
        return list(m.data) if not m.is_zero() else None

    return dims, mat


def _kron_into(rows: list[int], A: list[int], B: list[int], bcols: int, row0: int, col0: int) -> None:
    for i1, ra in enumerate(A):
        for i2, rb in enumerate(B):
            acc = 0
            k1 = 0
            x = ra
            while x:
                if x & 1:
                    acc |= rb << (k1 * bcols)
                x >>= 1
                k1 += 1
            rows[row0 + i1 * len(B) + i2] ^= acc << col0


def join_sq_ranks(A: SimplicialComplex, B: SimplicialComplex) -> dict[tuple[int, int], int]:
    """Ranks of Sq^n on the reduced cohomology of A * B, from the factors.

    Uses H(A*B) in degree q = ⊕_{a+b=q-1} H(A)^a ⊗ H(B)^b and the Cartan
    formula Sq^n = Σ_{p+r=n} Sq^p ⊗ Sq^r.  Keys are (n, q) with 1 <= n <= q.
    """
    from .f2 import rank_of_rows

    dA, mA = _factor_matrices(A)
    dB, mB = _factor_matrices(B)
    blocks: dict[int, list[tuple[int, int]]] = {}
    for a in sorted(dA):
        for b in sorted(dB):
            blocks.setdefault(a + b + 1, []).append((a, b))

    def layout(q: int) -> tuple[dict[tuple[int, int], int], int]:
        offs, pos = {}, 0
        for a, b in blocks.get(q, []):
            offs[(a, b)] = pos
            pos += dA[a] * dB[b]
        return offs, pos

    out = {}
    for q in sorted(blocks):
        src, _ = layout(q)
        for n in range(1, q + 1):
            dst, height = layout(q + n)
            if not height:
                continue
            rows = [0] * height
            for (a, b), c0 in src.items():
                for p in range(n + 1):
                    key = (a + p, b + n - p)
                    if key not in dst:
                        continue
                    MA, MB = mA(p, a), mB(n - p, b)
                    if MA is None or MB is None:
                        continue
                    _kron_into(rows, MA, MB, dB[b], dst[key], c0)
            r = rank_of_rows(rows)
            if r:
                out[(n, q)] = r
    return out


def predicted_sq_profile_substitution(K: SimplicialComplex, complexes: Sequence[SimplicialComplex]) -> frozenset[ProfileEntry]:
    """Profile of K⟨K_1, ..., K_m⟩ predicted from its wedge decomposition."""
    _require_connected(K)
    seq = substitution_sequence(K, complexes)
    acc = {(e.n, e.degree): e.rank for e in sq_profile(K)}
    for i, Ki in enumerate(complexes, start=1):
        _add(acc, join_sq_ranks(link(seq[i - 1], i), Ki))
    return frozenset(ProfileEntry(n, q, r) for (n, q), r in acc.items() if r)


# -- cocycles and full subcomplexes --------------------------------------------


def extend_cocycle_substitution(
    K: SimplicialComplex,
    complexes: Sequence[SimplicialComplex],
    x: Cochain,
    labeling: str = "inplace",
) -> Cochain:
    """Copy-replacement extension of a cocycle on K to K⟨K_1, ..., K_m⟩.

    Every dual [σ]* of x spawns the duals obtained by swapping each vertex i
    of σ for any vertex of K_i, independently per position.  The output is
    checked: VerificationFailed("not-a-cocycle") if it is not a cocycle and
    VerificationFailed("class-is-zero") if x had a nonzero class but the
    extension is a coboundary.
    """
    if x.complex != K:
        raise InvalidInput("x must be a cochain on K")
    if len(complexes) != K.m:
        raise InvalidInput(f"need {K.m} complexes, got {len(complexes)}")
    if not is_cocycle(x):
        raise InvalidInput("x is not a cocycle")
    S = substitution(K, complexes, labeling)
    table = join_labeling([Ki.m for Ki in complexes], labeling)
    options = []
    for i, Ki in enumerate(complexes):
        live = [table[i][v - 1] for v in Ki.vertices]
        if 1 not in Ki.vertices:
            live = None
        options.append(live)
    masks: set[int] = set()
    for sigma in x.simplices():
        choice_lists = []
        for v in sigma:
            if options[v - 1] is None:
                raise InvalidInput(f"vertex 1 of K_{v} is a ghost; nothing to extend along")
            choice_lists.append(options[v - 1])
        for combo in product(*choice_lists):
            masks ^= {mask_of(combo)}
    y = Cochain.from_masks(S, x.degree, masks)
    if not is_cocycle(y):
        raise VerificationFailed("not-a-cocycle", "the copy-replacement extension is not a cocycle")
    if not is_coboundary(x) and is_coboundary(y):
        raise VerificationFailed("class-is-zero", "the extension represents the zero class")
    return y


def _faces_within(S: SimplicialComplex, verts: Sequence[int], back: dict[int, int]) -> set[int]:
    """Faces of S inside ``verts``, translated through ``back`` (global -> local)."""
    J = mask_of(verts)
    out = set()
    for f in S.all_face_masks():
        if f & ~J == 0:
            out.add(mask_of(back[v] for v in vertices_of(f)))
    return out


def locate_full_subcomplexes(
    K: SimplicialComplex,
    complexes: Sequence[SimplicialComplex],
    choice: Sequence[int] | None = None,
    labeling: str = "inplace",
) -> list[tuple[int, ...]]:
    """Vertex sets of the K-copy {v_{i,k_i}} and of each block {v_{i,*}}.

    ``choice`` gives the 1-based k_i (default all 1).  Each set is checked to
    span a full subcomplex face-identical to K or K_i under the labeling.
    """
    if len(complexes) != K.m:
        raise InvalidInput(f"need {K.m} complexes, got {len(complexes)}")
    S = substitution(K, complexes, labeling)
    table = join_labeling([Ki.m for Ki in complexes], labeling)
    if choice is None:
        choice = [1] * K.m
    if len(choice) != K.m or any(not 1 <= k <= Ki.m for k, Ki in zip(choice, complexes)):
        raise InvalidInput("choice must pick one vertex of each K_i")
    diag = [table[i][k - 1] for i, k in enumerate(choice)]
    if _faces_within(S, diag, {g: i + 1 for i, g in enumerate(diag)}) != K.all_face_masks():
        raise VerificationFailed("not-isomorphic", "diagonal copy of K")
    out = [tuple(sorted(diag))]
    for i, Ki in enumerate(complexes):
        block = table[i]
        if _faces_within(S, block, {g: j + 1 for j, g in enumerate(block)}) != Ki.all_face_masks():
            raise VerificationFailed("not-isomorphic", f"block {i + 1}")
        out.append(tuple(sorted(block)))
    return out
