from __future__ import annotations

import random

import pytest

import oracles
import properties
from sqtop.cohomology import Cochain, cohomology_basis, coboundary, is_cocycle
from sqtop.complex import boundary, cycle, path, simplex
from sqtop.enumeration import enumerate_complexes
from sqtop.errors import InvalidInput
from sqtop.steenrod import (
    IndexPair,
    ProfileEntry,
    admissible_index_pairs,
    sq1_cochain_special,
    sq_cochain,
    sq_cochain_pasting,
    sq_matrix,
    sq_profile,
)


def test_admissible_examples():
    for j in range(5):
        assert admissible_index_pairs(0, j) == [IndexPair((), ())]
    assert admissible_index_pairs(1, 1) == [IndexPair((2,), (0,))]
    assert admissible_index_pairs(1, 2) == [IndexPair((2,), (0,)), IndexPair((1,), (3,))]


@pytest.mark.parametrize("n", range(0, 4))
@pytest.mark.parametrize("j", range(0, 5))
def test_admissible_matches_brute_force(n, j):
    got = admissible_index_pairs(n, j)
    assert sorted(got) == sorted(oracles.admissible(n, j))
    assert len(set(got)) == len(got)


def test_sq1_pairs_are_even_sums():
    for j in range(0, 6):
        pairs = {tuple(sorted(p.U + p.V)) for p in admissible_index_pairs(1, j)}
        assert pairs == {(u, v) for u in range(j + 2) for v in range(u + 1, j + 2) if (u + v) % 2 == 0}


def test_p26_values(p26, x, xprime):
    assert sq_cochain(p26, 1, x).simplices() == [(1, 4, 5)]
    assert sq_cochain(p26, 1, xprime).simplices() == [(1, 2, 6), (1, 4, 6), (3, 4, 6)]
    assert sq1_cochain_special(p26, x).simplices() == [(1, 4, 5)]
    assert sq_matrix(p26, 1, 1).matrix.to_lists() == [[1]]
    assert sq_matrix(p26, 2, 1).matrix.is_zero()


def test_single_dual_and_sq0(p26, x):
    for s in p26.faces(1):
        assert sq_cochain(p26, 1, Cochain.from_simplices(p26, [s])).is_zero()
    assert sq_cochain(p26, 0, x) == x


def test_overflow_returns_zero(p26, x):
    out = sq_cochain(p26, 2, x)
    assert out.degree == 3 and out.is_zero()


def test_profile_examples(p26):
    assert sq_profile(p26) == {ProfileEntry(1, 1, 1)}
    assert sq_profile(cycle(7)) == frozenset()
    assert sq_profile(path(4)) == frozenset()
    assert sq_profile(boundary(3)) == frozenset()
    assert sq_matrix(cycle(5), 1, 1).matrix.is_zero()


def test_sq1_on_circle_is_zero():
    S = boundary(2)
    z = cohomology_basis(S).representatives(1)[0]
    assert sq1_cochain_special(S, z).is_zero()


def test_negative_degree_rejected():
    E = simplex(1)
    with pytest.raises(InvalidInput):
        sq_cochain(E, 1, Cochain(E, -1, 1))


def _all_cochains(K, j, limit=10):
    n = len(K.face_masks(j))
    if n > limit:
        return None
    return [Cochain(K, j, bits) for bits in range(1 << n)]


def test_pasting_formula_agrees_exhaustively():
    """Generator-driven and simplex-driven evaluation agree on every cochain
    of every complex on four vertices, for every n, whenever the cochain
    space has at most 2^10 elements."""
    checked = 0
    for K in enumerate_complexes(4):
        for j in range(0, K.dimension() + 1):
            cochains = _all_cochains(K, j)
            if cochains is None:
                continue
            for n in range(0, K.dimension() - j + 1):
                for c in cochains:
                    assert sq_cochain_pasting(K, n, c) == sq_cochain(K, n, c)
                    checked += 1
    assert checked > 9000


def test_formulas_match_definition_oracle(corpus):
    rng = random.Random(17)
    for K in corpus[:60]:
        for j in range(0, K.dimension() + 1):
            nfaces = len(K.face_masks(j))
            for n in range(0, K.dimension() - j + 1):
                c = Cochain(K, j, rng.getrandbits(nfaces))
                expect = oracles.sq(K.facets, n, j, set(c.simplices()))
                assert set(sq_cochain(K, n, c).simplices()) == expect
                assert sq_cochain_pasting(K, n, c) == sq_cochain(K, n, c)
                if n == 1:
                    assert sq1_cochain_special(K, c) == sq_cochain(K, 1, c)


def test_internal_error_when_image_not_cocycle(monkeypatch, p26):
    import sqtop.steenrod as st

    def broken(K, n, c):
        return Cochain.from_simplices(K, [[1, 2]])

    monkeypatch.setattr(st, "sq_cochain", broken)
    with pytest.raises(RuntimeError, match="internal error"):
        st.sq_matrix(p26, 0, 1, cohomology_basis(p26))


def test_cocycle_preservation_and_coboundaries(corpus):
    rng = random.Random(19)
    for K in corpus[:80]:
        B = cohomology_basis(K)
        d = K.dimension()
        for j in range(0, d + 1):
            for z in B.representatives(j):
                for n in range(0, d - j + 1):
                    assert is_cocycle(sq_cochain(K, n, z))
            if j >= 1:
                prev = len(K.face_masks(j - 1))
                b = coboundary(Cochain(K, j - 1, rng.getrandbits(prev)))
                for n in range(0, d - j + 1):
                    img = sq_cochain(K, n, b)
                    assert is_cocycle(img)
                    assert not any(B.reduce(img))


@pytest.mark.parametrize("name", list(properties.CHECKS))
def test_property_on_corpus(name, corpus):
    check = properties.CHECKS[name]
    for idx, K in enumerate(corpus):
        check(K, random.Random(idx))


def test_properties_on_p26(p26):
    for check in properties.CHECKS.values():
        check(p26, random.Random(0))
