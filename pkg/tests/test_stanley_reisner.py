from __future__ import annotations

import random
from collections import Counter

import pytest

import oracles
from sqtop.complex import P26, from_facets, points, simplex
from sqtop.errors import InvalidInput
from sqtop.f2 import BitMatrix
from sqtop.stanley_reisner import (
    SRElement,
    hilbert_count,
    minimal_nonfaces,
    monomial_basis,
    render_monomial,
    sq_graded_matrix,
    sq_total_monomial,
    sr_reduce,
    support_mask,
    verify_a_ideal,
)


def _poly_mul(a: Counter, b: Counter) -> Counter:
    out = Counter()
    for x, cx in a.items():
        for y, cy in b.items():
            out[tuple(i + j for i, j in zip(x, y))] += cx * cy
    return out


def _total_square_by_expansion(mono, d):
    """Multiply out prod (x_i + x_i^2)^{e_i} term by term, reducing mod 2 at the end."""
    m = len(mono)
    acc = Counter({(0,) * m: 1})
    for i, e in enumerate(mono):
        lin = Counter({tuple(1 if k == i else 0 for k in range(m)): 1, tuple(2 if k == i else 0 for k in range(m)): 1})
        for _ in range(e):
            acc = _poly_mul(acc, lin)
    out = {}
    for img, c in acc.items():
        if c % 2:
            out.setdefault(d * (sum(img) - sum(mono)), []).append(img)
    return {n: sorted(v, reverse=True) for n, v in sorted(out.items())}


def test_basis_examples():
    assert monomial_basis(points(2), 2) == [(2, 0), (0, 2)]
    assert monomial_basis(simplex(1), 2) == [(2, 0), (1, 1), (0, 2)]
    assert len(monomial_basis(P26(), 2)) == 21
    assert monomial_basis(points(2), 0) == [(0, 0)]
    with pytest.raises(InvalidInput):
        monomial_basis(points(2), -1)


def test_basis_matches_brute_force(corpus):
    for K in corpus[:40]:
        for k in range(0, 4):
            brute = sorted((e for e in oracles.monomials(K.m, k) if K.has_face(support_mask(e))), reverse=True)
            assert monomial_basis(K, k) == brute
            assert hilbert_count(K, k) == len(brute)


def test_hilbert_formula_on_corpus(corpus):
    for K in corpus:
        for k in range(0, 7):
            assert len(monomial_basis(K, k)) == hilbert_count(K, k)


def test_reduce_examples():
    K = points(2)
    assert sr_reduce(SRElement(K, 2, [(1, 1)])).is_zero()
    assert sr_reduce(SRElement(K, 2, [(2, 1), (3, 0)])) == SRElement(K, 2, [(3, 0)])
    e = SRElement(P26(), 2, [(1, 1, 0, 0, 0, 0), (0, 0, 1, 1, 0, 0)])
    assert sr_reduce(e) == e
    with pytest.raises(InvalidInput):
        SRElement(K, 2, [(1, 0), (1, 1)])
    with pytest.raises(InvalidInput):
        SRElement(K, 3, [(1, 0)])


def test_element_arithmetic_and_render():
    K = simplex(1)
    a = SRElement(K, 1, [(1, 1), (2, 0)])
    b = SRElement(K, 1, [(1, 1)])
    assert (a + b) == SRElement(K, 1, [(2, 0)])
    assert a.degree == 2 and SRElement(K, 1).degree is None
    assert repr(a) == "x1^2 + x1*x2"
    assert render_monomial((0, 0)) == "1"


def test_total_square_examples():
    assert sq_total_monomial((1,), 2) == {0: [(1,)], 2: [(2,)]}
    assert sq_total_monomial((2, 1), 2) == {0: [(2, 1)], 2: [(2, 2)], 4: [(4, 1)], 6: [(4, 2)]}
    assert sq_total_monomial((1,), 1) == {0: [(1,)], 1: [(2,)]}
    # Sq(x1 x2) = x1x2 + x1^2x2 + x1x2^2 + x1^2x2^2
    assert sq_total_monomial((1, 1), 2) == {0: [(1, 1)], 2: [(2, 1), (1, 2)], 4: [(2, 2)]}


def test_total_square_matches_expansion():
    rng = random.Random(23)
    for _ in range(200):
        m = rng.randint(1, 4)
        mono = tuple(rng.randint(0, 6) for _ in range(m))
        d = rng.choice([1, 2])
        assert sq_total_monomial(mono, d) == _total_square_by_expansion(mono, d)


def _total(mono, d):
    return Counter(img for imgs in sq_total_monomial(mono, d).values() for img in imgs)


def test_cartan_multiplicative():
    rng = random.Random(29)
    for _ in range(200):
        m = rng.randint(1, 4)
        a = tuple(rng.randint(0, 4) for _ in range(m))
        b = tuple(rng.randint(0, 4) for _ in range(m))
        prod = tuple(x + y for x, y in zip(a, b))
        lhs = {k for k, c in _total(prod, 1).items() if c % 2}
        rhs = {k for k, c in _poly_mul(_total(a, 1), _total(b, 1)).items() if c % 2}
        assert lhs == rhs


def test_graded_matrix_examples():
    K = points(2)
    assert sq_graded_matrix(K, 2, 2, 2).to_lists() == [[1, 0], [0, 1]]
    assert sq_graded_matrix(K, 1, 2, 2).is_zero()
    for D in (0, 2, 4, 6):
        M = sq_graded_matrix(P26(), 0, D, 2)
        assert M == BitMatrix.identity(M.cols)
    with pytest.raises(InvalidInput):
        sq_graded_matrix(K, 2, 3, 2)


def test_instability_and_odd_operations(corpus):
    for K in corpus[:40]:
        for d in (1, 2):
            for D in range(0, 7, d):
                for n in range(D + 1, D + 4):
                    assert sq_graded_matrix(K, n, D, d).is_zero()
                if d == 2:
                    for n in (1, 3, 5):
                        assert sq_graded_matrix(K, n, D, d).is_zero()


def test_top_operation_is_squaring():
    K = P26()
    for D in (1, 2, 3):
        M = sq_graded_matrix(K, D, D, 1)
        source = monomial_basis(K, D)
        target = monomial_basis(K, 2 * D)
        for c, mono in enumerate(source):
            col = [M.to_lists()[r][c] for r in range(M.rows)]
            assert [target[r] for r, bit in enumerate(col) if bit] == [tuple(2 * e for e in mono)]


def test_well_defined_on_quotient():
    rng = random.Random(31)
    K = P26()
    for _ in range(50):
        k = rng.randint(1, 4)
        mono = tuple(rng.choice(oracles.monomials(6, k)))
        # a monomial in the face ideal has every Sq image in the ideal too
        if K.has_face(support_mask(mono)):
            continue
        for n, imgs in sq_total_monomial(mono, 1).items():
            assert sr_reduce(SRElement(K, 1, imgs)).is_zero()


def test_minimal_nonfaces():
    assert minimal_nonfaces(points(2)) == [0b11]
    assert minimal_nonfaces(simplex(2)) == []
    assert minimal_nonfaces(from_facets(3, [[1, 2]])) == [0b100]
    assert len(minimal_nonfaces(P26())) == 10


def test_a_ideal():
    assert verify_a_ideal(points(2), 2, 8)
    assert verify_a_ideal(P26(), 2, 6)
    assert verify_a_ideal(simplex(2), 2, 6)
    assert verify_a_ideal(P26(), 1, 5)
