from __future__ import annotations

import random

import pytest

import oracles
from corpus import X_EDGES
from sqtop.cohomology import Cochain, betti, cohomology_basis, is_cocycle, restrict
from sqtop.complex import (
    P26,
    boundary,
    cycle,
    empty,
    from_facets,
    full_subcomplex,
    join,
    link,
    points,
    simplex,
    vertices_of,
)
from sqtop.errors import InvalidInput, VerificationFailed
from sqtop.polyjoin import (
    composition,
    extend_cocycle_substitution,
    join_betti,
    join_labeling,
    join_sq_ranks,
    locate_full_subcomplexes,
    polyhedral_join,
    predicted_betti_composition,
    predicted_betti_substitution,
    predicted_sq_profile_substitution,
    substitution,
    substitution_sequence,
)
from sqtop.steenrod import ProfileEntry, sq_cochain, sq_profile

S0 = points(2)
DOT = points(1)


def _face_sets(K):
    return {frozenset(vertices_of(f)) for f in K.all_face_masks()}


def _x():
    return Cochain.from_simplices(P26(), X_EDGES)


def test_labeling_tables():
    assert join_labeling([2, 1, 3], "inplace") == [[1, 4], [2], [3, 5, 6]]
    assert join_labeling([2, 1, 3], "block") == [[1, 2], [3], [4, 5, 6]]
    with pytest.raises(InvalidInput):
        join_labeling([1, 1], "weird")
    with pytest.raises(InvalidInput):
        join_labeling([0, 1], "inplace")


def test_boundary_of_tetrahedron_as_composition():
    pair = (simplex(1), boundary(1))
    assert polyhedral_join(points(2), [pair, pair]) == boundary(3)
    assert composition(points(2), [S0, S0]) == boundary(3)


def test_simplex_gives_join_and_points_give_disjoint_union():
    A, B = cycle(4), S0
    J = polyhedral_join(simplex(1), [(A, empty(4)), (B, empty(2))], "block")
    assert J == join(A, B)
    U = polyhedral_join(points(2), [(A, empty(4)), (B, empty(2))], "block")
    assert U == from_facets(6, list(A.facets) + [[5], [6]])


def test_join_faces_match_oracle():
    rng = random.Random(41)
    for _ in range(25):
        m = rng.randint(1, 3)
        K = from_facets(m, [rng.sample(range(1, m + 1), rng.randint(1, m)) for _ in range(rng.randint(1, 3))])
        pairs = []
        for _ in range(m):
            n = rng.randint(1, 3)
            Ki = from_facets(n, [rng.sample(range(1, n + 1), rng.randint(1, n)) for _ in range(2)])
            sub = [f for f in Ki.facets if rng.random() < 0.5]
            Li = from_facets(n, [list(f)[:-1] for f in sub if len(f) > 1]) if sub else empty(n)
            pairs.append((Ki, Li))
        for mode in ("inplace", "block"):
            labels = join_labeling([Ki.m for Ki, _ in pairs], mode)
            got = polyhedral_join(K, pairs, mode)
            expect = oracles.polyhedral_join_faces(K.facets, [(Ki.facets, Li.facets) for Ki, Li in pairs], labels)
            assert _face_sets(got) == expect


def test_subcomplex_check():
    with pytest.raises(InvalidInput):
        polyhedral_join(S0, [(S0, simplex(1)), (S0, empty(2))])
    with pytest.raises(InvalidInput):
        polyhedral_join(S0, [(S0, empty(2))])


def test_p26_with_s0():
    S = substitution(P26(), [S0] + [DOT] * 5)
    assert S.m == 7
    new = sorted(set(S.facets) - set(P26().facets))
    assert new == [(2, 3, 7), (2, 6, 7), (3, 5, 7), (4, 5, 7), (4, 6, 7)]
    assert set(P26().facets) <= set(S.facets)


def test_p26_with_triangle_boundary():
    S = substitution(P26(), [boundary(2)] + [DOT] * 5)
    assert S.m == 8
    new = set(S.facets) - set(P26().facets)
    assert len(new) == 15 and all(len(f) == 4 for f in new)
    L = link(P26(), 1)
    link_edges = {frozenset(L.labels[v - 1] for v in e) for e in L.faces(1)}
    tri_edges = {frozenset(e) for e in [(1, 7), (1, 8), (7, 8)]}
    assert {frozenset(f) for f in new} == {a | b for a in link_edges for b in tri_edges}


def test_point_substitution_is_identity():
    for K in (P26(), cycle(5), boundary(3)):
        assert substitution(K, [DOT] * K.m) == K


def test_substitution_sequence():
    seq = substitution_sequence(P26(), [S0] + [DOT] * 5)
    assert len(seq) == 7 and seq[0] == P26()
    assert all(seq[i] == seq[1] for i in range(1, 7))
    assert substitution_sequence(S0, [S0, S0])[-1] == points(4)
    rng = random.Random(43)
    pool = [DOT, S0, points(3), cycle(3), cycle(4), simplex(1), simplex(2)]
    for _ in range(5):
        K = rng.choice([cycle(3), cycle(4), P26(), boundary(2)])
        factors = [rng.choice(pool) for _ in range(K.m)]
        assert substitution_sequence(K, factors)[-1] == substitution(K, factors)


def test_join_betti_rule():
    assert join_betti({0: 1}, {0: 1}) == {1: 1}
    assert join_betti({-1: 1}, {2: 3}) == {2: 3}
    assert join_betti({1: 1, 2: 1}, {0: 1}) == {2: 1, 3: 1}
    assert join_betti({}, {0: 1}) == {}
    for a, b in [(P26(), S0), (cycle(4), boundary(2)), (S0, S0)]:
        assert join_betti(betti(a), betti(b)) == betti(join(a, b))


def test_predicted_betti_examples():
    assert predicted_betti_substitution(P26(), [S0] + [DOT] * 5) == {1: 1, 2: 2}
    assert predicted_betti_substitution(P26(), [DOT] * 6) == betti(P26())
    assert predicted_betti_substitution(simplex(1), [P26(), DOT]) == {}
    assert betti(substitution(simplex(1), [P26(), DOT])) == {}
    with pytest.raises(InvalidInput):
        predicted_betti_substitution(S0, [DOT, DOT])


def test_predicted_betti_composition_examples():
    assert predicted_betti_composition(S0, [S0, S0]) == {2: 1}
    assert predicted_betti_composition(S0, [S0, DOT]) == {}
    for K, links in [(cycle(4), [S0, S0, S0, S0]), (S0, [cycle(3), S0]), (cycle(3), [S0, DOT, points(3)])]:
        assert predicted_betti_composition(K, links) == betti(composition(K, links))


def test_join_sq_ranks_match_direct():
    for A, B in [(P26(), S0), (P26(), DOT), (S0, P26()), (cycle(4), S0), (P26(), boundary(1))]:
        J = join(A, B)
        direct = {(e.n, e.degree): e.rank for e in sq_profile(J)}
        predicted = {k: v for k, v in join_sq_ranks(A, B).items() if v}
        assert predicted == direct


def test_predicted_profile_examples():
    assert predicted_sq_profile_substitution(P26(), [S0] + [DOT] * 5) == {ProfileEntry(1, 1, 1)}
    assert sq_profile(substitution(P26(), [S0] + [DOT] * 5)) == {ProfileEntry(1, 1, 1)}
    assert predicted_sq_profile_substitution(cycle(5), [DOT] * 5) == frozenset()
    K = cycle(4)
    factors = [P26(), DOT, DOT, DOT]
    predicted = predicted_sq_profile_substitution(K, factors)
    assert ProfileEntry(1, 2, 1) in predicted
    assert predicted == sq_profile(substitution(K, factors))


def test_extend_cocycle_s0():
    S = substitution(P26(), [S0] + [DOT] * 5)
    y = extend_cocycle_substitution(P26(), [S0] + [DOT] * 5, _x())
    expect = Cochain.from_simplices(S, X_EDGES + [[4, 7], [6, 7]])
    assert y == expect
    assert sq_cochain(S, 1, y).simplices() == [(1, 4, 5), (2, 6, 7)]
    assert any(cohomology_basis(S).reduce(sq_cochain(S, 1, y)))


def test_extend_cocycle_triangle():
    factors = [boundary(2)] + [DOT] * 5
    S = substitution(P26(), factors)
    y = extend_cocycle_substitution(P26(), factors, _x())
    assert y == Cochain.from_simplices(S, X_EDGES + [[4, 7], [4, 8], [6, 7], [6, 8]])
    assert len(y.simplices()) == 9
    assert sq_cochain(S, 1, y).simplices() == [
        (1, 4, 5), (1, 4, 7), (1, 4, 8), (1, 6, 7), (1, 6, 8), (2, 6, 7), (2, 6, 8)
    ]


def test_extend_cocycle_trivial_and_errors():
    x = _x()
    assert extend_cocycle_substitution(P26(), [DOT] * 6, x) == x
    with pytest.raises(InvalidInput):
        extend_cocycle_substitution(P26(), [DOT] * 6, Cochain.from_simplices(P26(), [[1, 2]]))
    with pytest.raises(InvalidInput):
        extend_cocycle_substitution(P26(), [DOT] * 5, x)


def test_extension_restricts_back_on_random_instances():
    # the extension is the pullback along the map collapsing each block to its
    # vertex, and the diagonal copy of K is a section, so it restricts back to x
    rng = random.Random(47)
    pool = [DOT, S0, points(3), cycle(3), simplex(1), simplex(2), from_facets(3, [[1, 2], [3]])]
    for _ in range(40):
        K = rng.choice([cycle(3), cycle(4), cycle(5), P26(), boundary(2), boundary(3)])
        factors = [rng.choice(pool) for _ in range(K.m)]
        B = cohomology_basis(K)
        for j in [j for j in B.degrees() if j >= 0]:
            for z in B.representatives(j):
                y = extend_cocycle_substitution(K, factors, z)
                assert is_cocycle(y)
                S = y.complex
                diag = list(range(1, K.m + 1))
                assert full_subcomplex(S, diag) == K
                assert restrict(y, diag).bits == z.bits


def test_extension_guards(monkeypatch):
    import sqtop.polyjoin as pj

    factors = [S0] + [DOT] * 5
    monkeypatch.setattr(pj, "is_cocycle", lambda c: c.complex == P26())
    with pytest.raises(VerificationFailed) as info:
        pj.extend_cocycle_substitution(P26(), factors, _x())
    assert info.value.reason == "not-a-cocycle"
    monkeypatch.undo()
    monkeypatch.setattr(pj, "is_coboundary", lambda c: c.complex != P26())
    with pytest.raises(VerificationFailed) as info:
        pj.extend_cocycle_substitution(P26(), factors, _x())
    assert info.value.reason == "class-is-zero"


def test_locate_full_subcomplexes():
    factors = [S0] + [DOT] * 5
    S = substitution(P26(), factors)
    sets = locate_full_subcomplexes(P26(), factors)
    assert sets[0] == (1, 2, 3, 4, 5, 6) and sets[1] == (1, 7)
    assert full_subcomplex(S, sets[0]) == P26()
    assert locate_full_subcomplexes(P26(), factors, choice=[2, 1, 1, 1, 1, 1])[0] == (2, 3, 4, 5, 6, 7)
    assert full_subcomplex(S, [7, 2, 3, 4, 5, 6]).f_vector() == P26().f_vector()
    assert locate_full_subcomplexes(S0, [S0, S0])[1:] == [(1, 3), (2, 4)]
    assert locate_full_subcomplexes(S0, [S0, S0], labeling="block")[1:] == [(1, 2), (3, 4)]
    with pytest.raises(InvalidInput):
        locate_full_subcomplexes(S0, [S0, S0], choice=[3, 1])
