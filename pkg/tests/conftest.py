from __future__ import annotations

import pytest

from corpus import X_EDGES, XPRIME_EDGES, seeded_corpus
from sqtop.cohomology import Cochain
from sqtop.complex import P26, SimplicialComplex


@pytest.fixture(scope="session")
def corpus() -> list[SimplicialComplex]:
    return seeded_corpus()


@pytest.fixture
def p26() -> SimplicialComplex:
    return P26()


@pytest.fixture
def x(p26) -> Cochain:
    return Cochain.from_simplices(p26, X_EDGES)


@pytest.fixture
def xprime(p26) -> Cochain:
    return Cochain.from_simplices(p26, XPRIME_EDGES)
