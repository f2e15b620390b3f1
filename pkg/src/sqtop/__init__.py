"""Cochain-level Steenrod squares for simplicial complexes, polyhedral joins
and moment-angle complexes, over GF(2)."""

from .cohomology import Cochain, betti, cohomology_basis, cup, is_coboundary, is_cocycle
from .complex import (
    P26,
    SimplicialComplex,
    boundary,
    cycle,
    from_facets,
    full_subcomplex,
    join,
    link,
    points,
    simplex,
    star,
)
from .errors import InvalidInput, SqtopError, VerificationFailed, VertexCapExceeded
from .moment_angle import hochster_table, za_betti, za_sq_profile
from .polyjoin import composition, polyhedral_join, substitution
from .steenrod import sq_cochain, sq_matrix, sq_profile

__version__ = "0.1.0"

__all__ = [
    "Cochain",
    "betti",
    "cohomology_basis",
    "cup",
    "is_coboundary",
    "is_cocycle",
    "P26",
    "SimplicialComplex",
    "boundary",
    "cycle",
    "from_facets",
    "full_subcomplex",
    "join",
    "link",
    "points",
    "simplex",
    "star",
    "InvalidInput",
    "SqtopError",
    "VerificationFailed",
    "VertexCapExceeded",
    "hochster_table",
    "za_betti",
    "za_sq_profile",
    "composition",
    "polyhedral_join",
    "substitution",
    "sq_cochain",
    "sq_matrix",
    "sq_profile",
]
