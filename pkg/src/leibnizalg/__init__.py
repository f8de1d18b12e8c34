"""Exact structure theory for finite-dimensional left Leibniz algebras.

Everything runs over exact scalars: rationals or prime fields.  The main
entry points are re-exported here; the :mod:`leibnizalg.oracle` module holds
independent brute-force implementations used to certify the fast routines.
"""

from .fields import GF, QQ, Field, PrimeField, Rationals
from .linalg import Matrix, Subspace, Vector, nullspace
from .algebra import (
    AlgebraView,
    LeibnizAlgebra,
    QuotientMap,
    direct_sum,
    semidirect_by_derivation,
)
from .series import (
    SeriesResult,
    derived_series,
    ideal_closure,
    is_nilpotent,
    is_solvable,
    lower_central_limit,
    lower_central_series,
    subalgebra_closure,
    two_sided_power,
    two_sided_product,
)
from .subinvariance import (
    NormalSeries,
    SubinvarianceResult,
    element_closure,
    is_subinvariant,
    join_subinvariant,
    subinvariant_core,
)
from .structure import (
    StructureReport,
    cartan_subalgebra,
    check_structure,
    nilradical,
    radical,
)
from .derivations import DerivationAlgebra, TowerReport, derivations, tower

__version__ = "1.0.0"

__all__ = [
    "Field",
    "Rationals",
    "PrimeField",
    "QQ",
    "GF",
    "Vector",
    "Matrix",
    "Subspace",
    "nullspace",
    "LeibnizAlgebra",
    "QuotientMap",
    "AlgebraView",
    "semidirect_by_derivation",
    "direct_sum",
    "SeriesResult",
    "two_sided_product",
    "two_sided_power",
    "lower_central_series",
    "derived_series",
    "lower_central_limit",
    "is_nilpotent",
    "is_solvable",
    "subalgebra_closure",
    "ideal_closure",
    "NormalSeries",
    "SubinvarianceResult",
    "is_subinvariant",
    "join_subinvariant",
    "element_closure",
    "subinvariant_core",
    "radical",
    "nilradical",
    "cartan_subalgebra",
    "check_structure",
    "StructureReport",
    "derivations",
    "DerivationAlgebra",
    "tower",
    "TowerReport",
    "__version__",
]
