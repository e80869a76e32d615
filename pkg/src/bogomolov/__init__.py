"""Schur and Bogomolov multipliers of Lie algebras from structure constants."""

from ._backend import NAME as KERNELS
from .cohomology import (
    bogomolov_cohomological,
    bogomolov_homological,
    coboundary_space,
    cocycle_space,
    schur_multiplier_dim,
)
from .exactlinalg import Field, Subspace
from .families import (
    abelian,
    freest_gen_heisenberg,
    heisenberg,
    heisenberg_as_quotient,
    random_class2,
    theorem1_quotient,
)
from .hopf import check_five_term, free_nilpotent, hopf_bogomolov, present
from .isoclinism import attach_abelian, commutator_pairing, verify
from .liealg import LieAlgebra, validate
from .varietyspan import (
    EXHAUSTIVE,
    RANDOMIZED,
    SaturationConfig,
    commutator_span_in,
    commuting_wedge_space,
)

__version__ = "0.1.0"

__all__ = [
    "EXHAUSTIVE", "KERNELS", "RANDOMIZED", "Field", "LieAlgebra", "SaturationConfig",
    "Subspace", "abelian", "attach_abelian", "bogomolov_cohomological",
    "bogomolov_homological", "check_five_term", "coboundary_space", "cocycle_space",
    "commutator_pairing", "commutator_span_in", "commuting_wedge_space", "free_nilpotent",
    "freest_gen_heisenberg", "heisenberg", "heisenberg_as_quotient", "hopf_bogomolov",
    "present", "random_class2", "schur_multiplier_dim", "theorem1_quotient", "validate",
    "verify",
]
