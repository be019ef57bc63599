"""Schubert calculus on complex, real, quaternionic, and octonionic flag varieties.

The complex layer computes in the Schubert basis of Grassmannians and full
or partial flag varieties. The halving layer transports problems on the
other three families to that complex layer, giving exact counts in the
quaternionic and octonionic cases and certified lower bounds on the number
of real solutions in the real case.
"""

from .errors import (
    BoxOverflow,
    DegreeOutOfRange,
    DimensionMismatch,
    MissingChernDegree,
    NotADouble,
    NotADoubleIndex,
    SchubertError,
    SpaceMismatch,
    SupportOutsideStaircase,
)
from .flag import (
    FlagClass,
    FlagDescriptor,
    SchubertPolynomial,
    divided_difference,
    expand_in_schubert_basis,
    flag_integrate,
    flag_multiply,
    monk_multiply,
    schubert_polynomial,
)
from .grassmann import (
    GrassmannClass,
    GrassmannianDescriptor,
    chern_class,
    degeneracy_count,
    giambelli,
    gr_integrate,
    gr_multiply,
    poincare_dual,
    tautological_chern_difference,
    thom_porteous,
)
from .halving import (
    DegeneracyProblem,
    HalvingClass,
    HalvingSpaceDescriptor,
    SchubertProblem,
    kappa,
    kappa_char_class,
    quaternionic_count,
    real_degeneracy_lower_bound,
    real_double_multiply,
    real_lower_bound,
)
from .schur import (
    SchurExpansion,
    expand_basis_product,
    jacobi_trudi,
    lr_coefficient,
    oracle_schur_polynomial,
    pieri,
    schur_multiply,
)
from .selftest import run_selftest

__version__ = "0.1.0"

__all__ = [
    "BoxOverflow",
    "DegreeOutOfRange",
    "DimensionMismatch",
    "MissingChernDegree",
    "NotADouble",
    "NotADoubleIndex",
    "SchubertError",
    "SpaceMismatch",
    "SupportOutsideStaircase",
    "FlagClass",
    "FlagDescriptor",
    "SchubertPolynomial",
    "divided_difference",
    "expand_in_schubert_basis",
    "flag_integrate",
    "flag_multiply",
    "monk_multiply",
    "schubert_polynomial",
    "GrassmannClass",
    "GrassmannianDescriptor",
    "chern_class",
    "degeneracy_count",
    "giambelli",
    "gr_integrate",
    "gr_multiply",
    "poincare_dual",
    "tautological_chern_difference",
    "thom_porteous",
    "DegeneracyProblem",
    "HalvingClass",
    "HalvingSpaceDescriptor",
    "SchubertProblem",
    "kappa",
    "kappa_char_class",
    "quaternionic_count",
    "real_degeneracy_lower_bound",
    "real_double_multiply",
    "real_lower_bound",
    "SchurExpansion",
    "expand_basis_product",
    "jacobi_trudi",
    "lr_coefficient",
    "oracle_schur_polynomial",
    "pieri",
    "schur_multiply",
    "run_selftest",
    "__version__",
]
