"""Hermitian self-orthogonal generalized Reed-Solomon codes over GF(q^2)
and the quantum MDS codes they certify."""
from .field import FieldTower, build_tower, tower_for
from .grs import GrsCode, build_grs, code_subset, encode, euclidean_dual, q_power_code
from .hermitian import (
    FAMILIES,
    FamilyError,
    FamilyParams,
    construct_family,
    degree_bound,
    exponent_condition,
    hermitian_inner,
    is_hermitian_self_orthogonal,
    r_values,
)
from .oracle import Budget, VerifyReport, mds_by_column_rank, min_distance_enumerate, verify_all
from .quantum import QuantumParams, catalog, derive_quantum, singleton_check
from .vandermonde import (
    EvalSet,
    matrix_A,
    matrix_A_inf,
    rationality_by_rowspace,
    roots_of_unity,
    solve_dual,
)

__version__ = "0.1.0"
