"""Tensor products over a common dimension, with the spectral and
combinatorial theory that travels with them: similarity and congruence
transforms, resultant characteristic polynomials at dimension 2, uniform
hypergraph products, zero-pattern primitivity analysis, and power-iteration
spectral radii."""

from .scalars import as_exact, is_exact, rational
from .core import (
    DEFAULT_SIZE_CAP,
    DenseTensor,
    add,
    apply_vector,
    direct_product,
    from_function,
    general_product,
    hadamard_power,
    is_supersymmetric,
    matrix,
    max_abs_diff,
    scalar_mul,
    sub,
    tensor_power,
    unit_tensor,
    vector,
)
from .transforms import (
    DiagonalMatrix,
    EigenPair,
    Permutation,
    check_identity_preserving,
    congruence,
    diagonal_similarity,
    matrix_is_invertible,
    mode_apply,
    permutation_conjugate,
    stochastic_scaling,
    transpose,
    transfer_E_eigenpair,
    transfer_eigenpair_diagonal,
    triple_product_matrix,
    verify_E_eigenpair,
    verify_eigenpair,
)
from .charpoly import (
    BinaryForm,
    UnivariatePolynomial,
    characteristic_polynomial,
    charpoly_dim2,
    charpoly_matrix,
    check_rotation_symmetry,
    companion_matrix,
    cyclic_index_dim2,
    hyperdeterminant_dim2,
    poly,
    polynomial_roots,
    spectrum_dim2,
    sylvester_resultant,
)
from .hypergraph import (
    UniformHypergraph,
    adjacency_tensor,
    cartesian_product,
    cartesian_sum_tensor,
    compose_product_eigenpairs,
    kron_vector,
)
from .hypergraph import direct_product as hypergraph_direct_product
from .patterns import (
    CensusReport,
    CensusRow,
    CensusSummary,
    MajorizationReport,
    PatternReport,
    PatternTensor,
    analyze_pattern,
    census,
    census_rows,
    dense01,
    essentially_positive,
    family_step,
    full_mask,
    is_irreducible,
    is_primitive,
    is_strongly_primitive,
    is_weakly_irreducible,
    majorization_matrix,
    matrix_cyclic_index,
    matrix_is_irreducible,
    matrix_primitive_degree,
    pattern_from_id,
    pattern_id_of,
    pattern_product,
    primitive_degree,
    repeated_tail_pattern,
    slice_support_families,
    step_map,
    strongly_primitive_degree,
    summarize_census,
    with_unit_diagonal,
    zero_pattern,
)
from .spectral import IterationConfig, PowerResult, min_max_bracket, power_method_rho
from .io import (
    dumps,
    hypergraph_from_json,
    hypergraph_to_json,
    load_json,
    polynomial_to_json,
    roots_to_json,
    tensor_from_json,
    tensor_to_json,
    vector_from_json,
)

__all__ = [name for name in dir() if not name.startswith("_")]
