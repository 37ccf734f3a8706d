from .blocks import MAX_BLOCK_DIMENSION, block_operators, block_spectrum_check
from .coefficients import (
    ZERO_TOL,
    FourierCoeffTable,
    coeff_table,
    expected_zero_set,
    fourier_coefficients,
    zero_set,
)
from .crosscheck import fourier_phase_point_residual, qubit_real_completeness_rank
from .symmetric import (
    CONJUGATION_MAX_DIMENSION,
    MAX_REDUCTION_DIMENSION,
    conjugated_operator,
    corner_matrix,
    reduced_operator,
    symmetric_basis,
    symmetric_reduction_check,
)
