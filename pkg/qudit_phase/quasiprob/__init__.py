from .distribution import (
    QuasiDistribution,
    marginals,
    mixture_residual,
    quasi_distribution,
    quasi_distribution_direct,
    smeared_diagonal,
    translate_density,
)
from .phasepoints import (
    MAX_GRID_DIMENSION,
    PhasePointSet,
    covariant_family,
    fourier_covariance_residual,
    phase_points,
    phase_points_from_kernel,
    translational_covariance_residual,
    wigner_orthogonality_residual,
)
from .sharpness import kernel_sharpness, optimality_gap, sharpness
from .tomography import reconstruct_state
from .weights import convolution_residual, convolution_weights
from .weyl import verify_weyl_identity
