from .ground import (
    GroundPair,
    eigen_residual,
    ground_pair_dense,
    ground_pair_lapack,
    ground_pair_power,
    harper_spectrum,
    verify_gamma_symmetries,
)
from .jacobi import jacobi_eigh
from .operator import QUARTER_PI, build_harper, check_theta, theta_harper
from .power import power_iteration
from .solver import HarperSolver
