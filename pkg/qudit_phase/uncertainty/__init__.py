from .certainty import (
    amgm_chain,
    batch_certainty,
    batch_density_certainty,
    bloch_vector,
    certainty,
    spectral_certainty_bound,
)
from .inequality import ms_inequality_check, theta_ground_pair, theta_min_uncertainty_state
from .lift import modulus_lift
from .minimum import (
    MinUncertaintyState,
    min_uncertainty_state,
    minimum_uncertainty_grid,
    nearest_minimum_uncertainty_state,
    resolution_of_identity_residual,
)
from .optimizer import CertaintyOptimizer, log_certainty, maximize_certainty
