from .continuum import ContinuumScheme, continuum_expansion_check, gaussian_state
from .formulas import (
    asymptotic_gamma,
    asymptotic_h,
    asymptotic_level,
    excited_level_check,
    gamma_deviation,
    mathieu_residual,
)
from .tables import deviation_ratios, gamma_table, h_table
