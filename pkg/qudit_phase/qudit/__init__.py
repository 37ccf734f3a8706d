from .context import QuditContext, build_context
from .vectors import (
    DensityMatrix,
    StateVector,
    batch_expectations,
    change_basis,
    dft,
    expectations,
)
from ..utils import periodic_index
