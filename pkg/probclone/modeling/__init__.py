from .orthonormal import (
    OrthonormalizationResult,
    apply_coeffs,
    gram_schmidt,
    polar_orthonormalize,
)
from .completion import complete_unitary, extend_to_basis, unitarity_residual
from .cloning_machine import CloningMachine, build_machine
