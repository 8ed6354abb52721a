from .feasibility import (
    ConstantsMatrix,
    FeasibilityCheck,
    FeasibilityReport,
    constants_matrix,
    feasibility_matrix,
    is_feasible,
    max_efficiency_bisect,
    max_efficiency_eigen,
    boundary_diagnosis,
)
from .build import EFFICIENCY_SOLVERS, make_efficiency_solver
