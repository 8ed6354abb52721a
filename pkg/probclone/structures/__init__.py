from .states import StateVector, StateSet, make_state, basis_state, tensor_power
from .gram import GramMatrix, IndependenceCheck, gram, is_linearly_independent
