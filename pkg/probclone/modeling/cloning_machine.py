import logging

import numpy as np

from probclone.errors import (
    DependentSet,
    DimensionMismatch,
    GramMismatch,
    IllConditioned,
    Infeasible,
)
from probclone.solver.feasibility import (
    PSD_TOL,
    ConstantsMatrix,
    constants_matrix,
    is_feasible,
)
from probclone.structures.gram import INDEPENDENCE_TOL, gram, is_linearly_independent
from probclone.structures.states import StateVector, basis_state, tensor_power

from .completion import complete_unitary
from .orthonormal import (
    CONDITIONING_TOL,
    GRAM_MATCH_TOL,
    ORTHO_TOL,
    apply_coeffs,
    gram_schmidt,
    polar_orthonormalize,
)

# composite index = ((copy_1 * N + copy_2) * N + ...) * (n + 1) + probe
INDEX_CONVENTION = "copies-major-probe-fastest"


def default_blank(system_dim, copies, blank_index=0):
    """|Sigma> = |e_blank_index>^(x)(copies - 1)"""
    slot = basis_state(system_dim, blank_index)
    return StateVector(tensor_power(slot, copies - 1))


def _resolve_blank(blank, system_dim, copies):
    if blank is None:
        return default_blank(system_dim, copies)
    register_dim = system_dim ** (copies - 1)
    if blank.dim == register_dim:
        return blank
    if blank.dim == system_dim:
        return StateVector(tensor_power(blank, copies - 1))
    raise DimensionMismatch("blank of dimension {} for a copy register of dimension {}".format(
        blank.dim, register_dim))


def input_vectors(states, blank, probe_dim):
    """Rows |psi_i>|Sigma>|P_0>."""
    probe = np.zeros(probe_dim, dtype=np.complex128)
    probe[0] = 1.0
    return np.array([np.kron(np.kron(s.amplitudes, blank.amplitudes), probe) for s in states])


def output_vectors(states, copies, eta, constants, fill_state_index=0):
    '''
    Rows sqrt(eta)|psi_i>^(x)m |P_0> + sum_j c_ji |Phi>|P_j> with |Phi> the basis
    state `fill_state_index` of the N^m dimensional copy space. Using c_ji (the
    conjugate of c_ij for Hermitian C) makes the output inner products equal
    eta * X^(m) + C C^dagger exactly.
    '''
    n = states.n
    ab_dim = states.dim ** copies
    if not 0 <= fill_state_index < ab_dim:
        raise DimensionMismatch("fill index {} outside dimension {}".format(
            fill_state_index, ab_dim))
    rows = []
    for i, state in enumerate(states):
        out = np.zeros((ab_dim, n + 1), dtype=np.complex128)
        out[:, 0] = np.sqrt(eta) * tensor_power(state, copies)
        out[fill_state_index, 1:] = constants.entries[:, i]
        rows.append(out.reshape(-1))
    return np.array(rows)


class CloningMachine():
    """
    Unitary U on system (x) copy register (x) probe together with everything
    needed to run it: the designated states, efficiency, blank and constants.
    """

    def __init__(self, states, copies, eta, blank, constants, unitary, fill_state_index=0):
        unitary = np.array(unitary, dtype=np.complex128)
        unitary.flags.writeable = False
        self.states = states
        self.copies = int(copies)
        self.eta = float(eta)
        self.blank = blank
        self.constants = constants
        self.unitary = unitary
        self.fill_state_index = int(fill_state_index)
        if unitary.shape != (self.composite_dim, self.composite_dim):
            raise DimensionMismatch("unitary of shape {} for composite dimension {}".format(
                unitary.shape, self.composite_dim))

    @property
    def system_dim(self):
        return self.states.dim

    @property
    def n_states(self):
        return self.states.n

    @property
    def probe_dim(self):
        return self.n_states + 1

    @property
    def clone_dim(self):
        return self.system_dim ** self.copies

    @property
    def composite_dim(self):
        return self.clone_dim * self.probe_dim

    def input_vector(self, state):
        if state.dim != self.system_dim:
            raise DimensionMismatch("input of dimension {} for a machine on dimension {}".format(
                state.dim, self.system_dim))
        return input_vectors([state], self.blank, self.probe_dim)[0]

    def target_vector(self, index):
        """The right-hand side of the cloning evolution for member `index`."""
        return output_vectors(self.states, self.copies, self.eta, self.constants,
                              self.fill_state_index)[index]

    def apply(self, vector):
        return self.unitary @ vector

    def __repr__(self):
        s = self.__class__.__name__ + "("
        s += "system_dim={}, ".format(self.system_dim)
        s += "copies={}, ".format(self.copies)
        s += "n_states={}, ".format(self.n_states)
        s += "eta={}, ".format(self.eta)
        s += "composite_dim={})".format(self.composite_dim)
        return s


def build_machine(
        states,
        eta,
        copies=2,
        blank=None,
        fill_state_index=0,
        independence_tol=INDEPENDENCE_TOL,
        psd_tol=PSD_TOL,
        ortho_tol=ORTHO_TOL,
        gram_tol=GRAM_MATCH_TOL,
):
    '''
    Construct the cloning unitary for `states` at efficiency `eta`.

    The input family |psi_i>|Sigma>|P_0> and the output family of the cloning
    evolution share one Gram matrix exactly when X^(1) = eta X^(m) + C C^dagger.
    Both are orthonormalized by the same Gram-Schmidt recursion, moved to the
    nearest exactly orthonormal families and paired into a full unitary.
    Raises IllConditioned when the result still misses `gram_tol`.

    Args:
        states (StateSet): designated states, must be linearly independent
        eta (float): success probability in [0, 1]
        copies (int): clones produced on success, m >= 2
        blank (StateVector): single-slot or full copy-register blank state

    Returns:
        CloningMachine
    '''
    logger = logging.getLogger(__name__)
    if copies < 2:
        raise ValueError("a cloning machine produces at least 2 copies, got {}".format(copies))
    if not 0.0 <= eta <= 1.0:
        raise ValueError("efficiency must lie in [0, 1], got {}".format(eta))

    check = is_linearly_independent(states, independence_tol)
    if not check.independent:
        raise DependentSet(check.min_eigenvalue)

    x1 = gram(states, 1)
    xm = gram(states, copies)
    feasibility = is_feasible(x1, xm, eta, psd_tol)
    if not feasibility.feasible:
        raise Infeasible(eta, feasibility.min_eigenvalue)
    constants = constants_matrix(x1, xm, eta, psd_tol)

    blank = _resolve_blank(blank, states.dim, copies)
    inputs = input_vectors(states, blank, states.n + 1)
    outputs = output_vectors(states, copies, eta, constants, fill_state_index)

    mismatch = float(np.max(np.abs(inputs.conj() @ inputs.T - outputs.conj() @ outputs.T)))
    if mismatch > gram_tol:
        raise GramMismatch("input and output inner products differ by {:.3e}".format(mismatch))

    domain = gram_schmidt(inputs, ortho_tol)
    target = apply_coeffs(outputs, domain.coeffs, gram_tol, CONDITIONING_TOL)
    # both families carry the same recursion error; U |in_i> = |out_i> holds to ~eps / gamma_min
    unitary = complete_unitary(
        polar_orthonormalize(domain.ortho), polar_orthonormalize(target), ortho_tol)

    residual = float(np.max(np.linalg.norm(inputs @ unitary.T - outputs, axis=1)))
    if residual > gram_tol:
        raise IllConditioned(residual, gram_tol)
    logger.debug("evolution residual {:.3e}".format(residual))

    machine = CloningMachine(states, copies, eta, blank, constants, unitary, fill_state_index)
    logger.info("Built {}".format(machine))
    return machine


def machine_from_parts(states, copies, eta, blank, constants_entries, unitary, fill_state_index):
    return CloningMachine(states, copies, eta, blank, ConstantsMatrix(constants_entries, eta),
                          unitary, fill_state_index)
