import logging
from collections import namedtuple

import numpy as np

from probclone.errors import IndexOutOfRange
from probclone.modeling.cloning_machine import input_vectors, output_vectors
from probclone.modeling.completion import unitarity_residual
from probclone.structures.gram import gram
from probclone.structures.states import StateVector, tensor_power
from probclone.utils.envs import make_rng

PROB_FLOOR = 1e-14
VERIFY_TOL = 1e-10
EVOLUTION_TOL = 1e-9

# post_state and fidelity are None for outcomes below the probability floor;
# fidelity is only filled in on the success outcome.
CloneOutcome = namedtuple(
    "CloneOutcome", ["probe_index", "probability", "success", "post_state", "fidelity"])

MonteCarloReport = namedtuple(
    "MonteCarloReport",
    ["shots", "successes", "empirical_rate", "expected_rate", "seed", "counts"],
)

VerificationReport = namedtuple(
    "VerificationReport",
    [
        "passed",
        "success_probabilities",
        "fidelities",
        "evolution_residuals",
        "unitarity_residual",
        "factor_residual",
        "failures",
    ],
)


def fidelity(ideal, actual):
    """|<ideal|actual>|^2, blind to global phase."""
    return float(min(1.0, abs(np.vdot(ideal, actual)) ** 2))


def run_exact(machine, state, prob_floor=PROB_FLOOR):
    '''
    Apply the machine to |state>|Sigma>|P_0> and measure the probe.

    Returns:
        list[CloneOutcome]: one entry per probe basis state, P_0 first. The
        success fidelity is taken against |state>^(x)m whether or not `state`
        is a designated member.
    '''
    output = machine.apply(machine.input_vector(state))
    branches = output.reshape(machine.clone_dim, machine.probe_dim)
    ideal = tensor_power(state, machine.copies)

    outcomes = []
    for probe_index in range(machine.probe_dim):
        branch = branches[:, probe_index]
        probability = float(np.real(np.vdot(branch, branch)))
        post_state, clone_fidelity = None, None
        if probability >= prob_floor:
            post_state = StateVector(branch / np.linalg.norm(branch))
            if probe_index == 0:
                clone_fidelity = fidelity(ideal, post_state.amplitudes)
        outcomes.append(CloneOutcome(
            probe_index, min(probability, 1.0), probe_index == 0, post_state, clone_fidelity))
    return outcomes


def run_sampled(machine, input_index, shots, seed=None, prob_floor=PROB_FLOOR):
    '''
    Draw `shots` probe outcomes for member `input_index` from the exact outcome
    distribution with a seeded PCG64 generator, in one multinomial draw.
    '''
    if not 0 <= input_index < machine.n_states:
        raise IndexOutOfRange("input index {} outside 0..{}".format(
            input_index, machine.n_states - 1))
    if shots < 1:
        raise ValueError("shots must be positive, got {}".format(shots))

    outcomes = run_exact(machine, machine.states[input_index], prob_floor)
    probabilities = np.array([o.probability for o in outcomes])
    probabilities[probabilities < prob_floor] = 0.0
    probabilities = probabilities / probabilities.sum()

    rng, seed = make_rng(seed)
    counts = rng.multinomial(shots, probabilities)
    successes = int(counts[0])
    return MonteCarloReport(shots, successes, successes / shots, machine.eta, seed,
                            tuple(int(c) for c in counts))


def binomial_bound(report, sigmas=5.0):
    eta = report.expected_rate
    return sigmas * np.sqrt(eta * (1.0 - eta) / report.shots)


def verify_machine(machine, states, tol=VERIFY_TOL, evolution_tol=EVOLUTION_TOL):
    '''
    Check a machine against its designated states: success probability eta and
    unit clone fidelity for every member, unitarity, the constants factor
    property and the per-member evolution residual. Failures are reported,
    never raised.
    '''
    logger = logging.getLogger(__name__)
    failures = []
    if states.n != machine.n_states or states.dim != machine.system_dim:
        failures.append("state set ({} states, dim {}) does not match the machine".format(
            states.n, states.dim))
        return VerificationReport(False, (), (), (), float("nan"), float("nan"), failures)

    unitary_res = unitarity_residual(machine.unitary)
    if unitary_res > tol:
        failures.append("unitarity residual {:.3e}".format(unitary_res))

    factor_res = machine.constants.factor_residual(gram(states, 1), gram(states, machine.copies))
    if factor_res > tol:
        failures.append("factor residual {:.3e}".format(factor_res))

    inputs = input_vectors(states, machine.blank, machine.probe_dim)
    targets = output_vectors(states, machine.copies, machine.eta, machine.constants,
                             machine.fill_state_index)

    probabilities, fidelities, residuals = [], [], []
    for i, state in enumerate(states):
        success = run_exact(machine, state)[0]
        clone_fidelity = success.fidelity if success.fidelity is not None else 0.0
        residual = float(np.linalg.norm(machine.apply(inputs[i]) - targets[i]))
        probabilities.append(success.probability)
        fidelities.append(clone_fidelity)
        residuals.append(residual)

        if abs(success.probability - machine.eta) > tol:
            failures.append("state {}: success probability {} != eta {}".format(
                i, success.probability, machine.eta))
        # eta = 0 machines never succeed, so there is no clone to compare
        if machine.eta > 0 and abs(clone_fidelity - 1.0) > tol:
            failures.append("state {}: clone fidelity {}".format(i, clone_fidelity))
        if residual > evolution_tol:
            failures.append("state {}: evolution residual {:.3e}".format(i, residual))

    for failure in failures:
        logger.warning(failure)
    return VerificationReport(not failures, tuple(probabilities), tuple(fidelities),
                              tuple(residuals), unitary_res, factor_res, failures)
