import logging

import numpy as np

from probclone.data import load_machine, load_state_set, save_machine
from probclone.errors import (
    DependentSet,
    DimensionMismatch,
    IllConditioned,
    IndexOutOfRange,
    Infeasible,
    ProbCloneError,
)
from probclone.modeling.cloning_machine import build_machine, default_blank
from probclone.solver import boundary_diagnosis, make_efficiency_solver
from probclone.structures.gram import gram, is_linearly_independent
from probclone.utils.registry import Registry

from .defaults import default_argument_parser, setup
from .simulator import binomial_bound, run_exact, run_sampled, verify_machine
from .sweep import overlap_grid, parse_range, sweep_overlaps, write_sweep_csv

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_VERDICT = 2
EXIT_BUILD_INFEASIBLE = 3

COMMANDS = Registry()


def _report_logger():
    return logging.getLogger("probclone.cli")


def format_value(value, digits):
    """
    At least `digits` significant digits and at least `digits` decimals, so
    0.6666667, 1.0000000 and 0.0001234000 for digits = 7.
    """
    decimals = digits
    if value != 0 and abs(value) < 1:
        decimals = max(digits, digits - 1 - int(np.floor(np.log10(abs(value)))))
    return "{:.{}f}".format(value, decimals)


def _fmt(cfg, value):
    return format_value(value, cfg.REPORT.DIGITS)


def _efficiency_reports(cfg, states):
    copies = cfg.SYNTHESIS.COPIES
    if copies < 2:
        raise ValueError("copies must be at least 2, got {}".format(copies))
    x1, xm = gram(states, 1), gram(states, copies)
    eigen = make_efficiency_solver(cfg, "eigen")(x1, xm)
    bisect = make_efficiency_solver(cfg, "bisection")(x1, xm)
    return eigen, bisect


@COMMANDS.register("check")
def cmd_check(cfg, args):
    logger = _report_logger()
    states = load_state_set(args.states, cfg.STATES.ZERO_NORM_TOL)
    check = is_linearly_independent(states, cfg.STATES.INDEPENDENCE_TOL)
    logger.info("{} states of dimension {}".format(states.n, states.dim))
    logger.info("minimum Gram eigenvalue: {:.7e}".format(check.min_eigenvalue))
    if check.independent:
        logger.info("verdict: independent, clonable")
        return EXIT_OK
    logger.info("null combination b (sum_i b_i|psi_i> ~ 0): {}".format(
        ", ".join("{:.4f}".format(b) for b in check.null_vector)))
    logger.info("verdict: dependent, not clonable")
    return EXIT_VERDICT


@COMMANDS.register("efficiency")
def cmd_efficiency(cfg, args):
    logger = _report_logger()
    states = load_state_set(args.states, cfg.STATES.ZERO_NORM_TOL)
    eigen, bisect = _efficiency_reports(cfg, states)
    logger.info("copies: {}".format(cfg.SYNTHESIS.COPIES))
    logger.info("eta* (eigen):     {}".format(_fmt(cfg, eigen.eta_star)))
    logger.info("eta* (bisection): {}".format(_fmt(cfg, bisect.eta_star)))
    logger.info("solver delta:     {:.3e}".format(abs(eigen.eta_star - bisect.eta_star)))
    logger.info("boundary: {}".format(
        boundary_diagnosis(states, eigen, cfg.STATES.INDEPENDENCE_TOL)))
    if not eigen.independent:
        logger.info("verdict: dependent, eta* = 0")
        return EXIT_VERDICT
    return EXIT_OK


def resolve_eta(text, eta_star, margin):
    if text == "max":
        return eta_star * (1.0 - margin)
    try:
        eta = float(text)
    except ValueError:
        raise ValueError("--eta must be a number or 'max', got {!r}".format(text))
    if not 0.0 <= eta <= 1.0:
        raise ValueError("--eta must lie in [0, 1], got {}".format(eta))
    return eta


@COMMANDS.register("build")
def cmd_build(cfg, args):
    logger = _report_logger()
    states = load_state_set(args.states, cfg.STATES.ZERO_NORM_TOL)
    copies = cfg.SYNTHESIS.COPIES
    report = make_efficiency_solver(cfg)(gram(states, 1), gram(states, copies))
    eta = resolve_eta(args.eta, report.eta_star, cfg.SYNTHESIS.ETA_MARGIN)
    logger.info("eta* = {}, building at eta = {!r} with {} copies".format(
        _fmt(cfg, report.eta_star), eta, copies))

    machine = build_machine(
        states,
        eta,
        copies=copies,
        blank=default_blank(states.dim, copies, cfg.SYNTHESIS.BLANK_INDEX),
        fill_state_index=cfg.SYNTHESIS.FILL_INDEX,
        independence_tol=cfg.STATES.INDEPENDENCE_TOL,
        psd_tol=cfg.FEASIBILITY.PSD_TOL,
        ortho_tol=cfg.SYNTHESIS.ORTHO_TOL,
        gram_tol=cfg.SYNTHESIS.GRAM_MATCH_TOL,
    )
    verification = verify_machine(machine, states)
    save_machine(machine, args.output)

    logger.info("composite dimension: {}".format(machine.composite_dim))
    logger.info("unitarity residual: {:.3e}".format(verification.unitarity_residual))
    logger.info("factor residual:    {:.3e}".format(verification.factor_residual))
    logger.info("evolution residual: {:.3e}".format(max(verification.evolution_residuals)))
    logger.info("verification: {}".format("pass" if verification.passed else "FAIL"))
    logger.info("machine written to {}".format(args.output))
    return EXIT_OK


def _simulation_inputs(cfg, machine, args):
    if args.input is not None:
        if not 0 <= args.input < machine.n_states:
            raise IndexOutOfRange("--input {} outside 0..{}".format(
                args.input, machine.n_states - 1))
        return [("state {}".format(args.input), machine.states[args.input], args.input)]
    inputs = []
    for k, state in enumerate(load_state_set(args.state_file, cfg.STATES.ZERO_NORM_TOL)):
        if state.dim != machine.system_dim:
            raise DimensionMismatch("{}: state {} has dimension {}, machine expects {}".format(
                args.state_file, k, state.dim, machine.system_dim))
        member = machine.states.index_of(state, cfg.SIMULATOR.MEMBER_TOL)
        inputs.append(("{}[{}]".format(args.state_file, k), state, member))
    return inputs


@COMMANDS.register("simulate")
def cmd_simulate(cfg, args):
    logger = _report_logger()
    machine = load_machine(args.machine)
    shots = cfg.SIMULATOR.SHOTS
    for label, state, member in _simulation_inputs(cfg, machine, args):
        outcomes = run_exact(machine, state, cfg.SIMULATOR.PROB_FLOOR)
        logger.info("{} ({}):".format(
            label, "designated member {}".format(member) if member is not None else "non-member"))
        logger.info("  probe  probability  fidelity")
        for outcome in outcomes:
            if outcome.success and outcome.fidelity is not None and member is not None:
                fidelity = _fmt(cfg, outcome.fidelity)
            elif outcome.success:
                fidelity = "n/a"
            else:
                fidelity = "-"
            logger.info("  P{:<4d}  {}    {}".format(
                outcome.probe_index, _fmt(cfg, outcome.probability), fidelity))
        total = sum(o.probability for o in outcomes)
        logger.info("  total probability: {}".format(_fmt(cfg, total)))

        if shots > 0:
            if member is None:
                logger.warning("  sampling needs a designated member, skipped")
                continue
            report = run_sampled(machine, member, shots, cfg.SEED, cfg.SIMULATOR.PROB_FLOOR)
            logger.info("  monte carlo: shots={} successes={} empirical={} expected={} "
                        "5-sigma={:.4f} seed={}".format(
                            report.shots, report.successes, _fmt(cfg, report.empirical_rate),
                            _fmt(cfg, report.expected_rate), binomial_bound(report),
                            report.seed))
    return EXIT_OK


@COMMANDS.register("sweep")
def cmd_sweep(cfg, args):
    logger = _report_logger()
    grid = overlap_grid(*parse_range(args.overlap))
    copies = cfg.SYNTHESIS.COPIES
    if copies < 2:
        raise ValueError("copies must be at least 2, got {}".format(copies))
    rows = sweep_overlaps(
        grid,
        copies,
        eigen_solver=make_efficiency_solver(cfg, "eigen"),
        bisect_solver=make_efficiency_solver(cfg, "bisection"),
    )
    write_sweep_csv(rows, args.output)
    logger.info("{} overlaps, max solver delta {:.3e}".format(
        len(rows), max(row.delta for row in rows)))
    return EXIT_OK


def main(argv=None):
    args = default_argument_parser().parse_args(argv)
    logger = logging.getLogger("probclone")
    try:
        cfg = setup(args)
    except Exception as e:
        logger.error("invalid configuration: {}".format(e))
        return EXIT_INPUT_ERROR

    try:
        return COMMANDS.get(args.command)(cfg, args)
    except DependentSet as e:
        _report_logger().info("verdict: dependent, not clonable ({})".format(e))
        return EXIT_VERDICT
    except (Infeasible, IllConditioned) as e:
        _report_logger().error(str(e))
        return EXIT_BUILD_INFEASIBLE
    except (ProbCloneError, ValueError, OSError) as e:
        logger.error(str(e))
        return EXIT_INPUT_ERROR
