from yacs.config import CfgNode as CN

# -----------------------------------------------------------------------------
# Config definition
# -----------------------------------------------------------------------------

_C = CN()

# -----------------------------------------------------------------------------
# States
# -----------------------------------------------------------------------------
_C.STATES = CN()
# A set is independent when the minimum eigenvalue of X^(1) exceeds this
_C.STATES.INDEPENDENCE_TOL = 1e-10
# Amplitude vectors with a smaller norm are rejected as zero
_C.STATES.ZERO_NORM_TOL = 1e-14

# -----------------------------------------------------------------------------
# Feasibility
# -----------------------------------------------------------------------------
_C.FEASIBILITY = CN()
# X^(1) - eta * X^(m) counts as PSD when its minimum eigenvalue is >= -PSD_TOL
_C.FEASIBILITY.PSD_TOL = 1e-10
# Width of the final bracket of the bisection solver
_C.FEASIBILITY.BISECT_TOL = 1e-10
# Solver used to resolve "--eta max", one of the EFFICIENCY_SOLVERS keys
_C.FEASIBILITY.METHOD = "eigen"

# ---------------------------------------------------------------------------- #
# Machine synthesis
# ---------------------------------------------------------------------------- #
_C.SYNTHESIS = CN()
# Number of clones produced on success
_C.SYNTHESIS.COPIES = 2
# "--eta max" builds at eta* * (1 - ETA_MARGIN)
_C.SYNTHESIS.ETA_MARGIN = 1e-9
# Basis index of the single-slot blank state |Sigma>
_C.SYNTHESIS.BLANK_INDEX = 0
# Basis index (in the N^m dimensional AB space) of the failure-branch state |Phi>
_C.SYNTHESIS.FILL_INDEX = 0
# Gram-Schmidt residual norms at or below this are treated as dependent
_C.SYNTHESIS.ORTHO_TOL = 1e-10
# Allowed difference between the input and output Gram matrices
_C.SYNTHESIS.GRAM_MATCH_TOL = 1e-9

# ---------------------------------------------------------------------------- #
# Simulator
# ---------------------------------------------------------------------------- #
_C.SIMULATOR = CN()
# 0 prints the exact outcome table only
_C.SIMULATOR.SHOTS = 0
# Outcomes below this probability carry no post-measurement state
_C.SIMULATOR.PROB_FLOOR = 1e-14
# An input is a set member when |<member|input>|^2 >= 1 - MEMBER_TOL
_C.SIMULATOR.MEMBER_TOL = 1e-10

# ---------------------------------------------------------------------------- #
# Reports
# ---------------------------------------------------------------------------- #
_C.REPORT = CN()
# Digits after the decimal point for probabilities and efficiencies
_C.REPORT.DIGITS = 7

# ---------------------------------------------------------------------------- #
# Misc options
# ---------------------------------------------------------------------------- #
# Directory for the log file, "" logs to the console only
_C.OUTPUT_DIR = ""
# Negative draws a fresh seed for sampled runs and logs it
_C.SEED = -1


def get_cfg_defaults():
    return _C.clone()
