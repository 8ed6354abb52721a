from .defaults import default_argument_parser, default_setup, setup
from .simulator import (
    CloneOutcome,
    MonteCarloReport,
    VerificationReport,
    run_exact,
    run_sampled,
    verify_machine,
)
