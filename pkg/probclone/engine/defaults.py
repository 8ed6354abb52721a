import argparse
import logging
import sys

from probclone.config import get_cfg_defaults
from probclone.utils.logger import setup_logger
from probclone.utils.miscellaneous import mkdir

__all__ = ["default_argument_parser", "default_setup", "setup"]


class ArgumentParser(argparse.ArgumentParser):
    # usage errors are input errors (exit 1); argparse would exit 2,
    # which is reserved for the dependent/infeasible verdict
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, "{}: error: {}\n".format(self.prog, message))


def _common_parser():
    parser = ArgumentParser(add_help=False)
    parser.add_argument("--config-file", default="", metavar="FILE", help="path to config file")
    parser.add_argument(
        "--opts",
        help="Modify config options using the command-line, e.g. --opts SEED 7",
        default=[],
        nargs="+",
        metavar="KEY VALUE",
    )
    return parser


def default_argument_parser():
    common = _common_parser()
    parser = ArgumentParser(
        prog="probclone",
        description="Probabilistic cloning of linearly independent pure states",
    )
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
    subparsers.required = True

    check = subparsers.add_parser("check", parents=[common],
                                  help="decide linear independence (clonability)")
    check.add_argument("states", metavar="STATES_JSON")

    efficiency = subparsers.add_parser("efficiency", parents=[common],
                                       help="maximum cloning efficiency from both solvers")
    efficiency.add_argument("states", metavar="STATES_JSON")
    efficiency.add_argument("--copies", type=int, default=None, metavar="M")

    build = subparsers.add_parser("build", parents=[common], help="construct a cloning machine")
    build.add_argument("states", metavar="STATES_JSON")
    build.add_argument("--eta", default="max", metavar="VALUE|max",
                       help="efficiency to build at, 'max' is eta* * (1 - SYNTHESIS.ETA_MARGIN)")
    build.add_argument("--copies", type=int, default=None, metavar="M")
    build.add_argument("-o", "--output", required=True, metavar="MACHINE_JSON")

    simulate = subparsers.add_parser("simulate", parents=[common],
                                     help="simulate a saved machine")
    simulate.add_argument("machine", metavar="MACHINE_JSON")
    source = simulate.add_mutually_exclusive_group(required=True)
    source.add_argument("--input", type=int, default=None, metavar="IDX",
                        help="index of a designated state")
    source.add_argument("--state-file", default=None, metavar="F",
                        help="state-set file whose states are fed to the machine")
    simulate.add_argument("--shots", type=int, default=None, metavar="K")
    simulate.add_argument("--seed", type=int, default=None, metavar="S")

    sweep = subparsers.add_parser("sweep", parents=[common],
                                  help="eta* over the canonical two-state family")
    sweep.add_argument("--overlap", required=True, metavar="FROM:TO:STEP")
    sweep.add_argument("--copies", type=int, default=None, metavar="M")
    sweep.add_argument("-o", "--output", required=True, metavar="SWEEP_CSV")
    return parser


def _flag_overrides(args):
    opts = []
    for flag, key in (("copies", "SYNTHESIS.COPIES"),
                      ("shots", "SIMULATOR.SHOTS"),
                      ("seed", "SEED")):
        value = getattr(args, flag, None)
        if value is not None:
            opts += [key, value]
    return opts


def default_setup(cfg, args):
    output_dir = cfg.OUTPUT_DIR
    if output_dir:
        mkdir(output_dir)

    logger = setup_logger(output_dir)
    logger.debug(args)
    if args.config_file:
        logger.debug("Loaded configuration file {}".format(args.config_file))
        with open(args.config_file, "r") as cf:
            config_str = "\n" + cf.read()
            logger.debug(config_str)
    logger.debug("Running with config:\n{}".format(cfg))
    return logger


def setup(args):
    cfg = get_cfg_defaults()
    if args.config_file:
        cfg.merge_from_file(args.config_file)
    if len(args.opts) % 2:
        raise ValueError("--opts needs KEY VALUE pairs, got {}".format(args.opts))
    cfg.merge_from_list(list(args.opts))
    # explicit flags win over config files and --opts
    cfg.merge_from_list(_flag_overrides(args))
    cfg.freeze()
    default_setup(cfg, args)
    logging.getLogger(__name__).debug("Command {}".format(args.command))
    return cfg
