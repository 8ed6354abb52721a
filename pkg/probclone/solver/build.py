import functools

from probclone.utils.registry import Registry

from .feasibility import max_efficiency_bisect, max_efficiency_eigen

EFFICIENCY_SOLVERS = Registry()
EFFICIENCY_SOLVERS.register("eigen", max_efficiency_eigen)
EFFICIENCY_SOLVERS.register("bisection", max_efficiency_bisect)


def make_efficiency_solver(cfg, method=None):
    method = cfg.FEASIBILITY.METHOD if method is None else method
    solver = EFFICIENCY_SOLVERS.get(method)
    if method == "bisection":
        return functools.partial(
            solver,
            tol=cfg.FEASIBILITY.BISECT_TOL,
            psd_tol=cfg.FEASIBILITY.PSD_TOL,
            independence_tol=cfg.STATES.INDEPENDENCE_TOL,
        )
    return functools.partial(solver, tol=cfg.STATES.INDEPENDENCE_TOL)
