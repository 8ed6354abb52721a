import csv
import logging
from collections import namedtuple

import numpy as np
from tqdm import tqdm

from probclone.solver.feasibility import max_efficiency_bisect, max_efficiency_eigen
from probclone.structures.gram import gram
from probclone.structures.states import StateSet, StateVector
from probclone.utils.miscellaneous import mkdir, parent_dir

SweepRow = namedtuple("SweepRow", ["overlap", "eta_eigen", "eta_bisect", "delta"])

SWEEP_FIELDS = ("s", "eta_eigen", "eta_bisect", "delta")


def parse_range(text):
    """"FROM:TO:STEP" -> (from, to, step)"""
    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError("overlap range must look like FROM:TO:STEP, got {!r}".format(text))
    return tuple(float(p) for p in parts)


def overlap_grid(start, stop, step):
    if not 0.0 <= start <= stop < 1.0:
        raise ValueError("overlap range needs 0 <= from <= to < 1, got {}:{}".format(start, stop))
    if not step > 0.0:
        raise ValueError("overlap step must be positive, got {}".format(step))
    count = int(np.floor((stop - start) / step + 1e-9)) + 1
    return [round(start + k * step, 12) for k in range(count)]


def canonical_pair(overlap):
    """{|0>, s|0> + sqrt(1 - s^2)|1>}; only the overlap s matters for eta*."""
    return StateSet([
        StateVector([1.0, 0.0]),
        StateVector([overlap, np.sqrt(1.0 - overlap ** 2)]),
    ])


def sweep_overlaps(grid, copies=2, eigen_solver=max_efficiency_eigen,
                   bisect_solver=max_efficiency_bisect):
    rows = []
    for overlap in tqdm(grid, desc="sweep", disable=len(grid) < 50):
        pair = canonical_pair(overlap)
        x1, xm = gram(pair, 1), gram(pair, copies)
        eta_eigen = eigen_solver(x1, xm).eta_star
        eta_bisect = bisect_solver(x1, xm).eta_star
        rows.append(SweepRow(overlap, eta_eigen, eta_bisect, abs(eta_eigen - eta_bisect)))
    return rows


def write_sweep_csv(rows, path):
    logger = logging.getLogger(__name__)
    mkdir(parent_dir(path))
    with open(path, "w", newline="") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(SWEEP_FIELDS)
        for row in rows:
            w.writerow([repr(float(v)) for v in row])
    logger.info("Wrote {} sweep rows to {}".format(len(rows), path))
