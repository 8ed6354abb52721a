import json

import numpy as np

from probclone.engine.sweep import canonical_pair
from probclone.structures import StateSet, is_linearly_independent, make_state


def random_state(rng, dim):
    return make_state(rng.normal(size=dim) + 1j * rng.normal(size=dim))


def random_independent_set(rng, n, dim, min_eigenvalue=0.05):
    assert n <= dim
    while True:
        states = StateSet([random_state(rng, dim) for _ in range(n)])
        if is_linearly_independent(states).min_eigenvalue > min_eigenvalue:
            return states


def random_dependent_set(rng, dim):
    """Either dim + 1 states in dimension dim, or a set whose last member mixes the others."""
    if dim <= 2 or rng.random() < 0.5:
        return StateSet([random_state(rng, dim) for _ in range(dim + 1)])
    first, second = random_state(rng, dim), random_state(rng, dim)
    a, b = rng.normal(size=2) + 1j * rng.normal(size=2)
    return StateSet([first, second, make_state(a * first.amplitudes + b * second.amplitudes)])


def random_orthonormal_set(rng, n, dim):
    q, _ = np.linalg.qr(rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim)))
    return StateSet([make_state(q[:, k]) for k in range(n)])


def overlap_pair(overlap):
    return canonical_pair(overlap)


def write_states(path, rows, dimension=None):
    dimension = len(rows[0]) if dimension is None else dimension
    document = {
        "dimension": dimension,
        "states": [[[complex(a).real, complex(a).imag] for a in row] for row in rows],
    }
    path.write_text(json.dumps(document))
    return str(path)
