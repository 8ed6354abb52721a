import numpy as np
import pytest

from probclone.modeling import build_machine
from probclone.structures import StateSet

from helpers import overlap_pair


@pytest.fixture
def rng():
    return np.random.default_rng(20240517)


@pytest.fixture(scope="session")
def orthonormal_machine():
    return build_machine(StateSet([[1, 0], [0, 1]]), 1.0, copies=2)


@pytest.fixture(scope="session")
def half_overlap_machine():
    return build_machine(overlap_pair(0.5), 2.0 / 3.0, copies=2)
