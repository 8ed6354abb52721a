import logging
import os
from datetime import datetime

import numpy as np


def draw_seed():
    seed = (
            os.getpid()
            + int(datetime.now().strftime("%S%f"))
            + int.from_bytes(os.urandom(6), "big")
    )
    return seed % 2 ** 63


def make_rng(seed=None):
    """
    Build the numpy PCG64 generator used for every sampled run.

    Args:
        seed (int): if None or negative, a fresh seed is drawn and logged.

    Returns:
        (numpy.random.Generator, int): the generator and the seed it was built from
    """
    if seed is None or seed < 0:
        seed = draw_seed()
        logger = logging.getLogger(__name__)
        logger.info("Using a generated random seed {}".format(seed))
    return np.random.Generator(np.random.PCG64(seed)), int(seed)
