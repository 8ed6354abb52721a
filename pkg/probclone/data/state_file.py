import json
import logging
import numbers

import numpy as np

from probclone.errors import FileFormatError, ZeroVector
from probclone.structures.states import ZERO_NORM_TOL, StateSet, make_state
from probclone.utils.miscellaneous import mkdir, parent_dir


def encode_complex(value):
    value = complex(value)
    return [value.real, value.imag]


def decode_complex(value, path, field):
    if (not isinstance(value, (list, tuple)) or len(value) != 2
            or not all(isinstance(v, numbers.Real) and not isinstance(v, bool) for v in value)):
        raise FileFormatError(path, field, "expected a [re, im] pair, got {!r}".format(value))
    if not all(np.isfinite(v) for v in value):
        raise FileFormatError(path, field, "non-finite amplitude {!r}".format(value))
    return complex(float(value[0]), float(value[1]))


def encode_vector(amplitudes):
    return [encode_complex(a) for a in amplitudes]


def decode_vector(values, path, field, length=None):
    if not isinstance(values, list):
        raise FileFormatError(path, field, "expected a list of [re, im] pairs")
    if length is not None and len(values) != length:
        raise FileFormatError(path, field, "has {} amplitudes, expected {}".format(
            len(values), length))
    return [decode_complex(v, path, "{}[{}]".format(field, k)) for k, v in enumerate(values)]


def read_json(path):
    try:
        with open(path, "r") as f:
            return json.load(f)
    except json.JSONDecodeError as e:
        raise FileFormatError(path, "line {} column {}".format(e.lineno, e.colno), e.msg)
    except OSError as e:
        raise FileFormatError(path, "<file>", e.strerror or str(e))


def write_json(document, path):
    mkdir(parent_dir(path))
    with open(path, "w") as f:
        json.dump(document, f, indent=1)
        f.write("\n")


def require(document, key, path, kind, prefix=""):
    if not isinstance(document, dict) or key not in document:
        raise FileFormatError(path, prefix + key, "missing field")
    value = document[key]
    if not isinstance(value, kind) or isinstance(value, bool):
        raise FileFormatError(path, prefix + key, "expected {}, got {!r}".format(
            getattr(kind, "__name__", kind), value))
    return value


def load_state_set(path, zero_tol=ZERO_NORM_TOL):
    '''
    Read a state-set file:
        {"dimension": N, "states": [[[re, im], ...], ...]}
    States are scaled to unit norm; already-normalized states are kept verbatim.
    '''
    document = read_json(path)
    dimension = require(document, "dimension", path, int)
    if dimension < 1:
        raise FileFormatError(path, "dimension", "must be positive, got {}".format(dimension))
    states = require(document, "states", path, list)
    if not states:
        raise FileFormatError(path, "states", "needs at least one state")

    vectors = []
    for i, values in enumerate(states):
        field = "states[{}]".format(i)
        amplitudes = decode_vector(values, path, field, dimension)
        try:
            vectors.append(make_state(amplitudes, zero_tol))
        except ZeroVector as e:
            raise FileFormatError(path, field, str(e))

    logger = logging.getLogger(__name__)
    logger.debug("Loaded {} states of dimension {} from {}".format(len(vectors), dimension, path))
    return StateSet(vectors)


def save_state_set(state_set, path):
    write_json({
        "dimension": state_set.dim,
        "states": [encode_vector(s.amplitudes) for s in state_set],
    }, path)
