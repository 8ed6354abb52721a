import functools

import numpy as np

from probclone.errors import DimensionMismatch, ZeroVector

NORM_TOL = 1e-12
ZERO_NORM_TOL = 1e-14
# already-normalized input is kept verbatim so files round-trip bit-exactly
_VERBATIM_TOL = 4 * np.finfo(np.float64).eps


def _as_amplitudes(amplitudes):
    amplitudes = np.array(amplitudes, dtype=np.complex128)
    if amplitudes.ndim != 1 or amplitudes.size == 0:
        raise DimensionMismatch(
            "expected a non-empty 1-d amplitude list, got shape {}".format(amplitudes.shape))
    return amplitudes


class StateVector():
    """
    A normalized pure state of an N-dimensional system. The amplitude array is
    read-only; build new vectors instead of editing one in place.
    """

    def __init__(self, amplitudes):
        amplitudes = _as_amplitudes(amplitudes)
        norm = np.linalg.norm(amplitudes)
        if abs(norm - 1.0) > NORM_TOL:
            raise ValueError(
                "amplitudes have norm {!r}, use make_state to normalize".format(norm))
        amplitudes.flags.writeable = False
        self._amplitudes = amplitudes

    @property
    def amplitudes(self):
        return self._amplitudes

    @property
    def dim(self):
        return self._amplitudes.shape[0]

    def overlap(self, other):
        """<self|other>"""
        other = other.amplitudes if isinstance(other, StateVector) else np.asarray(other)
        if other.shape != self._amplitudes.shape:
            raise DimensionMismatch(
                "overlap of dimension {} with dimension {}".format(self.dim, other.shape[0]))
        return complex(np.vdot(self._amplitudes, other))

    def __len__(self):
        return self.dim

    def __repr__(self):
        s = self.__class__.__name__ + "("
        s += "dim={}, ".format(self.dim)
        s += "amplitudes={})".format(np.array2string(self._amplitudes, precision=4))
        return s


def make_state(amplitudes, zero_tol=ZERO_NORM_TOL):
    '''
    Build a StateVector from any nonzero amplitude list, scaling it to unit norm.

    Args:
        amplitudes: sequence of complex numbers
        zero_tol (float): vectors with a smaller norm are rejected

    Returns:
        StateVector
    '''
    amplitudes = _as_amplitudes(amplitudes)
    norm = np.linalg.norm(amplitudes)
    if norm < zero_tol:
        raise ZeroVector("cannot normalize a vector of norm {!r}".format(norm))
    if abs(norm - 1.0) > _VERBATIM_TOL:
        amplitudes = amplitudes / norm
    return StateVector(amplitudes)


def basis_state(dim, index):
    if not 0 <= index < dim:
        raise DimensionMismatch("basis index {} outside dimension {}".format(index, dim))
    amplitudes = np.zeros(dim, dtype=np.complex128)
    amplitudes[index] = 1.0
    return StateVector(amplitudes)


def tensor_power(state, k):
    """
    |state>^(x)k as a flat amplitude array; the first factor is the most
    significant index, so index = (i_1 * N + i_2) * N + ... + i_k.
    """
    if k < 1:
        raise ValueError("tensor power needs k >= 1, got {}".format(k))
    amplitudes = state.amplitudes if isinstance(state, StateVector) else np.asarray(state)
    return functools.reduce(np.kron, [amplitudes] * k)


class StateSet():
    """
    Ordered collection of states sharing one dimension. Holding more states
    than the dimension is allowed; such a set is simply dependent.
    """

    def __init__(self, states):
        states = tuple(s if isinstance(s, StateVector) else make_state(s) for s in states)
        if len(states) == 0:
            raise ValueError("a state set needs at least one state")
        dims = sorted({s.dim for s in states})
        if len(dims) > 1:
            raise DimensionMismatch("states of mixed dimensions {}".format(dims))
        self._states = states
        matrix = np.stack([s.amplitudes for s in states])
        matrix.flags.writeable = False
        self._matrix = matrix

    @property
    def states(self):
        return self._states

    @property
    def n(self):
        return len(self._states)

    @property
    def dim(self):
        return self._states[0].dim

    def amplitude_matrix(self):
        """n x N matrix whose row i holds the amplitudes of state i."""
        return self._matrix

    def index_of(self, state, tol=1e-10):
        """Index of the first member equal to `state` up to a global phase, else None."""
        if state.dim != self.dim:
            return None
        for i, member in enumerate(self._states):
            if 1.0 - abs(member.overlap(state)) ** 2 <= tol:
                return i
        return None

    def __len__(self):
        return self.n

    def __getitem__(self, index):
        return self._states[index]

    def __iter__(self):
        return iter(self._states)

    def __repr__(self):
        s = self.__class__.__name__ + "("
        s += "n={}, ".format(self.n)
        s += "dim={})".format(self.dim)
        return s
