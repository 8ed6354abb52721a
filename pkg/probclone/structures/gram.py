from collections import namedtuple

import numpy as np

from probclone.errors import DimensionMismatch

INDEPENDENCE_TOL = 1e-10

IndependenceCheck = namedtuple(
    "IndependenceCheck", ["independent", "min_eigenvalue", "null_vector"])


class GramMatrix():
    """
    X^(k) of a state set: entry (i, j) is <psi_i|psi_j>^k. Built from the upper
    triangle and mirrored, so it is exactly Hermitian with a unit diagonal.
    """

    def __init__(self, entries, power):
        entries = np.array(entries, dtype=np.complex128)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
            raise DimensionMismatch("Gram matrix must be square, got {}".format(entries.shape))
        entries.flags.writeable = False
        self.entries = entries
        self.power = int(power)

    @property
    def n(self):
        return self.entries.shape[0]

    def eigenvalues(self):
        return np.linalg.eigvalsh(self.entries)

    @property
    def min_eigenvalue(self):
        return float(self.eigenvalues()[0])

    def __repr__(self):
        s = self.__class__.__name__ + "("
        s += "n={}, ".format(self.n)
        s += "power={})".format(self.power)
        return s


def gram(state_set, power=1):
    if int(power) != power or power < 1:
        raise ValueError("Gram power must be a positive integer, got {}".format(power))
    power = int(power)
    amplitudes = state_set.amplitude_matrix()
    overlaps = amplitudes.conj() @ amplitudes.T

    n = state_set.n
    entries = np.empty((n, n), dtype=np.complex128)
    rows, cols = np.triu_indices(n, k=1)
    upper = overlaps[rows, cols] ** power
    entries[rows, cols] = upper
    entries[cols, rows] = upper.conj()
    np.fill_diagonal(entries, 1.0)
    return GramMatrix(entries, power)


def is_linearly_independent(state_set, tol=INDEPENDENCE_TOL):
    '''
    Decide independence from the spectrum of X^(1).

    Returns:
        IndependenceCheck: `independent` is True iff the minimum eigenvalue exceeds
        `tol`; `null_vector` is the matching unit eigenvector b, for which
        sum_i b_i |psi_i> is (nearly) zero when the set is dependent.
    '''
    if tol <= 0:
        raise ValueError("independence tolerance must be positive")
    eigenvalues, eigenvectors = np.linalg.eigh(gram(state_set, 1).entries)
    min_eigenvalue = float(eigenvalues[0])
    return IndependenceCheck(min_eigenvalue > tol, min_eigenvalue, eigenvectors[:, 0])


def superposition(state_set, coeffs):
    """sum_i b_i |psi_i> as an unnormalized amplitude array."""
    coeffs = np.asarray(coeffs, dtype=np.complex128)
    if coeffs.shape != (state_set.n,):
        raise DimensionMismatch("expected {} coefficients, got {}".format(
            state_set.n, coeffs.shape))
    return coeffs @ state_set.amplitude_matrix()


def quadratic_form(state_set, coeffs):
    """b^dagger X^(1) b, which equals the squared norm of superposition(state_set, b)."""
    coeffs = np.asarray(coeffs, dtype=np.complex128)
    if coeffs.shape != (state_set.n,):
        raise DimensionMismatch("expected {} coefficients, got {}".format(
            state_set.n, coeffs.shape))
    return float(np.real(np.vdot(coeffs, gram(state_set, 1).entries @ coeffs)))


def is_orthonormal(state_set, tol=INDEPENDENCE_TOL):
    x1 = gram(state_set, 1).entries
    return bool(np.max(np.abs(x1 - np.eye(state_set.n))) <= tol)
