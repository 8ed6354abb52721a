import logging
from collections import namedtuple

import numpy as np

from probclone.errors import DependentSet, DimensionMismatch, Infeasible
from probclone.structures.gram import GramMatrix, INDEPENDENCE_TOL, is_orthonormal

PSD_TOL = 1e-10
BISECT_TOL = 1e-10

FeasibilityCheck = namedtuple("FeasibilityCheck", ["feasible", "min_eigenvalue"])

FeasibilityReport = namedtuple(
    "FeasibilityReport",
    ["eta_star", "copies", "min_eigenvalue_at_eta", "method", "independent"],
)


class ConstantsMatrix():
    """
    The superposition constants C of the failure branch, chosen as the
    Hermitian PSD square root of X^(1) - eta * X^(m), so C C^dagger = X^(1) - eta * X^(m).
    """

    def __init__(self, entries, eta):
        entries = np.array(entries, dtype=np.complex128)
        entries.flags.writeable = False
        self.entries = entries
        self.eta = float(eta)

    @property
    def n(self):
        return self.entries.shape[0]

    def factor_residual(self, x1, xm):
        """Frobenius norm of C C^dagger - (X^(1) - eta * X^(m))."""
        target = feasibility_matrix(x1, xm, self.eta)
        return float(np.linalg.norm(self.entries @ self.entries.conj().T - target))

    def __repr__(self):
        s = self.__class__.__name__ + "("
        s += "n={}, ".format(self.n)
        s += "eta={})".format(self.eta)
        return s


def _entries(matrix):
    return matrix.entries if isinstance(matrix, GramMatrix) else np.asarray(matrix)


def _check_eta(eta):
    if not 0.0 <= eta <= 1.0:
        raise ValueError("efficiency must lie in [0, 1], got {}".format(eta))


def feasibility_matrix(x1, xm, eta):
    """X^(1) - eta * X^(m); Hermitian exactly when both inputs are."""
    a, b = _entries(x1), _entries(xm)
    if a.shape != b.shape:
        raise DimensionMismatch("Gram matrices of orders {} and {}".format(a.shape, b.shape))
    return a - eta * b


def is_feasible(x1, xm, eta, tol=PSD_TOL):
    '''
    A constants matrix C with X^(1) = eta * X^(m) + C C^dagger exists iff
    X^(1) - eta * X^(m) is positive semidefinite.

    Returns:
        FeasibilityCheck(feasible, min_eigenvalue)
    '''
    _check_eta(eta)
    min_eigenvalue = float(np.linalg.eigvalsh(feasibility_matrix(x1, xm, eta))[0])
    return FeasibilityCheck(min_eigenvalue >= -tol, min_eigenvalue)


def _copies(xm):
    return xm.power if isinstance(xm, GramMatrix) else None


def _dependent_report(x1, xm, method):
    return FeasibilityReport(0.0, _copies(xm), float(np.linalg.eigvalsh(_entries(x1))[0]),
                             method, False)


def max_efficiency_eigen(x1, xm, tol=INDEPENDENCE_TOL, strict=False):
    '''
    eta* = min(1, 1 / lambda_max(W)) with W = X1^(-1/2) Xm X1^(-1/2), the exact
    supremum of the feasible efficiencies.

    Args:
        strict (bool): raise DependentSet instead of reporting eta* = 0
    '''
    a, b = _entries(x1), _entries(xm)
    if a.shape != b.shape:
        raise DimensionMismatch("Gram matrices of orders {} and {}".format(a.shape, b.shape))
    n = a.shape[0]
    if n == 1:
        return FeasibilityReport(1.0, _copies(xm), float(np.real(a[0, 0] - b[0, 0])),
                                 "eigen", True)

    eigenvalues, eigenvectors = np.linalg.eigh(a)
    if eigenvalues[0] <= tol:
        if strict:
            raise DependentSet(float(eigenvalues[0]))
        return _dependent_report(x1, xm, "eigen")

    inv_sqrt = (eigenvectors / np.sqrt(eigenvalues)) @ eigenvectors.conj().T
    whitened = inv_sqrt @ b @ inv_sqrt
    whitened = (whitened + whitened.conj().T) / 2
    lambda_max = float(np.linalg.eigvalsh(whitened)[-1])
    eta_star = 1.0 if lambda_max <= 1.0 else 1.0 / lambda_max

    min_eigenvalue = float(np.linalg.eigvalsh(feasibility_matrix(a, b, eta_star))[0])
    return FeasibilityReport(eta_star, _copies(xm), min_eigenvalue, "eigen", True)


def max_efficiency_bisect(x1, xm, tol=BISECT_TOL, psd_tol=PSD_TOL,
                          independence_tol=INDEPENDENCE_TOL):
    '''
    Largest feasible efficiency found by bisection on [0, 1] against is_feasible.
    Serves as an independent oracle for max_efficiency_eigen.
    '''
    a, b = _entries(x1), _entries(xm)
    if a.shape != b.shape:
        raise DimensionMismatch("Gram matrices of orders {} and {}".format(a.shape, b.shape))
    if a.shape[0] > 1 and np.linalg.eigvalsh(a)[0] <= independence_tol:
        return _dependent_report(x1, xm, "bisection")

    check = is_feasible(a, b, 1.0, psd_tol)
    if check.feasible:
        return FeasibilityReport(1.0, _copies(xm), check.min_eigenvalue, "bisection", True)

    lo, hi = 0.0, 1.0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if is_feasible(a, b, mid, psd_tol).feasible:
            lo = mid
        else:
            hi = mid
    min_eigenvalue = is_feasible(a, b, lo, psd_tol).min_eigenvalue
    return FeasibilityReport(lo, _copies(xm), min_eigenvalue, "bisection", True)


def constants_matrix(x1, xm, eta, tol=PSD_TOL):
    '''
    Hermitian PSD square root of M = X^(1) - eta * X^(m), from M = U diag(m) U^dagger
    as C = U diag(sqrt(m)) U^dagger. Eigenvalues in [-tol, 0) are clamped to zero.
    '''
    _check_eta(eta)
    target = feasibility_matrix(x1, xm, eta)
    eigenvalues, eigenvectors = np.linalg.eigh(target)
    if eigenvalues[0] < -tol:
        raise Infeasible(eta, float(eigenvalues[0]))
    roots = np.sqrt(np.clip(eigenvalues, 0.0, None))
    entries = (eigenvectors * roots) @ eigenvectors.conj().T
    entries = (entries + entries.conj().T) / 2

    logger = logging.getLogger(__name__)
    logger.debug("constants matrix at eta={}: eigenvalues {}".format(eta, eigenvalues))
    return ConstantsMatrix(entries, eta)


def boundary_diagnosis(state_set, report, tol=INDEPENDENCE_TOL):
    """One-line reading of an efficiency report against the eta = 1 boundary."""
    if not report.independent:
        return "dependent: X1 is only semi-definite, no positive efficiency exists"
    if is_orthonormal(state_set, tol):
        return "orthonormal: X1 = Xm, so eta* = 1"
    if state_set.n == 1:
        return "single state: eta* = 1"
    return "non-orthogonal: eta* < 1"
