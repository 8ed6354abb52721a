from collections import namedtuple

import numpy as np

from probclone.errors import DimensionMismatch, GramMismatch, NearDependent, NotOrthonormal

ORTHO_TOL = 1e-10
GRAM_MATCH_TOL = 1e-9
# loss of orthogonality accepted before polar_orthonormalize cleans a family up
CONDITIONING_TOL = 1e-6

# ortho: k x D array whose rows are the orthonormal vectors.
# coeffs: upper-triangular k x k, gamma_j on the diagonal and <phi'_k|phi_j> above it.
OrthonormalizationResult = namedtuple("OrthonormalizationResult", ["ortho", "coeffs"])


def _as_rows(vectors):
    rows = np.array([np.asarray(v, dtype=np.complex128) for v in vectors])
    if rows.ndim != 2:
        raise DimensionMismatch("vectors must share one length")
    return rows


def orthonormality_residual(vectors):
    """Largest entry of |V V^dagger - I| over the rows of V."""
    rows = _as_rows(vectors)
    overlaps = rows.conj() @ rows.T
    return float(np.max(np.abs(overlaps - np.eye(rows.shape[0]))))


def gram_schmidt(vectors, tol=ORTHO_TOL):
    '''
    Classical Gram-Schmidt: each vector loses its projections onto the
    previously produced ones (coefficients taken against the original vector)
    and is scaled by the residual norm gamma_j.

    Returns:
        OrthonormalizationResult
    '''
    rows = _as_rows(vectors)
    k = rows.shape[0]
    ortho = np.zeros_like(rows)
    coeffs = np.zeros((k, k), dtype=np.complex128)
    for j in range(k):
        projections = ortho[:j].conj() @ rows[j]
        coeffs[:j, j] = projections
        residual = rows[j] - projections @ ortho[:j]
        gamma = float(np.linalg.norm(residual))
        if gamma <= tol:
            raise NearDependent(j + 1, gamma)
        coeffs[j, j] = gamma
        ortho[j] = residual / gamma
    return OrthonormalizationResult(ortho, coeffs)


def apply_coeffs(targets, coeffs, tol=GRAM_MATCH_TOL, ortho_tol=None):
    '''
    Rerun a stored Gram-Schmidt recursion on a second family whose inner
    products match the first one. The originals' Gram matrix is R^dagger R for
    the stored coefficient matrix R.

    Args:
        tol (float): allowed mismatch between the two Gram matrices
        ortho_tol (float): allowed orthonormality residual of the result,
            defaults to `tol`

    Returns:
        k x D array of orthonormal rows
    '''
    rows = _as_rows(targets)
    coeffs = np.asarray(coeffs, dtype=np.complex128)
    k = rows.shape[0]
    if coeffs.shape != (k, k):
        raise DimensionMismatch("{} targets for a {} coefficient matrix".format(k, coeffs.shape))

    expected = coeffs.conj().T @ coeffs
    actual = rows.conj() @ rows.T
    mismatch = float(np.max(np.abs(actual - expected)))
    if mismatch > tol:
        raise GramMismatch(
            "target inner products differ from the originals by {:.3e}".format(mismatch))

    ortho = np.zeros_like(rows)
    for j in range(k):
        residual = rows[j] - coeffs[:j, j] @ ortho[:j]
        ortho[j] = residual / coeffs[j, j]

    ortho_tol = tol if ortho_tol is None else ortho_tol
    residual = orthonormality_residual(ortho)
    if residual > ortho_tol:
        raise NotOrthonormal(
            "transported family is off orthonormal by {:.3e}".format(residual))
    return ortho


def polar_orthonormalize(vectors):
    '''
    Closest orthonormal family to `vectors` (k x D rows, k <= D) in the
    Frobenius norm: U Vh from the thin SVD. Classical Gram-Schmidt loses
    orthogonality like eps / gamma_min^2; this moves each row by about the
    orthonormality residual and leaves a family orthonormal to rounding.
    '''
    rows = _as_rows(vectors)
    u, _, vh = np.linalg.svd(rows, full_matrices=False)
    return u @ vh
