import numpy as np

from probclone.errors import DimensionMismatch, NotOrthonormal

from .orthonormal import ORTHO_TOL, orthonormality_residual


def unitarity_residual(unitary):
    """max(||U^dagger U - I||_F, ||U U^dagger - I||_F)"""
    unitary = np.asarray(unitary)
    identity = np.eye(unitary.shape[0])
    return max(
        float(np.linalg.norm(unitary.conj().T @ unitary - identity)),
        float(np.linalg.norm(unitary @ unitary.conj().T - identity)),
    )


def extend_to_basis(family, tol=ORTHO_TOL):
    '''
    Extend k orthonormal rows to an orthonormal basis of C^D by orthogonalizing
    the standard basis vectors, in index order, against the accumulated span.
    Candidates whose residual norm is at most `tol` are skipped.
    '''
    family = np.asarray(family, dtype=np.complex128)
    k, dim = family.shape
    basis = np.zeros((dim, dim), dtype=np.complex128)
    basis[:k] = family
    filled = k
    for index in range(dim):
        if filled == dim:
            break
        span = basis[:filled]
        candidate = -(span[:, index].conj() @ span)
        candidate[index] += 1.0
        if np.linalg.norm(candidate) <= tol:
            continue
        # second pass restores orthogonality lost to cancellation
        candidate = candidate - (span.conj() @ candidate) @ span
        basis[filled] = candidate / np.linalg.norm(candidate)
        filled += 1
    if filled != dim:
        raise NotOrthonormal("could only extend to {} of {} basis vectors".format(filled, dim))
    return basis


def complete_unitary(domain_ortho, range_ortho, tol=ORTHO_TOL):
    '''
    Unitary U with U domain_i = range_i, built as sum_j |range_j><domain_j| over
    both families extended to full bases and paired in order.

    Args:
        domain_ortho: k x D orthonormal rows
        range_ortho: k x D orthonormal rows
    '''
    domain = np.atleast_2d(np.asarray(domain_ortho, dtype=np.complex128))
    target = np.atleast_2d(np.asarray(range_ortho, dtype=np.complex128))
    if domain.shape != target.shape:
        raise DimensionMismatch("domain {} and range {} families differ in shape".format(
            domain.shape, target.shape))
    k, dim = domain.shape
    if k > dim:
        raise DimensionMismatch("{} vectors cannot be orthonormal in dimension {}".format(k, dim))
    for name, family in (("domain", domain), ("range", target)):
        residual = orthonormality_residual(family)
        if residual > tol:
            raise NotOrthonormal("{} family is off orthonormal by {:.3e}".format(name, residual))

    full_domain = extend_to_basis(domain, tol)
    full_range = extend_to_basis(target, tol)
    return full_range.T @ full_domain.conj()
