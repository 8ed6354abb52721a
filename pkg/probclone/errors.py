class ProbCloneError(Exception):
    """Base class for every error raised by probclone."""


class ZeroVector(ProbCloneError, ValueError):
    pass


class DimensionMismatch(ProbCloneError, ValueError):
    pass


class DependentSet(ProbCloneError, ValueError):
    def __init__(self, min_eigenvalue, message=None):
        self.min_eigenvalue = min_eigenvalue
        if message is None:
            message = "state set is linearly dependent (min Gram eigenvalue {:.3e})".format(
                min_eigenvalue)
        super(DependentSet, self).__init__(message)


class Infeasible(ProbCloneError, ValueError):
    def __init__(self, eta, min_eigenvalue):
        self.eta = eta
        self.min_eigenvalue = min_eigenvalue
        super(Infeasible, self).__init__(
            "efficiency {} is infeasible: X1 - eta*Xm has min eigenvalue {:.3e}".format(
                eta, min_eigenvalue))


class NearDependent(ProbCloneError, ValueError):
    def __init__(self, step, residual):
        # step is 1-based
        self.step = step
        self.residual = residual
        super(NearDependent, self).__init__(
            "vector {} is dependent on its predecessors (residual norm {:.3e})".format(
                step, residual))


class GramMismatch(ProbCloneError, ValueError):
    pass


class NotOrthonormal(ProbCloneError, ValueError):
    pass


class IllConditioned(ProbCloneError, ArithmeticError):
    """A machine was built but misses its evolution tolerance in floating point."""

    def __init__(self, residual, tol):
        self.residual = residual
        self.tol = tol
        super(IllConditioned, self).__init__(
            "machine evolution residual {:.3e} exceeds {:.1e}; the state set is too close "
            "to dependent for double precision".format(residual, tol))


class IndexOutOfRange(ProbCloneError, IndexError):
    pass


class FileFormatError(ProbCloneError, ValueError):
    def __init__(self, path, field, message):
        self.path = path
        self.field = field
        super(FileFormatError, self).__init__("{}: {}: {}".format(path, field, message))
