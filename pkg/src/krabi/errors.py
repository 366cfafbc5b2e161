"""Exception types shared across the package."""


class ShapeError(ValueError):
    """Operands have incompatible or otherwise invalid dimensions."""


class HermiticityError(ValueError):
    """A matrix required to be Hermitian is not, within tolerance."""


class SolutionError(ValueError):
    """A candidate operator failed verification where a verified solution is required."""


class EigenSolverError(RuntimeError):
    """The eigensolver did not converge. Signals a bug, not a user error."""
