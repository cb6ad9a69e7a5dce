"""Exception types raised by the numerical routines."""


class ChernAtomError(Exception):
    """Base class for all package-specific errors."""


class DegenerateGapError(ChernAtomError):
    """Band gap closes somewhere on the grid (critical gap parameter)."""


class SingularKPointError(ChernAtomError):
    """Current matrix elements requested at a high-symmetry point where
    sin(kx a) = sin(ky a) = 0 and the closed forms are 0/0."""


class ConvergenceError(ChernAtomError):
    """Brillouin-zone quadrature did not pass its refinement self-check."""


class SurfaceModeResonanceError(ChernAtomError):
    """Reflection coefficients evaluated exactly on a surface-mode pole."""


class QuadratureToleranceError(ChernAtomError):
    """Adaptive quadrature exhausted its subdivision budget."""
