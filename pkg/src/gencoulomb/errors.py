"""Exception types raised across the package.

Every error names the violated constraint or the failing numerical
condition, so callers (and the CLI) can report it without parsing
messages.
"""


class GenCoulombError(Exception):
    """Base class for all package errors."""


class InvalidParameter(GenCoulombError):
    """Non-finite or non-integral input where a finite/integer value is required."""


class NonPositiveC(GenCoulombError):
    """Scale parameter C must be > 0."""


class NegativeTheta(GenCoulombError):
    """Deformation parameter theta must be >= 0."""


class NonPositiveBeta(GenCoulombError):
    """Singularity parameter beta must be > 0; beta = 0 solutions are undefined."""


class NoConvergence(GenCoulombError):
    """An iteration (root finder, series, continued fraction) hit its cap."""


class PoleArgument(GenCoulombError):
    """Gamma-type function evaluated at a non-positive integer pole."""


class IntegerC(GenCoulombError):
    """Tricomi function with integer second parameter: connection formula degenerate."""


class SingularOrigin(GenCoulombError):
    """Potential evaluated at r = 0 for a configuration singular there."""


class ThetaZero(GenCoulombError):
    """Operation requires theta > 0 (oscillator-shifted quantities)."""


class UnsupportedConfiguration(GenCoulombError):
    """Operation defined only for a restricted (D, l, beta) configuration."""


class NonIntegerDimension(GenCoulombError):
    """Coulomb-oscillator dimension map produced a non-positive dimension."""


class NoBoundStates(GenCoulombError):
    """Bound states require q > 0."""


class NearPole(GenCoulombError):
    """Green's function evaluated too close to a discrete eigenvalue."""


class SingularTruncation(GenCoulombError):
    """Truncated J-matrix is singular at the requested energy."""


class GridTooCoarse(GenCoulombError):
    """Grid does not resolve the function; residual dominated by discretization."""


class ZeroMomentum(GenCoulombError):
    """Kinematic map undefined at k = 0."""


class NotConverged(GenCoulombError):
    """Eigenvalue solver failed to converge."""


class TooFewStatesFound(GenCoulombError):
    """Requested more bound states than the solver could bracket."""


class ToleranceNotMet(GenCoulombError):
    """Adaptive quadrature could not reach the requested tolerance."""


class MatchRadiusTooSmall(GenCoulombError):
    """1D scattering match radius leaves a unitarity defect above threshold."""


class ParseError(GenCoulombError):
    """Config file missing or malformed."""
