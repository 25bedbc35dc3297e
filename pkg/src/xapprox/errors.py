"""Exception types raised by the library."""


class XapproxError(Exception):
    """Base class for all library-specific errors."""


class InvalidSigma(XapproxError, ValueError):
    """Power-measure exponent outside (0, 2) or equal to 1."""


class InvalidPointMass(XapproxError, ValueError):
    """Point-mass list empty, non-increasing, or with bad lambda/weight."""


class NonFiniteOffset(XapproxError, ValueError):
    """Dilation offset f_mu(1/delta) is not finite."""


class QuadratureNonConvergence(XapproxError, ArithmeticError):
    """Adaptive quadrature failed to meet tolerance within its budget."""


class SeriesNonConvergence(XapproxError, ArithmeticError):
    """Cardinal series failed to stagnate below tolerance within max_pairs."""


class DivergentAtZero(XapproxError, ValueError):
    """Periodized target is +infinity at x = 0 (mod 1) for this measure."""


class UnknownCheckName(XapproxError, KeyError):
    """Certification check name not present in the registry."""

    def __str__(self):
        # KeyError's __str__ would repr() the message and add quotes
        return str(self.args[0]) if self.args else ""
