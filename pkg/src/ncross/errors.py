"""Exception taxonomy shared by all modules.

Degenerate configurations (a required inverse does not exist) raise
subclasses of :class:`UndefinedExpression`; randomized suites catch and
count those.  Numerical-breakdown errors signal that two algebraically
equal evaluation routes disagreed far beyond tolerance, which points at
conditioning problems rather than at a degenerate input.
"""


class NCError(Exception):
    pass


class UndefinedExpression(NCError):
    """The expression is not defined for these inputs."""


class NotInvertible(UndefinedExpression):
    """A required element has no (numerically trustworthy) inverse."""


class SubmatrixNotInvertible(UndefinedExpression):
    """The quasideterminant's complementary submatrix is singular."""


class DegeneratePair(UndefinedExpression):
    """Two points fail the generic-position requirement."""


class CollinearFrame(UndefinedExpression):
    """Barycentric frame points are collinear."""


class DimensionMismatch(NCError):
    pass


class ResampleLimitExceeded(NCError):
    pass


class NumericalBreakdown(NCError):
    """Two evaluation routes of equal expressions disagree badly."""


class RowFormMismatch(NumericalBreakdown):
    pass


class SymmetryViolation(NumericalBreakdown):
    pass


class PairMismatch(NumericalBreakdown):
    pass


class ConsecutiveCoincidence(UndefinedExpression):
    """Cyclically consecutive points of a pentad coincide."""


class PointsTooClose(UndefinedExpression):
    """Sample points too close for a stable difference quotient."""


class NonPositiveKappa(NCError):
    """A conformal factor must stay positive along the segment."""


class QuadratureFailure(NCError):
    """Numerical integration did not reach the requested accuracy."""


class UnknownSuite(NCError):
    pass


class UnsupportedRingForSuite(NCError):
    pass
