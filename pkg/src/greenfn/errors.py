"""Exception hierarchy shared across the package.

Two families matter for the command-line exit codes: problems with data
supplied by the user (bad files, out-of-range parameters) are
``ValidationFailure`` (exit code 1), while broken mathematical contracts
detected mid-computation (a Molien sum that is not a polynomial, a
singular diagonal block, a nonzero residual where theory demands zero)
are ``InvariantViolation`` (exit code 2).
"""


class GreenError(Exception):
    """Base class for all package errors."""


class ValidationFailure(GreenError):
    """User-supplied data or configuration failed validation."""


class InvariantViolation(GreenError):
    """A mathematical contract was violated during computation."""


class ParseError(ValidationFailure):
    """A data file could not be parsed against its schema."""


class ValidationError(ValidationFailure):
    """A datum violated one or more structural invariants.

    Carries the full list of violations so a bad file is reported in a
    single round trip.
    """

    def __init__(self, violations):
        if isinstance(violations, str):
            violations = [violations]
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class BoundExceeded(ValidationFailure):
    """A generator was asked for a size beyond its configured bound."""


class UnknownOrbit(ValidationFailure):
    """An orbit label does not occur in the Springer datum."""


class NotDivisible(InvariantViolation):
    """Exact polynomial division left a nonzero remainder."""


class NotPolynomial(InvariantViolation):
    """A rational function expected to be polynomial is not."""


class Singular(InvariantViolation):
    """A matrix expected to be invertible has zero determinant."""


class NegativeCoefficient(InvariantViolation):
    """A graded multiplicity of a genuine character came out negative."""


class SingularBlock(InvariantViolation):
    """A diagonal block of the elimination failed to invert."""


class InconsistentSupport(InvariantViolation):
    """A residual that must vanish at an incomparable orbit pair did not."""


class NonPolynomialEntry(InvariantViolation):
    """A solved matrix entry is not a Laurent polynomial."""
