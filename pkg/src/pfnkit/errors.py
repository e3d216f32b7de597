"""Exception types raised by pfnkit."""


class PfnError(ValueError):
    """Base class for all validation errors raised by this package."""


class ComponentOutOfRange(PfnError):
    """A membership degree lies outside [0, 1] beyond tolerance."""


class SumExceedsOne(PfnError):
    """mu + eta + nu exceeds 1 beyond tolerance."""


class ParamOutOfDomain(PfnError):
    """A t-norm family parameter lies outside the family's domain."""


class InputOutOfRange(PfnError):
    """A generator argument lies outside [0, 1] beyond tolerance."""


class NegativeGeneratorValue(PfnError):
    """A generator inverse was asked for a negative value."""


class NonPositiveScalar(PfnError):
    """A scalar multiplier or exponent was not strictly positive."""


class NonIntegerLambda(PfnError):
    """An operator restricted to natural-number exponents got a non-integer."""


class DegenerateComponent(PfnError):
    """A legacy formula hit a 0/0-indeterminate component value."""


class EmptyInput(PfnError):
    """An aggregation was called with no operands."""


class LengthMismatch(PfnError):
    """Operand and weight sequences have different lengths."""


class WeightError(PfnError):
    """A weight vector violates w_j in (0, 1] or sum(w) = 1."""


class UnsupportedFamily(PfnError):
    """The requested operation has no closed form for this family."""


class UnknownOperator(PfnError):
    """No legacy operator is registered under the given identifier."""


class InternalConsistencyError(RuntimeError):
    """An operation that is provably closed produced an invalid triple.

    This signals a bug in the library, not bad user input, and is
    deliberately not a PfnError.
    """
