"""Exception types shared across the package.

All errors raised for bad mathematical input derive from ValueError so
that callers who do not care about the fine distinctions can catch one
base class.  Internal-consistency failures (things that cannot happen on
valid input) derive from ArithmeticError instead, so they are never
silently swallowed by input validation.
"""


class NotCoprimeError(ValueError):
    """A modular inverse was requested for non-coprime arguments."""


class BadInputError(ValueError):
    """Arguments outside the documented domain of an operation."""


class ShapeNotRegularError(ValueError):
    """The resolution chain is not shape-regular, so the closed trace
    formula does not apply; retry with a larger base-change degree."""


class ModulusMismatchError(ValueError):
    """Mixed arithmetic between objects with different moduli."""


class NotPrimitiveError(ValueError):
    """A primitive root power was required but gcd(j, n) != 1."""


class NotIntegerError(ArithmeticError):
    """A quantity that must be an integer on valid input is not."""


class NegativeCoefficientError(ArithmeticError):
    """A character polynomial acquired a negative multiplicity."""


class WrongDegreeError(ArithmeticError):
    """A character polynomial has total mass different from the genus."""


class FitFailedError(RuntimeError):
    """The per-rank affine fit of character exponents did not validate."""


class DenominatorViolationError(ArithmeticError):
    """A computed jump has a denominator not dividing the predicted one."""


class ParseError(ValueError):
    """A graph file could not be parsed; message carries the line number."""


class GraphError(ValueError):
    """A structurally parseable graph violates a dual-graph invariant."""


class UnknownTypeError(KeyError):
    """An unknown fiber-type name was requested from the catalog."""
