"""Exception hierarchy.

CLI exit codes hang off these classes: ``InputError`` and its subclasses
map to 2, except ``AxiomError`` (input parses but fails an axiom) which
maps to 1 like ``PreconditionError`` (construction hypotheses not met,
failed verification of constructor input).
"""


class InputError(ValueError):
    pass


class ShapeError(InputError):
    pass


class DimensionError(InputError):
    pass


class FieldMismatchError(InputError):
    pass


class BoundExceeded(InputError):
    def __init__(self, required, bound):
        super().__init__(f"search space {required} exceeds bound {bound}")
        self.required = required
        self.bound = bound


class PreconditionError(Exception):
    """A gating hypothesis (abelian pi, cocommutativity, ...) does not hold."""


class VerificationError(PreconditionError):
    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class OneSidedInverseError(ArithmeticError):
    """A left convolution inverse was found that is not a right inverse."""


class AxiomError(InputError):
    """Constructor input fails a structural axiom it is required to satisfy."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
