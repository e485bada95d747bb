"""Exception types raised across the package."""


class SlopevarError(Exception):
    """Base class for all errors raised by slopevar."""


class DisconnectedInput(SlopevarError, ValueError):
    pass


class NotPseudocircuit(SlopevarError, ValueError):
    pass


class NotSpanningTree(SlopevarError, ValueError):
    pass


class ConstantValence(SlopevarError, ValueError):
    pass


class NonSquare(SlopevarError, ValueError):
    pass


class InexactDivision(SlopevarError, ArithmeticError):
    """A leading coefficient does not divide the term being reduced."""


class NotAFacet(SlopevarError, ValueError):
    pass


class ScaleLimit(SlopevarError, ValueError):
    """Requested size is beyond what an exhaustive method supports."""


class ElementPresent(SlopevarError, ValueError):
    pass


class NotProper(SlopevarError, ValueError):
    pass


class OutOfRange(SlopevarError, ValueError):
    pass


class DifferentComplex(SlopevarError, ValueError):
    pass


class LabelClash(SlopevarError, ValueError):
    pass


class OrderViolation(SlopevarError, ValueError):
    pass


class VerificationFailure(SlopevarError):
    """A computational check of a claimed identity or property failed.

    ``witness`` carries whatever is needed to reproduce the failure.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class ShellingViolation(VerificationFailure):
    pass


class IdentityViolation(VerificationFailure):
    pass


class ReductionFailure(VerificationFailure):
    pass


class MethodDisagreement(VerificationFailure):
    pass


class CompletionBudgetExceeded(SlopevarError):
    pass
