"""Exception types. Each carries the CLI exit code it maps to."""


class MonomialxError(Exception):
    exit_code = 1


class InputError(MonomialxError, ValueError):
    """Bad user input: parse failures, mismatched n, empty ideals, ..."""
    exit_code = 4

    def __init__(self, msg, field=None):
        super().__init__(msg)
        self.field = field


class DimensionError(InputError):
    pass


class DegreeError(InputError):
    pass


class OrderError(InputError):
    pass


class EmptyIdealError(InputError):
    pass


class FaceError(InputError):
    pass


class StructureError(InputError):
    pass


class NotInIdealError(InputError):
    pass


class UnsupportedError(InputError):
    """Input outside the hypotheses of the theorem being applied."""


class OutOfScopeError(UnsupportedError):
    pass


class ClassificationError(MonomialxError):
    """Asked for something the classification says does not exist."""
    exit_code = 2


class StabilityError(ClassificationError):
    pass


class RegularityError(ClassificationError):
    pass


class ContainmentError(ClassificationError):
    pass


class BudgetError(MonomialxError):
    exit_code = 3


class InvariantViolation(MonomialxError, AssertionError):
    """A proven statement failed on actual data. Always a bug somewhere."""
    exit_code = 5
