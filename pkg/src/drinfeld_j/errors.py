"""Exception hierarchy shared by every module of the package."""


class DrinfeldError(Exception):
    """Base class for all errors raised by drinfeld_j."""


class InputError(DrinfeldError):
    """Malformed or unsupported input (CLI exit code 2)."""


class NumericError(DrinfeldError):
    """Precision or numerical failure (CLI exit code 3)."""


class FieldMismatch(InputError):
    pass


class UnsupportedCharacteristic(InputError):
    pass


class SingularCurve(InputError):
    pass


class SplitInfinity(InputError):
    pass


class ZeroElement(InputError):
    pass


class ZeroIdeal(InputError):
    pass


class ZeroModulus(InputError):
    pass


class DomainMismatch(InputError):
    pass


class NonIntegralCoefficient(InputError):
    pass


class UnsupportedInfinitePlace(InputError):
    pass


class BasisTooShort(InputError):
    pass


class InsufficientCoefficients(InputError):
    pass


class PrecisionTooLow(NumericError):
    pass


class PrecisionLoss(NumericError):
    pass


class PrecisionUnreachable(NumericError):
    pass


class DenominatorVanishes(NumericError):
    pass


class RemainderNotZero(NumericError):
    pass


class InconsistentSeries(NumericError):
    pass


class BoundTooSmall(NumericError):
    pass
