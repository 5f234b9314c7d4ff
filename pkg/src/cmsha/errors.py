class CMError(Exception):
    """Base class for every error raised by this package."""


class UnsupportedCurve(CMError):
    pass


class BadD(CMError):
    pass


class ZeroModulus(CMError):
    pass


class UnitModulus(CMError):
    pass


class BadPrime(CMError):
    pass


class NotCoprime(CMError):
    pass


class EvenNormPrime(CMError):
    pass


class NotCoprimeToConductor(CMError):
    pass


class PoleAtLatticePoint(CMError):
    pass


class PrecisionExhausted(CMError):
    pass


class InsufficientPrecision(CMError):
    def __init__(self, msg, residual=None, precision_bits=None):
        super().__init__(msg)
        self.residual = residual
        self.precision_bits = precision_bits


class OrbitTooLarge(CMError):
    pass


class NonMonic(CMError):
    pass


class InsufficientSums(CMError):
    pass


class MainConjectureViolation(CMError):
    pass


class SignUncalibrated(CMError):
    pass


class SignMismatch(CMError):
    pass


class InsufficientCalibration(CMError):
    pass


class RangeExceeded(CMError):
    pass


class DivisibilityViolation(CMError):
    pass


class CharacterMismatch(CMError):
    pass


class PrecisionUnattainable(CMError):
    pass


class RecognitionFailed(CMError):
    pass


class GpolyFormatError(CMError):
    pass
