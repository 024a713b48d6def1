"""
Error types
Every failure the library can signal, with the CLI exit code it maps to
"""

EXIT_OK = 0
EXIT_FAILED_CLAIM = 1
EXIT_BAD_FIELD = 2
EXIT_OUT_OF_DOMAIN = 3
EXIT_UNWRITABLE = 4


class ShunyaError(Exception):
    exit_code = EXIT_FAILED_CLAIM


# ==== Fields ====
class InvalidFieldString(ShunyaError, ValueError):
    exit_code = EXIT_BAD_FIELD


class NonPrimeCharacteristic(ShunyaError, ValueError):
    exit_code = EXIT_BAD_FIELD


class ReducibleModulus(ShunyaError, ValueError):
    exit_code = EXIT_BAD_FIELD


class UnsupportedOrder(ShunyaError, ValueError):
    exit_code = EXIT_BAD_FIELD


class DivisionByZero(ShunyaError, ZeroDivisionError):
    pass


# ==== Classification ====
class NotIdempotent(ShunyaError, ValueError):
    pass


class NotNilpotent(ShunyaError, ValueError):
    pass


class NotZeroDivisor(ShunyaError, ValueError):
    pass


# ==== Graphs ====
class EmptySubgraph(ShunyaError, ValueError):
    exit_code = EXIT_OUT_OF_DOMAIN


class SizeMismatch(ShunyaError, ValueError):
    pass


class OverlappingFamilies(ShunyaError, ValueError):
    pass


# ==== Linear algebra ====
class DimensionTooLarge(ShunyaError, ValueError):
    pass


class ReduciblePolynomial(ShunyaError, ValueError):
    pass


class NonSymmetric(ShunyaError, ValueError):
    pass


class UnresolvedFactor(ShunyaError, ArithmeticError):
    pass


# ==== Spectra ====
class NotRegular(ShunyaError, ValueError):
    pass


class OutOfDomain(ShunyaError, ValueError):
    exit_code = EXIT_OUT_OF_DOMAIN


class IndexOutOfRange(ShunyaError, IndexError):
    pass


def error_result(exc):
    """Handler-shaped failure dict"""
    return {"error": str(exc), "error_type": type(exc).__name__, "exit_code": getattr(exc, "exit_code", EXIT_FAILED_CLAIM)}
