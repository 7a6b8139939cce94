from typing import Any, Optional


class DyckError(Exception):
    """Root of every error raised by the library."""


# ----- paths -----
class PathError(DyckError, ValueError):
    pass


class BadChar(PathError):
    pass


class Unbalanced(PathError):
    pass


class DipsBelowGround(PathError):
    pass


class NotAnUpstep(PathError):
    pass


class NotPrimitive(PathError):
    pass


class ContainsDUU(PathError):
    pass


class NoDUU(PathError):
    pass


# ----- limits -----
class CapExceeded(DyckError):
    def __init__(self, n: int, cap: int, what: str = "size"):
        super().__init__(f"{what} {n} exceeds cap {cap} (raise it with --max-size)")
        self.n, self.cap = n, cap


class OutOfRange(DyckError, ValueError):
    pass


# ----- compositions / bit vectors -----
class CompositionError(DyckError, ValueError):
    pass


class BadComposition(CompositionError):
    pass


class NotAnOrbit(CompositionError):
    pass


class LengthMismatch(CompositionError):
    pass


# ----- LCO forests -----
class ForestError(DyckError, ValueError):
    pass


class InvalidBody(ForestError):
    pass


class BotWithUnitSkeleton(ForestError):
    pass


class InvalidForest(ForestError):
    def __init__(self, vertex_path: str, reason: str):
        super().__init__(f"{vertex_path}: {reason}")
        self.vertex_path = vertex_path
        self.reason = reason


# ----- series -----
class SeriesDomainError(DyckError, ArithmeticError):
    pass


# ----- verification -----
class VerificationError(DyckError):
    pass


class NonReturning(VerificationError):
    pass


class TheoremViolated(VerificationError):
    def __init__(self, message: str, report: Optional[Any] = None):
        super().__init__(message)
        self.report = report
