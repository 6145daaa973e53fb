from __future__ import annotations


class CskError(Exception):
    """Base error for csk-calculus."""


class ConfigError(CskError):
    pass


class UsageError(CskError):
    pass


class DomainError(CskError):
    """A mathematical precondition failed."""


class ZeroConstantTermError(DomainError):
    pass


class NonzeroInnerConstantError(DomainError):
    pass


class NotInvertibleError(DomainError):
    pass


class NonUnitConstantError(DomainError):
    pass


class OrderMismatchError(DomainError):
    pass


class InsufficientOrderError(DomainError):
    pass


class InvalidSequenceError(DomainError):
    pass


class OracleCapExceededError(DomainError):
    pass


class ZeroDilationError(DomainError):
    pass


class ZeroMeanError(DomainError):
    pass


class ParameterOutOfRangeError(DomainError):
    pass


class NotCenteredError(DomainError):
    pass


class NotUnitVarianceError(DomainError):
    pass


class NotNormalizedError(DomainError):
    pass


class NonUnitS0Error(DomainError):
    pass


class InsufficientMomentsError(DomainError):
    pass


class InsufficientSequenceError(DomainError):
    pass


class ZeroLeadCoefficientError(DomainError):
    pass


class InconsistentPairError(DomainError):
    pass


class NotAMomentSequenceError(DomainError):
    pass


class ClosedFormMismatchError(DomainError):
    pass


class DemoCheckError(DomainError):
    def __init__(self, check: str, message: str | None = None) -> None:
        self.check = check
        super().__init__(message or f"demo check failed: {check}")
