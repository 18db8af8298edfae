"""Exception hierarchy shared by every module."""

from __future__ import annotations


class SoftSetError(ValueError):
    """Base class for all validation failures."""


class UnknownParameter(SoftSetError):
    pass


class UnknownObject(SoftSetError):
    pass


class CentralNotSubsetOfE(SoftSetError):
    pass


class ContextMismatch(SoftSetError):
    pass


class TargetNotSubsetOfCentral(SoftSetError):
    pass


class CoverageViolation(SoftSetError):
    pass


class DuplicateName(SoftSetError):
    pass


class UnknownName(SoftSetError):
    """A workspace reference names no set."""


class DocumentSyntaxError(SoftSetError):
    """The workspace document is not well formed."""


class TooLargeForOracle(SoftSetError):
    pass


class EnumerationTooLarge(SoftSetError):
    pass


class UnknownLaw(SoftSetError):
    pass


class NoUpperBound(SoftSetError):
    pass
