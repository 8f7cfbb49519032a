"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input lies outside an operation's documented domain."""


class ClassMismatchError(DomainError):
    """A partition does not belong to the required symplectic/orthogonal class."""


class NotSpecialError(DomainError):
    """Operation requires a special partition."""


class UnsupportedDefectError(DomainError):
    """Symbol operation only defined for defect 0 or 1."""


class HypothesisError(DomainError):
    """A sign vector fails the k-hypothesis required by the operation."""


class InternalCheckError(AssertionError):
    """A structural fact the library relies on failed to hold.

    Raised by internal cross-checks.  Signals an implementation bug,
    never a bad input.
    """


class CertificateError(RuntimeError):
    """A wavefront certificate verdict came out false."""

    def __init__(self, verdict: str, report):
        super().__init__(f"certificate verdict failed: {verdict}")
        self.verdict = verdict
        self.report = report
