"""Exception types shared across the package."""


class DomainError(ValueError):
    """Operands live in incompatible domains (e.g. different polynomial rings)."""


class ConstraintError(ValueError):
    """A family constructor received parameters violating one of its relations."""

    def __init__(self, relation: str, message: str = ""):
        self.relation = relation
        super().__init__(message or f"constraint violated: {relation}")


class SingularPointError(ValueError):
    """The series solver was asked to expand around a singular point."""


class VerificationError(AssertionError):
    """An identity that should hold exactly failed."""

    def __init__(self, name: str, report=None):
        self.name = name
        self.report = report
        super().__init__(f"verification failed: {name}")
