class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class VerificationError(AssertionError):
    """A closed-form formula disagreed with the brute-force computation."""


class UnsupportedRender(ValueError):
    pass
