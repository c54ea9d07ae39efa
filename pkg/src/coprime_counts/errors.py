class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class LimitError(RuntimeError):
    """A configured size limit would be exceeded."""


class SieveLimitError(LimitError):
    """A Mobius value beyond the table's limit was requested."""


class EnumerationLimitError(LimitError):
    """Subset enumeration was requested for a set larger than allowed."""
