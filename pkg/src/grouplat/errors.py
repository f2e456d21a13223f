"""Typed errors shared across the library."""


class GroupError(Exception):
    """Base class for all errors raised by this library."""


class DegreeMismatch(GroupError):
    """A permutation acts on the wrong number of points."""


class OrderCapExceeded(GroupError):
    """A group construction grew past the configured maximum order."""


class SubgroupCapExceeded(GroupError):
    """Subgroup enumeration found more subgroups than the configured cap."""


class SearchCapExceeded(GroupError):
    """An isomorphism search was requested above the configured cap."""


class ForeignSubgroup(GroupError):
    """A subgroup argument does not belong to the group it is used with."""


class ParentMismatch(GroupError):
    """Two subgroups of different parent groups were combined."""


class NotNormal(GroupError):
    """A subgroup required to be normal is not conjugation-invariant."""


class NotContained(GroupError):
    """A containment precondition between subgroups does not hold."""


class InvalidAction(GroupError):
    """A semidirect-product action map is not a homomorphism into Aut(N)."""


class UnknownClass(GroupError):
    """An unregistered group-class identifier was requested."""


class UnsupportedFormat(GroupError):
    """An export format is not valid for the requested document."""


class ParseError(GroupError):
    """A group file could not be parsed."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")
