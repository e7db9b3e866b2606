"""Exception types shared across the toolkit."""


class InvalidPartition(ValueError):
    """A sequence does not define a partition, or an operation needs a non-empty one."""


class BadSequence(ValueError):
    """A sorted sequence fed to the pairing rule has the wrong shape."""


class DomainError(ValueError):
    """An input lies outside the mathematical domain of an operation."""


class InvalidDiagram(ValueError):
    """A weighted Dynkin diagram carries labels outside {0, 1, 2}."""


class DataError(ValueError):
    """The bundled exceptional-orbit data is missing, malformed, or inconsistent."""
