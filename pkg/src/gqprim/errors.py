"""Exception types shared across the package."""


class GqprimError(Exception):
    """Base class for all package errors."""


class MalformedInputError(GqprimError):
    """Input data fails structural validation (bad permutation, bad file)."""


class BundleFormatError(MalformedInputError):
    """A bundle or geometry file violates the on-disk format."""


class NotASubgroupError(GqprimError):
    """Claimed subgroup generators do not lie in the ambient group."""


class NotAnAutomorphismError(GqprimError):
    """A group generator does not preserve the line set it is paired with."""


class ResourceLimitError(GqprimError):
    """A computation exceeds a configured size cap."""


class StageTimeoutError(GqprimError):
    """A pipeline stage exceeds its wall-clock budget."""


class RejectedCombinationError(GqprimError):
    """A suborbit combination is unusable (not closed under pairing)."""
