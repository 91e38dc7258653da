"""Exception types shared across the engine."""


class MalformedInputError(ValueError):
    """Input violates a structural precondition (arity, homogeneity, ...)."""


class ZeroRingError(MalformedInputError):
    """The presented ring is zero (1 lies in the defining ideal)."""


class ZeroModuleError(MalformedInputError):
    """Operation undefined on the zero module (e.g. depth)."""


class InternalCheckError(RuntimeError):
    """Two independent computation routes disagreed; this is a bug, not bad input."""
