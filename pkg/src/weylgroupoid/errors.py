class WeylGroupoidError(ValueError):
    """Base class for domain errors raised by this package."""


class InvalidRootSet(WeylGroupoidError):
    pass


class NotCartanObject(WeylGroupoidError):
    pass


class NotFinite(WeylGroupoidError):
    pass


class RestrictionError(WeylGroupoidError):
    pass


class AutomorphismError(WeylGroupoidError):
    pass


class BraidingError(WeylGroupoidError):
    pass
