class UnsupportedConfiguration(ValueError):
    """The ring or parameters cannot support the requested algorithm."""


class InterpolationFailure(RuntimeError):
    """A randomized algorithm detected that its output is inconsistent."""
