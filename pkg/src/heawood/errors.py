class ParameterError(ValueError):
    """Invalid parameters or a violated precondition."""


class NotFound(LookupError):
    """A search (e.g. for colliding vertices) came up empty."""
