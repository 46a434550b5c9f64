class InputError(ValueError):
    """Bad input: out-of-range index, malformed triple, wrong shape."""


class InternalError(RuntimeError):
    """An invariant that valid inputs guarantee was violated."""
