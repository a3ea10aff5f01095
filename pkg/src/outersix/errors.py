"""Shared exception types."""


class IntegrityError(RuntimeError):
    """A structural invariant that should hold by construction failed.

    Raised when a computation reaches a state the mathematics rules out,
    which means the code (not the input) is wrong.  Precondition violations
    raise ValueError instead.
    """
