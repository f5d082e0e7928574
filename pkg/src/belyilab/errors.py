"""Error taxonomy shared across the library.

PreconditionError: the caller's input violates a documented precondition
(CLI exit status 1).  InternalError: a mathematical invariant that should
hold for every valid input failed, signalling a bug (CLI exit status 2).
"""


class PreconditionError(ValueError):
    pass


class InternalError(RuntimeError):
    pass
