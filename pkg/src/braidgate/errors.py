"""Shared exception types.

The CLI maps these onto its exit-code contract: ``GuardError`` -> 3,
any other verification failure -> 1, usage problems -> 2.
"""


class GuardError(ValueError):
    """A size/scale guard was exceeded (strand count, word length, ...)."""


class SingularBracketError(ValueError):
    """The bracket representation is singular at the requested parameters
    (loop weight d vanishes, so U2 has no finite matrix)."""


class ZeroProbabilityError(ValueError):
    """A projective branch with probability zero has no residual state."""
