"""Exception types shared across the package.

Every exception derives from ValueError so callers that do not care about
the precise failure mode can catch invalid input uniformly.
"""


class NonNegativeCoefficient(ValueError):
    """A negative continued fraction expansion was requested for r >= 0."""


class ZeroCoefficient(ValueError):
    """Contact 0-surgery has no (+1)/(-1) replacement."""


class ConditionViolation(ValueError):
    """Input violates an admissibility condition (range, parity, or shape)."""


class SearchExhausted(RuntimeError):
    """A bounded search ran out of candidates before finding a witness."""


class DegenerateLattice(ValueError):
    """The requested lattice has a degenerate intersection form."""


class NotNegativeDefinite(ValueError):
    """Embedding search requires a negative definite Gram matrix."""


class NoValidD(ValueError):
    """No integer d satisfies d(d+1) <= 2g <= d(d+2)-1 for this genus."""
