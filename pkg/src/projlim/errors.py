"""Exception hierarchy for projlim.

Every error raised on bad *input* (as opposed to a bug) derives from
:class:`ProjlimError`.  The CLI maps :class:`ParseError` to exit code 2 and
every other :class:`ProjlimError` to exit code 1.
"""

from __future__ import annotations


class ProjlimError(Exception):
    """Base class for all domain errors raised by this package."""


class ZeroScalar(ProjlimError):
    """An operation needed a nonzero Laurent scalar but got zero."""


class DivergentLimit(ProjlimError):
    """t -> 0 limit requested for a scalar with a pole at t = 0."""


class ExponentOverflow(ProjlimError):
    """A Laurent exponent left the supported machine-integer range."""


class ZeroMatrix(ProjlimError):
    """A projective matrix or point would be identically zero."""


class NotInvertible(ProjlimError):
    """A matrix that must be invertible is singular."""


class NotFactorable(ProjlimError):
    """Two factored sequences cannot be composed into factored form."""


class ParseError(ProjlimError):
    """Input text does not conform to the expression grammar."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class SignatureError(ProjlimError):
    """An orthogonal block signature is malformed."""


class NotClosed(ProjlimError):
    """A span is not closed under the matrix commutator."""


class NotSubalgebra(ProjlimError):
    """An index set does not select a subalgebra of a bracket table."""


class DimError(ProjlimError):
    """Dimension mismatch between bracket tables or linear maps."""


class DecompositionError(ProjlimError):
    """The centralizer + positive part failed to span a conjugacy limit."""


class EmbeddingError(ProjlimError):
    """A sequence does not respect a block embedding pgl_m -> pgl_M."""


class NoMatch(ProjlimError):
    """A subalgebra matches no permuted orthogonal block algebra."""


class TooLarge(ProjlimError):
    """Request exceeds the supported size bound for exact computation."""


class NotColumnOnly(ProjlimError):
    """A single-column Young diagram was required."""


class ShapeError(ProjlimError):
    """A coefficient array does not have the announced index shape."""
