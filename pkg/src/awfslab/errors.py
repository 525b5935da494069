"""Exceptions for malformed inputs and internal contradictions.

Mathematical failures are never raised; they come back as report entries
with witnesses.  These exceptions mark shape errors, broken preconditions,
or situations that a theorem says cannot happen (implementation bugs).
"""


class AwfsError(Exception):
    pass


class ShapeMismatch(AwfsError):
    """Endpoints of morphisms do not line up."""


class InconsistentVerdicts(AwfsError):
    """Equivalent conditions were evaluated and disagreed: implementation bug."""


class TableNotNatural(AwfsError):
    """A lifting table violates naturality over its generator squares."""


class TableNotAlgebraic(AwfsError):
    """A natural lifting table fails the multiplication-coherence condition
    that characterises tables induced by algebras.  Carries the witness."""


class NoUniqueSolution(AwfsError):
    """A universal-property search found zero or several candidates."""

    def __init__(self, message, candidates=None):
        super().__init__(message)
        self.candidates = candidates or []


class NotRightConnected(AwfsError):
    """A double category fails the right-connectedness condition."""


class UniversalPropertyFailed(AwfsError):
    """A supplied free-object assignment fails its universal property."""


class ComparisonNotBijective(AwfsError):
    """Vertical arrows do not correspond bijectively to monad algebras."""


class UnsupportedClass(AwfsError):
    """Stable-class descriptor not supported."""


class BoundExceeded(AwfsError):
    """An enumeration would exceed the supplied bound."""
