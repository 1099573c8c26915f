"""Exception hierarchy for the gradedlie package.

Errors fall into three groups, mirrored by the CLI exit codes:

  * usage errors (bad flags, bad combinations of type/rank/twist) -> exit 1
  * data errors (registry contents, validation failures)          -> exit 2
  * internal invariant breaches (these always indicate a bug)     -> exit 3
"""


class GradedLieError(Exception):
    """Base class for all package errors."""


class UsageError(GradedLieError):
    """Invalid input supplied by the caller."""


class InvalidType(UsageError):
    """Unknown Dynkin series or rank out of range."""


class InvalidTwist(UsageError):
    """The requested twist order is not admissible for the type."""


class DataError(GradedLieError):
    """Bad registry contents or failed validation."""


class SchemaError(DataError):
    """Registry JSON does not match the expected schema."""


class DuplicateDatum(DataError):
    """Two registry entries describe the same Levi type."""


class TypeMismatch(DataError):
    """A registry entry's Levi type does not match the subspace."""


class OddGrading(DataError):
    """A weighted-diagram grading pairs a root to an odd integer."""


class NoCuspidalDatum(DataError):
    """No validated datum is available for the requested subspace."""


class NotNilpotent(DataError):
    """An element expected to be nilpotent is not."""


class GenericityFailure(DataError):
    """No candidate representative passed the rank certificate."""


class NotConjugate(DataError):
    """Two facets lie in different affine Weyl orbits."""


class EmptyFace(DataError):
    """The requested wall subset cuts out no face of the alcove."""


class LabelNotInSpiral(DataError):
    """The requested label is absent from the given spiral degree."""


class ZeroDimensional(DataError):
    """The operation needs a positive-dimensional subspace."""


class GroupTooLarge(DataError):
    """Group enumeration exceeded its configured bound."""


class InternalError(GradedLieError):
    """An invariant that should hold unconditionally was breached."""


class OrderMismatch(InternalError):
    """Coxeter order formula disagrees with the direct computation."""


class IntegralityFailure(InternalError):
    """The grading element paired non-integrally with a root."""


class DivisionFailure(InternalError):
    """An exact polynomial division left a remainder."""
