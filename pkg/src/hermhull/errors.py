"""Exception hierarchy.

Two families matter to callers: :class:`HypothesisFails` (a construction's
precondition or certificate does not hold; the CLI exits with status 2) and
:class:`BudgetExceeded` (an exact computation ran out of its enumeration
budget; exit status 3).
"""

from __future__ import annotations


class HermHullError(ValueError):
    """Base class for all errors raised by this package."""


class HypothesisFails(HermHullError):
    """A construction hypothesis or a verification certificate failed."""


class BudgetExceeded(HermHullError):
    """An exact search could not finish within its enumeration budget."""


# -- field tower ------------------------------------------------------------


class NonPrime(HermHullError):
    pass


class SizeExceeded(HermHullError):
    pass


class NotInSubfield(HypothesisFails):
    """Element is not in GF(q), so it is not a norm from GF(q^2)."""

    def __init__(self, msg: str, index: int | None = None) -> None:
        super().__init__(msg)
        self.index = index


# -- codes ------------------------------------------------------------------


class NotSelfOrthogonal(HypothesisFails):
    pass


class EllOutOfRange(HypothesisFails):
    pass


class NoNormDefect(HypothesisFails):
    """No scalar with norm different from 1 exists (only happens for q = 2)."""


class ZeroScalar(HermHullError):
    def __init__(self, index: int) -> None:
        super().__init__(f"scaling vector has a zero entry at coordinate {index}")
        self.index = index


class NotSystematic(HypothesisFails):
    pass


class SOutOfRange(HypothesisFails):
    pass


# -- evaluation sets / embeddings --------------------------------------------


class DoesNotDivide(HypothesisFails):
    pass


class BadDivisibility(HypothesisFails):
    pass


class NormConditionFails(HypothesisFails):
    pass


class KTooLarge(HypothesisFails):
    pass


class NormUnsolvable(HypothesisFails):
    def __init__(self, msg: str, r: int) -> None:
        super().__init__(msg)
        self.r = r


class NotEnoughZeroLambdas(HypothesisFails):
    pass


# -- curves / quantum --------------------------------------------------------


class GenusRange(HypothesisFails):
    pass


class DimensionDrop(HypothesisFails):
    pass


class BoundViolated(HermHullError):
    """An exact distance violates the quantum Singleton bound (upstream bug)."""
