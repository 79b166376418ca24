from __future__ import annotations

from typing import Any, Dict, List, Optional, TYPE_CHECKING

if TYPE_CHECKING:
    from parapy.framework.fock import State


class ParabosError(Exception):
    pass


class CapacityError(ParabosError):
    pass


class ParamsMismatchError(ParabosError):
    pass


class MixedDegreeError(ParabosError):
    pass


class ZeroStateError(ParabosError):
    pass


class IndexRangeError(ParabosError, IndexError):
    pass


class InvalidLabelError(ParabosError, ValueError):
    pass


class ParityError(ParabosError, ValueError):
    """An operator that only exists for one parity of p was requested for the other."""


class NonDominantWeightError(ParabosError, ValueError):
    pass


class NonexistenceError(ParabosError):
    pass


class ZeroVectorError(ParabosError):
    pass


class NonEigenvectorError(ParabosError):
    pass


class ExpressionParseError(ParabosError, ValueError):
    pass


class StateFileError(ParabosError, ValueError):
    pass


class TheoremViolationError(ParabosError):
    """Raised when an exact computation contradicts a structural statement.

    Always signals a bug in the implementation; never caught silently.
    """

    def __init__(self, message: str, payload: Optional[Dict[str, Any]] = None,
                 states: Optional[List[State]] = None) -> None:
        super().__init__(message)
        self.payload = payload if payload is not None else dict()
        self.states = states if states is not None else list()


class ConfigError(ParabosError, ValueError):
    pass


class EvaluationError(ParabosError):
    """A distributed evaluation returned without results for some degrees."""

    def __init__(self, message: str, missing: Optional[List[int]] = None) -> None:
        super().__init__(message)
        self.missing = missing if missing is not None else list()


class SuiteFailedError(ParabosError):
    pass
