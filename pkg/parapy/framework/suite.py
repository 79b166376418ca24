from __future__ import annotations

import abc
import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence, Type, TYPE_CHECKING

from parapy.framework.errors import ConfigError, TheoremViolationError
from parapy.framework.fock import ModelParams, State
from parapy.framework.operator import Operator

if TYPE_CHECKING:
    from parapy.framework.config import RunConfig


@dataclass
class SuiteFailure:
    check: str
    message: str
    payload: Dict[str, Any] = field(default_factory=dict)
    states: List[State] = field(default_factory=list)


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    failed: int = 0
    failures: List[SuiteFailure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def merge(self, other: SuiteResult) -> None:
        self.passed += other.passed
        self.failed += other.failed
        self.failures.extend(other.failures)


@dataclass
class SuiteConfig:
    name: str = "all"

    @property
    def suite(self) -> Type[VerificationSuite]:
        from parapy.instances.suites import SUITES
        try:
            return SUITES[self.name]
        except KeyError:
            raise ConfigError(f"[SuiteConfig] Unknown suite '{self.name}', expected one of {sorted(SUITES)}")


class VerificationSuite(metaclass=abc.ABCMeta):
    """A named group of exact checks; failures are collected, never raised."""
    name: str = ""

    def __init__(self, config: RunConfig) -> None:
        self._run_config = config
        self._config = config.suite_config
        self.result = SuiteResult(name=self.name)

    @property
    def config(self) -> SuiteConfig:
        return self._config

    @property
    def params(self) -> ModelParams:
        return self._run_config.params

    @property
    def max_degree(self) -> int:
        return self._run_config.max_degree

    def check(self, label: str, condition: bool, message: str = "",
              payload: Optional[Dict[str, Any]] = None, states: Optional[List[State]] = None) -> bool:
        if condition:
            self.result.passed += 1
        else:
            self.result.failed += 1
            self.result.failures.append(SuiteFailure(check=label, message=message or label,
                                                     payload=payload or dict(), states=states or list()))
            logging.warning(f"[{type(self).__name__}] {label} failed: {message}")
        return condition

    def check_vanishes(self, label: str, operator: Operator, states: Sequence[State]) -> bool:
        """One check: ``operator`` maps every state to zero; the first offender is kept."""
        for state in states:
            image = operator(state)
            if not image.is_zero():
                return self.check(label, False, f"nonzero residual on {state}",
                                  payload={"operator": operator.name}, states=[state, image])
        return self.check(label, True)

    def guarded(self, label: str, function: Callable[[], Any]) -> Optional[Any]:
        """Runs ``function``; a theorem violation becomes a recorded failure instead of an exception."""
        try:
            value = function()
        except TheoremViolationError as error:
            self.check(label, False, str(error), payload=error.payload, states=error.states)
            return None
        return value

    @abc.abstractmethod
    def _run(self) -> None:
        raise NotImplementedError

    def run(self) -> SuiteResult:
        self.result = SuiteResult(name=self.name)
        from parapy.instances.operators import clear_operator_caches

        logging.info(f"[{type(self).__name__}] {self.params} up to degree {self.max_degree}")
        try:
            self._run()
        finally:
            clear_operator_caches()
        return self.result
