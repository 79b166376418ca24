from __future__ import annotations

import abc
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, Type, TYPE_CHECKING, TypeVar

from parapy.framework.fock import ModelParams

if TYPE_CHECKING:
    from parapy.framework.config import RunConfig

T = TypeVar("T")
DegreeJob = Callable[[ModelParams, int], T]


@dataclass
class EvaluatorConfig(metaclass=abc.ABCMeta):
    @property
    @abc.abstractmethod
    def evaluator(self) -> Type[Evaluator]:
        raise NotImplementedError


class Evaluator(metaclass=abc.ABCMeta):
    """Runs one job per degree shell; shells are independent of each other."""

    def __init__(self, config: RunConfig) -> None:
        self._run_config = config
        self._config = config.evaluator_config

    @abc.abstractmethod
    def evaluate(self, job: DegreeJob, params: ModelParams, degrees: Iterable[int]) -> Dict[int, T]:
        raise NotImplementedError

    @property
    def config(self) -> EvaluatorConfig:
        return self._config
