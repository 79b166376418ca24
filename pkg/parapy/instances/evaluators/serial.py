from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, Type, TYPE_CHECKING

from tqdm import tqdm

from parapy.framework.evaluator import DegreeJob, Evaluator, EvaluatorConfig, T
from parapy.framework.fock import ModelParams

if TYPE_CHECKING:
    from parapy.framework.config import RunConfig


@dataclass
class SerialEvaluatorConfig(EvaluatorConfig):
    progress: bool = True

    @property
    def evaluator(self) -> Type[SerialEvaluator]:
        return SerialEvaluator


class SerialEvaluator(Evaluator):
    def __init__(self, config: RunConfig) -> None:
        super().__init__(config)

    @property
    def config(self) -> SerialEvaluatorConfig:
        return super().config

    def evaluate(self, job: DegreeJob, params: ModelParams, degrees: Iterable[int]) -> Dict[int, T]:
        degrees = list(degrees)
        results = dict()
        for degree in tqdm(degrees, desc=f"[SerialEvaluator] {params}", disable=not self.config.progress):
            results[degree] = job(params, degree)
        return results
