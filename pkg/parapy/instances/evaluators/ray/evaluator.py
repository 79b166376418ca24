from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, Iterable, Optional, Tuple, Type, TYPE_CHECKING

import ray
from ray.util import ActorPool
from tqdm import tqdm

from parapy.framework.errors import EvaluationError
from parapy.framework.evaluator import DegreeJob, Evaluator, EvaluatorConfig, T
from parapy.framework.fock import ModelParams

if TYPE_CHECKING:
    from parapy.framework.config import RunConfig


@dataclass
class RayEvaluatorConfig(EvaluatorConfig):
    num_workers: int = 2
    num_cores_per_worker: int = 1
    evaluation_timeout: Optional[int] = None
    log_to_driver: bool = False
    logging_level: int = logging.ERROR
    debug: bool = False
    cluster: bool = False
    progress: bool = True

    @property
    def evaluator(self) -> Type[RayDistributedEvaluator]:
        return RayDistributedEvaluator


def ray_degree_actor_factory(config: RayEvaluatorConfig):
    @ray.remote(num_cpus=config.num_cores_per_worker)
    class RayDegreeActor:
        def evaluate(self, job: DegreeJob, params: ModelParams, degree: int) -> Tuple[int, T]:
            return degree, job(params, degree)

    return RayDegreeActor


class RayDistributedEvaluator(Evaluator):
    def __init__(self, config: RunConfig) -> None:
        super(RayDistributedEvaluator, self).__init__(config=config)

        self.pool: Optional[ActorPool] = None
        self._configure_ray()
        self._build_pool()

    @property
    def config(self) -> RayEvaluatorConfig:
        return super().config

    def _configure_ray(self) -> None:
        if ray.is_initialized():
            return
        ray.init(log_to_driver=self.config.log_to_driver,
                 logging_level=self.config.logging_level,
                 local_mode=self.config.debug,
                 address="auto" if self.config.cluster else None)

    def _build_pool(self) -> None:
        if self.pool is not None:
            del self.pool
        actor_class = ray_degree_actor_factory(self.config)
        workers = [actor_class.remote() for _ in range(self.config.num_workers)]
        self.pool = ActorPool(workers)

    def evaluate(self, job: DegreeJob, params: ModelParams, degrees: Iterable[int]) -> Dict[int, T]:
        degrees = list(degrees)
        for degree in tqdm(degrees, desc=f"[RayDistributedEvaluator] {params}\t-\tSending jobs to workers",
                           disable=not self.config.progress):
            self.pool.submit(lambda worker, value: worker.evaluate.remote(job, params, value), degree)

        results = dict()
        pbar = tqdm(desc=f"[RayDistributedEvaluator] {params}\t-\tReceived results from workers",
                    total=len(degrees), disable=not self.config.progress)
        timeout = None
        try:
            while self.pool.has_next():
                try:
                    degree, result = self.pool.get_next_unordered(timeout=timeout)
                except TimeoutError:
                    missing = sorted(set(degrees) - set(results))
                    logging.info(f"[RayDistributedEvaluator] time threshold exceeded, degrees {missing} unfinished")
                    # the old pool still holds the unfinished futures
                    self._build_pool()
                    raise EvaluationError(f"[RayDistributedEvaluator] {params}: no result within "
                                          f"{self.config.evaluation_timeout}s for degrees {missing}",
                                          missing=missing)
                results[degree] = result
                timeout = self.config.evaluation_timeout
                pbar.update(1)
        finally:
            pbar.close()
        return results
