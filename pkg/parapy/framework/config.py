from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, Optional

import parapy
from parapy.framework.errors import ConfigError
from parapy.framework.evaluator import Evaluator, EvaluatorConfig
from parapy.framework.fock import ModelParams
from parapy.framework.logger import Logger, LoggerConfig
from parapy.framework.saver import Saver, SaverConfig
from parapy.framework.suite import SuiteConfig, VerificationSuite

OUTPUT_FORMATS = ("json", "tsv", "pretty")


@dataclass
class RunConfig:
    n: int
    p: int
    max_degree: int = 2
    output_format: str = "json"
    output_path: Optional[str] = None
    capacity: Optional[int] = None
    seed: int = 42
    workers: int = 1
    quiet: bool = False

    suite_config: SuiteConfig = field(default_factory=SuiteConfig)
    evaluator_config: Optional[EvaluatorConfig] = None
    saver_config: Optional[SaverConfig] = None
    logger_config: Optional[LoggerConfig] = None

    cli_args: Optional[Dict[str, Any]] = None

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 1:
            raise ConfigError(f"[RunConfig] n must be >= 1, got {self.n}")
        if not isinstance(self.p, int) or self.p < 1:
            raise ConfigError(f"[RunConfig] p must be >= 1, got {self.p}")
        if self.max_degree < 0:
            raise ConfigError(f"[RunConfig] max_degree must be >= 0, got {self.max_degree}")
        if self.output_format not in OUTPUT_FORMATS:
            raise ConfigError(f"[RunConfig] Unknown format '{self.output_format}', expected one of {OUTPUT_FORMATS}")
        if self.capacity is not None and self.capacity < 1:
            raise ConfigError(f"[RunConfig] capacity must be positive, got {self.capacity}")
        if self.workers < 1:
            raise ConfigError(f"[RunConfig] workers must be >= 1, got {self.workers}")
        # Resolves the suite class, rejecting unknown names early
        _ = self.suite_config.suite

        if self.evaluator_config is None:
            if self.workers > 1:
                from parapy.instances.evaluators.ray.evaluator import RayEvaluatorConfig
                self.evaluator_config = RayEvaluatorConfig(num_workers=self.workers, progress=not self.quiet)
            else:
                from parapy.instances.evaluators.serial import SerialEvaluatorConfig
                self.evaluator_config = SerialEvaluatorConfig(progress=not self.quiet)
        if self.saver_config is None:
            from parapy.instances.savers.report import REPORT_SAVER_CONFIGS
            self.saver_config = REPORT_SAVER_CONFIGS[self.output_format](output_path=self.output_path)
        if self.logger_config is None:
            from parapy.instances.loggers.default import DefaultLoggerConfig
            self.logger_config = DefaultLoggerConfig(quiet=self.quiet)

    def apply_globals(self) -> None:
        parapy.set_random_state(self.seed)
        if self.capacity is not None:
            parapy.set_capacity(self.capacity)

    @property
    def params(self) -> ModelParams:
        return ModelParams(n=self.n, p=self.p)

    @property
    def evaluator(self) -> Evaluator:
        return self.evaluator_config.evaluator(self)

    @property
    def saver(self) -> Saver:
        return self.saver_config.saver(self)

    @property
    def logger(self) -> Logger:
        return self.logger_config.logger(self)

    @property
    def suite(self) -> VerificationSuite:
        return self.suite_config.suite(self)
