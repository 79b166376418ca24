from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Type, TYPE_CHECKING

import numpy as np

from parapy.framework.logger import Logger, LoggerConfig
from parapy.framework.report import DecompositionReport

if TYPE_CHECKING:
    from parapy.framework.config import RunConfig
    from parapy.framework.suite import SuiteResult


@dataclass
class DefaultLoggerConfig(LoggerConfig):
    @property
    def logger(self) -> Type[Logger]:
        return DefaultLogger


class DefaultLogger(Logger):
    def __init__(self, config: RunConfig) -> None:
        super().__init__(config)
        level = logging.WARNING if self.config.quiet else logging.INFO
        logging.basicConfig(level=level)
        log = logging.getLogger()
        log.setLevel(level)

    @property
    def config(self) -> DefaultLoggerConfig:
        return self._config

    @staticmethod
    def _values_log_string(name: str, values: List[int], degree: int) -> str:
        log_str = f"[Degree {degree}] {name}" \
                  f"\n\tcount: {len(values)}" \
                  f"\n\tmean: {np.mean(values)}" \
                  f"\n\tmax: {np.max(values)}"
        return log_str

    def log_report(self, report: DecompositionReport) -> None:
        for degree in range(report.max_degree + 1):
            dims = [row.gauge_dim for row in report.rows_at(degree)]
            if dims:
                logging.info(self._values_log_string(name="gauge irrep dimensions", values=dims, degree=degree))
            else:
                logging.info(f"[Degree {degree}] no lowest-weight vectors")

    def log_suite(self, result: SuiteResult) -> None:
        logging.info(f"[Suite {result.name}] passed: {result.passed}, failed: {result.failed}")
        for failure in result.failures:
            logging.error(f"[Suite {result.name}] {failure.check}: {failure.message}")
