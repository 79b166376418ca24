from __future__ import annotations

import abc
from dataclasses import dataclass
from typing import Type, TYPE_CHECKING

from parapy.framework.report import DecompositionReport

if TYPE_CHECKING:
    from parapy.framework.config import RunConfig
    from parapy.framework.suite import SuiteResult


@dataclass
class LoggerConfig(metaclass=abc.ABCMeta):
    quiet: bool = False

    @property
    @abc.abstractmethod
    def logger(self) -> Type[Logger]:
        raise NotImplementedError


class Logger(metaclass=abc.ABCMeta):
    def __init__(self, config: RunConfig) -> None:
        self._run_config = config
        self._config = config.logger_config

    @abc.abstractmethod
    def log_report(self, report: DecompositionReport) -> None:
        raise NotImplementedError

    @abc.abstractmethod
    def log_suite(self, result: SuiteResult) -> None:
        raise NotImplementedError

    @property
    def config(self) -> LoggerConfig:
        return self._config
