from __future__ import annotations

import abc
import os
import tempfile
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Type, TYPE_CHECKING

import click

from parapy.framework.report import DecompositionReport

if TYPE_CHECKING:
    from parapy.framework.config import RunConfig


def write_atomic(path: str, text: str) -> None:
    """Writes through a temporary file in the target directory, then renames it into place."""
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    handle, temporary = tempfile.mkstemp(dir=str(target.parent), prefix=f".{target.name}.", suffix=".tmp")
    try:
        with os.fdopen(handle, "w", encoding="utf-8") as f:
            f.write(text)
        os.replace(temporary, str(target))
    except BaseException:
        if os.path.exists(temporary):
            os.remove(temporary)
        raise


@dataclass
class SaverConfig:
    output_path: Optional[str] = None

    @property
    @abc.abstractmethod
    def saver(self) -> Type[Saver]:
        raise NotImplementedError


class Saver(metaclass=abc.ABCMeta):
    """Writes a report to ``output_path``, or to stdout when no path is configured."""

    def __init__(self, config: RunConfig) -> None:
        self._run_config = config
        self._config = config.saver_config

    @abc.abstractmethod
    def render(self, report: DecompositionReport) -> str:
        raise NotImplementedError

    def save(self, report: DecompositionReport) -> None:
        text = self.render(report)
        if self.config.output_path is None:
            click.echo(text, nl=not text.endswith("\n"))
        else:
            write_atomic(self.config.output_path, text)

    @property
    def config(self) -> SaverConfig:
        return self._config
