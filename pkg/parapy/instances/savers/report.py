from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Dict, List, Type, TYPE_CHECKING

from parapy.framework.report import DecompositionReport, ReportRow
from parapy.framework.saver import Saver, SaverConfig
from parapy.framework.scalar import format_rational
from parapy.instances.savers.state import FORMAT_VERSION, state_to_dict
from parapy.utils.config2json import config2dict

if TYPE_CHECKING:
    from parapy.framework.config import RunConfig

TSV_COLUMNS = ("degree", "energy", "d", "s", "sigma", "mu", "gauge_dim", "vector_id")


def _short(value) -> str:
    text = format_rational(value)
    return text[:-2] if text.endswith("/1") else text


def _row_cells(row: ReportRow) -> List[str]:
    return [str(row.degree), _short(row.energy), _short(row.osp.d),
            ",".join(map(str, row.osp.s)), ",".join(map(str, row.gauge.sigma)),
            ",".join(_short(value) for value in row.mu), str(row.gauge_dim), row.vector_id]


@dataclass
class JsonReportSaverConfig(SaverConfig):
    @property
    def saver(self) -> Type[JsonReportSaver]:
        return JsonReportSaver


class JsonReportSaver(Saver):
    def __init__(self, config: RunConfig) -> None:
        super().__init__(config)

    def render(self, report: DecompositionReport) -> str:
        params = report.params
        document = {"format_version": FORMAT_VERSION,
                    "config": config2dict(self._run_config, exclude=("cli_args",)),
                    "params": {"n": params.n, "p": params.p, "q": params.q, "eps": params.eps},
                    "max_degree": report.max_degree,
                    "rows": [row.to_record() for row in report.rows],
                    "vectors": {row.vector_id: state_to_dict(row.vector) for row in report.rows}}
        return json.dumps(document, indent=2) + "\n"


@dataclass
class TsvReportSaverConfig(SaverConfig):
    @property
    def saver(self) -> Type[TsvReportSaver]:
        return TsvReportSaver


class TsvReportSaver(Saver):
    def __init__(self, config: RunConfig) -> None:
        super().__init__(config)

    def render(self, report: DecompositionReport) -> str:
        lines = ["\t".join(TSV_COLUMNS)]
        lines.extend("\t".join(_row_cells(row)) for row in report.rows)
        return "\n".join(lines) + "\n"


@dataclass
class PrettyReportSaverConfig(SaverConfig):
    @property
    def saver(self) -> Type[PrettyReportSaver]:
        return PrettyReportSaver


class PrettyReportSaver(Saver):
    def __init__(self, config: RunConfig) -> None:
        super().__init__(config)

    def render(self, report: DecompositionReport) -> str:
        header = ["degree", "energy", "osp", "gauge", "mu", "dim", "vector"]
        table = [[str(row.degree), _short(row.energy), str(row.osp), str(row.gauge),
                  "(" + ", ".join(_short(value) for value in row.mu) + ")", str(row.gauge_dim), row.vector_id]
                 for row in report.rows]
        widths = [max(len(line[column]) for line in [header] + table) for column in range(len(header))]
        lines = [f"osp(1|{2 * report.params.n}) at order p={report.params.p}, degrees 0..{report.max_degree}"]
        for line in [header] + table:
            lines.append("  ".join(cell.ljust(width) for cell, width in zip(line, widths)).rstrip())
        return "\n".join(lines) + "\n"


REPORT_SAVER_CONFIGS: Dict[str, Type[SaverConfig]] = {"json": JsonReportSaverConfig,
                                                      "tsv": TsvReportSaverConfig,
                                                      "pretty": PrettyReportSaverConfig}
