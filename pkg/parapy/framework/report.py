from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from parapy.framework.fock import ModelParams, State
from parapy.framework.scalar import Rational, format_rational
from parapy.framework.signature import GaugeSignature, OspSignature


@dataclass
class ReportRow:
    degree: int
    osp: OspSignature
    gauge: GaugeSignature
    gauge_dim: int
    vector: State
    vector_id: str

    @property
    def energy(self) -> Rational:
        return self.vector.params.vacuum_energy + self.degree

    @property
    def mu(self) -> Tuple[Rational, ...]:
        return self.gauge.mu

    def to_record(self) -> Dict[str, Any]:
        return {"degree": self.degree,
                "energy": format_rational(self.energy),
                "d": format_rational(self.osp.d),
                "s": list(self.osp.s),
                "sigma": list(self.gauge.sigma),
                "mu": [format_rational(value) for value in self.mu],
                "gauge_dim": self.gauge_dim,
                "vector_id": self.vector_id}


@dataclass
class DecompositionReport:
    params: ModelParams
    max_degree: int
    rows: List[ReportRow] = field(default_factory=list)

    def row_for(self, osp: OspSignature) -> Optional[ReportRow]:
        for row in self.rows:
            if row.osp == osp:
                return row
        return None

    def rows_at(self, degree: int) -> List[ReportRow]:
        return [row for row in self.rows if row.degree == degree]

    @property
    def osp_signatures(self) -> List[OspSignature]:
        return [row.osp for row in self.rows]


@dataclass
class SpinOrbitComponent:
    mu_orb: Tuple[int, ...]
    mu_spin: Tuple[Rational, ...]
    mu: Tuple[Rational, ...]
    basis: List[State]

    @property
    def dimension(self) -> int:
        return len(self.basis)


@dataclass
class MultiplicityRow:
    osp: OspSignature
    claimed: int
    counted: int

    @property
    def agrees(self) -> bool:
        return self.claimed == self.counted
