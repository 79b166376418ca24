from __future__ import annotations

from typing import Optional

from parapy.framework.errors import NonexistenceError, ZeroVectorError
from parapy.framework.linalg import proportionality, same_span
from parapy.framework.report import DecompositionReport
from parapy.framework.scalar import Scalar
from parapy.framework.signature import gauge_to_osp, signature_bijection
from parapy.framework.suite import VerificationSuite
from parapy.instances.decomposers.lwhw import build_lwhw_vector
from parapy.instances.decomposers.shells import annihilators, compact_lowerings, energy_eigenspace, \
    positive_gauge_roots, vacuum_subspace
from parapy.instances.decomposers.table import joint_lw_hw_table, multiplicity_check
from parapy.instances.operators.energy import spin_orbit


class TableSuite(VerificationSuite):
    """Base for suites that read the joint lowest/highest weight table."""

    def joint_table(self) -> Optional[DecompositionReport]:
        evaluator = self._run_config.evaluator
        return self.guarded("joint table", lambda: joint_lw_hw_table(self.params, self.max_degree, evaluator))


class EnergyEigenspaceSuite(VerificationSuite):
    """Q v = E v exactly on the vacuum subspace, and nowhere else in a shell."""
    name = "lemma1"

    def _run(self) -> None:
        params = self.params
        for d in range(self.max_degree + 1):
            vacuum = vacuum_subspace(params, d)
            eigen = energy_eigenspace(params, d)
            self.check(f"degree {d}: dim V0 = dim ker(Q - E)", len(vacuum) == len(eigen),
                       f"{len(vacuum)} != {len(eigen)}")
            self.check(f"degree {d}: V0 = ker(Q - E)", same_span(vacuum, eigen), states=vacuum + eigen)
            energy = params.vacuum_energy + d
            self.check(f"degree {d}: Q = E on V0", all(spin_orbit(params)(v) == v * Scalar(energy) for v in vacuum))


class JointTableSuite(TableSuite):
    name = "theorem1"

    def _run(self) -> None:
        report = self.joint_table()
        if report is None:
            return
        self.check("joint table built", True)
        for row in report.rows:
            self.check(f"{row.osp} -> {row.gauge}", signature_bijection(row.osp, self.params) == row.gauge,
                       payload=row.to_record(), states=[row.vector])
            self.check(f"{row.gauge} -> {row.osp}", gauge_to_osp(row.gauge, self.params) == row.osp,
                       payload=row.to_record(), states=[row.vector])


class ClosedFormSuite(TableSuite):
    """The closed-form vector of every table row spans the same line as the kernel vector."""
    name = "lemma3"

    def _run(self) -> None:
        report = self.joint_table()
        if report is None:
            return
        params = self.params
        killers = annihilators(params) + compact_lowerings(params) + positive_gauge_roots(params)
        for row in report.rows:
            try:
                vector = build_lwhw_vector(params, row.osp)
            except (NonexistenceError, ZeroVectorError) as error:
                self.check(f"{row.osp} closed form", False, str(error), payload=row.to_record(), states=[row.vector])
                continue
            self.check(f"{row.osp} closed form is proportional", proportionality(row.vector, vector) is not None,
                       payload=row.to_record(), states=[row.vector, vector])
            self.check(f"{row.osp} closed form is lowest / highest",
                       all(operator(vector).is_zero() for operator in killers), states=[vector])


class MultiplicitySuite(TableSuite):
    name = "corollary1"

    def _run(self) -> None:
        report = self.joint_table()
        if report is None:
            return
        for row in multiplicity_check(self.params, self.max_degree, report):
            self.check(f"{row.osp} multiplicity", row.agrees, f"claimed {row.claimed}, counted {row.counted}",
                       payload={"osp": str(row.osp), "claimed": row.claimed, "counted": row.counted})
