from __future__ import annotations

from typing import Dict, List, Type

from parapy.framework.suite import VerificationSuite
from parapy.instances.suites.algebra import AlgebraSuite
from parapy.instances.suites.branching import SpinOrbitSuite, StabilizationSuite
from parapy.instances.suites.decomposition import ClosedFormSuite, EnergyEigenspaceSuite, JointTableSuite, \
    MultiplicitySuite
from parapy.instances.suites.gauge import GaugeSuite
from parapy.instances.suites.noncovariant import NoncovariantSuite

COMPONENT_SUITES: List[Type[VerificationSuite]] = [AlgebraSuite, GaugeSuite, EnergyEigenspaceSuite, JointTableSuite,
                                                   ClosedFormSuite, MultiplicitySuite, SpinOrbitSuite,
                                                   StabilizationSuite, NoncovariantSuite]


class AllSuite(VerificationSuite):
    name = "all"

    def _run(self) -> None:
        for suite_class in COMPONENT_SUITES:
            self.result.merge(suite_class(self._run_config).run())


SUITES: Dict[str, Type[VerificationSuite]] = {suite.name: suite for suite in COMPONENT_SUITES + [AllSuite]}
