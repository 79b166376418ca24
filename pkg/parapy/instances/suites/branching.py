from __future__ import annotations

import logging
from typing import Set, Tuple

from parapy.framework.scalar import Rational
from parapy.framework.signature import spinor_tensor_product
from parapy.framework.suite import VerificationSuite
from parapy.instances.decomposers.spin_orbit import casimir_so_check, orbital_highest_vectors, orbital_weight_of, \
    sp_lowest_weights
from parapy.instances.decomposers.table import stabilization_check
from parapy.instances.suites.decomposition import TableSuite


class SpinOrbitSuite(TableSuite):
    """sp(2n) lowest-weight vectors in every spin-orbit component, and the orbital weight of joint vectors."""
    name = "theorem2"

    def _gauge_weights(self) -> Set[Tuple[Rational, ...]]:
        weights = set()
        for d in range(self.max_degree + 1):
            for mu_orb in orbital_highest_vectors(self.params, d):
                weights.update(spinor_tensor_product(mu_orb, self.params.p))
        return weights

    def _run(self) -> None:
        params = self.params
        for mu in sorted(self._gauge_weights(), reverse=True):
            found = self.guarded(f"μ={mu}", lambda: sp_lowest_weights(params, self.max_degree, mu))
            if found is not None:
                self.check(f"μ={mu}: every component has an sp(2n) lowest-weight vector", True)

        report = self.joint_table()
        if report is None:
            return
        for row in report.rows:
            mu_orb = self.guarded(f"{row.osp} orbital weight", lambda: orbital_weight_of(row))
            if mu_orb is not None:
                self.check(f"{row.osp} sits in μ_orb={mu_orb}", True)
            eigenvalue = self.guarded(f"{row.osp} Casimir", lambda: casimir_so_check(row.vector, row.mu))
            if eigenvalue is not None:
                self.check(f"{row.osp} Casimir = {eigenvalue}", True)


class StabilizationSuite(VerificationSuite):
    """Order p + 2 realizes no signature that order p misses, once p >= 2n."""
    name = "corollary2"

    def _run(self) -> None:
        params = self.params
        if params.q < params.n:
            logging.info(f"[StabilizationSuite] {params}: p < 2n, nothing to compare")
            return
        result = stabilization_check(params.n, params.p, self.max_degree)
        self.check(f"p={params.p} and p={params.p + 2} realize the same signature tuples", result.tuples_agree,
                   payload={"p": sorted(result.tuples), "p+2": sorted(result.next_tuples)})
        self.check(f"p={params.p + 2} has no new d below E={result.energy_cutoff}", result.no_new_d_values,
                   payload={"p": sorted(map(str, result.d_values)), "p+2": sorted(map(str, result.next_d_values))})
