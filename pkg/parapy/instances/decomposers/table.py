"""Joint osp-lowest / gauge-highest weight tables and the checks built on them."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Set, Tuple

from parapy.framework.errors import EvaluationError, InvalidLabelError, NonDominantWeightError, \
    TheoremViolationError
from parapy.framework.evaluator import Evaluator
from parapy.framework.fock import GaugeWeight, ModelParams, OspWeight, State
from parapy.framework.report import DecompositionReport, MultiplicityRow, ReportRow
from parapy.framework.scalar import Rational
from parapy.framework.signature import GaugeSignature, OspSignature, signature_bijection, weyl_dim
from parapy.instances.decomposers.shells import gauge_hw_vectors, osp_lowest_vectors, split_by_osp_weight


def joint_rows_at_degree(params: ModelParams, d: int) -> List[ReportRow]:
    hw = gauge_hw_vectors(osp_lowest_vectors(params, d))
    by_gauge: Dict[GaugeWeight, List[State]] = dict()
    for weight, state in hw:
        by_gauge.setdefault(weight, []).append(state)

    rows = []
    for weight in sorted(by_gauge, reverse=True):
        for lam, basis in sorted(split_by_osp_weight(by_gauge[weight]).items()):
            payload = {"params": str(params), "degree": d, "osp_weight": str(lam), "gauge_weight": str(weight)}
            if len(basis) > 1:
                raise TheoremViolationError(f"[JointTable] Weight group of dimension {len(basis)} at degree {d}",
                                            payload=payload, states=basis)
            osp = OspSignature.from_weight(lam)
            try:
                gauge = GaugeSignature.from_mu(weight.w)
            except NonDominantWeightError as error:
                raise TheoremViolationError(f"[JointTable] {error}", payload=payload, states=basis) from error
            expected = signature_bijection(osp, params)
            if expected != gauge:
                payload["expected"] = str(expected)
                raise TheoremViolationError(f"[JointTable] {osp} pairs with {gauge}, the bijection gives {expected}",
                                            payload=payload, states=basis)
            rows.append(ReportRow(degree=d, osp=osp, gauge=gauge,
                                  gauge_dim=weyl_dim(params.p, gauge.mu, pin_mode=True),
                                  vector=basis[0], vector_id=f"d{d}.{len(rows)}"))
    logging.debug(f"[JointTable] {params} degree {d}: {len(rows)} rows")
    return rows


def joint_lw_hw_table(params: ModelParams, max_degree: int,
                      evaluator: Optional[Evaluator] = None) -> DecompositionReport:
    degrees = range(max_degree + 1)
    if evaluator is None:
        per_degree = {d: joint_rows_at_degree(params, d) for d in degrees}
    else:
        per_degree = evaluator.evaluate(joint_rows_at_degree, params, degrees)
        missing = sorted(set(degrees) - set(per_degree))
        if missing:
            raise EvaluationError(f"[JointTable] {params}: the evaluator returned no rows for degrees {missing}",
                                  missing=missing)
    report = DecompositionReport(params=params, max_degree=max_degree)
    for d in sorted(per_degree):
        report.rows.extend(per_degree[d])
    logging.info(f"[JointTable] {params} up to degree {max_degree}: {len(report.rows)} rows")
    return report


def multiplicity_check(params: ModelParams, max_degree: int,
                       report: Optional[DecompositionReport] = None) -> List[MultiplicityRow]:
    """Dimension of the osp lowest-weight space of each signature against its gauge irrep dimension."""
    report = joint_lw_hw_table(params, max_degree) if report is None else report
    counts: Dict[int, Dict[OspWeight, int]] = dict()
    results = []
    for row in report.rows:
        if row.degree not in counts:
            pieces = split_by_osp_weight(osp_lowest_vectors(params, row.degree))
            counts[row.degree] = {weight: len(basis) for weight, basis in pieces.items()}
        counted = counts[row.degree].get(OspWeight(lam=row.osp.lowest_weight()), 0)
        partner = signature_bijection(row.osp, params)
        claimed = weyl_dim(params.p, partner.mu, pin_mode=True) if partner is not None else 0
        results.append(MultiplicityRow(osp=row.osp, claimed=claimed, counted=counted))
    return results


def realizable_signatures(params: ModelParams, max_degree: int,
                          evaluator: Optional[Evaluator] = None) -> List[OspSignature]:
    report = joint_lw_hw_table(params, max_degree, evaluator)
    return sorted(set(report.osp_signatures), key=lambda signature: (signature.d, signature.s))


@dataclass
class StabilizationResult:
    n: int
    p: int
    max_degree: int
    energy_cutoff: Rational
    tuples: Set[Tuple[int, ...]]
    next_tuples: Set[Tuple[int, ...]]
    d_values: Set[Rational]
    next_d_values: Set[Rational]

    @property
    def tuples_agree(self) -> bool:
        return self.tuples == self.next_tuples

    @property
    def no_new_d_values(self) -> bool:
        return self.next_d_values <= self.d_values

    @property
    def holds(self) -> bool:
        return self.tuples_agree and self.no_new_d_values


def _signature_tuple(signature: OspSignature, p: int) -> Tuple[int, ...]:
    s0 = signature.s0(p)
    return tuple(signature.s) + (int(s0.numerator),)


def stabilization_check(n: int, p: int, max_degree: int,
                        evaluator: Optional[Evaluator] = None) -> StabilizationResult:
    """Compares the signatures realized at orders p and p + 2 once q >= n."""
    if p // 2 < n:
        raise InvalidLabelError(f"[stabilization_check] Needs p >= 2n, got n={n}, p={p}")
    params, next_params = ModelParams(n=n, p=p), ModelParams(n=n, p=p + 2)
    signatures = realizable_signatures(params, max_degree, evaluator)
    next_signatures = realizable_signatures(next_params, max_degree, evaluator)
    cutoff = params.vacuum_energy + max_degree
    return StabilizationResult(
        n=n, p=p, max_degree=max_degree, energy_cutoff=cutoff,
        tuples={_signature_tuple(signature, p) for signature in signatures},
        next_tuples={_signature_tuple(signature, p + 2) for signature in next_signatures},
        d_values={signature.d for signature in signatures if signature.energy() <= cutoff},
        next_d_values={signature.d for signature in next_signatures if signature.energy() <= cutoff})