"""Splitting of a gauge isotypic component by the orbital so(p) highest weight, and the sp(2n) content of each piece.

The gauge generators split as G^{ab} = G^{ab}_orb + G^{ab}_spin, and the spin factor is always the
spinor irrep (½, ..., ½). A gauge-highest vector of weight μ therefore lives in
V(μ_orb) ⊗ V(μ_spin) for orbital weights μ_orb with μ - μ_orb a spinor weight.
"""
from __future__ import annotations

import logging
from typing import Dict, List, Sequence, Tuple, Union

from parapy.framework.errors import NonEigenvectorError, TheoremViolationError
from parapy.framework.fock import BasisKet, GaugeWeight, ModelParams, OspWeight, SpinState, State, \
    all_spin_states, enumerate_orbital_level, gauge_weight, orbital_gauge_weight
from parapy.framework.linalg import closure, contains, kernel_within, proportionality, split_by_weight
from parapy.framework.operator import Operator
from parapy.framework.report import ReportRow, SpinOrbitComponent
from parapy.framework.scalar import Rational, Scalar, rational
from parapy.framework.signature import casimir_value, spinor_tensor_product
from parapy.instances.decomposers.shells import compact_lowerings, positive_gauge_roots, split_by_osp_weight
from parapy.instances.operators.energy import gauge_casimir
from parapy.instances.operators.even import ANNIH_ANNIH, EvenOpLabel, even_operator
from parapy.instances.operators.gauge import gauge_root, negative_root_labels, positive_root_labels

WeightLike = Union[GaugeWeight, Sequence[Rational]]


def _as_weight(mu: WeightLike) -> Tuple[Rational, ...]:
    values = mu.w if isinstance(mu, GaugeWeight) else mu
    return tuple(rational(value) if isinstance(value, int) else value for value in values)


def spin_weight(params: ModelParams) -> Tuple[Rational, ...]:
    return (rational(1, 2),) * params.q


def orbital_highest_vectors(params: ModelParams, d: int) -> Dict[Tuple[int, ...], List[State]]:
    """Orbital so(p) highest-weight vectors of degree d (spin factor fixed to ω(½, ..., ½)), by weight."""
    spin = SpinState.highest(params.q)
    shell = [State.basis(params, BasisKet(orb, spin)) for orb in enumerate_orbital_level(params, d)]
    raising = [gauge_root(params, label).orbital_part for label in positive_root_labels(params)]
    return split_by_weight(kernel_within(shell, raising), orbital_gauge_weight)


def _orbital_module(params: ModelParams, highest: Sequence[State]) -> List[State]:
    lowering = [gauge_root(params, label).orbital_part for label in negative_root_labels(params)]
    return closure(highest, lowering)


def spin_orbit_components(params: ModelParams, d: int, mu: WeightLike) -> List[SpinOrbitComponent]:
    mu = _as_weight(mu)
    mu_spin = spin_weight(params)
    total_raising = positive_gauge_roots(params)
    components = []
    for mu_orb, highest in sorted(orbital_highest_vectors(params, d).items(), reverse=True):
        nonzero = sum(1 for value in mu_orb if value)
        if nonzero > params.n:
            raise TheoremViolationError(f"[SpinOrbit] Orbital weight {mu_orb} has {nonzero} nonzero entries, "
                                        f"n={params.n}",
                                        payload={"params": str(params), "degree": d, "mu_orb": list(mu_orb)},
                                        states=highest)
        allowed = mu in spinor_tensor_product(mu_orb, params.p)
        module = _orbital_module(params, highest)
        tensor = [state.with_spin(spin) for state in module for spin in all_spin_states(params.q)]
        at_mu = split_by_weight(tensor, gauge_weight).get(GaugeWeight(w=mu), [])
        basis = kernel_within(at_mu, total_raising)
        if bool(basis) != allowed:
            raise TheoremViolationError(f"[SpinOrbit] Weight {mu} in V{mu_orb} ⊗ spinor: found {len(basis)} "
                                        f"highest vectors, tensor rule allows {int(allowed)}",
                                        payload={"params": str(params), "degree": d, "mu_orb": list(mu_orb)},
                                        states=basis)
        if basis:
            components.append(SpinOrbitComponent(mu_orb=mu_orb, mu_spin=mu_spin, mu=mu, basis=basis))
    logging.debug(f"[SpinOrbit] {params} degree {d}, μ={mu}: {len(components)} components")
    return components


def pair_annihilators(params: ModelParams) -> List[Operator]:
    """{b_α, b_β} for α <= β."""
    return [even_operator(params, EvenOpLabel(ANNIH_ANNIH, alpha, beta))
            for alpha in range(1, params.n + 1) for beta in range(alpha, params.n + 1)]


def sp_lowering_operators(params: ModelParams) -> List[Operator]:
    return pair_annihilators(params) + compact_lowerings(params)


def sp_lowest_weights(params: ModelParams, d: int,
                      mu: WeightLike) -> List[Tuple[OspWeight, SpinOrbitComponent, State]]:
    """sp(2n) lowest-weight vectors in the spin-orbit components of degree <= d.

    The even subalgebra commutes with the orbital gauge generators, so {b_α, b_β} maps the component
    of weight μ_orb at degree d into the one at degree d - 2 and {b†_β, b_α} keeps it in place; both
    images are checked at every degree. Where a component first appears the lowerings act nilpotently
    on it and must leave a nonzero kernel, and every kernel vector carries a lowest weight with
    λ_1 <= ... <= λ_n.
    """
    pairs, compact = pair_annihilators(params), compact_lowerings(params)
    lowering = pairs + compact
    components_at: Dict[int, Dict[Tuple[int, ...], List[State]]] = dict()
    results = []
    for degree in range(d + 1):
        components = spin_orbit_components(params, degree, mu)
        components_at[degree] = {component.mu_orb: component.basis for component in components}
        for component in components:
            payload = {"params": str(params), "degree": degree, "mu_orb": list(component.mu_orb)}
            for operators, target in ((pairs, degree - 2), (compact, degree)):
                allowed = components_at.get(target, dict()).get(component.mu_orb, [])
                for operator in operators:
                    for state in component.basis:
                        image = operator(state)
                        if not contains(allowed, image):
                            raise TheoremViolationError(f"[SpLowest] {operator.name} takes component "
                                                        f"μ_orb={component.mu_orb} at degree {degree} out of "
                                                        f"its degree-{target} counterpart",
                                                        payload=payload, states=[state, image])

            kernel = kernel_within(component.basis, lowering)
            first = all(component.mu_orb not in components_at[earlier] for earlier in range(degree))
            if first and not kernel:
                raise TheoremViolationError(f"[SpLowest] Component μ_orb={component.mu_orb} at degree {degree} "
                                            f"has no sp(2n) lowest-weight vector",
                                            payload=payload, states=component.basis)
            for weight, basis in sorted(split_by_osp_weight(kernel).items()):
                if any(later < earlier for earlier, later in zip(weight.lam, weight.lam[1:])):
                    raise TheoremViolationError(f"[SpLowest] Lowest-weight vector of weight {weight} in "
                                                f"μ_orb={component.mu_orb} is not sp(2n)-dominant",
                                                payload=payload, states=basis)
                results.extend((weight, component, state) for state in basis)
    return results


def casimir_so_check(v: State, mu: WeightLike) -> Scalar:
    mu = _as_weight(mu)
    factor = proportionality(gauge_casimir(v.params)(v), v)
    if factor is None:
        raise NonEigenvectorError(f"[casimir_so_check] The gauge Casimir does not preserve the line of {v}")
    expected = casimir_value(v.params.p, mu)
    if factor != Scalar(expected):
        raise TheoremViolationError(f"[casimir_so_check] Casimir eigenvalue {factor}, expected {expected} for μ={mu}",
                                    payload={"mu": [str(value) for value in mu], "eigenvalue": str(factor)},
                                    states=[v])
    return factor


def orbital_weight_of(row: ReportRow) -> Tuple[int, ...]:
    """Orbital highest weight of the spin-orbit component holding a joint lowest/highest weight vector.

    The vector always sits in the component with μ_orb = μ - (½, ..., ½).
    """
    params = row.vector.params
    mu = row.mu
    for component in spin_orbit_components(params, row.degree, mu):
        if contains(component.basis, row.vector):
            expected = tuple(value - half for value, half in zip(mu, component.mu_spin))
            if tuple(map(rational, component.mu_orb)) != expected:
                raise TheoremViolationError(f"[SpinOrbit] Joint vector of {row.osp} lies in μ_orb={component.mu_orb}, "
                                            f"expected μ - μ_spin",
                                            payload={"osp": str(row.osp), "mu_orb": list(component.mu_orb)},
                                            states=[row.vector])
            return component.mu_orb
    raise TheoremViolationError(f"[SpinOrbit] Joint vector of {row.osp} lies in no single spin-orbit component",
                                payload={"osp": str(row.osp)}, states=[row.vector])
