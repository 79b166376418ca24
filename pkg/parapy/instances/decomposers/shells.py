"""Exact subspaces of a single degree shell: V₀, osp lowest-weight vectors and gauge highest-weight vectors."""
from __future__ import annotations

import logging
from typing import Dict, List, Sequence, Tuple

from parapy.framework.fock import GaugeWeight, ModelParams, OspWeight, State, enumerate_level, gauge_weight, \
    osp_weight
from parapy.framework.linalg import closure, kernel_within, span_basis, split_by_weight
from parapy.framework.operator import Operator
from parapy.instances.operators.energy import conformal_energy, spin_orbit
from parapy.instances.operators.even import CREATE_ANNIH, EvenOpLabel, even_operator
from parapy.instances.operators.gauge import gauge_generator, gauge_root, inversion, positive_root_labels
from parapy.instances.operators.odd import annihilator


def shell_states(params: ModelParams, d: int) -> List[State]:
    return [State.basis(params, ket) for ket in enumerate_level(params, d)]


def annihilators(params: ModelParams) -> List[Operator]:
    return [annihilator(params, alpha) for alpha in range(params.n)]


def compact_lowerings(params: ModelParams) -> List[Operator]:
    """{b†_β, b_α} for α < β."""
    return [even_operator(params, EvenOpLabel(CREATE_ANNIH, beta, alpha))
            for alpha in range(1, params.n + 1) for beta in range(alpha + 1, params.n + 1)]


def positive_gauge_roots(params: ModelParams) -> List[Operator]:
    return [gauge_root(params, label) for label in positive_root_labels(params)]


def vacuum_subspace(params: ModelParams, d: int) -> List[State]:
    basis = kernel_within(shell_states(params, d), annihilators(params))
    logging.debug(f"[VacuumSubspace] {params} degree {d}: dimension {len(basis)}")
    return basis


def osp_lowest_vectors(params: ModelParams, d: int) -> List[State]:
    return kernel_within(vacuum_subspace(params, d), compact_lowerings(params))


def energy_eigenspace(params: ModelParams, d: int) -> List[State]:
    """{v in the degree-d shell : Q v = E v}."""
    return kernel_within(shell_states(params, d), [spin_orbit(params) - conformal_energy(params)])


def split_by_osp_weight(basis: Sequence[State]) -> Dict[OspWeight, List[State]]:
    return split_by_weight(basis, osp_weight)


def split_by_gauge_weight(basis: Sequence[State]) -> Dict[GaugeWeight, List[State]]:
    return split_by_weight(basis, gauge_weight)


def _pin_partner(weight: GaugeWeight) -> GaugeWeight:
    return GaugeWeight(w=weight.w[:-1] + (-weight.w[-1],))


def gauge_hw_vectors(subspace: Sequence[State]) -> List[Tuple[GaugeWeight, State]]:
    """Highest-weight vectors of the positive gauge roots inside a gauge-invariant subspace.

    For even p the so(p) weights with w^q < 0 are carried to their partner by the inversion I^p,
    so every Pin(p) irrep is reported once, with w^q > 0.
    """
    subspace = [state for state in subspace if not state.is_zero()]
    if not subspace:
        return []
    params = subspace[0].params
    pieces = split_by_gauge_weight(kernel_within(subspace, positive_gauge_roots(params)))
    if not params.eps and params.q:
        flip = inversion(params, params.p - 1)
        merged: Dict[GaugeWeight, List[State]] = dict()
        for weight, basis in pieces.items():
            if weight.w[-1] < 0:
                merged.setdefault(_pin_partner(weight), []).extend(flip(state) for state in basis)
            else:
                merged.setdefault(weight, []).extend(basis)
        pieces = {weight: span_basis(states) for weight, states in merged.items()}
    return [(weight, state) for weight in sorted(pieces, reverse=True) for state in pieces[weight]]


def highest_weight_gauge(params: ModelParams, d: int) -> List[State]:
    """Shell vectors killed by every positive gauge root vector."""
    return kernel_within(shell_states(params, d), positive_gauge_roots(params))


def gauge_closure(states: Sequence[State]) -> List[State]:
    states = [state for state in states if not state.is_zero()]
    if not states:
        return []
    params = states[0].params
    generators: List[Operator] = [gauge_generator(params, a, b)
                                  for a in range(params.p) for b in range(a + 1, params.p)]
    if not params.eps:
        generators.append(inversion(params, params.p - 1))
    return closure(states, generators)


def gauge_decomposition(states: Sequence[State]) -> Tuple[List[State], List[Tuple[GaugeWeight, State]]]:
    """The gauge closure of ``states`` and the highest-weight vectors of its irreducible pieces."""
    span = gauge_closure(states)
    return span, gauge_hw_vectors(span)
