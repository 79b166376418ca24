from __future__ import annotations

from typing import List

import parapy
from parapy.framework.fock import ModelParams, State, enumerate_level
from parapy.framework.scalar import Scalar, rational


def basis_sample(params: ModelParams, max_degree: int) -> List[State]:
    """Every basis ket of degree <= max_degree, as a State."""
    return [State.basis(params, ket) for d in range(max_degree + 1) for ket in enumerate_level(params, d)]


def random_states(params: ModelParams, max_degree: int, count: int, terms: int = 3) -> List[State]:
    """Sparse states with small Gaussian-rational coefficients drawn from ``parapy.random_state``."""
    kets = [ket for d in range(max_degree + 1) for ket in enumerate_level(params, d)]
    states = []
    for _ in range(count):
        picks = parapy.random_state.choice(len(kets), size=min(terms, len(kets)), replace=False)
        chosen = []
        for index in picks:
            re, im = parapy.random_state.randint(-3, 4, size=2)
            denominator = int(parapy.random_state.randint(1, 4))
            chosen.append((kets[int(index)], Scalar(rational(int(re), denominator), rational(int(im), denominator))))
        states.append(State.from_terms(params, chosen))
    return states
