"""Odd osp(1|2n) generators in the covariant ansatz.

b†_α = Σ_k (A†_α^{k+} e^{k-} + A†_α^{k-} e^{k+}) + ε b†_α^p e^p
b_α  = Σ_k (A_α^{k+} e^{k+} + A_α^{k-} e^{k-}) + ε b_α^p e^p
"""
from __future__ import annotations

from functools import lru_cache

from parapy.framework.fock import Mode, ModelParams, ODD, State
from parapy.framework.labels import check_index
from parapy.framework.operator import FACTORY_CACHE_SIZE, Operator, Product, Sum
from parapy.framework.scalar import ONE
from parapy.instances.operators.modes import mode_annihilator, mode_creator, plus_minus_modes
from parapy.instances.operators.spin import clifford_ep, spin_raise


@lru_cache(maxsize=FACTORY_CACHE_SIZE)
def creator(params: ModelParams, alpha: int) -> Operator:
    terms = []
    for k in range(params.q):
        plus, minus = plus_minus_modes(alpha, k)
        terms.append((ONE, Product(params, [mode_creator(params, plus), spin_raise(params, k, -1)])))
        terms.append((ONE, Product(params, [mode_creator(params, minus), spin_raise(params, k, 1)])))
    if params.eps:
        terms.append((ONE, Product(params, [mode_creator(params, Mode(alpha, ODD)), clifford_ep(params)])))
    return Sum(params, terms, name=f"bd({alpha + 1})")


@lru_cache(maxsize=FACTORY_CACHE_SIZE)
def annihilator(params: ModelParams, alpha: int) -> Operator:
    terms = []
    for k in range(params.q):
        plus, minus = plus_minus_modes(alpha, k)
        terms.append((ONE, Product(params, [mode_annihilator(params, plus), spin_raise(params, k, 1)])))
        terms.append((ONE, Product(params, [mode_annihilator(params, minus), spin_raise(params, k, -1)])))
    if params.eps:
        terms.append((ONE, Product(params, [mode_annihilator(params, Mode(alpha, ODD)), clifford_ep(params)])))
    return Sum(params, terms, name=f"b({alpha + 1})")


def apply_creator(alpha: int, v: State) -> State:
    return creator(v.params, check_index("apply_creator", alpha, v.params.n))(v)


def apply_annihilator(alpha: int, v: State) -> State:
    return annihilator(v.params, check_index("apply_annihilator", alpha, v.params.n))(v)
