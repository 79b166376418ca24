"""Diagonal energy, the spin-orbit operator Q and gauge Casimirs."""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Tuple

from parapy.framework.fock import BasisKet, ModelParams, State
from parapy.framework.operator import FACTORY_CACHE_SIZE, Identity, Operator, Product, Sum
from parapy.framework.scalar import ONE, Scalar
from parapy.instances.operators.gauge import gauge_generator
from parapy.instances.operators.odd import annihilator, creator


class ConformalEnergy(Operator):
    """E = ½ Σ_α {b†_α, b_α}, acting as np/2 + degree."""

    def __init__(self, params: ModelParams) -> None:
        super().__init__(params, name="E")

    def _act(self, ket: BasisKet) -> Iterable[Tuple[BasisKet, Scalar]]:
        return [(ket, Scalar(self.params.vacuum_energy + ket.degree))]


@lru_cache(maxsize=FACTORY_CACHE_SIZE)
def conformal_energy(params: ModelParams) -> ConformalEnergy:
    return ConformalEnergy(params)


@lru_cache(maxsize=FACTORY_CACHE_SIZE)
def spin_orbit(params: ModelParams) -> Operator:
    """Q = E - Σ_α b†_α b_α."""
    terms = [(ONE, conformal_energy(params))]
    for alpha in range(params.n):
        terms.append((-ONE, Product(params, [creator(params, alpha), annihilator(params, alpha)])))
    return Sum(params, terms, name="Q")


@lru_cache(maxsize=FACTORY_CACHE_SIZE)
def spin_orbit_coupling(params: ModelParams) -> Operator:
    """Q = np/2 + 2 Σ_{a>b} G^{ab}_orb G^{ab}_spin."""
    terms = [(Scalar(params.vacuum_energy), Identity(params))]
    two = Scalar(2)
    for a in range(params.p):
        for b in range(a):
            generator = gauge_generator(params, a, b)
            terms.append((two, Product(params, [generator.orbital_part, generator.spin_part])))
    return Sum(params, terms, name="Q_ls")


def _casimir(params: ModelParams, part: str) -> Operator:
    terms = []
    for a in range(params.p):
        for b in range(a):
            generator = gauge_generator(params, a, b)
            factor = {"total": generator, "orbital": generator.orbital_part, "spin": generator.spin_part}[part]
            terms.append((ONE, Product(params, [factor, factor])))
    return Sum(params, terms, name=f"C2_{part}")


@lru_cache(maxsize=FACTORY_CACHE_SIZE)
def gauge_casimir(params: ModelParams) -> Operator:
    """Σ_{a>b} (G^{ab})^2, equal to <μ, μ + 2ρ> on an irrep of highest weight μ."""
    return _casimir(params, "total")


@lru_cache(maxsize=FACTORY_CACHE_SIZE)
def orbital_casimir(params: ModelParams) -> Operator:
    return _casimir(params, "orbital")


@lru_cache(maxsize=FACTORY_CACHE_SIZE)
def spin_casimir(params: ModelParams) -> Operator:
    return _casimir(params, "spin")


def apply_energy(v: State) -> State:
    return conformal_energy(v.params)(v)


def apply_Q(v: State) -> State:
    return spin_orbit(v.params)(v)


def apply_Q_ls(v: State) -> State:
    return spin_orbit_coupling(v.params)(v)


def apply_gauge_casimir(v: State) -> State:
    return gauge_casimir(v.params)(v)


def apply_orbital_casimir(v: State) -> State:
    return orbital_casimir(v.params)(v)


def apply_spin_casimir(v: State) -> State:
    return spin_casimir(v.params)(v)
