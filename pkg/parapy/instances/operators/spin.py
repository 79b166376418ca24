"""The Clifford module of e^1, ..., e^p on spin weight vectors ω(s^1, ..., s^q).

The raising/lowering pair acts as e^{k±} ω(s) = √2 (Π_{l<k} 2s^l) ω(.., s^k ± 1, ..), which vanishes
once |s^k| would exceed 1/2. In the (+, -) basis of each spin this is the Jordan-Wigner realization
e^{2k-1} = Z..Z X_k, e^{2k} = Z..Z Y_k and e^p = Z_1..Z_q.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Tuple

from parapy.framework.errors import ParityError
from parapy.framework.fock import BasisKet, ModelParams, State
from parapy.framework.labels import SignLike, check_index, normalize_sign, sign_symbol
from parapy.framework.operator import FACTORY_CACHE_SIZE, Operator, Product, Sum
from parapy.framework.scalar import I, INV_SQRT2, ONE, SQRT2, Scalar


def _string_sign(signs: Tuple[int, ...], k: int) -> int:
    value = 1
    for sign in signs[:k]:
        value *= sign
    return value


class SpinRaise(Operator):
    """e^{k+} (sign = +1) or e^{k-} (sign = -1), orbital part untouched."""

    def __init__(self, params: ModelParams, k: int, sign: int) -> None:
        super().__init__(params, name=f"e[{k + 1}{sign_symbol(sign)}]")
        self._k = k
        self._sign = sign

    def _act(self, ket: BasisKet) -> Iterable[Tuple[BasisKet, Scalar]]:
        if ket.spin.signs[self._k] == self._sign:
            return []
        coefficient = SQRT2 * _string_sign(ket.spin.signs, self._k)
        return [(BasisKet(ket.orb, ket.spin.flipped(self._k)), coefficient)]


class CliffordEp(Operator):
    def __init__(self, params: ModelParams) -> None:
        super().__init__(params, name=f"e[{params.p}]")

    def _act(self, ket: BasisKet) -> Iterable[Tuple[BasisKet, Scalar]]:
        return [(ket, Scalar.coerce(_string_sign(ket.spin.signs, len(ket.spin.signs))))]


@lru_cache(maxsize=FACTORY_CACHE_SIZE)
def spin_raise(params: ModelParams, k: int, sign: int) -> SpinRaise:
    return SpinRaise(params, k, sign)


@lru_cache(maxsize=FACTORY_CACHE_SIZE)
def clifford_ep(params: ModelParams) -> CliffordEp:
    return CliffordEp(params)


@lru_cache(maxsize=FACTORY_CACHE_SIZE)
def clifford_generator(params: ModelParams, a: int) -> Operator:
    """Real generator e^a (0-based a), rebuilt from e^{k±} and e^p."""
    if params.eps and a == params.p - 1:
        return clifford_ep(params)
    k, imaginary = divmod(a, 2)
    plus, minus = spin_raise(params, k, 1), spin_raise(params, k, -1)
    if not imaginary:
        return Sum(params, [(INV_SQRT2, plus), (INV_SQRT2, minus)], name=f"e[{a + 1}]")
    factor = -I * INV_SQRT2
    return Sum(params, [(factor, plus), (-factor, minus)], name=f"e[{a + 1}]")


@lru_cache(maxsize=FACTORY_CACHE_SIZE)
def chirality(params: ModelParams) -> Operator:
    """ē = i^q e^1 ... e^p."""
    factors = [clifford_generator(params, a) for a in range(params.p)]
    phase = ONE
    for _ in range(params.q):
        phase = phase * I
    return Sum(params, [(phase, Product(params, factors))], name="ebar")


def apply_spin_raise(k: int, sign: SignLike, v: State) -> State:
    k = check_index("apply_spin_raise", k, v.params.q)
    return spin_raise(v.params, k, normalize_sign(sign))(v)


def apply_ep(v: State) -> State:
    if not v.params.eps:
        raise ParityError(f"[apply_ep] e^p exists only for odd p, got p={v.params.p}")
    return clifford_ep(v.params)(v)


def apply_clifford(a: int, v: State) -> State:
    a = check_index("apply_clifford", a, v.params.p)
    return clifford_generator(v.params, a)(v)


def apply_chirality(v: State) -> State:
    return chirality(v.params)(v)
