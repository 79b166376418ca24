"""Bose operators of single modes, in the A-basis and in the real basis b†^a_α."""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Tuple

from parapy.framework.errors import IndexRangeError
from parapy.framework.fock import BasisKet, MINUS, Mode, ModelParams, ODD, PLUS, State
from parapy.framework.labels import check_index
from parapy.framework.operator import FACTORY_CACHE_SIZE, Operator, Sum
from parapy.framework.scalar import I, INV_SQRT2, ONE, Scalar


class ModeCreator(Operator):
    def __init__(self, params: ModelParams, mode: Mode) -> None:
        super().__init__(params, name=f"{mode}†")
        self._mode = mode

    def _act(self, ket: BasisKet) -> Iterable[Tuple[BasisKet, Scalar]]:
        return [(BasisKet(ket.orb.shifted(self._mode, 1), ket.spin), ONE)]


class ModeAnnihilator(Operator):
    """Formal derivative: lowers the exponent e of its mode with coefficient e."""

    def __init__(self, params: ModelParams, mode: Mode) -> None:
        super().__init__(params, name=str(mode))
        self._mode = mode

    def _act(self, ket: BasisKet) -> Iterable[Tuple[BasisKet, Scalar]]:
        exponent = ket.orb.exponent(self._mode)
        if exponent == 0:
            return []
        return [(BasisKet(ket.orb.shifted(self._mode, -1), ket.spin), Scalar.coerce(exponent))]


def _check_mode(params: ModelParams, mode: Mode) -> None:
    if not 0 <= mode.alpha < params.n:
        raise IndexRangeError(f"[Mode] alpha {mode.alpha + 1} outside 1..{params.n}")
    if mode.kind == ODD:
        if not params.eps:
            raise IndexRangeError(f"[Mode] No odd mode for even p={params.p}")
    elif mode.kind not in (PLUS, MINUS) or not 0 <= mode.k < params.q:
        raise IndexRangeError(f"[Mode] Invalid mode {mode} for {params}")


@lru_cache(maxsize=FACTORY_CACHE_SIZE)
def mode_creator(params: ModelParams, mode: Mode) -> ModeCreator:
    _check_mode(params, mode)
    return ModeCreator(params, mode)


@lru_cache(maxsize=FACTORY_CACHE_SIZE)
def mode_annihilator(params: ModelParams, mode: Mode) -> ModeAnnihilator:
    _check_mode(params, mode)
    return ModeAnnihilator(params, mode)


def plus_minus_modes(alpha: int, k: int) -> Tuple[Mode, Mode]:
    return Mode(alpha, PLUS, k), Mode(alpha, MINUS, k)


@lru_cache(maxsize=FACTORY_CACHE_SIZE)
def real_creator(params: ModelParams, alpha: int, a: int) -> Operator:
    """b†^a_α (0-based): (A†^{k+} + A†^{k-})/√2 for a = 2k-1, -i(A†^{k+} - A†^{k-})/√2 for a = 2k."""
    if params.eps and a == params.p - 1:
        return mode_creator(params, Mode(alpha, ODD))
    k, imaginary = divmod(a, 2)
    plus, minus = (mode_creator(params, mode) for mode in plus_minus_modes(alpha, k))
    name = f"bd[{alpha + 1},{a + 1}]"
    if not imaginary:
        return Sum(params, [(INV_SQRT2, plus), (INV_SQRT2, minus)], name=name)
    return Sum(params, [(-I * INV_SQRT2, plus), (I * INV_SQRT2, minus)], name=name)


@lru_cache(maxsize=FACTORY_CACHE_SIZE)
def real_annihilator(params: ModelParams, alpha: int, a: int) -> Operator:
    """b^a_α (0-based): (A^{k+} + A^{k-})/√2 for a = 2k-1, i(A^{k+} - A^{k-})/√2 for a = 2k."""
    if params.eps and a == params.p - 1:
        return mode_annihilator(params, Mode(alpha, ODD))
    k, imaginary = divmod(a, 2)
    plus, minus = (mode_annihilator(params, mode) for mode in plus_minus_modes(alpha, k))
    name = f"b[{alpha + 1},{a + 1}]"
    if not imaginary:
        return Sum(params, [(INV_SQRT2, plus), (INV_SQRT2, minus)], name=name)
    return Sum(params, [(I * INV_SQRT2, plus), (-I * INV_SQRT2, minus)], name=name)


def apply_mode_creator(mode: Mode, v: State) -> State:
    return mode_creator(v.params, mode)(v)


def apply_mode_annihilator(mode: Mode, v: State) -> State:
    return mode_annihilator(v.params, mode)(v)


def apply_real_creator(alpha: int, a: int, v: State) -> State:
    alpha = check_index("apply_real_creator", alpha, v.params.n)
    a = check_index("apply_real_creator", a, v.params.p)
    return real_creator(v.params, alpha, a)(v)


def apply_real_annihilator(alpha: int, a: int, v: State) -> State:
    alpha = check_index("apply_real_annihilator", alpha, v.params.n)
    a = check_index("apply_real_annihilator", a, v.params.p)
    return real_annihilator(v.params, alpha, a)(v)
