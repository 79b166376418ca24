"""Images of noncovariant Green-component words in the covariant space.

The map b̃†^a_α = b†^a_α e^a is invertible; components with different a anticommute, so a word is an
ordered product and its image carries the sign of the ordering.
"""
from __future__ import annotations

from functools import lru_cache
from typing import List, Sequence, Tuple, Union

from parapy.framework.fock import ModelParams, SpinState, State, all_spin_states, vacuum_state
from parapy.framework.labels import check_index
from parapy.framework.operator import FACTORY_CACHE_SIZE, Operator, Product
from parapy.instances.operators.modes import real_creator
from parapy.instances.operators.spin import clifford_generator

Word = Sequence[Tuple[int, int]]
ALL_SPINS = "all"


@lru_cache(maxsize=FACTORY_CACHE_SIZE)
def green_component_creator(params: ModelParams, alpha: int, a: int) -> Operator:
    return Product(params, [real_creator(params, alpha, a), clifford_generator(params, a)],
                   name=f"bt~[{alpha + 1},{a + 1}]")


def _word_operator(params: ModelParams, word: Word) -> List[Operator]:
    return [green_component_creator(params, check_index("from_noncovariant", alpha, params.n),
                                    check_index("from_noncovariant", a, params.p))
            for alpha, a in word]


def from_noncovariant(params: ModelParams, word: Word,
                      spin: Union[SpinState, str, None] = None) -> Union[State, List[State]]:
    """Applies the word right-to-left to vac ⊗ ω(spin); ``spin="all"`` returns one image per spin vector."""
    if spin == ALL_SPINS:
        return from_noncovariant_all(params, word)
    factors = _word_operator(params, word)
    state = vacuum_state(params, spin)
    for factor in reversed(factors):
        state = factor(state)
    return state


def from_noncovariant_all(params: ModelParams, word: Word) -> List[State]:
    return [from_noncovariant(params, word, spin) for spin in all_spin_states(params.q)]
