from __future__ import annotations

import abc
from typing import Iterable, List, Optional, Sequence, Tuple

from cachetools import LRUCache

from parapy.framework.errors import ParamsMismatchError
from parapy.framework.fock import BasisKet, ModelParams, State
from parapy.framework.scalar import ONE, Scalar, ScalarLike

Terms = List[Tuple[BasisKet, Scalar]]

# Ket images cached per operator instance
KET_CACHE_SIZE = 1 << 16
# Operators cached per factory function
FACTORY_CACHE_SIZE = 1024


class Operator(metaclass=abc.ABCMeta):
    """Linear map on the representation space, defined by its action on basis kets.

    Ket images live in a bounded LRU cache per instance; operators themselves are never mutated.
    """

    def __init__(self, params: ModelParams, name: Optional[str] = None) -> None:
        self._params = params
        self._name = name if name is not None else self.__class__.__name__
        self._cache: LRUCache = LRUCache(maxsize=KET_CACHE_SIZE)

    @property
    def params(self) -> ModelParams:
        return self._params

    @property
    def name(self) -> str:
        return self._name

    @abc.abstractmethod
    def _act(self, ket: BasisKet) -> Iterable[Tuple[BasisKet, Scalar]]:
        raise NotImplementedError

    def on_ket(self, ket: BasisKet) -> Terms:
        terms = self._cache.get(ket)
        if terms is None:
            terms = State.from_terms(self.params, self._act(ket)).sorted_items()
            self._cache[ket] = terms
        return terms

    def __call__(self, state: State) -> State:
        if state.params != self.params:
            raise ParamsMismatchError(f"[{self.name}] Operator on {self.params} applied to a state of {state.params}")
        return State.from_terms(self.params, ((image, coefficient * factor)
                                              for ket, coefficient in state.items()
                                              for image, factor in self.on_ket(ket)))

    def _check(self, other: Operator) -> None:
        if other.params != self.params:
            raise ParamsMismatchError(f"[{self.name}] Cannot combine with an operator on {other.params}")

    def __matmul__(self, other: Operator) -> Operator:
        self._check(other)
        return Product(self.params, [self, other])

    def __add__(self, other: Operator) -> Operator:
        self._check(other)
        return Sum(self.params, [(ONE, self), (ONE, other)])

    def __sub__(self, other: Operator) -> Operator:
        self._check(other)
        return Sum(self.params, [(ONE, self), (-ONE, other)])

    def __neg__(self) -> Operator:
        return Sum(self.params, [(-ONE, self)])

    def __rmul__(self, factor: ScalarLike) -> Operator:
        return Sum(self.params, [(Scalar.coerce(factor), self)])

    def __repr__(self) -> str:
        return f"{self.name}{self.params}"


class Identity(Operator):
    def __init__(self, params: ModelParams) -> None:
        super().__init__(params, name="1")

    def _act(self, ket: BasisKet) -> Iterable[Tuple[BasisKet, Scalar]]:
        return [(ket, ONE)]


class Product(Operator):
    """Composition; the rightmost factor acts first."""

    def __init__(self, params: ModelParams, factors: Sequence[Operator], name: Optional[str] = None) -> None:
        super().__init__(params, name=name if name is not None else " ".join(factor.name for factor in factors))
        self._factors = list(factors)

    @property
    def factors(self) -> List[Operator]:
        return self._factors

    def _act(self, ket: BasisKet) -> Iterable[Tuple[BasisKet, Scalar]]:
        state = State.basis(self.params, ket)
        for factor in reversed(self._factors):
            state = factor(state)
            if state.is_zero():
                return []
        return state.items()


class Sum(Operator):
    def __init__(self, params: ModelParams, terms: Sequence[Tuple[Scalar, Operator]],
                 name: Optional[str] = None) -> None:
        super().__init__(params, name=name if name is not None else
                         "(" + " + ".join(f"{coefficient}*{operator.name}" for coefficient, operator in terms) + ")")
        self._terms = list(terms)

    @property
    def terms(self) -> List[Tuple[Scalar, Operator]]:
        return self._terms

    def _act(self, ket: BasisKet) -> Iterable[Tuple[BasisKet, Scalar]]:
        for coefficient, operator in self._terms:
            for image, factor in operator.on_ket(ket):
                yield image, coefficient * factor


def linear_combination(params: ModelParams, terms: Sequence[Tuple[ScalarLike, Operator]],
                       name: Optional[str] = None) -> Sum:
    return Sum(params, [(Scalar.coerce(coefficient), operator) for coefficient, operator in terms], name=name)


def commutator(a: Operator, b: Operator) -> Operator:
    return Sum(a.params, [(ONE, a @ b), (-ONE, b @ a)], name=f"[{a.name}, {b.name}]")


def anticommutator(a: Operator, b: Operator) -> Operator:
    return Sum(a.params, [(ONE, a @ b), (ONE, b @ a)], name=f"{{{a.name}, {b.name}}}")
