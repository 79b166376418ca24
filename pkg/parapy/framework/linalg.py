"""Exact sparse linear algebra over Scalar.

Vectors are dicts from hashable keys to nonzero Scalars. Elimination is incremental: vectors are
inserted one at a time, sparsest first, and reduced against the pivots found so far, with the
pivot of a stored row always its smallest key in the given order.
"""
from __future__ import annotations

from typing import Callable, Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

from parapy.framework.errors import ParamsMismatchError
from parapy.framework.fock import BasisKet, ModelParams, State, ket_sort_key
from parapy.framework.operator import Operator
from parapy.framework.scalar import ONE, Scalar, ZERO

SparseVector = Dict[Hashable, Scalar]
OrderKey = Callable[[Hashable], Tuple]


def _axpy(target: SparseVector, factor: Scalar, source: SparseVector) -> None:
    """target += factor * source, dropping cancelled entries."""
    for key, value in source.items():
        current = target.get(key)
        updated = factor * value if current is None else current + factor * value
        if updated.is_zero():
            target.pop(key, None)
        else:
            target[key] = updated


def _scale(vector: SparseVector, factor: Scalar) -> SparseVector:
    return {key: value * factor for key, value in vector.items()}


class EchelonForm:
    """Incrementally built row-echelon form; optionally kept fully reduced."""

    def __init__(self, order: OrderKey, reduced: bool = False) -> None:
        self._order = order
        self._reduced = reduced
        self._rows: Dict[Hashable, Tuple[SparseVector, SparseVector]] = dict()

    @property
    def rank(self) -> int:
        return len(self._rows)

    def reduce(self, vector: SparseVector, combination: Optional[SparseVector] = None
               ) -> Tuple[SparseVector, SparseVector]:
        vector = dict(vector)
        combination = dict(combination) if combination is not None else dict()
        while True:
            present = [key for key in vector if key in self._rows]
            if not present:
                return vector, combination
            pivot = min(present, key=self._order)
            row, row_combination = self._rows[pivot]
            factor = -vector[pivot]
            _axpy(vector, factor, row)
            _axpy(combination, factor, row_combination)

    def insert(self, vector: SparseVector, combination: Optional[SparseVector] = None
               ) -> Tuple[bool, SparseVector]:
        """Returns (independent, combination); a dependent vector yields its vanishing combination."""
        vector, combination = self.reduce(vector, combination)
        if not vector:
            return False, combination
        pivot = min(vector, key=self._order)
        inverse = vector[pivot].inverse()
        vector, combination = _scale(vector, inverse), _scale(combination, inverse)
        if self._reduced:
            for key, (row, row_combination) in self._rows.items():
                factor = row.get(pivot)
                if factor is not None:
                    _axpy(row, -factor, vector)
                    _axpy(row_combination, -factor, combination)
        self._rows[pivot] = (vector, combination)
        return True, combination

    def rows(self) -> List[SparseVector]:
        return [self._rows[pivot][0] for pivot in sorted(self._rows, key=self._order)]


def nullspace(columns: Sequence[SparseVector], order: OrderKey) -> List[SparseVector]:
    """Basis of {c : Σ_i c_i columns[i] = 0}, as sparse vectors over column indices."""
    echelon = EchelonForm(order)
    kernel = []
    for index in sorted(range(len(columns)), key=lambda i: len(columns[i])):
        independent, combination = echelon.insert(columns[index], {index: ONE})
        if not independent:
            kernel.append(combination)
    return kernel


def _ket_order(key: BasisKet) -> Tuple:
    return ket_sort_key(key)


def _tagged_order(key: Tuple[int, BasisKet]) -> Tuple:
    return (key[0],) + ket_sort_key(key[1])


def _params_of(states: Sequence[State]) -> ModelParams:
    params = {state.params for state in states}
    if len(params) > 1:
        raise ParamsMismatchError(f"[linalg] States from several models: {sorted(map(str, params))}")
    return params.pop()


def span_basis(states: Iterable[State]) -> List[State]:
    """Canonical basis of the span: reduced echelon form, the leading ket of each vector has coefficient 1."""
    states = [state for state in states if not state.is_zero()]
    if not states:
        return []
    params = _params_of(states)
    echelon = EchelonForm(_ket_order, reduced=True)
    for state in sorted(states, key=len):
        echelon.insert(state.terms)
    return [State(params, row) for row in echelon.rows()]


def rank(states: Iterable[State]) -> int:
    return len(span_basis(states))


def contains(basis: Sequence[State], v: State) -> bool:
    """Whether v lies in the span of ``basis``."""
    if v.is_zero():
        return True
    echelon = EchelonForm(_ket_order)
    for state in basis:
        echelon.insert(state.terms)
    remainder, _ = echelon.reduce(v.terms)
    return not remainder


def same_span(first: Sequence[State], second: Sequence[State]) -> bool:
    return all(contains(first, v) for v in second) and all(contains(second, v) for v in first)


def combine(basis: Sequence[State], coefficients: SparseVector) -> State:
    params = _params_of(basis)
    state = State.zero(params)
    for index, coefficient in coefficients.items():
        state = state + basis[index] * coefficient
    return state


def kernel_within(basis: Sequence[State], operators: Sequence[Operator]) -> List[State]:
    """Canonical basis of the joint kernel of ``operators`` restricted to span(basis)."""
    if not basis:
        return []
    if not operators:
        return span_basis(basis)
    columns = []
    for state in basis:
        column = dict()
        for index, operator in enumerate(operators):
            for ket, coefficient in operator(state).items():
                column[(index, ket)] = coefficient
        columns.append(column)
    return span_basis(combine(basis, coefficients) for coefficients in nullspace(columns, _tagged_order))


def split_by_weight(basis: Sequence[State], weight: Callable[[BasisKet], Hashable]) -> Dict[Hashable, List[State]]:
    """Weight-space decomposition of a subspace that is invariant under the diagonal operators behind ``weight``."""
    pieces: Dict[Hashable, List[State]] = dict()
    for state in basis:
        by_weight: Dict[Hashable, Dict[BasisKet, Scalar]] = dict()
        for ket, coefficient in state.items():
            by_weight.setdefault(weight(ket), dict())[ket] = coefficient
        for key, terms in by_weight.items():
            pieces.setdefault(key, []).append(State(state.params, terms))
    return {key: span_basis(states) for key, states in pieces.items()}


def proportionality(u: State, v: State) -> Optional[Scalar]:
    """The factor c with u = c v, or None when u and v are not proportional (v nonzero)."""
    if v.is_zero():
        return None
    if u.is_zero():
        return ZERO
    if set(u.kets()) != set(v.kets()):
        return None
    ket = v.kets()[0]
    factor = u.coefficient(ket) / v.coefficient(ket)
    return factor if v * factor == u else None


def closure(states: Iterable[State], operators: Sequence[Operator]) -> List[State]:
    """Smallest subspace containing ``states`` and invariant under ``operators``."""
    states = [state for state in states if not state.is_zero()]
    if not states:
        return []
    echelon = EchelonForm(_ket_order)
    found = []
    for state in states:
        independent, _ = echelon.insert(state.terms)
        if independent:
            found.append(state)
    queue = list(found)
    while queue:
        state = queue.pop()
        for operator in operators:
            image = operator(state)
            if image.is_zero():
                continue
            independent, _ = echelon.insert(image.terms)
            if independent:
                found.append(image)
                queue.append(image)
    return span_basis(found)
