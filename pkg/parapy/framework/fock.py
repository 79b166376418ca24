"""The Green's ansatz representation space in the A-basis.

A basis ket is a monomial in the mutually commuting creation operators A†_α^{k±} (and b†_α^p
for odd p) applied to the Fock vacuum, tensored with a spin weight vector ω(s¹, ..., s^q) of the
Clifford module. Public indices (alpha, k, a) are 1-based, storage is 0-based.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, NamedTuple, Optional, Tuple

from sympy import binomial

import parapy
from parapy.framework.errors import CapacityError, MixedDegreeError, ParamsMismatchError, ZeroStateError
from parapy.framework.scalar import ONE, Rational, Scalar, ScalarLike, ZERO, rational

PLUS = "+"
MINUS = "-"
ODD = "p"


@dataclass(frozen=True)
class ModelParams:
    n: int
    p: int

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"[ModelParams] n must be a positive integer, got '{self.n}'")
        if not isinstance(self.p, int) or self.p < 1:
            raise ValueError(f"[ModelParams] p must be a positive integer, got '{self.p}'")

    @property
    def q(self) -> int:
        return self.p // 2

    @property
    def eps(self) -> int:
        return self.p % 2

    @property
    def num_modes(self) -> int:
        return self.n * self.p

    @property
    def spin_dimension(self) -> int:
        return 2 ** self.q

    @property
    def vacuum_energy(self) -> Rational:
        return rational(self.n * self.p, 2)

    def __str__(self) -> str:
        return f"(n={self.n}, p={self.p})"


class SpinState(NamedTuple):
    """Spin weights s^k = sign_k / 2, stored as signs +1 / -1."""
    signs: Tuple[int, ...]

    @property
    def weights(self) -> Tuple[Rational, ...]:
        return tuple(rational(sign, 2) for sign in self.signs)

    @staticmethod
    def highest(q: int) -> SpinState:
        return SpinState(signs=(1,) * q)

    @staticmethod
    def from_string(text: str) -> SpinState:
        return SpinState(signs=tuple(1 if char == "+" else -1 for char in text))

    def flipped(self, k: int) -> SpinState:
        signs = list(self.signs)
        signs[k] = -signs[k]
        return SpinState(signs=tuple(signs))

    def __str__(self) -> str:
        return "".join("+" if sign > 0 else "-" for sign in self.signs)


def all_spin_states(q: int) -> List[SpinState]:
    states = [()]
    for _ in range(q):
        states = [state + (sign,) for state in states for sign in (1, -1)]
    return [SpinState(signs=signs) for signs in states]


class Mode(NamedTuple):
    """One bosonic mode of the A-basis: A_α^{k+}, A_α^{k-}, or the odd mode b_α^p (k unused)."""
    alpha: int
    kind: str
    k: int = 0

    def __str__(self) -> str:
        if self.kind == ODD:
            return f"b[{self.alpha + 1},p]"
        return f"A[{self.alpha + 1},{self.k + 1},{self.kind}]"


def all_modes(params: ModelParams) -> List[Mode]:
    modes = []
    for alpha in range(params.n):
        for k in range(params.q):
            modes.append(Mode(alpha, PLUS, k))
            modes.append(Mode(alpha, MINUS, k))
        if params.eps:
            modes.append(Mode(alpha, ODD, 0))
    return modes


class OrbitalMonomial(NamedTuple):
    """Exponents of A†_α^{k+}, A†_α^{k-} (n x q) and of b†_α^p; ``odd`` is empty when p is even."""
    plus: Tuple[Tuple[int, ...], ...]
    minus: Tuple[Tuple[int, ...], ...]
    odd: Tuple[int, ...]

    @staticmethod
    def vacuum(params: ModelParams) -> OrbitalMonomial:
        row = (0,) * params.q
        return OrbitalMonomial(plus=(row,) * params.n, minus=(row,) * params.n,
                               odd=(0,) * params.n if params.eps else ())

    @staticmethod
    def from_flat(params: ModelParams, flat: Tuple[int, ...]) -> OrbitalMonomial:
        plus, minus, odd = [], [], []
        width = 2 * params.q + params.eps
        for alpha in range(params.n):
            chunk = flat[alpha * width:(alpha + 1) * width]
            plus.append(tuple(chunk[0:2 * params.q:2]))
            minus.append(tuple(chunk[1:2 * params.q:2]))
            if params.eps:
                odd.append(chunk[-1])
        return OrbitalMonomial(plus=tuple(plus), minus=tuple(minus), odd=tuple(odd))

    @property
    def n(self) -> int:
        return len(self.plus)

    @property
    def p(self) -> int:
        return 2 * len(self.plus[0]) + (1 if self.odd else 0)

    @property
    def flat(self) -> Tuple[int, ...]:
        values = []
        for alpha in range(self.n):
            for k in range(len(self.plus[alpha])):
                values.append(self.plus[alpha][k])
                values.append(self.minus[alpha][k])
            if self.odd:
                values.append(self.odd[alpha])
        return tuple(values)

    @property
    def degree(self) -> int:
        return sum(map(sum, self.plus)) + sum(map(sum, self.minus)) + sum(self.odd)

    def alpha_degree(self, alpha: int) -> int:
        return sum(self.plus[alpha]) + sum(self.minus[alpha]) + (self.odd[alpha] if self.odd else 0)

    def exponent(self, mode: Mode) -> int:
        if mode.kind == PLUS:
            return self.plus[mode.alpha][mode.k]
        if mode.kind == MINUS:
            return self.minus[mode.alpha][mode.k]
        return self.odd[mode.alpha]

    def shifted(self, mode: Mode, delta: int) -> Optional[OrbitalMonomial]:
        """Monomial with the exponent of ``mode`` changed by ``delta``, None if it would turn negative."""
        value = self.exponent(mode) + delta
        if value < 0:
            return None
        if mode.kind == ODD:
            odd = list(self.odd)
            odd[mode.alpha] = value
            return self._replace(odd=tuple(odd))
        rows = self.plus if mode.kind == PLUS else self.minus
        row = list(rows[mode.alpha])
        row[mode.k] = value
        rows = rows[:mode.alpha] + (tuple(row),) + rows[mode.alpha + 1:]
        if mode.kind == PLUS:
            return self._replace(plus=rows)
        return self._replace(minus=rows)

    def norm_squared(self) -> int:
        value = 1
        for exponent in self.flat:
            value *= math.factorial(exponent)
        return value

    def __str__(self) -> str:
        factors = []
        for alpha in range(self.n):
            for k in range(len(self.plus[alpha])):
                for kind, rows in ((PLUS, self.plus), (MINUS, self.minus)):
                    if rows[alpha][k]:
                        factors.append(f"{Mode(alpha, kind, k)}^{rows[alpha][k]}")
            if self.odd and self.odd[alpha]:
                factors.append(f"{Mode(alpha, ODD)}^{self.odd[alpha]}")
        return " ".join(factors) if factors else "vac"


class BasisKet(NamedTuple):
    orb: OrbitalMonomial
    spin: SpinState

    @property
    def degree(self) -> int:
        return self.orb.degree

    def __str__(self) -> str:
        return f"{self.orb} | s={self.spin}"


@lru_cache(maxsize=1 << 16)
def ket_sort_key(ket: BasisKet) -> Tuple[int, ...]:
    """Lexicographic order: α-major, then k, then +/-, then odd, then spin (+ before -).

    Higher exponents come first, so (A†_1^{1+})^d leads its shell.
    """
    return tuple(-exponent for exponent in ket.orb.flat) + tuple(0 if sign > 0 else 1 for sign in ket.spin.signs)


class OspWeight(NamedTuple):
    lam: Tuple[Rational, ...]

    def __str__(self) -> str:
        return "(" + ", ".join(str(value) for value in self.lam) + ")"


class GaugeWeight(NamedTuple):
    w: Tuple[Rational, ...]

    def __str__(self) -> str:
        return "(" + ", ".join(str(value) for value in self.w) + ")"


def _accumulate(terms: Dict[BasisKet, Scalar], ket: BasisKet, coefficient: Scalar) -> None:
    current = terms.get(ket)
    value = coefficient if current is None else current + coefficient
    if value.is_zero():
        terms.pop(ket, None)
    else:
        terms[ket] = value


class State:
    """Finite sparse linear combination of basis kets. Never mutated after construction."""

    def __init__(self, params: ModelParams, terms: Optional[Dict[BasisKet, Scalar]] = None) -> None:
        self._params = params
        self._terms: Dict[BasisKet, Scalar] = dict()
        if terms:
            for ket, coefficient in terms.items():
                if not coefficient.is_zero():
                    self._terms[ket] = coefficient

    @staticmethod
    def zero(params: ModelParams) -> State:
        return State(params)

    @staticmethod
    def basis(params: ModelParams, ket: BasisKet, coefficient: ScalarLike = ONE) -> State:
        return State(params, {ket: Scalar.coerce(coefficient)})

    @staticmethod
    def from_terms(params: ModelParams, terms: Iterable[Tuple[BasisKet, Scalar]]) -> State:
        accumulated: Dict[BasisKet, Scalar] = dict()
        for ket, coefficient in terms:
            _accumulate(accumulated, ket, coefficient)
        state = State(params)
        state._terms = accumulated
        return state

    @property
    def params(self) -> ModelParams:
        return self._params

    @property
    def terms(self) -> Dict[BasisKet, Scalar]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[BasisKet, Scalar]]:
        return iter(self._terms.items())

    def sorted_items(self) -> List[Tuple[BasisKet, Scalar]]:
        return sorted(self._terms.items(), key=lambda item: ket_sort_key(item[0]))

    def kets(self) -> List[BasisKet]:
        return list(self._terms.keys())

    def coefficient(self, ket: BasisKet) -> Scalar:
        return self._terms.get(ket, ZERO)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def _check(self, other: State) -> None:
        if self.params != other.params:
            raise ParamsMismatchError(f"[State] Cannot combine states of {self.params} and {other.params}")

    def __add__(self, other: State) -> State:
        self._check(other)
        terms = dict(self._terms)
        for ket, coefficient in other.items():
            _accumulate(terms, ket, coefficient)
        state = State(self.params)
        state._terms = terms
        return state

    def __sub__(self, other: State) -> State:
        return self + (-other)

    def __neg__(self) -> State:
        state = State(self.params)
        state._terms = {ket: -coefficient for ket, coefficient in self._terms.items()}
        return state

    def __mul__(self, factor: ScalarLike) -> State:
        factor = Scalar.coerce(factor)
        if factor.is_zero():
            return State.zero(self.params)
        state = State(self.params)
        state._terms = {ket: coefficient * factor for ket, coefficient in self._terms.items()}
        return state

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, State):
            return NotImplemented
        return self.params == other.params and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.params, frozenset(self._terms.items())))

    def project(self, predicate) -> State:
        state = State(self.params)
        state._terms = {ket: coefficient for ket, coefficient in self._terms.items() if predicate(ket)}
        return state

    def with_spin(self, spin: SpinState) -> State:
        """Replace the spin part of every ket (meant for states whose kets share one spin)."""
        return State.from_terms(self.params, ((BasisKet(ket.orb, spin), coefficient)
                                              for ket, coefficient in self._terms.items()))

    def __repr__(self) -> str:
        return f"State({self.params}, {self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"({coefficient}) {ket}" for ket, coefficient in self.sorted_items())


def vacuum_ket(params: ModelParams, spin: Optional[SpinState] = None) -> BasisKet:
    spin = SpinState.highest(params.q) if spin is None else spin
    return BasisKet(OrbitalMonomial.vacuum(params), spin)


def vacuum_state(params: ModelParams, spin: Optional[SpinState] = None) -> State:
    return State.basis(params, vacuum_ket(params, spin))


def shell_size(params: ModelParams, d: int) -> int:
    return int(binomial(params.num_modes + d - 1, d)) * params.spin_dimension


def _compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def enumerate_orbital_level(params: ModelParams, d: int) -> List[OrbitalMonomial]:
    return [OrbitalMonomial.from_flat(params, flat) for flat in _compositions(d, params.num_modes)]


def enumerate_level(params: ModelParams, d: int, capacity: Optional[int] = None) -> List[BasisKet]:
    capacity = parapy.capacity if capacity is None else capacity
    size = shell_size(params, d)
    if size > capacity:
        raise CapacityError(f"[enumerate_level] Shell {params} at degree {d} has {size} kets, "
                            f"capacity is {capacity}")
    spins = all_spin_states(params.q)
    return [BasisKet(orb, spin) for orb in enumerate_orbital_level(params, d) for spin in spins]


def inner_product(u: State, v: State) -> Scalar:
    """⟨u, v⟩, conjugate-linear in ``u``. The A-modes are canonical bosons, so ⟨m|m⟩ = Π e!."""
    if u.params != v.params:
        raise ParamsMismatchError(f"[inner_product] {u.params} vs {v.params}")
    smaller, larger = (u, v) if len(u) <= len(v) else (v, u)
    value = ZERO
    for ket in smaller.kets():
        if larger.coefficient(ket).is_zero():
            continue
        value = value + u.coefficient(ket).conjugate() * v.coefficient(ket) * ket.orb.norm_squared()
    return value


def osp_weight(ket: BasisKet) -> OspWeight:
    half_p = rational(ket.orb.p, 2)
    return OspWeight(lam=tuple(ket.orb.alpha_degree(alpha) + half_p for alpha in range(ket.orb.n)))


def orbital_gauge_weight(ket: BasisKet) -> Tuple[int, ...]:
    return tuple(sum(ket.orb.plus[alpha][k] - ket.orb.minus[alpha][k] for alpha in range(ket.orb.n))
                 for k in range(len(ket.spin.signs)))


def gauge_weight(ket: BasisKet) -> GaugeWeight:
    return GaugeWeight(w=tuple(orbital + rational(sign, 2)
                               for orbital, sign in zip(orbital_gauge_weight(ket), ket.spin.signs)))


def grade(v: State) -> int:
    if v.is_zero():
        raise ZeroStateError("[grade] The zero state has no degree")
    degrees = {ket.degree for ket in v.kets()}
    if len(degrees) > 1:
        raise MixedDegreeError(f"[grade] State mixes degrees {sorted(degrees)}")
    return degrees.pop()
