"""Generators of the gauge group Spin(p) / Pin(p), which commute with all of osp(1|2n).

G^{ab} = -i Σ_α (b†^a_α b^b_α - b†^b_α b^a_α) - (i/4) [e^a, e^b]

In this orientation G^{2k-1,2k} is diagonal with eigenvalue w^k (the gauge weight of a ket). Root
vectors, for k < l and signs s, t:

G_{sδk+tδl} = Σ_α (A†_α^{k,s} A_α^{l,-t} - A†_α^{l,t} A_α^{k,-s}) + ½ e^{k,s} e^{l,t}
G_{sδk}     = Σ_α (A†_α^{k,s} b_α^p - b†_α^p A_α^{k,-s}) + ½ e^{k,s} e^p          (p odd)
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable, List, NamedTuple, Optional, Tuple

from parapy.framework.errors import InvalidLabelError, ParityError
from parapy.framework.fock import BasisKet, MINUS, Mode, ModelParams, ODD, PLUS, State
from parapy.framework.labels import check_index, normalize_sign
from parapy.framework.operator import FACTORY_CACHE_SIZE, Operator, Product, Sum
from parapy.framework.scalar import HALF, I, ONE, Scalar, rational
from parapy.instances.operators.modes import mode_annihilator, mode_creator, real_annihilator, real_creator
from parapy.instances.operators.spin import chirality, clifford_ep, clifford_generator, spin_raise

LONG_KINDS = ("++", "+-", "-+", "--")
SHORT_KINDS = ("+", "-")


class GaugeGenerator(Sum):
    def __init__(self, params: ModelParams, a: int, b: int) -> None:
        minus_i = -I
        orbital_terms = []
        for alpha in range(params.n):
            orbital_terms.append((minus_i, Product(params, [real_creator(params, alpha, a),
                                                            real_annihilator(params, alpha, b)])))
            orbital_terms.append((I, Product(params, [real_creator(params, alpha, b),
                                                      real_annihilator(params, alpha, a)])))
        name = f"G({a + 1},{b + 1})"
        self.orbital_part = Sum(params, orbital_terms, name=f"{name}_orb")
        e_a, e_b = clifford_generator(params, a), clifford_generator(params, b)
        quarter_i = I * rational(1, 4)
        self.spin_part = Sum(params, [(-quarter_i, Product(params, [e_a, e_b])),
                                      (quarter_i, Product(params, [e_b, e_a]))], name=f"{name}_spin")
        super().__init__(params, [(ONE, self.orbital_part), (ONE, self.spin_part)], name=name)


@lru_cache(maxsize=FACTORY_CACHE_SIZE)
def gauge_generator(params: ModelParams, a: int, b: int) -> GaugeGenerator:
    return GaugeGenerator(params, a, b)


class GaugeRootLabel(NamedTuple):
    """``kind`` is "++", "+-", "-+", "--" for G_{±δk±δl} (k < l) or "+", "-" for G_{±δk}; 1-based."""
    kind: str
    k: int
    l: Optional[int] = None

    @property
    def is_short(self) -> bool:
        return self.kind in SHORT_KINDS

    @property
    def is_positive(self) -> bool:
        return self.kind[0] == "+"

    @property
    def signs(self) -> Tuple[int, ...]:
        return tuple(normalize_sign(char) for char in self.kind)

    def validate(self, params: ModelParams) -> None:
        if self.kind in LONG_KINDS:
            check_index("GaugeRootLabel", self.k, params.q)
            check_index("GaugeRootLabel", self.l, params.q)
            if not self.k < self.l:
                raise InvalidLabelError(f"[GaugeRootLabel] Long roots need k < l, got k={self.k}, l={self.l}")
        elif self.kind in SHORT_KINDS:
            if not params.eps:
                raise InvalidLabelError(f"[GaugeRootLabel] Short root '{self}' requires odd p, got p={params.p}")
            if self.l is not None:
                raise InvalidLabelError(f"[GaugeRootLabel] Short root '{self}' takes a single index")
            check_index("GaugeRootLabel", self.k, params.q)
        else:
            raise InvalidLabelError(f"[GaugeRootLabel] Unknown kind '{self.kind}'")

    def root(self, q: int) -> Tuple[int, ...]:
        """Shift of the gauge weight caused by the root vector."""
        shift = [0] * q
        signs = self.signs
        shift[self.k - 1] += signs[0]
        if not self.is_short:
            shift[self.l - 1] += signs[1]
        return tuple(shift)

    def __str__(self) -> str:
        if self.is_short:
            return f"Groot({self.kind},{self.k})"
        return f"Groot({self.kind},{self.k},{self.l})"


def _a_mode(alpha: int, k: int, sign: int) -> Mode:
    return Mode(alpha, PLUS if sign > 0 else MINUS, k)


class GaugeRoot(Sum):
    def __init__(self, params: ModelParams, label: GaugeRootLabel) -> None:
        label.validate(params)
        k = label.k - 1
        s = label.signs[0]
        orbital_terms = []
        if label.is_short:
            for alpha in range(params.n):
                odd = Mode(alpha, ODD)
                orbital_terms.append((ONE, Product(params, [mode_creator(params, _a_mode(alpha, k, s)),
                                                            mode_annihilator(params, odd)])))
                orbital_terms.append((-ONE, Product(params, [mode_creator(params, odd),
                                                             mode_annihilator(params, _a_mode(alpha, k, -s))])))
            spin_factors = [spin_raise(params, k, s), clifford_ep(params)]
        else:
            l, t = label.l - 1, label.signs[1]
            for alpha in range(params.n):
                orbital_terms.append((ONE, Product(params, [mode_creator(params, _a_mode(alpha, k, s)),
                                                            mode_annihilator(params, _a_mode(alpha, l, -t))])))
                orbital_terms.append((-ONE, Product(params, [mode_creator(params, _a_mode(alpha, l, t)),
                                                             mode_annihilator(params, _a_mode(alpha, k, -s))])))
            spin_factors = [spin_raise(params, k, s), spin_raise(params, l, t)]
        self.label = label
        self.orbital_part = Sum(params, orbital_terms, name=f"{label}_orb")
        self.spin_part = Sum(params, [(HALF, Product(params, spin_factors))], name=f"{label}_spin")
        super().__init__(params, [(ONE, self.orbital_part), (ONE, self.spin_part)], name=str(label))


@lru_cache(maxsize=FACTORY_CACHE_SIZE)
def gauge_root(params: ModelParams, label: GaugeRootLabel) -> GaugeRoot:
    return GaugeRoot(params, label)


def positive_root_labels(params: ModelParams) -> List[GaugeRootLabel]:
    labels = []
    for k in range(1, params.q + 1):
        for l in range(k + 1, params.q + 1):
            labels.append(GaugeRootLabel("++", k, l))
            labels.append(GaugeRootLabel("+-", k, l))
        if params.eps:
            labels.append(GaugeRootLabel("+", k))
    return labels


def negative_root_labels(params: ModelParams) -> List[GaugeRootLabel]:
    flip = {"++": "--", "+-": "-+", "+": "-"}
    return [label._replace(kind=flip[label.kind]) for label in positive_root_labels(params)]


def positive_roots(params: ModelParams) -> List[Tuple[int, ...]]:
    return [label.root(params.q) for label in positive_root_labels(params)]


class InversionOrbital(Operator):
    """I^a on the bose factor: b^a_α ↦ -b^a_α, so A^{k±} ↦ -A^{k∓} (a = 2k-1) or A^{k∓} (a = 2k)."""

    def __init__(self, params: ModelParams, a: int) -> None:
        super().__init__(params, name=f"I({a + 1})_orb")
        self._k, self._imaginary = divmod(a, 2)

    def _act(self, ket: BasisKet) -> Iterable[Tuple[BasisKet, Scalar]]:
        k = self._k
        plus = tuple(row[:k] + (minus_row[k],) + row[k + 1:] for row, minus_row in zip(ket.orb.plus, ket.orb.minus))
        minus = tuple(row[:k] + (plus_row[k],) + row[k + 1:] for row, plus_row in zip(ket.orb.minus, ket.orb.plus))
        coefficient = ONE
        if not self._imaginary and sum(row[k] for row in plus + minus) % 2:
            coefficient = -ONE
        return [(BasisKet(ket.orb._replace(plus=plus, minus=minus), ket.spin), coefficient)]


class Inversion(Product):
    """I^a = I^a_orb ⊗ (-i ē e^a); an involution commuting with b_α, b†_α."""

    def __init__(self, params: ModelParams, a: int) -> None:
        if params.eps:
            raise ParityError(f"[Inversion] Inversions are used only for even p, got p={params.p}")
        self.orbital_part = InversionOrbital(params, a)
        self.spin_part = Sum(params, [(-I, Product(params, [chirality(params), clifford_generator(params, a)]))],
                             name=f"I({a + 1})_spin")
        super().__init__(params, [self.orbital_part, self.spin_part], name=f"I({a + 1})")


@lru_cache(maxsize=FACTORY_CACHE_SIZE)
def inversion(params: ModelParams, a: int) -> Inversion:
    return Inversion(params, a)


def apply_gauge(a: int, b: int, v: State) -> State:
    a = check_index("apply_gauge", a, v.params.p)
    b = check_index("apply_gauge", b, v.params.p)
    if a == b:
        raise InvalidLabelError(f"[apply_gauge] G^{{ab}} needs a != b, got a = b = {a + 1}")
    return gauge_generator(v.params, a, b)(v)


def apply_gauge_root(r: GaugeRootLabel, v: State) -> State:
    return gauge_root(v.params, r)(v)


def apply_inversion(a: int, v: State) -> State:
    if v.params.eps:
        raise ParityError(f"[apply_inversion] Inversions require even p, got p={v.params.p}")
    return inversion(v.params, check_index("apply_inversion", a, v.params.p))(v)


def gauge_orbital_part(a: int, b: int, params: ModelParams) -> Operator:
    return gauge_generator(params, check_index("G", a, params.p), check_index("G", b, params.p)).orbital_part


def gauge_spin_part(a: int, b: int, params: ModelParams) -> Operator:
    return gauge_generator(params, check_index("G", a, params.p), check_index("G", b, params.p)).spin_part
