"""Even sp(2n) generators, expanded in the A-basis (spin factor untouched).

{b†_α, b_β}  = 2 Σ_k (A†_α^{k+} A_β^{k+} + A†_α^{k-} A_β^{k-}) + 2ε b†_α^p b_β^p + p δ_αβ
{b†_α, b†_β} = 2 Σ_k (A†_α^{k+} A†_β^{k-} + A†_α^{k-} A†_β^{k+}) + 2ε b†_α^p b†_β^p
{b_α, b_β}   = 2 Σ_k (A_α^{k+} A_β^{k-} + A_α^{k-} A_β^{k+}) + 2ε b_α^p b_β^p

The cross terms follow from {e^{k+}, e^{l-}} = 2δ^{kl}, {e^{k±}, e^{l±}} = 0 and (e^p)^2 = 1; the
constant comes from reordering A_β A†_α when α = β.
"""
from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple

from parapy.framework.errors import InvalidLabelError
from parapy.framework.fock import Mode, ModelParams, ODD, State
from parapy.framework.labels import check_index
from parapy.framework.operator import FACTORY_CACHE_SIZE, Identity, Operator, Product, Sum
from parapy.framework.scalar import Scalar
from parapy.instances.operators.modes import mode_annihilator, mode_creator, plus_minus_modes

CREATE_CREATE = "create_create"
CREATE_ANNIH = "create_annih"
ANNIH_ANNIH = "annih_annih"
EVEN_KINDS = (CREATE_CREATE, CREATE_ANNIH, ANNIH_ANNIH)


class EvenOpLabel(NamedTuple):
    kind: str
    alpha: int
    beta: int

    def validate(self, params: ModelParams) -> None:
        if self.kind not in EVEN_KINDS:
            raise InvalidLabelError(f"[EvenOpLabel] Unknown kind '{self.kind}', expected one of {EVEN_KINDS}")
        check_index("EvenOpLabel", self.alpha, params.n)
        check_index("EvenOpLabel", self.beta, params.n)

    def __str__(self) -> str:
        return f"even({self.kind},{self.alpha},{self.beta})"


@lru_cache(maxsize=FACTORY_CACHE_SIZE)
def even_operator(params: ModelParams, label: EvenOpLabel) -> Operator:
    label.validate(params)
    alpha, beta = label.alpha - 1, label.beta - 1
    two = Scalar(2)
    terms = []

    def left(mode: Mode) -> Operator:
        return mode_annihilator(params, mode) if label.kind == ANNIH_ANNIH else mode_creator(params, mode)

    def right(mode: Mode) -> Operator:
        return mode_creator(params, mode) if label.kind == CREATE_CREATE else mode_annihilator(params, mode)

    for k in range(params.q):
        alpha_plus, alpha_minus = plus_minus_modes(alpha, k)
        beta_plus, beta_minus = plus_minus_modes(beta, k)
        if label.kind == CREATE_ANNIH:
            pairs = ((alpha_plus, beta_plus), (alpha_minus, beta_minus))
        else:
            pairs = ((alpha_plus, beta_minus), (alpha_minus, beta_plus))
        for first, second in pairs:
            terms.append((two, Product(params, [left(first), right(second)])))
    if params.eps:
        terms.append((two, Product(params, [left(Mode(alpha, ODD)), right(Mode(beta, ODD))])))
    if label.kind == CREATE_ANNIH and alpha == beta:
        terms.append((Scalar(params.p), Identity(params)))
    return Sum(params, terms, name=str(label))


def apply_even(op: EvenOpLabel, v: State) -> State:
    return even_operator(v.params, op)(v)
