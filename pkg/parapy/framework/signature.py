"""Signatures of osp(1|2n) and gauge-group irreps, the bijection between them and so(p) root data."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import List, Optional, Sequence, Tuple

from parapy.framework.errors import NonDominantWeightError
from parapy.framework.fock import ModelParams, OspWeight
from parapy.framework.scalar import Rational, parse_rational, rational

HALF_Q = rational(1, 2)


def _is_integer(value: Rational) -> bool:
    return value.denominator == 1


def _to_int(value: Rational) -> int:
    return int(value.numerator) // int(value.denominator)


def _format(value: Rational) -> str:
    return str(int(value.numerator)) if value.denominator == 1 else f"{int(value.numerator)}/{int(value.denominator)}"


@dataclass(frozen=True)
class OspSignature:
    """[d; s_1, ..., s_{n-1}] with d = λ_1 and s_α = λ_{α+1} - λ_α."""
    d: Rational
    s: Tuple[int, ...] = ()

    @staticmethod
    def parse(text: str) -> OspSignature:
        head, _, tail = text.partition(";")
        s = tuple(int(part) for part in tail.split(",") if part.strip()) if tail.strip() else ()
        return OspSignature(d=parse_rational(head), s=s)

    @staticmethod
    def from_weight(weight: OspWeight) -> OspSignature:
        lam = weight.lam
        return OspSignature(d=lam[0], s=tuple(_to_int(lam[alpha + 1] - lam[alpha]) for alpha in range(len(lam) - 1)))

    @property
    def n(self) -> int:
        return len(self.s) + 1

    def s0(self, p: int) -> Rational:
        return self.d - rational(p, 2)

    def lowest_weight(self) -> Tuple[Rational, ...]:
        lam = [self.d]
        for step in self.s:
            lam.append(lam[-1] + step)
        return tuple(lam)

    def degree(self, p: int) -> Rational:
        """Degree of the lowest-weight vector: Σ_α (λ_α - p/2)."""
        return sum((value - rational(p, 2) for value in self.lowest_weight()), rational(0))

    def energy(self) -> Rational:
        return sum(self.lowest_weight(), rational(0))

    def __str__(self) -> str:
        if not self.s:
            return f"[{_format(self.d)}]"
        return f"[{_format(self.d)}; " + ", ".join(map(str, self.s)) + "]"


@dataclass(frozen=True)
class GaugeSignature:
    """[σ^1, ..., σ^q], with highest weight μ^q = σ^q + 1/2 and μ^k = μ^{k+1} + σ^k."""
    sigma: Tuple[int, ...]

    @property
    def mu(self) -> Tuple[Rational, ...]:
        if not self.sigma:
            return ()
        mu = [self.sigma[-1] + HALF_Q]
        for value in reversed(self.sigma[:-1]):
            mu.append(mu[-1] + value)
        return tuple(reversed(mu))

    @staticmethod
    def from_mu(mu: Sequence[Rational]) -> GaugeSignature:
        mu = tuple(mu)
        if not mu:
            return GaugeSignature(sigma=())
        sigma = [mu[k] - mu[k + 1] for k in range(len(mu) - 1)] + [mu[-1] - HALF_Q]
        if any(value < 0 or not _is_integer(value) for value in sigma):
            raise NonDominantWeightError(f"[GaugeSignature] {tuple(map(_format, mu))} is not a spinorial Pin/Spin "
                                         f"highest weight")
        return GaugeSignature(sigma=tuple(_to_int(value) for value in sigma))

    def __str__(self) -> str:
        return "[" + ", ".join(map(str, self.sigma)) + "]"


def _s_entries(signature: OspSignature, p: int) -> Optional[List[int]]:
    s0 = signature.s0(p)
    if s0 < 0 or not _is_integer(s0):
        return None
    return [_to_int(s0)] + list(signature.s)


def signature_bijection(signature: OspSignature, params: ModelParams) -> Optional[GaugeSignature]:
    """σ_k = s_{n-k} with s_0 = d - p/2; None when the osp irrep does not occur at order p."""
    if signature.n != params.n:
        return None
    s = _s_entries(signature, params.p)
    if s is None or any(value < 0 for value in s):
        return None
    if any(s[alpha] for alpha in range(max(params.n - params.q, 0))):
        return None
    return GaugeSignature(sigma=tuple(s[params.n - k] if k <= params.n else 0 for k in range(1, params.q + 1)))


def osp_to_gauge(signature: OspSignature, params: ModelParams) -> Optional[GaugeSignature]:
    return signature_bijection(signature, params)


def gauge_to_osp(signature: GaugeSignature, params: ModelParams) -> Optional[OspSignature]:
    if len(signature.sigma) != params.q:
        return None
    if any(signature.sigma[k - 1] for k in range(params.n + 1, params.q + 1)):
        return None
    s = [0] * params.n
    for k in range(1, min(params.n, params.q) + 1):
        s[params.n - k] = signature.sigma[k - 1]
    return OspSignature(d=s[0] + rational(params.p, 2), s=tuple(s[1:]))


def so_positive_roots(p: int) -> List[Tuple[int, ...]]:
    q = p // 2
    roots = []
    for k, l in combinations(range(q), 2):
        for sign in (1, -1):
            root = [0] * q
            root[k], root[l] = 1, sign
            roots.append(tuple(root))
    if p % 2:
        for k in range(q):
            root = [0] * q
            root[k] = 1
            roots.append(tuple(root))
    return roots


def osp_positive_roots(n: int) -> List[Tuple[int, ...]]:
    """δ_α, δ_α + δ_β, δ_α - δ_β (α < β) and 2δ_α; lowest-weight irreps are killed by their negatives."""
    roots = []
    for alpha in range(n):
        roots.append(tuple(1 if index == alpha else 0 for index in range(n)))
    for alpha, beta in combinations(range(n), 2):
        for sign in (1, -1):
            root = [0] * n
            root[alpha], root[beta] = 1, sign
            roots.append(tuple(root))
    for alpha in range(n):
        roots.append(tuple(2 if index == alpha else 0 for index in range(n)))
    return roots


def osp_simple_roots(n: int) -> List[Tuple[int, ...]]:
    roots = []
    for alpha in range(n - 1):
        root = [0] * n
        root[alpha], root[alpha + 1] = 1, -1
        roots.append(tuple(root))
    roots.append(tuple(1 if index == n - 1 else 0 for index in range(n)))
    return roots


def rho(p: int) -> Tuple[Rational, ...]:
    q = p // 2
    shift = HALF_Q if p % 2 else rational(0)
    return tuple(rational(q - k - 1) + shift for k in range(q))


def _dot(u: Sequence[Rational], v: Sequence[Rational]) -> Rational:
    return sum((a * b for a, b in zip(u, v)), rational(0))


def is_dominant(p: int, mu: Sequence[Rational]) -> bool:
    q = p // 2
    if len(mu) != q:
        return False
    if q and len({_is_integer(value) for value in mu}) > 1:
        return False
    if any(mu[k] < mu[k + 1] for k in range(q - 1)):
        return False
    if q == 0:
        return True
    if p % 2:
        return mu[-1] >= 0
    return q == 1 or mu[-2] >= abs(mu[-1])


def casimir_value(p: int, mu: Sequence[Rational]) -> Rational:
    """<μ, μ + 2ρ>, the eigenvalue of Σ_{a>b} (G^{ab})^2."""
    return _dot(mu, [value + 2 * shift for value, shift in zip(mu, rho(p))])


def weyl_dim(p: int, mu: Sequence[Rational], pin_mode: bool = False) -> int:
    mu = tuple(rational(value) if isinstance(value, int) else value for value in mu)
    if not is_dominant(p, mu):
        raise NonDominantWeightError(f"[weyl_dim] {tuple(map(_format, mu))} is not so({p})-dominant")
    shift = rho(p)
    shifted = [value + offset for value, offset in zip(mu, shift)]
    dimension = rational(1)
    for root in so_positive_roots(p):
        dimension = dimension * _dot(shifted, root) / _dot(shift, root)
    if pin_mode and p % 2 == 0 and mu and mu[-1] > 0:
        dimension = dimension * 2
    return _to_int(dimension)


def spinor_tensor_product(mu_orb: Sequence[int], p: int) -> List[Tuple[Rational, ...]]:
    """so(p) highest weights in V(μ_orb) ⊗ spinor: μ_orb + ν over spinor weights ν, kept when dominant."""
    q = p // 2
    results = []
    for signs in product((1, -1), repeat=q):
        candidate = tuple(value + rational(sign, 2) for value, sign in zip(mu_orb, signs))
        if is_dominant(p, candidate):
            results.append(candidate)
    return sorted(set(results), reverse=True)
