"""Closed form of the joint osp-lowest / gauge-highest weight vector of a given osp signature.

Factor j (1 <= j <= n) antisymmetrizes the plus-creators of the last j rows over the first j
columns, Σ_σ sgn(σ) Π_i A†_{n+1-i}^{σ(i)+}, and is raised to the power s_{n-j}. The product acts
on vac ⊗ ω(½, ..., ½).
"""
from __future__ import annotations

from itertools import permutations
from typing import Dict, Tuple

from sympy.combinatorics import Permutation

from parapy.framework.errors import InvalidLabelError, NonexistenceError, ZeroVectorError
from parapy.framework.fock import BasisKet, ModelParams, OrbitalMonomial, SpinState, State
from parapy.framework.scalar import Scalar
from parapy.framework.signature import OspSignature, signature_bijection

Polynomial = Dict[Tuple[int, ...], int]


def _multiply(first: Polynomial, second: Polynomial) -> Polynomial:
    product: Polynomial = dict()
    for left, a in first.items():
        for right, b in second.items():
            key = tuple(x + y for x, y in zip(left, right))
            value = product.get(key, 0) + a * b
            if value:
                product[key] = value
            else:
                product.pop(key, None)
    return product


def _power(polynomial: Polynomial, exponent: int, size: int) -> Polynomial:
    result: Polynomial = {(0,) * size: 1}
    for _ in range(exponent):
        result = _multiply(result, polynomial)
    return result


def antisymmetrized_factor(params: ModelParams, j: int) -> Polynomial:
    """Σ_σ sgn(σ) Π_{i=1..j} A†_{n+1-i}^{σ(i)+} as a polynomial over flat exponent vectors."""
    width = 2 * params.q + params.eps
    size = params.n * width
    factor: Polynomial = dict()
    for perm in permutations(range(j)):
        flat = [0] * size
        for i, k in enumerate(perm):
            alpha = params.n - 1 - i
            flat[alpha * width + 2 * k] += 1
        sign = Permutation(list(perm)).signature()
        key = tuple(flat)
        factor[key] = factor.get(key, 0) + sign
    return {key: value for key, value in factor.items() if value}


def build_lwhw_vector(params: ModelParams, signature: OspSignature) -> State:
    if signature.n != params.n:
        raise InvalidLabelError(f"[build_lwhw_vector] {signature} is an osp(1|{2 * signature.n}) signature, "
                                f"the model has n={params.n}")
    if signature_bijection(signature, params) is None:
        raise NonexistenceError(f"[build_lwhw_vector] {signature} does not occur at order p={params.p}: "
                                f"d - p/2 = {signature.s0(params.p)} must be a nonnegative integer and "
                                f"s_α must vanish for α < n - q = {params.n - params.q}")
    s = [int(signature.s0(params.p).numerator)] + list(signature.s)
    size = params.n * (2 * params.q + params.eps)
    polynomial: Polynomial = {(0,) * size: 1}
    for j in range(1, params.n + 1):
        exponent = s[params.n - j]
        if not exponent:
            continue
        if j > params.q:
            raise ZeroVectorError(f"[build_lwhw_vector] Factor {j} antisymmetrizes over more than q={params.q} "
                                  f"columns and vanishes")
        polynomial = _multiply(polynomial, _power(antisymmetrized_factor(params, j), exponent, size))
    if not polynomial:
        raise ZeroVectorError(f"[build_lwhw_vector] {signature} expands to the zero vector")
    spin = SpinState.highest(params.q)
    vector = State.from_terms(params, ((BasisKet(OrbitalMonomial.from_flat(params, flat), spin), Scalar(value))
                                       for flat, value in polynomial.items()))
    _, leading = vector.sorted_items()[0]
    return vector * leading.inverse()
