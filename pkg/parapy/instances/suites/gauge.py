from __future__ import annotations

from itertools import combinations

from parapy.framework.fock import ModelParams, gauge_weight, vacuum_state
from parapy.framework.operator import Identity, Operator, Sum, commutator
from parapy.framework.scalar import I, ONE, Scalar
from parapy.framework.suite import VerificationSuite
from parapy.instances.decomposers.spin_orbit import casimir_so_check, spin_weight
from parapy.instances.operators.gauge import gauge_generator, gauge_root, inversion, negative_root_labels, \
    positive_root_labels
from parapy.instances.operators.odd import annihilator, creator
from parapy.instances.suites.sampling import basis_sample


def _generator(params: ModelParams, a: int, b: int):
    """G^{ab} with G^{aa} = 0 and G^{ba} = -G^{ab}."""
    if a == b:
        return None
    if a < b:
        return ONE, gauge_generator(params, a, b)
    return -ONE, gauge_generator(params, b, a)


def structure_constant_rhs(params: ModelParams, a: int, b: int, c: int, d: int) -> Operator:
    """-i (δ^{bc} G^{ad} - δ^{ac} G^{bd} - δ^{bd} G^{ac} + δ^{ad} G^{bc})."""
    terms = []
    for sign, delta, (x, y) in ((1, b == c, (a, d)), (-1, a == c, (b, d)), (-1, b == d, (a, c)), (1, a == d, (b, c))):
        generator = _generator(params, x, y) if delta else None
        if generator is not None:
            orientation, operator = generator
            terms.append((-I * sign * orientation, operator))
    return Sum(params, terms, name=f"f({a + 1}{b + 1},{c + 1}{d + 1})")


class GaugeSuite(VerificationSuite):
    name = "gauge"

    def _commutes_with_odd(self, sample) -> None:
        params = self.params
        odd = [(f"b({alpha + 1})", annihilator(params, alpha)) for alpha in range(params.n)] + \
              [(f"bd({alpha + 1})", creator(params, alpha)) for alpha in range(params.n)]
        gauge = [(f"G({a + 1},{b + 1})", gauge_generator(params, a, b)) for a, b in combinations(range(params.p), 2)]
        gauge += [(str(label), gauge_root(params, label))
                  for label in positive_root_labels(params) + negative_root_labels(params)]
        if not params.eps:
            gauge += [(f"I({a + 1})", inversion(params, a)) for a in range(params.p)]
        for gauge_name, gauge_operator in gauge:
            for odd_name, odd_operator in odd:
                self.check_vanishes(f"[{gauge_name}, {odd_name}]", commutator(gauge_operator, odd_operator), sample)

    def _structure_constants(self, sample) -> None:
        params = self.params
        pairs = list(combinations(range(params.p), 2))
        for (a, b), (c, d) in combinations(pairs, 2):
            lhs = commutator(gauge_generator(params, a, b), gauge_generator(params, c, d))
            self.check_vanishes(f"[G({a + 1},{b + 1}), G({c + 1},{d + 1})]",
                                lhs - structure_constant_rhs(params, a, b, c, d), sample)

    def _weights(self, sample) -> None:
        params = self.params
        for k in range(params.q):
            cartan = gauge_generator(params, 2 * k, 2 * k + 1)
            diagonal = all(cartan(state) == state * Scalar(gauge_weight(state.kets()[0]).w[k]) for state in sample)
            self.check(f"G({2 * k + 1},{2 * k + 2}) has eigenvalue w^{k + 1}", diagonal)
        for label in positive_root_labels(params) + negative_root_labels(params):
            shift = label.root(params.q)
            shifted = True
            for state in sample:
                expected = tuple(w + s for w, s in zip(gauge_weight(state.kets()[0]).w, shift))
                shifted &= all(gauge_weight(ket).w == expected for ket in gauge_root(params, label)(state).kets())
            self.check(f"{label} shifts the gauge weight by {shift}", shifted)

    def _inversions(self, sample) -> None:
        params = self.params
        for a in range(params.p):
            square = inversion(params, a) @ inversion(params, a)
            self.check_vanishes(f"I({a + 1})^2 = 1", square - Identity(params), sample)

    def _casimir(self) -> None:
        vacuum = vacuum_state(self.params)
        label = "Casimir of the spinor vacuum"
        if self.guarded(label, lambda: casimir_so_check(vacuum, spin_weight(self.params))) is not None:
            self.check(label, True)

    def _run(self) -> None:
        sample = basis_sample(self.params, self.max_degree)
        self._commutes_with_odd(sample)
        self._structure_constants(sample)
        self._weights(sample)
        if not self.params.eps:
            self._inversions(sample)
        self._casimir()
