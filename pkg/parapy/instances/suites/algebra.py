"""Relations of the odd generators, the bose modes and the Clifford module.

Every relation is checked exactly on every ket of the sample.
"""
from __future__ import annotations

from itertools import product

from parapy.framework.fock import all_modes, all_spin_states, inner_product, vacuum_state
from parapy.framework.operator import Identity, anticommutator, commutator
from parapy.framework.suite import VerificationSuite
from parapy.instances.operators.energy import conformal_energy, spin_orbit, spin_orbit_coupling
from parapy.instances.operators.even import ANNIH_ANNIH, CREATE_ANNIH, CREATE_CREATE, EvenOpLabel, even_operator
from parapy.instances.operators.modes import mode_annihilator, mode_creator
from parapy.instances.operators.odd import annihilator, creator
from parapy.instances.operators.spin import clifford_generator
from parapy.instances.suites.sampling import basis_sample, random_states


def _delta(first: int, second: int) -> int:
    return 1 if first == second else 0


class AlgebraSuite(VerificationSuite):
    name = "algebra"

    def _trilinear(self, sample) -> None:
        params = self.params
        b = [annihilator(params, alpha) for alpha in range(params.n)]
        bd = [creator(params, alpha) for alpha in range(params.n)]
        for alpha, beta, gamma in product(range(params.n), repeat=3):
            mixed = anticommutator(b[alpha], bd[beta])
            lowering = anticommutator(b[alpha], b[beta])
            raising = anticommutator(bd[alpha], bd[beta])
            label = f"({alpha + 1},{beta + 1},{gamma + 1})"
            self.check_vanishes(f"[{{b,bd}},b]{label}",
                                commutator(mixed, b[gamma]) + 2 * _delta(beta, gamma) * b[alpha], sample)
            self.check_vanishes(f"[{{b,bd}},bd]{label}",
                                commutator(mixed, bd[gamma]) - 2 * _delta(alpha, gamma) * bd[beta], sample)
            self.check_vanishes(f"[{{b,b}},b]{label}", commutator(lowering, b[gamma]), sample)
            self.check_vanishes(f"[{{bd,bd}},bd]{label}", commutator(raising, bd[gamma]), sample)
            self.check_vanishes(f"[{{b,b}},bd]{label}",
                                commutator(lowering, bd[gamma]) - 2 * _delta(beta, gamma) * b[alpha]
                                - 2 * _delta(alpha, gamma) * b[beta], sample)
            self.check_vanishes(f"[{{bd,bd}},b]{label}",
                                commutator(raising, b[gamma]) + 2 * _delta(alpha, gamma) * bd[beta]
                                + 2 * _delta(beta, gamma) * bd[alpha], sample)

    def _even_forms(self, sample) -> None:
        params = self.params
        for alpha, beta in product(range(params.n), repeat=2):
            pairs = ((CREATE_ANNIH, creator(params, alpha), annihilator(params, beta)),
                     (CREATE_CREATE, creator(params, alpha), creator(params, beta)),
                     (ANNIH_ANNIH, annihilator(params, alpha), annihilator(params, beta)))
            for kind, first, second in pairs:
                even = even_operator(params, EvenOpLabel(kind, alpha + 1, beta + 1))
                self.check_vanishes(f"even {kind}({alpha + 1},{beta + 1})", even - anticommutator(first, second),
                                    sample)
                spins_kept = all(ket.spin == state.kets()[0].spin for state in sample for ket in even(state).kets())
                self.check(f"even {kind}({alpha + 1},{beta + 1}) keeps spin", spins_kept)

    def _bose(self, sample) -> None:
        params = self.params
        modes = all_modes(params)
        for first, second in product(modes, repeat=2):
            relation = commutator(mode_annihilator(params, first), mode_creator(params, second))
            if first == second:
                relation = relation - Identity(params)
            self.check_vanishes(f"[A {first}, A† {second}]", relation, sample)

    def _clifford(self) -> None:
        params = self.params
        spins = [vacuum_state(params, spin) for spin in all_spin_states(params.q)]
        for a, b in product(range(params.p), repeat=2):
            relation = anticommutator(clifford_generator(params, a), clifford_generator(params, b))
            if a == b:
                relation = relation - 2 * Identity(params)
            self.check_vanishes(f"{{e^{a + 1}, e^{b + 1}}}", relation, spins)

    def _adjoint(self) -> None:
        params = self.params
        left = random_states(params, self.max_degree, count=4)
        right = random_states(params, max(self.max_degree - 1, 0), count=4)
        for alpha in range(params.n):
            b, bd = annihilator(params, alpha), creator(params, alpha)
            for u, v in zip(left, right):
                self.check(f"<u, bd({alpha + 1}) v> = <b({alpha + 1}) u, v>",
                           inner_product(u, bd(v)) == inner_product(b(u), v), states=[u, v])

    def _energy(self, sample) -> None:
        params = self.params
        energy = conformal_energy(params)
        self.check_vanishes("Q = np/2 + 2 Σ G_orb G_spin", spin_orbit(params) - spin_orbit_coupling(params), sample)
        for alpha in range(params.n):
            bd = creator(params, alpha)
            self.check_vanishes(f"[E, bd({alpha + 1})] = bd({alpha + 1})", commutator(energy, bd) - bd, sample)

    def _run(self) -> None:
        sample = basis_sample(self.params, self.max_degree)
        self._trilinear(sample)
        self._even_forms(sample)
        self._bose(sample)
        self._clifford()
        self._adjoint()
        self._energy(sample)
