import itertools

import pytest

from parapy.framework.errors import ExpressionParseError, IndexRangeError, InvalidLabelError, ParityError
from parapy.framework.fock import BasisKet, Mode, ModelParams, OrbitalMonomial, PLUS, SpinState, State, all_modes, \
    enumerate_level, inner_product, vacuum_state
from parapy.framework.operator import anticommutator, commutator
from parapy.framework.scalar import ONE, SQRT2, Scalar, rational
from parapy.instances.operators.energy import apply_energy, apply_gauge_casimir, apply_orbital_casimir, apply_Q, \
    apply_Q_ls, apply_spin_casimir
from parapy.instances.operators.even import ANNIH_ANNIH, CREATE_ANNIH, CREATE_CREATE, EvenOpLabel, apply_even, \
    even_operator
from parapy.instances.operators.expression import apply_expression, parse_expression
from parapy.instances.operators.gauge import GaugeRootLabel, apply_gauge, apply_gauge_root, apply_inversion, \
    gauge_generator, gauge_orbital_part, gauge_root, gauge_spin_part, inversion, positive_root_labels
from parapy.instances.operators.modes import apply_mode_annihilator, apply_mode_creator, apply_real_annihilator, \
    apply_real_creator
from parapy.instances.operators.noncovariant import from_noncovariant
from parapy.instances.operators.odd import annihilator, apply_annihilator, apply_creator, creator
from parapy.instances.operators.spin import apply_chirality, apply_clifford, apply_ep, apply_spin_raise
from parapy.instances.suites.sampling import random_states


def _ket(params, exponents, signs):
    """Ket with A†^{k+}_α exponents given as {(alpha, k): e}, 0-based."""
    orb = OrbitalMonomial.vacuum(params)
    for (alpha, k), exponent in exponents.items():
        orb = orb.shifted(Mode(alpha, PLUS, k), exponent)
    return BasisKet(orb, SpinState(signs=signs))


def _low_states(params, max_degree=1):
    return [State.basis(params, ket) for d in range(max_degree + 1) for ket in enumerate_level(params, d)]


def test_creator_on_vacuum():
    params = ModelParams(n=1, p=2)
    result = apply_creator(1, vacuum_state(params))
    expected = State.basis(params, _ket(params, {(0, 0): 1}, (-1,)), SQRT2)
    assert result == expected


def test_annihilator_kills_vacuum():
    for n, p in [(1, 1), (2, 3), (1, 4)]:
        params = ModelParams(n=n, p=p)
        for alpha in range(1, n + 1):
            assert apply_annihilator(alpha, vacuum_state(params)).is_zero()


def test_p1_is_a_single_boson():
    params = ModelParams(n=1, p=1)
    once = apply_creator(1, vacuum_state(params))
    twice = apply_creator(1, once)
    assert inner_product(twice, twice) == 2
    assert apply_annihilator(1, twice) == once * 2


def test_energy_counts_degree():
    params = ModelParams(n=2, p=3)
    vacuum = vacuum_state(params)
    assert apply_energy(vacuum) == vacuum * 3
    excited = apply_creator(2, vacuum)
    assert apply_energy(excited) == excited * 4


def test_even_operator_example():
    params = ModelParams(n=2, p=2)
    v = State.basis(params, _ket(params, {(1, 0): 1}, (1,)))
    expected = State.basis(params, _ket(params, {(0, 0): 1}, (1,)), 2)
    assert apply_even(EvenOpLabel(CREATE_ANNIH, 1, 2), v) == expected


@pytest.mark.parametrize("n,p", [(1, 2), (2, 2), (2, 3)])
def test_even_operators_are_anticommutators(n, p):
    params = ModelParams(n=n, p=p)
    forms = {CREATE_ANNIH: (creator, annihilator), CREATE_CREATE: (creator, creator),
             ANNIH_ANNIH: (annihilator, annihilator)}
    for v in _low_states(params):
        for kind, (left, right) in forms.items():
            for alpha, beta in itertools.product(range(n), repeat=2):
                expected = anticommutator(left(params, alpha), right(params, beta))(v)
                assert even_operator(params, EvenOpLabel(kind, alpha + 1, beta + 1))(v) == expected


@pytest.mark.parametrize("n,p", [(1, 1), (1, 2), (2, 3)])
def test_trilinear_relations(n, p):
    params = ModelParams(n=n, p=p)
    indices = list(itertools.product(range(n), repeat=3))
    for v in _low_states(params):
        for alpha, beta, gamma in indices:
            b_alpha, bd_beta = annihilator(params, alpha), creator(params, beta)
            residual = commutator(anticommutator(b_alpha, bd_beta), annihilator(params, gamma))(v)
            if beta == gamma:
                residual = residual + b_alpha(v) * 2
            assert residual.is_zero()
            residual = commutator(anticommutator(b_alpha, bd_beta), creator(params, gamma))(v)
            if alpha == gamma:
                residual = residual - bd_beta(v) * 2
            assert residual.is_zero()


def test_clifford_generators_square_to_one():
    for p in (2, 3, 4, 5):
        params = ModelParams(n=1, p=p)
        for v in _low_states(params, 0):
            for a in range(1, p + 1):
                assert apply_clifford(a, apply_clifford(a, v)) == v
            assert apply_chirality(apply_chirality(v)) == v


def test_clifford_generators_anticommute():
    params = ModelParams(n=1, p=4)
    v = vacuum_state(params, SpinState(signs=(1, -1)))
    for a, b in itertools.combinations(range(1, 5), 2):
        assert (apply_clifford(a, apply_clifford(b, v)) + apply_clifford(b, apply_clifford(a, v))).is_zero()


def test_ep_requires_odd_p():
    with pytest.raises(ParityError):
        apply_ep(vacuum_state(ModelParams(n=1, p=2)))
    params = ModelParams(n=1, p=3)
    assert apply_ep(vacuum_state(params, SpinState(signs=(-1,)))) == -vacuum_state(params, SpinState(signs=(-1,)))


def test_cartan_generator_reads_gauge_weight():
    params = ModelParams(n=1, p=2)
    for signs, weight in [((1,), rational(1, 2)), ((-1,), rational(-1, 2))]:
        v = vacuum_state(params, SpinState(signs=signs))
        assert apply_gauge(1, 2, v) == v * Scalar(weight)
    excited = State.basis(params, _ket(params, {(0, 0): 2}, (1,)))
    assert apply_gauge(1, 2, excited) == excited * Scalar(rational(5, 2))


def test_long_root_on_spin_vacuum():
    params = ModelParams(n=1, p=4)
    result = apply_gauge_root(GaugeRootLabel("--", 1, 2), vacuum_state(params))
    assert result == vacuum_state(params, SpinState(signs=(-1, -1)))


def test_positive_roots_kill_highest_spin_vacuum():
    for p in (3, 4, 5):
        params = ModelParams(n=1, p=p)
        for label in positive_root_labels(params):
            assert apply_gauge_root(label, vacuum_state(params)).is_zero()


@pytest.mark.parametrize("n,p", [(1, 2), (1, 3), (2, 4)])
def test_gauge_commutes_with_odd_generators(n, p):
    params = ModelParams(n=n, p=p)
    gauge = [gauge_generator(params, a, b) for a, b in itertools.combinations(range(p), 2)]
    gauge += [gauge_root(params, label) for label in positive_root_labels(params)]
    for v in _low_states(params):
        for alpha in range(n):
            for generator in gauge:
                assert commutator(generator, creator(params, alpha))(v).is_zero()
                assert commutator(generator, annihilator(params, alpha))(v).is_zero()


def test_inversion_is_an_involution():
    params = ModelParams(n=1, p=2)
    for v in _low_states(params, 2):
        for a in (1, 2):
            assert apply_inversion(a, apply_inversion(a, v)) == v
    with pytest.raises(ParityError):
        apply_inversion(1, vacuum_state(ModelParams(n=1, p=3)))


@pytest.mark.parametrize("n,p", [(1, 2), (1, 3), (2, 2)])
def test_spin_orbit_forms_agree(n, p):
    params = ModelParams(n=n, p=p)
    for v in _low_states(params, 2):
        assert apply_Q(v) == apply_Q_ls(v)


def test_gauge_casimir_on_vacuum():
    # so(3) spinor: <μ, μ + 2ρ> = 3/4
    params = ModelParams(n=1, p=3)
    v = vacuum_state(params)
    assert apply_gauge_casimir(v) == v * Scalar(rational(3, 4))


def test_invalid_labels():
    params = ModelParams(n=1, p=2)
    vacuum = vacuum_state(params)
    with pytest.raises(IndexRangeError):
        apply_creator(0, vacuum)
    with pytest.raises(IndexRangeError):
        apply_creator(2, vacuum)
    with pytest.raises(InvalidLabelError):
        apply_gauge(1, 1, vacuum)
    with pytest.raises(InvalidLabelError):
        apply_gauge_root(GaugeRootLabel("+", 1), vacuum)
    with pytest.raises(InvalidLabelError):
        apply_even(EvenOpLabel("create_everything", 1, 1), vacuum)


def test_expression_applies_rightmost_first():
    params = ModelParams(n=1, p=2)
    vacuum = vacuum_state(params)
    assert apply_expression("bd(1)", vacuum) == apply_creator(1, vacuum)
    assert apply_expression("b(1) bd(1)", vacuum) == apply_annihilator(1, apply_creator(1, vacuum))
    assert (apply_expression("G(1,2) bd(1)", vacuum) - apply_expression("bd(1) G(1,2)", vacuum)).is_zero()
    assert apply_expression("Q", vacuum) == vacuum


def test_expression_tokens():
    assert parse_expression("Groot(+-,1,2) even(create_annih,1,2) I(1)") == \
        [("Groot", ("+-", 1, 2)), ("even", ("create_annih", 1, 2)), ("I", (1,))]


@pytest.mark.parametrize("text", ["", "bd(", "bd(1) x", "G(1)"])
def test_expression_parse_errors(text):
    with pytest.raises(ExpressionParseError):
        parse_expression(text)


def test_noncovariant_components():
    params = ModelParams(n=1, p=3)
    single = from_noncovariant(params, [(1, 2)])
    assert inner_product(single, single) == ONE
    forward = from_noncovariant(params, [(1, 1), (1, 3)])
    backward = from_noncovariant(params, [(1, 3), (1, 1)])
    assert forward == -backward


def test_spin_raise_on_highest_spin_vacuum():
    params = ModelParams(n=1, p=4)
    vacuum = vacuum_state(params)
    assert apply_spin_raise(1, "+", vacuum).is_zero()
    assert apply_spin_raise(2, "-", vacuum) == vacuum.with_spin(SpinState(signs=(1, -1))) * SQRT2
    lowered = vacuum.with_spin(SpinState(signs=(-1, 1)))
    assert apply_spin_raise(2, "-", lowered) == vacuum.with_spin(SpinState(signs=(-1, -1))) * (-SQRT2)


def test_mode_operators_are_canonical_bosons():
    params = ModelParams(n=2, p=3)
    vacuum = vacuum_state(params)
    for mode in all_modes(params):
        once = apply_mode_creator(mode, vacuum)
        twice = apply_mode_creator(mode, once)
        assert apply_mode_annihilator(mode, twice) == once * 2
        assert apply_mode_annihilator(mode, vacuum).is_zero()


@pytest.mark.parametrize("a", [1, 2, 3])
def test_real_basis_bosons(a):
    params = ModelParams(n=1, p=3)
    vacuum = vacuum_state(params)
    excited = apply_real_creator(1, a, vacuum)
    assert inner_product(excited, excited) == 1
    assert apply_real_annihilator(1, a, excited) == vacuum


def test_gauge_generator_splits_into_orbital_and_spin():
    params = ModelParams(n=1, p=3)
    orbital, spin = gauge_orbital_part(1, 3, params), gauge_spin_part(1, 3, params)
    for v in _low_states(params, 2):
        assert orbital(v) + spin(v) == apply_gauge(1, 3, v)
    assert orbital(vacuum_state(params)).is_zero()


def test_casimir_parts():
    params = ModelParams(n=1, p=3)
    vacuum = vacuum_state(params)
    assert apply_orbital_casimir(vacuum).is_zero()
    assert apply_spin_casimir(vacuum) == apply_gauge_casimir(vacuum)
    # degree-one orbital states carry the vector irrep of so(3)
    excited = apply_creator(1, vacuum)
    assert apply_orbital_casimir(excited) == excited * 2


@pytest.mark.parametrize("n,p", [(1, 2), (2, 2), (1, 4)])
def test_inversion_conjugation_fixes_odd_generators(n, p):
    params = ModelParams(n=n, p=p)
    for a in range(params.p):
        flip = inversion(params, a)
        for alpha in range(params.n):
            for odd in (creator(params, alpha), annihilator(params, alpha)):
                conjugated = flip @ odd @ flip
                for v in random_states(params, 2, count=4):
                    assert conjugated(v) == odd(v)
