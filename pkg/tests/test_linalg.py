import pytest

from parapy.framework.errors import ParamsMismatchError
from parapy.framework.fock import ModelParams, SpinState, State, all_spin_states, enumerate_level, gauge_weight, \
    vacuum_state
from parapy.framework.linalg import closure, contains, kernel_within, nullspace, proportionality, rank, \
    same_span, span_basis, split_by_weight
from parapy.framework.scalar import I, ONE, SQRT2, ZERO, Scalar
from parapy.instances.operators.odd import annihilator
from parapy.instances.operators.spin import clifford_generator


@pytest.fixture
def params():
    return ModelParams(n=1, p=4)


@pytest.fixture
def spin_vacua(params):
    return [vacuum_state(params, spin) for spin in all_spin_states(params.q)]


def test_span_basis_drops_dependent_states(spin_vacua):
    first, second = spin_vacua[0], spin_vacua[1]
    basis = span_basis([first, first * SQRT2, first + second * I, second, State.zero(first.params)])
    assert len(basis) == 2
    assert rank(spin_vacua) == 4
    assert span_basis([]) == []


def test_span_basis_is_canonical(spin_vacua):
    first, second = spin_vacua[0], spin_vacua[1]
    assert span_basis([first + second, second]) == span_basis([first * 3, second * I])


def test_contains_and_same_span(spin_vacua):
    first, second, third = spin_vacua[:3]
    assert contains([first, second], first * 2 - second)
    assert not contains([first, second], third)
    assert contains([], State.zero(first.params))
    assert same_span([first, second], [first + second, first - second])
    assert not same_span([first], [first, second])


def test_nullspace():
    columns = [{"x": ONE}, {"x": Scalar(2)}, {"y": ONE}]
    kernel = nullspace(columns, lambda key: key)
    assert len(kernel) == 1
    combination = kernel[0]
    assert set(combination) == {0, 1}
    assert combination[0] * 1 + combination[1] * 2 == ZERO


def test_kernel_within_annihilators(params):
    shell = [State.basis(params, ket) for ket in enumerate_level(params, 1)]
    kernel = kernel_within(shell, [annihilator(params, 0)])
    assert 0 < len(kernel) < len(shell)
    assert all(annihilator(params, 0)(v).is_zero() for v in kernel)
    vacua = [State.basis(params, ket) for ket in enumerate_level(params, 0)]
    assert len(kernel_within(vacua, [annihilator(params, 0)])) == 4


def test_proportionality(spin_vacua):
    first, second = spin_vacua[0], spin_vacua[1]
    v = first + second * I
    assert proportionality(v * SQRT2, v) == SQRT2
    assert proportionality(first, v) is None
    assert proportionality(State.zero(v.params), v) == ZERO
    assert proportionality(v, State.zero(v.params)) is None


def test_closure_under_clifford_generators(params):
    generators = [clifford_generator(params, a) for a in range(params.p)]
    assert len(closure([vacuum_state(params)], generators)) == 4
    assert closure([], generators) == []


def test_split_by_weight(params, spin_vacua):
    pieces = split_by_weight([sum(spin_vacua[1:], spin_vacua[0])], gauge_weight)
    assert len(pieces) == 4
    assert all(len(basis) == 1 for basis in pieces.values())


def test_states_from_different_models():
    with pytest.raises(ParamsMismatchError):
        span_basis([vacuum_state(ModelParams(n=1, p=2)), vacuum_state(ModelParams(n=1, p=3))])


def test_spin_vacua_are_distinct(spin_vacua):
    assert len({state for state in spin_vacua}) == 4
    assert vacuum_state(spin_vacua[0].params, SpinState(signs=(1, 1))) == spin_vacua[0]
