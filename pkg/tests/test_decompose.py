import pytest

from parapy.framework.config import RunConfig
from parapy.framework.errors import InvalidLabelError, NonexistenceError, TheoremViolationError
from parapy.framework.fock import ModelParams, SpinState, vacuum_state
from parapy.framework.linalg import proportionality, same_span
from parapy.framework.scalar import rational
from parapy.framework.signature import GaugeSignature, OspSignature, casimir_value, gauge_to_osp, osp_to_gauge, \
    signature_bijection, spinor_tensor_product
from parapy.instances.decomposers.lwhw import antisymmetrized_factor, build_lwhw_vector
from parapy.instances.decomposers.shells import annihilators, compact_lowerings, energy_eigenspace, \
    gauge_closure, gauge_decomposition, highest_weight_gauge, osp_lowest_vectors, positive_gauge_roots, \
    split_by_gauge_weight, vacuum_subspace
from parapy.instances.decomposers.spin_orbit import casimir_so_check, orbital_highest_vectors, orbital_weight_of, \
    sp_lowest_weights
from parapy.instances.decomposers.table import joint_lw_hw_table, multiplicity_check, realizable_signatures, \
    stabilization_check
from parapy.instances.operators.noncovariant import from_noncovariant_all


@pytest.mark.parametrize("n,p", [(1, 2), (1, 3), (2, 2)])
def test_vacuum_subspace_is_the_energy_eigenspace(n, p):
    params = ModelParams(n=n, p=p)
    for d in range(3):
        vacuum = vacuum_subspace(params, d)
        assert same_span(vacuum, energy_eigenspace(params, d))
        assert all(op(v).is_zero() for op in annihilators(params) for v in vacuum)


def test_vacuum_subspace_at_degree_zero():
    params = ModelParams(n=2, p=4)
    assert len(vacuum_subspace(params, 0)) == params.spin_dimension


def test_table_for_one_mode_order_two():
    report = joint_lw_hw_table(ModelParams(n=1, p=2), 2)
    assert [row.osp for row in report.rows] == [OspSignature(d=rational(d)) for d in (1, 2, 3)]
    assert [row.gauge for row in report.rows] == [GaugeSignature(sigma=(s,)) for s in (0, 1, 2)]
    assert [row.gauge_dim for row in report.rows] == [2, 2, 2]
    assert [row.vector_id for row in report.rows] == ["d0.0", "d1.0", "d2.0"]
    assert report.rows_at(1)[0].energy == rational(2)


def test_table_for_a_single_boson():
    report = joint_lw_hw_table(ModelParams(n=1, p=1), 2)
    assert len(report.rows) == 1
    assert report.rows[0].osp == OspSignature(d=rational(1, 2))
    assert report.rows[0].gauge_dim == 1


@pytest.mark.parametrize("n,p,max_degree", [(1, 3, 3), (2, 2, 2), (2, 3, 2)])
def test_table_follows_the_bijection(n, p, max_degree):
    params = ModelParams(n=n, p=p)
    report = joint_lw_hw_table(params, max_degree)
    assert report.rows
    for row in report.rows:
        assert signature_bijection(row.osp, params) == row.gauge
        assert row.osp.degree(p) == row.degree


def test_table_with_serial_evaluator():
    config = RunConfig(n=1, p=2, max_degree=2, quiet=True)
    report = joint_lw_hw_table(config.params, 2, config.evaluator)
    assert len(report.rows) == 3


def test_multiplicity_matches_gauge_dimension():
    rows = multiplicity_check(ModelParams(n=1, p=2), 2)
    assert all(row.agrees for row in rows)
    assert [row.counted for row in rows if row.osp == OspSignature(d=rational(2))] == [2]
    assert all(row.agrees for row in multiplicity_check(ModelParams(n=2, p=2), 2))


def test_osp_lowest_vectors_at_degree_one():
    assert len(osp_lowest_vectors(ModelParams(n=1, p=2), 1)) == 2


def test_antisymmetrized_factor():
    params = ModelParams(n=2, p=4)
    factor = antisymmetrized_factor(params, 2)
    assert sorted(factor.values()) == [-1, 1]
    assert len(antisymmetrized_factor(params, 1)) == 1


def test_closed_form_vectors():
    params = ModelParams(n=1, p=2)
    vector = build_lwhw_vector(params, OspSignature.parse("3"))
    assert len(vector) == 1
    (ket, _), = vector.sorted_items()
    assert ket.orb.plus == ((2,),)
    assert ket.spin == SpinState.highest(1)

    params = ModelParams(n=2, p=4)
    assert len(build_lwhw_vector(params, OspSignature.parse("3;1"))) == 2
    assert len(build_lwhw_vector(params, OspSignature.parse("2;1"))) == 1


@pytest.mark.parametrize("text", ["3;1", "2;1", "4;0", "2;2"])
def test_closed_form_is_lowest_and_highest(text):
    params = ModelParams(n=2, p=4)
    vector = build_lwhw_vector(params, OspSignature.parse(text))
    for op in annihilators(params) + compact_lowerings(params) + positive_gauge_roots(params):
        assert op(vector).is_zero()


def test_closed_form_matches_the_table():
    params = ModelParams(n=1, p=3)
    for row in joint_lw_hw_table(params, 3).rows:
        assert proportionality(row.vector, build_lwhw_vector(params, row.osp)) is not None


@pytest.mark.parametrize("text,n,p", [("1/2", 1, 2), ("5/2", 1, 4), ("2;0", 2, 2)])
def test_closed_form_nonexistence(text, n, p):
    with pytest.raises(NonexistenceError):
        build_lwhw_vector(ModelParams(n=n, p=p), OspSignature.parse(text))


def test_highest_weight_gauge_contains_joint_vectors():
    params = ModelParams(n=1, p=3)
    hw = highest_weight_gauge(params, 1)
    assert hw
    assert all(op(v).is_zero() for op in positive_gauge_roots(params) for v in hw)


def test_realizable_signatures():
    assert realizable_signatures(ModelParams(n=1, p=1), 2) == [OspSignature(d=rational(1, 2))]
    assert realizable_signatures(ModelParams(n=1, p=2), 1) == [OspSignature(d=rational(1)),
                                                                 OspSignature(d=rational(2))]


def test_stabilization():
    result = stabilization_check(1, 2, 2)
    assert result.holds
    assert result.tuples == {(0,), (1,), (2,)}
    with pytest.raises(InvalidLabelError):
        stabilization_check(2, 2, 1)


def test_orbital_highest_vectors_at_degree_one():
    # the degree-one orbital states form the vector irrep
    assert list(orbital_highest_vectors(ModelParams(n=1, p=3), 1)) == [(1,)]


def test_sp_lowest_weights():
    params = ModelParams(n=1, p=2)
    for mu in spinor_tensor_product((1,), params.p):
        found = sp_lowest_weights(params, 2, mu)
        assert found
        assert all(component.mu == mu for _, component, _ in found)


def test_joint_vectors_sit_in_the_expected_component():
    params = ModelParams(n=1, p=3)
    for row in joint_lw_hw_table(params, 2).rows:
        mu_orb = orbital_weight_of(row)
        assert tuple(map(rational, mu_orb)) == tuple(value - rational(1, 2) for value in row.mu)
        assert casimir_so_check(row.vector, row.mu) == casimir_value(params.p, row.mu)


def test_gauge_decomposition_of_noncovariant_images():
    params = ModelParams(n=1, p=2)
    span, highest = gauge_decomposition(from_noncovariant_all(params, [(1, 1), (1, 2)]))
    assert span
    assert highest


@pytest.mark.parametrize("p", [2, 3])
def test_gauge_closure_of_the_vacuum_is_the_spin_module(p):
    params = ModelParams(n=1, p=p)
    closed = gauge_closure([vacuum_state(params)])
    assert len(closed) == params.spin_dimension
    by_weight = split_by_gauge_weight(closed)
    assert len(by_weight) == 2
    assert all(len(states) == 1 for states in by_weight.values())


def test_signature_maps_round_trip_on_the_table():
    params = ModelParams(n=2, p=3)
    for row in joint_lw_hw_table(params, 2).rows:
        assert osp_to_gauge(row.osp, params) == row.gauge
        assert gauge_to_osp(row.gauge, params) == row.osp


def test_stabilization_for_odd_order():
    result = stabilization_check(1, 3, 3)
    assert result.tuples_agree
    assert result.no_new_d_values
    assert result.tuples == {(0,), (1,), (2,), (3,)}
    assert result.next_d_values == {rational(5, 2), rational(7, 2), rational(9, 2)}


def test_closed_form_rejects_signatures_of_another_rank():
    with pytest.raises(InvalidLabelError):
        build_lwhw_vector(ModelParams(n=2, p=4), OspSignature.parse("3"))


@pytest.mark.parametrize("n,p,d", [(1, 2, 4), (2, 2, 3), (1, 3, 3)])
def test_sp_lowest_weights_at_every_degree(n, p, d):
    params = ModelParams(n=n, p=p)
    for mu in {weight for degree in range(d + 1) for mu_orb in orbital_highest_vectors(params, degree)
               for weight in spinor_tensor_product(mu_orb, p)}:
        for weight, component, _ in sp_lowest_weights(params, d, mu):
            assert list(weight.lam) == sorted(weight.lam)
            assert component.mu == mu


def test_sp_lowest_weights_rejects_components_the_even_algebra_leaves(monkeypatch):
    from parapy.instances.decomposers import spin_orbit

    genuine = spin_orbit.spin_orbit_components

    def relabelled(params, d, mu):
        components = genuine(params, d, mu)
        if d == 2:
            for component in components:
                component.mu_orb = (9,)
        return components

    monkeypatch.setattr(spin_orbit, "spin_orbit_components", relabelled)
    with pytest.raises(TheoremViolationError, match="out of"):
        sp_lowest_weights(ModelParams(n=1, p=2), 2, (rational(1, 2),))
