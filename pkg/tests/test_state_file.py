import json

import pytest

from parapy.framework.errors import StateFileError
from parapy.framework.fock import ModelParams, State, vacuum_state
from parapy.framework.scalar import SQRT2, Scalar, rational
from parapy.instances.operators.odd import apply_creator
from parapy.instances.savers.state import StateFile, dumps_state, load_state, loads_state, save_state, \
    state_from_dict, state_to_dict
from parapy.instances.suites.sampling import random_states


@pytest.mark.parametrize("n,p", [(1, 1), (1, 2), (2, 3), (2, 4)])
def test_random_states_survive_serialization(n, p):
    for v in random_states(ModelParams(n=n, p=p), 2, count=5):
        assert loads_state(dumps_state(v)) == v


def test_coefficients_are_strings():
    params = ModelParams(n=1, p=2)
    v = apply_creator(1, vacuum_state(params)) * Scalar(rational(-1, 3), 2)
    document = state_to_dict(v)
    assert document["header"] == {"format_version": "1", "n": 1, "p": 2}
    (term,) = document["terms"]
    assert term["orb"] == {"plus": [[1]], "minus": [[0]], "odd": [0]}
    assert term["spin"] == [-1]
    assert term["coef"] == {"re": "0/1", "im": "0/1", "re_s2": "-1/3", "im_s2": "2/1"}
    assert "." not in dumps_state(v)


def test_zero_state():
    params = ModelParams(n=2, p=3)
    assert loads_state(dumps_state(State.zero(params))) == State.zero(params)


def test_files(tmp_path):
    params = ModelParams(n=1, p=3)
    v = apply_creator(1, vacuum_state(params)) * SQRT2
    path = str(tmp_path / "nested" / "v.json")
    save_state(v, path)
    assert load_state(path) == v
    state_file = StateFile(path=str(tmp_path / "w.json"))
    state_file.save(v)
    assert state_file.load() == v
    assert not [name for name in (tmp_path / "nested").iterdir() if name.suffix == ".tmp"]


def _document():
    params = ModelParams(n=1, p=2)
    return state_to_dict(vacuum_state(params))


@pytest.mark.parametrize("corrupt", [
    lambda document: document.pop("header"),
    lambda document: document["header"].update(format_version="2"),
    lambda document: document["header"].update(n=0),
    lambda document: document.update(terms={}),
    lambda document: document["terms"][0]["coef"].update(re=0.5),
    lambda document: document["terms"][0]["coef"].update(re="1/0"),
    lambda document: document["terms"][0].update(spin=[0]),
    lambda document: document["terms"][0]["orb"].update(plus=[[-1]]),
    lambda document: document["terms"][0]["orb"].update(odd=[1]),
])
def test_invalid_documents(corrupt):
    document = _document()
    corrupt(document)
    with pytest.raises(StateFileError):
        state_from_dict(document)


def test_invalid_json():
    with pytest.raises(StateFileError):
        loads_state("{not json")
    with pytest.raises(StateFileError):
        loads_state(json.dumps([1, 2]))
