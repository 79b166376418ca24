import json

import pytest
from click.testing import CliRunner

from parapy.cli import cli
from parapy.framework.fock import ModelParams, vacuum_state
from parapy.instances.operators.energy import apply_Q
from parapy.instances.operators.odd import apply_creator
from parapy.instances.savers.state import load_state, save_state


@pytest.fixture
def runner():
    return CliRunner()


def test_decompose_tsv(runner, tmp_path):
    output = tmp_path / "table.tsv"
    result = runner.invoke(cli, ["decompose", "-n", "1", "-p", "2", "--max-degree", "2", "--format", "tsv",
                                 "--quiet", "-o", str(output)])
    assert result.exit_code == 0, result.output
    lines = output.read_text().splitlines()
    assert lines[0].split("\t") == ["degree", "energy", "d", "s", "sigma", "mu", "gauge_dim", "vector_id"]
    assert len(lines) == 4
    assert lines[2].split("\t") == ["1", "2", "2", "", "1", "3/2", "2", "d1.0"]


def test_decompose_json(runner, tmp_path):
    output = tmp_path / "table.json"
    result = runner.invoke(cli, ["decompose", "-n", "1", "-p", "1", "--max-degree", "2", "--quiet",
                                 "-o", str(output)])
    assert result.exit_code == 0, result.output
    document = json.loads(output.read_text())
    assert document["format_version"] == "1"
    assert document["params"] == {"n": 1, "p": 1, "q": 0, "eps": 1}
    assert len(document["rows"]) == 1
    assert document["rows"][0]["d"] == "1/2"
    assert set(document["vectors"]) == {"d0.0"}


@pytest.mark.parametrize("arguments", [["decompose", "-n", "0", "-p", "2"],
                                       ["decompose", "-n", "1", "-p", "2", "--format", "xml"],
                                       ["decompose", "-n", "1"],
                                       ["decompose", "-n", "1", "-p", "2", "--bogus"],
                                       ["nonsense"]])
def test_usage_errors(runner, arguments):
    assert runner.invoke(cli, arguments).exit_code == 1


def test_capacity_exceeded(runner, tmp_path):
    result = runner.invoke(cli, ["decompose", "-n", "2", "-p", "4", "--max-degree", "2", "--capacity", "10",
                                 "--quiet", "-o", str(tmp_path / "t.json")])
    assert result.exit_code == 4


def test_lwv(runner, tmp_path):
    output = tmp_path / "v.json"
    result = runner.invoke(cli, ["lwv", "-n", "2", "-p", "4", "--sig", "3;1", "-o", str(output)])
    assert result.exit_code == 0, result.output
    assert "[1, 1]" in result.output
    vector = load_state(str(output))
    assert len(vector) == 2
    assert vector.params == ModelParams(n=2, p=4)


def test_lwv_nonexistence(runner):
    result = runner.invoke(cli, ["lwv", "-n", "1", "-p", "2", "--sig", "1/2"])
    assert result.exit_code == 2
    assert "d - p/2" in result.output


def test_lwv_bad_signature(runner):
    assert runner.invoke(cli, ["lwv", "-n", "1", "-p", "2", "--sig", "x;1"]).exit_code == 1
    result = runner.invoke(cli, ["lwv", "-n", "2", "-p", "4", "--sig", "3"])
    assert result.exit_code == 1
    assert "n=2" in result.output


def test_apply(runner, tmp_path):
    params = ModelParams(n=1, p=2)
    vacuum = tmp_path / "vac.json"
    save_state(vacuum_state(params), str(vacuum))
    output = tmp_path / "out.json"
    result = runner.invoke(cli, ["apply", "bd(1)", str(vacuum), "-o", str(output)])
    assert result.exit_code == 0, result.output
    assert load_state(str(output)) == apply_creator(1, vacuum_state(params))

    result = runner.invoke(cli, ["apply", "Q", str(output), "-o", str(tmp_path / "q.json")])
    assert result.exit_code == 0, result.output
    assert load_state(str(tmp_path / "q.json")) == apply_Q(apply_creator(1, vacuum_state(params)))


def test_apply_from_stdin(runner, tmp_path):
    params = ModelParams(n=1, p=2)
    vacuum = tmp_path / "vac.json"
    save_state(vacuum_state(params), str(vacuum))
    output = tmp_path / "out.json"
    result = runner.invoke(cli, ["apply", "b(1)", "-", "-o", str(output)], input=vacuum.read_text())
    assert result.exit_code == 0, result.output
    assert load_state(str(output)).is_zero()


def test_apply_errors(runner, tmp_path):
    vacuum = tmp_path / "vac.json"
    save_state(vacuum_state(ModelParams(n=1, p=2)), str(vacuum))
    assert runner.invoke(cli, ["apply", "bd(1", str(vacuum)]).exit_code == 1
    assert runner.invoke(cli, ["apply", "bd(2)", str(vacuum)]).exit_code == 1
    assert runner.invoke(cli, ["apply", "I(1)", str(vacuum), "-o", str(tmp_path / "i.json")]).exit_code == 0
    assert runner.invoke(cli, ["apply", "bd(1)", str(tmp_path / "missing.json")]).exit_code == 3
    broken = tmp_path / "broken.json"
    broken.write_text("{}")
    assert runner.invoke(cli, ["apply", "bd(1)", str(broken)]).exit_code == 1


def test_verify(runner):
    result = runner.invoke(cli, ["verify", "--suite", "lemma1", "-n", "1", "-p", "2", "--max-degree", "2",
                                 "--quiet"])
    assert result.exit_code == 0, result.output
    assert "lemma1: passed" in result.output
    assert "failed 0" in result.output


def test_verify_unknown_suite(runner):
    assert runner.invoke(cli, ["verify", "--suite", "lemma9", "-n", "1", "-p", "2"]).exit_code == 1


def test_info(runner):
    result = runner.invoke(cli, ["info", "-n", "1", "-p", "2"])
    assert result.exit_code == 0, result.output
    assert "q=1, eps=0" in result.output
    assert "none positive" in result.output

    result = runner.invoke(cli, ["info", "-n", "2", "-p", "5", "--degree", "3"])
    assert result.exit_code == 0, result.output
    assert "shell size at degree 3: 880" in result.output
    assert "osp simple roots: [(1, -1), (0, 1)]" in result.output
    assert "Weyl dimension 4" in result.output
