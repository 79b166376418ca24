import pytest
from click.testing import CliRunner

from parapy.cli import cli
from parapy.framework.config import RunConfig
from parapy.framework.errors import EvaluationError
from parapy.framework.evaluator import Evaluator, EvaluatorConfig
from parapy.framework.fock import ModelParams
from parapy.instances.decomposers.table import joint_lw_hw_table


class _DroppingEvaluatorConfig(EvaluatorConfig):
    @property
    def evaluator(self):
        return _DroppingEvaluator


class _DroppingEvaluator(Evaluator):
    """Returns the first degree only, like a worker pool that gave up on the rest."""

    def evaluate(self, job, params, degrees):
        first = list(degrees)[0]
        return {first: job(params, first)}


def test_partial_results_are_rejected():
    config = RunConfig(n=1, p=2, max_degree=2, quiet=True, evaluator_config=_DroppingEvaluatorConfig())
    with pytest.raises(EvaluationError) as info:
        joint_lw_hw_table(config.params, 2, config.evaluator)
    assert info.value.missing == [1, 2]


def test_incomplete_evaluation_exit_code(monkeypatch, tmp_path):
    def incomplete(params, max_degree, evaluator=None):
        raise EvaluationError("no rows for degrees [2]", missing=[2])

    monkeypatch.setattr("parapy.cli.joint_lw_hw_table", incomplete)
    result = CliRunner().invoke(cli, ["decompose", "-n", "1", "-p", "2", "--quiet", "-o", str(tmp_path / "t.json")])
    assert result.exit_code == 2
    assert not (tmp_path / "t.json").exists()


class _StallingPool:
    """Delivers one result, then times out."""

    def __init__(self) -> None:
        self.pending = []

    def submit(self, function, value) -> None:
        self.pending.append(value)

    def has_next(self) -> bool:
        return bool(self.pending)

    def get_next_unordered(self, timeout=None):
        if timeout is not None:
            raise TimeoutError("Timed out waiting for result")
        return self.pending.pop(0), []


def test_ray_timeout_names_unfinished_degrees(monkeypatch):
    pytest.importorskip("ray")
    from parapy.instances.evaluators.ray.evaluator import RayDistributedEvaluator, RayEvaluatorConfig

    config = RunConfig(n=1, p=2, quiet=True, evaluator_config=RayEvaluatorConfig(evaluation_timeout=1,
                                                                                 progress=False))
    monkeypatch.setattr(RayDistributedEvaluator, "_configure_ray", lambda self: None)
    monkeypatch.setattr(RayDistributedEvaluator, "_build_pool", lambda self: None)
    evaluator = config.evaluator
    evaluator.pool = _StallingPool()
    with pytest.raises(EvaluationError) as info:
        evaluator.evaluate(lambda params, degree: [], config.params, range(3))
    assert info.value.missing == [1, 2]


@pytest.fixture
def local_ray():
    ray = pytest.importorskip("ray")
    yield ray
    ray.shutdown()


def test_ray_evaluator_matches_serial(local_ray):
    from parapy.instances.evaluators.ray.evaluator import RayDistributedEvaluator, RayEvaluatorConfig

    config = RunConfig(n=1, p=2, max_degree=2, quiet=True,
                       evaluator_config=RayEvaluatorConfig(num_workers=2, debug=True, progress=False))
    evaluator = config.evaluator
    assert isinstance(evaluator, RayDistributedEvaluator)
    params = ModelParams(n=1, p=2)
    distributed = joint_lw_hw_table(params, 2, evaluator)
    serial = joint_lw_hw_table(params, 2)
    assert [(row.osp, row.gauge, row.gauge_dim) for row in distributed.rows] == \
           [(row.osp, row.gauge, row.gauge_dim) for row in serial.rows]
