import pytest

from parapy.framework.config import RunConfig
from parapy.framework.errors import ConfigError
from parapy.framework.fock import ModelParams, vacuum_state
from parapy.framework.operator import FACTORY_CACHE_SIZE, KET_CACHE_SIZE
from parapy.framework.suite import SuiteConfig, SuiteResult, VerificationSuite
from parapy.instances.operators import clear_operator_caches
from parapy.instances.operators.gauge import gauge_generator
from parapy.instances.operators.odd import creator
from parapy.instances.suites import COMPONENT_SUITES, SUITES


def _run(name: str, n: int, p: int, max_degree: int) -> SuiteResult:
    config = RunConfig(n=n, p=p, max_degree=max_degree, quiet=True, suite_config=SuiteConfig(name=name))
    config.apply_globals()
    return config.suite.run()


def test_registry():
    assert set(SUITES) == {"algebra", "gauge", "lemma1", "theorem1", "lemma3", "corollary1", "theorem2",
                           "corollary2", "noncovariant", "all"}
    assert len(COMPONENT_SUITES) == len(SUITES) - 1


def test_unknown_suite():
    with pytest.raises(ConfigError):
        RunConfig(n=1, p=2, suite_config=SuiteConfig(name="lemma9"))


@pytest.mark.parametrize("name,n,p,max_degree", [
    ("algebra", 1, 1, 2), ("algebra", 1, 2, 1), ("algebra", 2, 3, 1),
    ("gauge", 1, 3, 1), ("gauge", 1, 4, 1),
    ("lemma1", 1, 2, 3), ("lemma1", 2, 3, 2),
    ("theorem1", 1, 3, 3), ("theorem1", 2, 2, 2),
    ("lemma3", 1, 2, 2), ("lemma3", 2, 4, 1),
    ("corollary1", 1, 2, 2), ("corollary1", 2, 2, 2),
    ("theorem2", 1, 2, 2), ("theorem2", 1, 4, 1),
    ("corollary2", 1, 2, 2),
    ("noncovariant", 1, 1, 0), ("noncovariant", 1, 2, 0), ("noncovariant", 1, 3, 0),
])
def test_suites_pass(name, n, p, max_degree):
    result = _run(name, n, p, max_degree)
    assert result.ok, [failure.check for failure in result.failures]
    assert result.passed > 0


def test_all_merges_components():
    result = _run("all", 1, 2, 1)
    assert result.name == "all"
    assert result.ok
    total = sum(_run(suite.name, 1, 2, 1).passed for suite in COMPONENT_SUITES)
    assert result.passed == total


def test_corollary2_needs_enough_order():
    result = _run("corollary2", 2, 2, 1)
    assert (result.passed, result.failed) == (0, 0)


class _FailingSuite(VerificationSuite):
    name = "failing"

    def _run(self) -> None:
        vacuum = vacuum_state(self.params)
        self.check("holds", True)
        self.check("does not hold", False, "broken on purpose", payload={"k": 1}, states=[vacuum])


def test_failures_are_collected():
    result = _FailingSuite(RunConfig(n=1, p=2, quiet=True)).run()
    assert (result.passed, result.failed) == (1, 1)
    (failure,) = result.failures
    assert failure.check == "does not hold"
    assert failure.message == "broken on purpose"
    assert failure.payload == {"k": 1}
    assert not result.ok

    merged = SuiteResult(name="merged", passed=2)
    merged.merge(result)
    assert (merged.passed, merged.failed, len(merged.failures)) == (3, 1, 1)


@pytest.mark.slow
@pytest.mark.parametrize("name,n,p,max_degree", [("theorem1", 2, 4, 3), ("lemma1", 2, 2, 4), ("lemma1", 1, 3, 4),
                                                 ("lemma1", 2, 3, 4)])
def test_suites_pass_at_full_scale(name, n, p, max_degree):
    result = _run(name, n, p, max_degree)
    assert result.ok, [failure.check for failure in result.failures]


def test_operator_caches_are_bounded_and_cleared():
    clear_operator_caches()
    params = ModelParams(n=1, p=3)
    odd = creator(params, 0)
    odd(vacuum_state(params))
    assert odd._cache.maxsize == KET_CACHE_SIZE
    assert len(odd._cache) == 1
    assert creator.cache_info().maxsize == FACTORY_CACHE_SIZE
    assert creator.cache_info().currsize >= 1
    clear_operator_caches()
    assert creator.cache_info().currsize == 0
    assert gauge_generator.cache_info().currsize == 0
    assert creator(params, 0) is not odd


def test_suite_runs_release_operators(monkeypatch):
    calls = []
    monkeypatch.setattr("parapy.instances.operators.clear_operator_caches", lambda: calls.append(1))
    _run("all", 1, 2, 0)
    assert len(calls) == len(COMPONENT_SUITES) + 1
