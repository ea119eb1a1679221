"""Tests of the result collector."""
from types import SimpleNamespace

from nornir.core.inventory import Host
from nornir.core.task import MultiResult, Result

from nornir_fatpoints.plugins.processors.collector import TrialCollector, TrialOutcome


def _multi(name, *results):
    multi = MultiResult(name)
    multi.extend(results)
    return multi


def test_collector_keeps_driver_results():
    host = Host(name="h1")
    collector = TrialCollector("betti_trial", ["h1"])
    result = _multi("betti_trial", Result(host=host, result={"report": "r"}))
    collector.subtask_instance_completed(SimpleNamespace(name="betti_trial"), host, result)

    assert collector.ordered() == [TrialOutcome("h1", result={"report": "r"})]


def test_collector_ignores_other_tasks():
    host = Host(name="h1")
    collector = TrialCollector("betti_trial", ["h1"])
    result = _multi("hilbert_trial", Result(host=host, result={"rows": []}))
    collector.subtask_instance_completed(SimpleNamespace(name="hilbert_trial"), host, result)

    outcome = collector.ordered()[0]
    assert outcome.failed
    assert outcome.error == "host was not run"


def test_collector_records_driver_exceptions():
    host = Host(name="h1")
    collector = TrialCollector("betti_trial", ["h1"])
    result = _multi("betti_trial", Result(host=host, exception=ValueError("boom"), failed=True))
    collector.subtask_instance_completed(SimpleNamespace(name="betti_trial"), host, result)

    assert collector.ordered() == [TrialOutcome("h1", error="boom")]


def test_collector_records_dispatcher_failures():
    first, second = Host(name="h1"), Host(name="h2")
    collector = TrialCollector("betti_trial", ["h2", "h1"])
    task = SimpleNamespace(name="dispatcher")
    collector.task_instance_completed(
        task, first, _multi("dispatcher", Result(host=first, exception=KeyError("driver"), failed=True))
    )
    collector.task_instance_completed(task, second, _multi("dispatcher", Result(host=second)))

    outcomes = collector.ordered()
    assert [outcome.host for outcome in outcomes] == ["h2", "h1"]
    assert outcomes[0].error == "betti_trial returned no result"
    assert outcomes[1].error == "'driver'"
    assert all(outcome.failed for outcome in outcomes)
