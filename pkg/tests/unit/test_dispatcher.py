"""Tests of the dispatcher and the trial drivers."""
import pytest
from nornir import InitNornir
from nornir.core.plugins.inventory import InventoryPluginRegister

from nornir_fatpoints.betti import BettiReport
from nornir_fatpoints.exceptions import DegenerateTrialError, FatPointException
from nornir_fatpoints.plugins.inventory.fatpoints import FatPointInventory
from nornir_fatpoints.plugins.tasks.dispatcher import dispatcher
from nornir_fatpoints.utils.logger import NornirLogger


@pytest.fixture()
def nornir_trials():
    """Provide a Nornir object with one double point trial and one ledger degree.

    Returns:
        (Nornir): Serial runner over a FatPointInventory.
    """
    InventoryPluginRegister.register("FatPointInventory", FatPointInventory)
    return InitNornir(
        runner={"plugin": "serial"},
        inventory={
            "plugin": "FatPointInventory",
            "options": {"specs": [[0, 1, 0]], "seeds": [1], "prime": 32003, "k_max": 2, "degrees": [12]},
        },
        logging={"enabled": False},
    )


def test_betti_trial(nornir_trials):
    logger = NornirLogger("test")
    trials = nornir_trials.filter(platform="default")
    result = trials.run(task=dispatcher, method="betti_trial", logger=logger)
    multi = result["(0,1,0)/seed=1"]
    assert not multi.failed
    report = multi[1].result["report"]
    assert isinstance(report, BettiReport)
    assert report.generators == {2: 3}
    assert logger.failures() == []


def test_hilbert_trial(nornir_trials):
    trials = nornir_trials.filter(platform="default")
    result = trials.run(task=dispatcher, method="hilbert_trial", logger=NornirLogger("test"))
    rows = result["(0,1,0)/seed=1"][1].result["rows"]
    assert [(row["k"], row["computed"], row["expected"]) for row in rows] == [(0, 0, 0), (1, 0, 0), (2, 3, 3)]
    assert all(row["maximal"] for row in rows)


def test_sweep_degree(nornir_trials):
    ledger = nornir_trials.filter(platform="ledger")
    result = ledger.run(task=dispatcher, method="sweep_degree", logger=NornirLogger("test"))
    rows = result["ledger/k=12"][1].result["rows"]
    assert rows
    assert all(row.k == 12 for row in rows)


def test_unknown_method_fails(nornir_trials):
    logger = NornirLogger("test")
    result = nornir_trials.run(task=dispatcher, method="not_a_method", logger=logger)
    assert result.failed
    assert isinstance(result["ledger/k=12"][0].exception, FatPointException)
    assert len(logger.failures()) == 2


def test_missing_driver_fails(nornir_trials):
    logger = NornirLogger("test")
    result = nornir_trials.run(
        task=dispatcher,
        method="betti_trial",
        logger=logger,
        default_drivers_mapping={"ledger": "nornir_fatpoints.plugins.tasks.dispatcher.ledger.LedgerDriver"},
    )
    assert result["(0,1,0)/seed=1"].failed
    assert "Unable to find the driver" in str(result["(0,1,0)/seed=1"][0].exception)


def test_degenerate_trial_is_logged(nornir_trials, monkeypatch):
    def fake_trial(*args, **kwargs):
        raise DegenerateTrialError("cap exceeded")

    monkeypatch.setattr("nornir_fatpoints.plugins.tasks.dispatcher.default.run_trial", fake_trial)
    logger = NornirLogger("test")
    result = nornir_trials.filter(platform="default").run(task=dispatcher, method="betti_trial", logger=logger)
    assert result.failed
    assert logger.failures() == [("(0,1,0)/seed=1", "`betti_trial` hit a degenerate placement: `cap exceeded`")]
