"""Tests of the run settings and helpers."""
import pytest
from pydantic import ValidationError

from nornir_fatpoints.config import OutputFormat, RunConfig
from nornir_fatpoints.exceptions import SchemeError
from nornir_fatpoints.field_linalg import DEFAULT_PRIME
from nornir_fatpoints.utils.helpers import make_folder, parse_seeds
from nornir_fatpoints.utils.logger import NornirLogger


def test_defaults(monkeypatch):
    monkeypatch.delenv("FATPOINTS_JOBS", raising=False)
    config = RunConfig()
    assert config.prime == DEFAULT_PRIME
    assert config.seed_list == [1, 2, 3, 4, 5]
    assert config.output_format == OutputFormat.TABLE
    assert config.summary() == {"prime": DEFAULT_PRIME, "seeds": [1, 2, 3, 4, 5], "jobs": 1}


def test_environment(monkeypatch):
    monkeypatch.setenv("FATPOINTS_JOBS", "3")
    monkeypatch.setenv("FATPOINTS_SEED_BASE", "10")
    monkeypatch.setenv("FATPOINTS_SEED_COUNT", "2")
    config = RunConfig()
    assert config.jobs == 3
    assert config.seed_list == [10, 11]


def test_explicit_seeds_win():
    assert RunConfig(seeds=[7, 3], seed_base=100).seed_list == [7, 3]


@pytest.mark.parametrize("prime", [3, 4, 2**31, 2**31 + 11, 32001])
def test_bad_primes(prime):
    with pytest.raises(ValidationError):
        RunConfig(prime=prime)


@pytest.mark.parametrize(
    "kwargs", [{"jobs": 0}, {"seed_count": 0}, {"seed_base": -1}, {"seeds": []}, {"seeds": [1, 1]}, {"seeds": [-2]}]
)
def test_bad_settings(kwargs):
    with pytest.raises(ValidationError):
        RunConfig(**kwargs)


def test_parse_seeds():
    assert parse_seeds("1, 2,,9") == [1, 2, 9]
    with pytest.raises(SchemeError):
        parse_seeds("1,x")
    with pytest.raises(SchemeError):
        parse_seeds(" , ")


def test_make_folder(tmp_path):
    folder = tmp_path / "a" / "b"
    make_folder(str(folder))
    make_folder(str(folder))
    make_folder("")
    assert folder.is_dir()


def test_logger_keeps_failures():
    logger = NornirLogger("test")
    logger.log_info("h1", "fine")
    logger.log_warning("h1", "odd")
    logger.log_failure("h2", "broken")
    assert logger.failures() == [("h2", "broken")]
    assert [level for level, _, _ in logger.messages] == ["warning", "failure"]
