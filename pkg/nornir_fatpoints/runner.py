"""Run trials and ledger sweeps through Nornir, one inventory host per unit of work."""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

from nornir import InitNornir
from nornir.core import Nornir
from nornir.core.plugins.inventory import InventoryPluginRegister

from nornir_fatpoints.betti import BettiReport, VerificationSummary, degenerate_report, summarize
from nornir_fatpoints.exceptions import FatPointException
from nornir_fatpoints.field_linalg import DEFAULT_PRIME
from nornir_fatpoints.ledger.replay import SweepRow
from nornir_fatpoints.numerics import RESOLUTION_EXCEPTIONS, expected_resolution, scheme_length
from nornir_fatpoints.plugins.inventory.fatpoints import FatPointInventory
from nornir_fatpoints.plugins.processors.collector import TrialCollector, TrialOutcome
from nornir_fatpoints.plugins.tasks.dispatcher import dispatcher
from nornir_fatpoints.utils.logger import NornirLogger

LOGGER = logging.getLogger(__name__)

Triple = Tuple[int, int, int]

SWEEP_COLUMNS = (
    "a",
    "b",
    "c",
    "length",
    "v",
    "expected_v",
    "expected_v1",
    "computed_v",
    "computed_v1",
    "extra",
    "match",
    "exception",
)


@dataclass(frozen=True)
class NumericSweepRow:  # pylint: disable=too-many-instance-attributes
    """Majority outcome of one (a, b, c) in a numeric sweep."""

    a: int
    b: int
    c: int
    length: int
    v: int
    expected_v: int
    expected_v1: int
    computed_v: Optional[int]
    computed_v1: Optional[int]
    extra: Optional[int]
    match: bool
    exception: bool

    @classmethod
    def from_summary(cls, a: int, b: int, c: int, summary: VerificationSummary) -> "NumericSweepRow":
        """Row built from the majority generator counts; computed columns are empty when every seed degenerated."""
        expected = expected_resolution(a, b, c)
        generators = summary.majority_generators
        computed_v = computed_v1 = extra = None
        if generators is not None:
            computed_v = generators.get(expected.v, 0)
            computed_v1 = generators.get(expected.v + 1, 0)
            extra = sum(count for degree, count in generators.items() if degree not in (expected.v, expected.v + 1))
        return cls(
            a=a,
            b=b,
            c=c,
            length=expected.length,
            v=expected.v,
            expected_v=expected.gens_v,
            expected_v1=expected.gens_v1,
            computed_v=computed_v,
            computed_v1=computed_v1,
            extra=extra,
            match=summary.majority_matches,
            exception=(a, b, c) in RESOLUTION_EXCEPTIONS,
        )

    @property
    def as_expected(self) -> bool:
        """A match for ordinary triples, a mismatch for the flagged exceptions; never when every seed degenerated."""
        if self.computed_v is None:
            return False
        return self.match != self.exception

    def to_dict(self) -> Dict[str, Any]:
        """Plain data form keyed by the sweep columns."""
        return {column: getattr(self, column) for column in SWEEP_COLUMNS}


def init_nornir(inventory_options: Dict[str, Any], jobs: int = 1) -> Nornir:
    """Nornir object over a FatPointInventory with a threaded runner of `jobs` workers."""
    if jobs < 1:
        raise FatPointException(f"jobs must be at least 1, got {jobs}")
    InventoryPluginRegister.register("FatPointInventory", FatPointInventory)
    return InitNornir(
        runner={"plugin": "threaded", "options": {"num_workers": jobs}},
        inventory={"plugin": "FatPointInventory", "options": inventory_options},
        logging={"enabled": False},
    )


def run_method(method: str, inventory_options: Dict[str, Any], jobs: int = 1) -> List[Tuple[Dict, TrialOutcome]]:
    """Dispatch a driver method on every host; (host data, outcome) pairs in inventory order."""
    nornir = init_nornir(inventory_options, jobs)
    collector = TrialCollector(method, list(nornir.inventory.hosts))
    logger = NornirLogger(__name__, debug=LOGGER.isEnabledFor(logging.DEBUG))
    nornir.with_processors([collector]).run(task=dispatcher, method=method, logger=logger)
    outcomes = collector.ordered()
    LOGGER.debug("%s | %s host(s), %s failure(s)", method, len(outcomes), len(logger.failures()))
    return [(dict(nornir.inventory.hosts[outcome.host].data), outcome) for outcome in outcomes]


def betti_reports(
    specs: Sequence[Triple], seeds: Sequence[int], prime: int = DEFAULT_PRIME, jobs: int = 1
) -> List[BettiReport]:
    """One BettiReport per (spec, seed), spec-major; failed trials come back as degenerate reports."""
    options = {"specs": [list(spec) for spec in specs], "seeds": list(seeds), "prime": prime}
    reports = []
    for data, outcome in run_method("betti_trial", options, jobs):
        if outcome.failed:
            reports.append(degenerate_report(data["a"], data["b"], data["c"], data["seed"], prime, outcome.error))
        else:
            reports.append(outcome.result["report"])
    return reports


def hilbert_rows(
    a: int, b: int, c: int, seeds: Sequence[int], k_max: int, prime: int = DEFAULT_PRIME, jobs: int = 1
) -> List[Dict[str, Any]]:
    """Rows (seed, k, computed, expected, maximal) by seed then degree.

    Raises:
        FatPointException: A trial failed.
    """
    options = {"specs": [[a, b, c]], "seeds": list(seeds), "prime": prime, "k_max": k_max}
    rows: List[Dict[str, Any]] = []
    for _, outcome in run_method("hilbert_trial", options, jobs):
        if outcome.failed:
            raise FatPointException(f"{outcome.host}: {outcome.error}")
        rows.extend(outcome.result["rows"])
    return rows


def sweep_specs(a_max: int, b_max: int, c_max: int, length_max: int) -> List[Triple]:
    """Every (a, b, c) in the box with 1 <= length <= length_max, ordered by c, then b, then a."""
    return [
        (a, b, c)
        for c in range(c_max + 1)
        for b in range(b_max + 1)
        for a in range(a_max + 1)
        if 1 <= scheme_length(a, b, c) <= length_max
    ]


def numeric_sweep(
    specs: Sequence[Triple], seeds: Sequence[int], prime: int = DEFAULT_PRIME, jobs: int = 1
) -> List[NumericSweepRow]:
    """Majority Betti verdict of each spec, all trials run in one Nornir pass."""
    reports = betti_reports(specs, seeds, prime, jobs)
    rows = []
    for index, (a, b, c) in enumerate(specs):
        chunk = reports[index * len(seeds) : (index + 1) * len(seeds)]
        rows.append(NumericSweepRow.from_summary(a, b, c, summarize(a, b, c, chunk)))
    return rows


def ledger_sweeps(degrees: Sequence[int], jobs: int = 1) -> List[SweepRow]:
    """Sweep rows of each degree in the given order.

    Raises:
        FatPointException: A degree could not be swept at all.
    """
    rows: List[SweepRow] = []
    for _, outcome in run_method("sweep_degree", {"degrees": list(degrees)}, jobs):
        if outcome.failed:
            raise FatPointException(f"{outcome.host}: {outcome.error}")
        rows.extend(outcome.result["rows"])
    return rows
