"""Collect driver results of a run, keyed by host."""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence

from nornir.core.inventory import Host
from nornir.core.task import AggregatedResult, MultiResult, Task

from . import BaseLoggingProcessor

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class TrialOutcome:
    """Result payload of one host, or the error text when the host failed."""

    host: str
    result: Optional[Dict[str, Any]] = None
    error: Optional[str] = None

    @property
    def failed(self) -> bool:
        """True when the driver raised or returned nothing."""
        return self.result is None


class TrialCollector(BaseLoggingProcessor):
    """Keep the driver result of every host for one driver method."""

    def __init__(self, task_name: str, host_order: Sequence[str]) -> None:
        """Initialize the processor.

        Args:
            task_name (str): Driver method whose results are collected.
            host_order (Sequence[str]): Host names in inventory order.
        """
        self.task_name = task_name
        self.host_order = list(host_order)
        self.results: Dict[str, Dict[str, Any]] = {}
        self.errors: Dict[str, str] = {}

    def subtask_instance_completed(self, task: Task, host: Host, result: MultiResult) -> None:
        """Record the driver result or its exception."""
        if task.name != self.task_name:
            return

        if result[0].failed:
            self.errors[host.name] = str(result[0].exception)
            LOGGER.debug("%s | %s failed: %s", host.name, task.name, self.errors[host.name])
            return

        self.results[host.name] = result[0].result

    def task_instance_completed(self, task: Task, host: Host, result: MultiResult) -> None:
        """Record failures raised before the driver was reached."""
        if host.name in self.results or host.name in self.errors:
            return
        if result.failed:
            self.errors[host.name] = str(result[0].exception)
        else:
            self.errors[host.name] = f"{self.task_name} returned no result"

    def task_completed(self, task: Task, result: AggregatedResult) -> None:
        """Log how many hosts failed."""
        if self.errors:
            LOGGER.info("%s | %s of %s host(s) failed", self.task_name, len(self.errors), len(self.host_order))

    def ordered(self) -> List[TrialOutcome]:
        """Outcomes in inventory order."""
        outcomes = []
        for name in self.host_order:
            if name in self.results:
                outcomes.append(TrialOutcome(name, result=self.results[name]))
            else:
                outcomes.append(TrialOutcome(name, error=self.errors.get(name, "host was not run")))
        return outcomes
