"""ledger driver: replay every admissible tuple of one degree."""

import logging

from nornir.core.task import Result, Task

from nornir_fatpoints.exceptions import FatPointException
from nornir_fatpoints.ledger.replay import FIRST_ROUTED_DEGREE, sweep

_logger = logging.getLogger(__name__)


class LedgerDriver:
    """Ledger collection of Nornir Tasks."""

    @staticmethod
    def sweep_degree(task: Task, logger, obj) -> Result:
        """Replay each admissible tuple at the host degree.

        Args:
            task (Task): Nornir Task; the host data holds k.
            logger (NornirLogger): Custom NornirLogger object.
            obj (str): Degree label.

        Returns:
            Result: Nornir Result object with a dict as a result
                { "rows": [<SweepRow>, ...] }
        """
        k = task.host.data["k"]
        logger.log_debug(f"Executing sweep_degree for k={k}")
        if k < FIRST_ROUTED_DEGREE:
            logger.log_failure(obj, f"ledger sweeps start at degree {FIRST_ROUTED_DEGREE}, preemptively failed.")
            raise FatPointException(f"ledger sweeps start at degree {FIRST_ROUTED_DEGREE}, preemptively failed.")

        rows = sweep(k)
        failed = [row for row in rows if not row.certified]
        for row in failed:
            logger.log_warning(obj, f"{tuple(row.tuple)} was not certified: {row.error}")
        if not failed:
            logger.log_success(obj, f"all {len(rows)} admissible tuples certified")
        return Result(host=task.host, result={"rows": rows})
