"""default driver: numeric trials on randomly placed fat points."""
# pylint: disable=raise-missing-from

import logging

from nornir.core.task import Result, Task

from nornir_fatpoints.betti import run_trial
from nornir_fatpoints.exceptions import DegenerateTrialError, FatPointException, SchemeError
from nornir_fatpoints.numerics import expected_hilbert
from nornir_fatpoints.schemes import FatPointSpec, hilbert_function, random_scheme

_logger = logging.getLogger(__name__)


class FatPointDriver:
    """Default collection of Nornir Tasks for seeded fat point trials."""

    @staticmethod
    def hilbert_trial(task: Task, logger, obj) -> Result:
        """Hilbert function of one seeded placement for every degree up to k_max.

        Args:
            task (Task): Nornir Task; the host data holds a, b, c, seed, prime and k_max.
            logger (NornirLogger): Custom NornirLogger object.
            obj (str): Trial label.

        Returns:
            Result: Nornir Result object with a dict as a result
                { "rows": [{"seed", "k", "computed", "expected", "maximal"}, ...] }
        """
        data = task.host.data
        logger.log_debug(f"Executing hilbert_trial for {task.host.name}")
        if data.get("k_max") is None or data["k_max"] < 0:
            logger.log_failure(obj, "`hilbert_trial` needs a nonnegative k_max, preemptively failed.")
            raise FatPointException("`hilbert_trial` needs a nonnegative k_max, preemptively failed.")

        try:
            spec = FatPointSpec.from_counts(data["a"], data["b"], data["c"])
            scheme = random_scheme(spec, data["seed"], data["prime"])
        except SchemeError as exc:
            logger.log_failure(obj, f"`hilbert_trial` could not place the scheme: `{exc}`")
            raise

        rows = []
        for k in range(data["k_max"] + 1):
            computed = hilbert_function(scheme, k)
            expected = expected_hilbert(spec.length, k)
            rows.append({"seed": data["seed"], "k": k, "computed": computed, "expected": expected})
            rows[-1]["maximal"] = computed == expected
        if not all(row["maximal"] for row in rows):
            logger.log_warning(obj, "Hilbert function is not maximal in every degree")
        return Result(host=task.host, result={"rows": rows})

    @staticmethod
    def betti_trial(task: Task, logger, obj) -> Result:
        """Betti numbers of one seeded placement.

        Args:
            task (Task): Nornir Task; the host data holds a, b, c, seed and prime.
            logger (NornirLogger): Custom NornirLogger object.
            obj (str): Trial label.

        Returns:
            Result: Nornir Result object with a dict as a result
                { "report": <BettiReport> }
        """
        data = task.host.data
        logger.log_debug(f"Executing betti_trial for {task.host.name}")
        try:
            report = run_trial(data["a"], data["b"], data["c"], data["seed"], data["prime"])
        except DegenerateTrialError as exc:
            logger.log_failure(obj, f"`betti_trial` hit a degenerate placement: `{exc}`")
            raise DegenerateTrialError(f"`betti_trial` hit a degenerate placement: `{exc}`")
        except SchemeError as exc:
            logger.log_failure(obj, f"`betti_trial` could not place the scheme: `{exc}`")
            raise

        if report.matches_expected:
            logger.log_success(obj, "generators match the expected resolution")
        else:
            logger.log_info(obj, f"generators {report.generators} differ from {report.expected}")
        return Result(host=task.host, result={"report": report})
