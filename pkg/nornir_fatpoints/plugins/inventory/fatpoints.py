"""Nornir inventory of fat point trials and ledger degrees."""
# Python Imports
import logging
from typing import Any, Dict, List, Optional, Sequence

# Nornir Imports
from nornir.core.inventory import Defaults, Group, Groups, Host, Hosts, Inventory, ParentGroups

from nornir_fatpoints.field_linalg import DEFAULT_PRIME
from nornir_fatpoints.schemes import FatPointSpec

# Create Logger
logger = logging.getLogger(__name__)

NUMERIC_PLATFORM = "default"
LEDGER_PLATFORM = "ledger"


def trial_name(a: int, b: int, c: int, seed: int) -> str:
    """Host name of a numeric trial."""
    return f"{FatPointSpec.from_counts(a, b, c)}/seed={seed}"


def degree_name(k: int) -> str:
    """Host name of a ledger degree."""
    return f"ledger/k={k}"


def _set_host(data: Dict[str, Any], name: str, groups: ParentGroups, platform: str, defaults: Defaults) -> Host:
    return Host(
        name=name,
        platform=platform,
        data=data,
        groups=groups,
        defaults=defaults,
    )


class FatPointInventory:
    """One host per seeded trial and one per ledger degree."""

    def __init__(
        self,
        specs: Optional[Sequence[Sequence[int]]] = None,
        seeds: Optional[Sequence[int]] = None,
        prime: int = DEFAULT_PRIME,
        k_max: Optional[int] = None,
        degrees: Optional[Sequence[int]] = None,
    ) -> None:
        """Fat point inventory.

        Args:
            specs (Sequence[Sequence[int]]): (a, b, c) counts of simple, double and triple points.
            seeds (Sequence[int]): Seeds run for every spec.
            prime (int): Field characteristic handed to each trial.
            k_max (int): Highest degree of a Hilbert function trial, None for Betti trials.
            degrees (Sequence[int]): Ledger degrees to sweep.
        """
        self.specs = [tuple(int(count) for count in spec) for spec in specs or []]
        self.seeds = [int(seed) for seed in seeds or []]
        self.prime = prime
        self.k_max = k_max
        self.degrees = [int(k) for k in degrees or []]
        self._verify_required()

    def _verify_required(self) -> None:
        """Verify that the inventory has something to run.

        Raises:
            ValueError: No specs and no degrees, or specs without seeds.
        """
        if not self.specs and not self.degrees:
            raise ValueError("Missing specs or degrees, at least one is required.")
        if self.specs and not self.seeds:
            raise ValueError("Missing seeds, required when specs are given.")
        for spec in self.specs:
            if len(spec) != 3:
                raise ValueError(f"Spec {spec} must hold three counts (a, b, c).")

    @property
    def trial_hosts(self) -> List[str]:
        """Host names in run order."""
        names = [trial_name(*spec, seed) for spec in self.specs for seed in self.seeds]
        return names + [degree_name(k) for k in self.degrees]

    def load(self) -> Inventory:
        """Load inventory."""
        defaults = Defaults(data={"prime": self.prime})
        groups = Groups()
        hosts = Hosts()

        if self.specs:
            groups["numeric"] = Group(name="numeric", defaults=defaults)
        if self.degrees:
            groups["ledger"] = Group(name="ledger", defaults=defaults)

        for a, b, c in self.specs:
            for seed in self.seeds:
                name = trial_name(a, b, c, seed)
                data = {"a": a, "b": b, "c": c, "seed": seed, "prime": self.prime, "k_max": self.k_max}
                hosts[name] = _set_host(  # pylint: disable=unsupported-assignment-operation
                    data=data,
                    name=name,
                    groups=ParentGroups([groups["numeric"]]),
                    platform=NUMERIC_PLATFORM,
                    defaults=defaults,
                )

        for k in self.degrees:
            name = degree_name(k)
            hosts[name] = _set_host(  # pylint: disable=unsupported-assignment-operation
                data={"k": k},
                name=name,
                groups=ParentGroups([groups["ledger"]]),
                platform=LEDGER_PLATFORM,
                defaults=defaults,
            )

        logger.debug("Loaded %s hosts", len(hosts))
        return Inventory(hosts=hosts, groups=groups, defaults=defaults)
