"""Run settings read from flags and FATPOINTS_* environment variables."""

from enum import Enum
from typing import List, Optional

from pydantic import BaseSettings, validator

from nornir_fatpoints.field_linalg import DEFAULT_PRIME, PRIME_BOUND
from nornir_fatpoints.numerics import is_probable_prime


class OutputFormat(str, Enum):
    """Rendering of command results."""

    TABLE = "table"
    STRUCTURED = "structured"


class RunConfig(BaseSettings):
    """Settings shared by every subcommand."""

    prime: int = DEFAULT_PRIME
    seed_base: int = 1
    seed_count: int = 5
    seeds: Optional[List[int]] = None
    jobs: int = 1
    output_format: OutputFormat = OutputFormat.TABLE
    out: Optional[str] = None
    debug: bool = False

    class Config:
        """Environment lookup."""

        env_prefix = "FATPOINTS_"
        env_file = ".env"
        use_enum_values = True

    @validator("prime")
    def check_prime(cls, value):  # pylint: disable=no-self-argument
        """Prime above 3 and below the 31-bit bound."""
        if not 3 < value < PRIME_BOUND:
            raise ValueError(f"prime must lie strictly between 3 and {PRIME_BOUND}, got {value}")
        if not is_probable_prime(value):
            raise ValueError(f"{value} is not prime")
        return value

    @validator("seed_count", "jobs")
    def check_positive(cls, value, field):  # pylint: disable=no-self-argument
        """At least one seed and one worker."""
        if value < 1:
            raise ValueError(f"{field.name} must be at least 1, got {value}")
        return value

    @validator("seed_base")
    def check_seed_base(cls, value):  # pylint: disable=no-self-argument
        """Seeds are nonnegative."""
        if value < 0:
            raise ValueError(f"seed_base must be nonnegative, got {value}")
        return value

    @validator("seeds")
    def check_seeds(cls, value):  # pylint: disable=no-self-argument
        """Explicit seeds: nonempty, nonnegative, no repeats."""
        if value is None:
            return value
        if not value:
            raise ValueError("seeds must not be empty")
        if min(value) < 0:
            raise ValueError("seeds must be nonnegative")
        if len(set(value)) != len(value):
            raise ValueError("seeds must not repeat")
        return value

    @property
    def seed_list(self) -> List[int]:
        """Explicit seeds when given, else seed_base .. seed_base + seed_count - 1."""
        if self.seeds is not None:
            return list(self.seeds)
        return list(range(self.seed_base, self.seed_base + self.seed_count))

    def summary(self) -> dict:
        """Config block of a structured document."""
        return {"prime": self.prime, "seeds": self.seed_list, "jobs": self.jobs}
