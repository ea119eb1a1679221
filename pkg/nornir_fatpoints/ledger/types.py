"""Configurations, steps and certificates of the ledger.

Lengths are counted in bundle units: a simple pullback is 2, a double 6, a triple 12, a column over the conic
twice its planar length and a remainder R_p is p.
"""

import json
from collections import Counter
from dataclasses import dataclass, field, replace
from typing import Any, Dict, Iterable, Mapping, Optional, Tuple, Union

from nornir_fatpoints.exceptions import LedgerError
from nornir_fatpoints.numerics import decompose12

REMAINDER_LENGTHS = (0, 1, 2, 3, 5, 8, 11)

AXIOM_IDS = ("double-points", "triple-points", "conic-columns", "conic-columns-barred", "one-settled", "empty")

_ADMISSIBLE_COLUMNS = {(2, 1), (3, 1), (3, 2), (2, 2), (3, 2, 1)}

# Bundle layers, bottom first.
_REMAINDER_LAYERS = {
    0: (),
    1: (1,),
    2: (2,),
    3: (2, 1),
    5: (4, 1),
    8: (6, 2),
    11: (6, 4, 1),
}


@dataclass(frozen=True, order=True)
class ColumnScheme:
    """Vertically graded scheme over the conic, planar trace lengths listed bottom first."""

    entries: Tuple[int, ...]

    def __post_init__(self):
        """Check the shape."""
        entries = tuple(int(entry) for entry in self.entries)
        if not entries or min(entries) < 1:
            raise LedgerError(f"column entries must be positive, got {entries}", rule="column")
        if len(entries) > 1 and entries not in _ADMISSIBLE_COLUMNS:
            raise LedgerError(f"column shape {entries} is not admissible", rule="column")
        object.__setattr__(self, "entries", entries)

    @property
    def planar_length(self) -> int:
        """Sum of the entries."""
        return sum(self.entries)

    @property
    def length(self) -> int:
        """Bundle length."""
        return 2 * self.planar_length

    @property
    def trace(self) -> int:
        """Planar length left on the conic by a step."""
        return self.entries[0]

    @property
    def residue(self) -> Tuple[int, ...]:
        """Entries surviving a step."""
        return self.entries[1:]

    def __str__(self):
        """Top-down notation such as (1;2)."""
        return "(" + ";".join(str(entry) for entry in reversed(self.entries)) + ")"


DOUBLE_SLICE = ColumnScheme((2, 1))
TRIPLE_TOP = ColumnScheme((3, 1))
TRIPLE_BOTTOM = ColumnScheme((3, 2))


@dataclass(frozen=True)
class Remainder:
    """The remainder scheme R_p, optionally barred (a double pullback with R_5) or specialized on the conic."""

    p: int = 0
    barred: bool = False
    on_conic: bool = False

    def __post_init__(self):
        """Check p against the allowed lengths."""
        if self.p not in REMAINDER_LENGTHS:
            raise LedgerError(f"remainder length {self.p} is not one of {REMAINDER_LENGTHS}", rule="remainder")
        if self.barred and self.p != 11:
            raise LedgerError("only R_11 has a barred form", rule="remainder")
        if self.barred and self.on_conic:
            raise LedgerError("a barred remainder is split before it meets the conic", rule="remainder")

    @property
    def length(self) -> int:
        """Bundle length."""
        return self.p

    @property
    def layers(self) -> Tuple[int, ...]:
        """Bundle layers bottom first."""
        return _REMAINDER_LAYERS[self.p]

    def split(self) -> Tuple[int, "Remainder", int]:
        """Planar trace, residual remainder and new flat points when the remainder meets the conic."""
        if self.barred:
            raise LedgerError("a barred remainder cannot be specialized on the conic", rule="remainder")
        if self.p == 1:
            raise LedgerError("R_1 is a single point and is never specialized", rule="remainder")
        trace = self.layers[0] // 2 if self.layers else 0
        residual, flat = {
            0: (Remainder(0), 0),
            2: (Remainder(0), 0),
            3: (Remainder(1), 0),
            5: (Remainder(1), 0),
            8: (Remainder(0), 1),
            11: (Remainder(5, on_conic=True), 0),
        }[self.p]
        return trace, residual, flat

    def __str__(self):
        """Short form such as R_8 or R̄_11 on C."""
        name = f"R{'bar' if self.barred else ''}_{self.p}"
        return f"{name} on C" if self.on_conic else name


def _normalize_columns(
    columns: Union[Mapping[ColumnScheme, int], Iterable[Tuple[ColumnScheme, int]]]
) -> Tuple[Tuple[Tuple[ColumnScheme, int], ...], int]:
    """Merge counts, drop zeros and fold single-entry columns into flat points."""
    items = columns.items() if isinstance(columns, Mapping) else columns
    merged: Counter = Counter()
    flat = 0
    for column, count in items:
        if not isinstance(column, ColumnScheme):
            column = ColumnScheme(tuple(column))
        if count < 0:
            raise LedgerError(f"negative count for column {column}", rule="configuration")
        if len(column.entries) == 1:
            flat += column.entries[0] * count
        elif count:
            merged[column] += count
    return tuple(sorted(merged.items())), flat


@dataclass(frozen=True)
class Configuration:  # pylint: disable=too-many-instance-attributes
    """General pullbacks of simple, double and triple points, schemes over the conic and a remainder at degree k."""

    k: int
    s: int = 0
    d: int = 0
    t: int = 0
    columns: Tuple[Tuple[ColumnScheme, int], ...] = ()
    flat: int = 0
    remainder: Remainder = field(default_factory=Remainder)

    def __post_init__(self):
        """Normalize the columns and reject negative counts."""
        if min(self.k, self.s, self.d, self.t, self.flat) < 0:
            raise LedgerError(f"negative count in configuration at degree {self.k}", rule="configuration")
        columns, folded = _normalize_columns(self.columns)
        object.__setattr__(self, "columns", columns)
        object.__setattr__(self, "flat", self.flat + folded)

    @classmethod
    def general(cls, s: int, d: int, t: int, p: int, k: int) -> "Configuration":
        """Z(s, d, t, p) at degree k, everything general."""
        return cls(k=k, s=s, d=d, t=t, remainder=Remainder(p))

    @classmethod
    def doubles_and_triples(cls, d: int, t: int, k: int, barred: bool = False) -> "Configuration":
        """X(d, t, k): d doubles, t triples and R_rho(k), or the barred R_11 when asked."""
        rho = decompose12(k).rho
        if barred and rho != 11:
            raise LedgerError(f"the barred remainder needs rho(k) = 11, got {rho} at k={k}", rule="configuration")
        return cls(k=k, d=d, t=t, remainder=Remainder(rho, barred=barred))

    def column_count(self, column: ColumnScheme) -> int:
        """Number of copies of a column shape."""
        return dict(self.columns).get(column, 0)

    @property
    def conic_trace(self) -> int:
        """Planar length already lying on the conic, remainder included when it is specialized there."""
        trace = sum(column.trace * count for column, count in self.columns) + self.flat
        if self.remainder.on_conic:
            trace += self.remainder.split()[0]
        return trace

    @property
    def total_length(self) -> int:
        """Length in bundle units."""
        return (
            2 * self.s
            + 6 * self.d
            + 12 * self.t
            + sum(column.length * count for column, count in self.columns)
            + 2 * self.flat
            + self.remainder.length
        )

    def is_settled_length(self) -> bool:
        """True when the length equals k(k+2)."""
        return self.total_length == self.k * (self.k + 2)

    def evolve(self, **changes) -> "Configuration":
        """Copy with some fields replaced."""
        return replace(self, **changes)

    def describe(self) -> str:
        """One-line text form."""
        general = [
            f"{count} {name}"
            for count, name in ((self.s, "simple"), (self.d, "double"), (self.t, "triple"))
            if count
        ]
        conic = [f"{count}x{column}" for column, count in self.columns]
        if self.flat:
            conic.append(f"flat {self.flat}")
        parts = [f"k={self.k}", ", ".join(general) or "no general points"]
        if conic:
            parts.append("on C: " + ", ".join(conic))
        parts.append(str(self.remainder))
        return " | ".join(parts)

    def to_dict(self) -> Dict[str, Any]:
        """Plain data form."""
        return {
            "k": self.k,
            "simple": self.s,
            "double": self.d,
            "triple": self.t,
            "columns": [{"column": str(column), "count": count} for column, count in self.columns],
            "flat": self.flat,
            "remainder": {"p": self.remainder.p, "barred": self.remainder.barred, "on_conic": self.remainder.on_conic},
            "length": self.total_length,
        }


@dataclass(frozen=True)
class LedgerStep:  # pylint: disable=too-many-instance-attributes
    """One recorded reduction."""

    rule: str
    before: Configuration
    after: Configuration
    parameters: Dict[str, int] = field(default_factory=dict)
    citation: str = ""

    @property
    def k_before(self) -> int:
        """Degree of the pre-state."""
        return self.before.k

    @property
    def k_after(self) -> int:
        """Degree of the post-state."""
        return self.after.k

    @property
    def length_before(self) -> int:
        """Length of the pre-state."""
        return self.before.total_length

    @property
    def length_after(self) -> int:
        """Length of the post-state."""
        return self.after.total_length

    def to_dict(self) -> Dict[str, Any]:
        """Plain data form with stable field names."""
        return {
            "rule": self.rule,
            "k_before": self.k_before,
            "k_after": self.k_after,
            "parameters": dict(self.parameters),
            "length_before": self.length_before,
            "length_after": self.length_after,
            "before": self.before.describe(),
            "after": self.after.describe(),
            "citation": self.citation,
        }


@dataclass(frozen=True)
class Certificate:
    """Chained steps from a start configuration to a settled terminal."""

    start: Configuration
    steps: Tuple[LedgerStep, ...]
    terminal: str

    def __post_init__(self):
        """Check the chaining and the terminal."""
        steps = tuple(self.steps)
        object.__setattr__(self, "steps", steps)
        state = self.start
        for index, step in enumerate(steps):
            if step.before != state:
                raise LedgerError(
                    f"step {index} does not start where the previous one ended", rule=step.rule, state=state.describe()
                )
            state = step.after
        if self.terminal not in AXIOM_IDS:
            raise LedgerError(f"unknown terminal {self.terminal!r}", rule="certificate", state=state.describe())

    @property
    def final(self) -> Configuration:
        """The configuration the terminal applies to."""
        return self.steps[-1].after if self.steps else self.start

    def extend(self, steps: Iterable[LedgerStep], terminal: Optional[str] = None) -> "Certificate":
        """Certificate with more steps appended."""
        return Certificate(self.start, self.steps + tuple(steps), terminal or self.terminal)

    def to_dict(self) -> Dict[str, Any]:
        """Plain data form."""
        return {
            "start": self.start.to_dict(),
            "steps": [step.to_dict() for step in self.steps],
            "terminal": self.terminal,
            "final": self.final.to_dict(),
        }

    def to_json(self, indent: Optional[int] = 2) -> str:
        """JSON document of the certificate."""
        return json.dumps(self.to_dict(), indent=indent)
