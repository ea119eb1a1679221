"""Fat point schemes with random support and their interpolation matrices."""

import logging
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from nornir_fatpoints.exceptions import SchemeError
from nornir_fatpoints.field_linalg import DEFAULT_PRIME, PrimeMatrix, kernel_basis
from nornir_fatpoints.numerics import length_of, n_forms

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class FatPointSpec:
    """Multiplicities of the points of a fat point scheme."""

    multiplicities: Tuple[int, ...]

    def __post_init__(self):
        """Validate and normalize the multiplicities to a tuple."""
        values = tuple(int(m) for m in self.multiplicities)
        for value in values:
            if value < 1:
                raise SchemeError(f"multiplicity must be at least 1, got {value}")
        object.__setattr__(self, "multiplicities", values)

    @classmethod
    def from_counts(cls, a: int, b: int, c: int) -> "FatPointSpec":
        """Spec of a simple, b double and c triple points."""
        if min(a, b, c) < 0:
            raise SchemeError(f"point counts must be nonnegative, got ({a}, {b}, {c})")
        return cls((1,) * a + (2,) * b + (3,) * c)

    @property
    def counts(self) -> Tuple[int, int, int]:
        """The (a, b, c) view; only defined when every multiplicity is at most 3."""
        if any(m > 3 for m in self.multiplicities):
            raise SchemeError(f"multiplicities above 3 have no (a, b, c) view: {self.multiplicities}")
        return tuple(self.multiplicities.count(m) for m in (1, 2, 3))

    @property
    def length(self) -> int:
        """Sum of m(m+1)/2 over the points."""
        return sum(length_of(m) for m in self.multiplicities)

    @property
    def point_count(self) -> int:
        """Number of support points."""
        return len(self.multiplicities)

    def __str__(self):
        """Counts form when available, multiplicity list otherwise."""
        if all(m <= 3 for m in self.multiplicities):
            return "({},{},{})".format(*self.counts)
        return "[" + ",".join(str(m) for m in self.multiplicities) + "]"


@dataclass(frozen=True)
class SupportedScheme:
    """A fat point spec placed on distinct affine points of the prime field plane."""

    spec: FatPointSpec
    support: Tuple[Tuple[int, int], ...]
    seed: Optional[int]
    prime: int = DEFAULT_PRIME

    def __post_init__(self):
        """Check the support against the spec."""
        points = tuple((int(x), int(y)) for x, y in self.support)
        if len(points) != self.spec.point_count:
            raise SchemeError(f"support has {len(points)} points, spec needs {self.spec.point_count}")
        if len(set(points)) != len(points):
            raise SchemeError("support points must be pairwise distinct")
        for x, y in points:
            if not (0 <= x < self.prime and 0 <= y < self.prime):
                raise SchemeError(f"coordinates ({x}, {y}) are not residues modulo {self.prime}")
        object.__setattr__(self, "support", points)

    @property
    def length(self) -> int:
        """Length of the underlying spec."""
        return self.spec.length


def random_scheme(spec: FatPointSpec, seed: int, prime: int = DEFAULT_PRIME) -> SupportedScheme:
    """Place the spec on uniformly random distinct points of the affine chart z = 1.

    Args:
        spec (FatPointSpec): Multiplicities to place.
        seed (int): Seed of the numpy generator; equal seeds give equal supports.
        prime (int): Field characteristic.

    Returns:
        SupportedScheme: The placed scheme.
    """
    if spec.point_count == 0:
        raise SchemeError("cannot place an empty fat point spec")
    rng = np.random.default_rng(seed)
    points: List[Tuple[int, int]] = []
    seen = set()
    while len(points) < spec.point_count:
        point = (int(rng.integers(0, prime)), int(rng.integers(0, prime)))
        if point in seen:
            LOGGER.debug("seed %s | support collision at %s, resampling", seed, point)
            continue
        seen.add(point)
        points.append(point)
    return SupportedScheme(spec=spec, support=tuple(points), seed=seed, prime=prime)


@lru_cache(maxsize=None)
def monomials(k: int) -> Tuple[Tuple[int, int], ...]:
    """Exponents (a, b) of x^a y^b z^(k-a-b): a from k down to 0, then b from k-a down to 0."""
    n_forms(k)
    return tuple((a, b) for a in range(k, -1, -1) for b in range(k - a, -1, -1))


@lru_cache(maxsize=None)
def monomial_index(k: int) -> Dict[Tuple[int, int], int]:
    """Column of each exponent pair in degree k."""
    return {exponents: column for column, exponents in enumerate(monomials(k))}


def monomial_column(k: int, exp_x, exp_y):
    """Vectorized column lookup of x^a y^b z^(k-a-b); accepts scalars or integer arrays."""
    level = k - exp_x
    return level * (level + 1) // 2 + (level - exp_y)


@lru_cache(maxsize=None)
def exponent_arrays(k: int) -> Tuple[np.ndarray, np.ndarray]:
    """Exponents of x and of y in monomial order, as two integer arrays."""
    pairs = np.array(monomials(k), dtype=np.int64).reshape(-1, 2)
    pairs.setflags(write=False)
    return pairs[:, 0], pairs[:, 1]


def _powers(base: int, top: int, prime: int) -> np.ndarray:
    values = [1]
    for _ in range(top):
        values.append(values[-1] * base % prime)
    return np.array(values, dtype=np.int64)


@lru_cache(maxsize=512)
def conditions_matrix(scheme: SupportedScheme, k: int) -> PrimeMatrix:
    """Vanishing conditions imposed by the scheme on degree-k forms.

    Row (P_i, (alpha, beta)) with alpha + beta < m_i holds, in the column of x^a y^b z^(k-a-b), the
    coefficient of X^alpha Y^beta in (X + x_i)^a (Y + y_i)^b. A form is in the ideal exactly when the
    matrix annihilates its coefficient vector.
    """
    prime = scheme.prime
    exp_x, exp_y = exponent_arrays(k)
    top = max(scheme.spec.multiplicities, default=1)
    binomials = np.array([[comb(n, j) % prime for j in range(top)] for n in range(k + 1)], dtype=np.int64)
    rows = []
    for multiplicity, (x, y) in zip(scheme.spec.multiplicities, scheme.support):
        x_powers = _powers(x, k, prime)
        y_powers = _powers(y, k, prime)
        for alpha in range(multiplicity):
            for beta in range(multiplicity - alpha):
                x_part = binomials[exp_x, alpha] * x_powers[np.clip(exp_x - alpha, 0, None)] % prime
                y_part = binomials[exp_y, beta] * y_powers[np.clip(exp_y - beta, 0, None)] % prime
                rows.append(x_part * y_part % prime)
    if not rows:
        return PrimeMatrix.zeros(0, n_forms(k), prime)
    return PrimeMatrix(prime, np.vstack(rows))


def hilbert_function(scheme: SupportedScheme, k: int) -> int:
    """Dimension of the degree-k part of the ideal of the scheme."""
    return len(_frozen_basis(scheme, k))


@lru_cache(maxsize=512)
def _frozen_basis(scheme: SupportedScheme, k: int) -> Tuple[np.ndarray, ...]:
    basis = kernel_basis(conditions_matrix(scheme, k))
    for vector in basis:
        vector.setflags(write=False)
    return tuple(basis)


def ideal_basis(scheme: SupportedScheme, k: int) -> List[np.ndarray]:
    """Coefficient vectors of a basis of the degree-k forms in the ideal; repeated calls reuse the kernel."""
    return list(_frozen_basis(scheme, k))


def dumps(scheme: SupportedScheme) -> str:
    """Serialize the support as one `m:x:y` line per point."""
    return "\n".join(
        f"{multiplicity}:{x}:{y}" for multiplicity, (x, y) in zip(scheme.spec.multiplicities, scheme.support)
    )


def loads(text: str, prime: int = DEFAULT_PRIME, seed: Optional[int] = None) -> SupportedScheme:
    """Parse `m:x:y` lines; blank lines and `#` comments are skipped.

    Raises:
        SchemeError: A line does not have three decimal fields or the support is invalid.
    """
    multiplicities: List[int] = []
    support: List[Tuple[int, int]] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields: Sequence[str] = line.split(":")
        if len(fields) != 3:
            raise SchemeError(f"line {number}: expected m:x:y, got {raw!r}")
        try:
            multiplicity, x, y = (int(field) for field in fields)
        except ValueError:
            raise SchemeError(f"line {number}: fields must be decimal integers, got {raw!r}") from None
        multiplicities.append(multiplicity)
        support.append((x, y))
    return SupportedScheme(spec=FatPointSpec(tuple(multiplicities)), support=tuple(support), seed=seed, prime=prime)
