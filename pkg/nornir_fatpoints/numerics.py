"""Closed-form combinatorial quantities shared by the verifier and the ledger."""

import logging
from dataclasses import dataclass

from nornir_fatpoints.exceptions import SchemeError

LOGGER = logging.getLogger(__name__)

INT64_MAX = 2**63 - 1

# (a, b, c) triples whose Hilbert function is not maximal.
HF_EXCEPTIONS = frozenset([(0, 2, 0), (0, 5, 0), (0, 0, 2), (0, 0, 5)])
# (a, b, c) triples whose minimal free resolution is not the expected one.
RESOLUTION_EXCEPTIONS = frozenset([(0, 2, 0), (0, 5, 0), (1, 1, 0), (1, 2, 0), (0, 0, 2), (0, 0, 3), (0, 0, 5)])

_MILLER_RABIN_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


@dataclass(frozen=True)
class DegreeDecomp6:
    """k(k+2) = 6q + r with r in {0, 2, 3, 5}."""

    k: int
    q: int
    r: int


@dataclass(frozen=True)
class DegreeDecomp12:
    """k(k+2) = 12u + rho, rho fixed by k mod 6."""

    k: int
    u: int
    rho: int


@dataclass(frozen=True)
class ExpectedResolution:  # pylint: disable=too-many-instance-attributes
    """Generator counts forced by a maximal Hilbert function and maximal rank multiplication maps."""

    length: int
    v: int
    gens_v: int
    gens_v1: int
    hf_exception: bool
    res_exception: bool

    def generators(self) -> dict:
        """Expected generator counts keyed by degree, zero entries dropped."""
        counts = {}
        if self.gens_v:
            counts[self.v] = self.gens_v
        if self.gens_v1:
            counts[self.v + 1] = self.gens_v1
        return counts


def checked_int64(value: int) -> int:
    """Return value unchanged, raising OverflowError if it does not fit a signed 64-bit slot."""
    if not -INT64_MAX - 1 <= value <= INT64_MAX:
        raise OverflowError(f"{value} does not fit in a signed 64-bit integer")
    return value


def _require_degree(k: int) -> None:
    if k < 0:
        raise SchemeError(f"degree must be nonnegative, got {k}")


def _require_length(length: int) -> None:
    if length < 1:
        raise SchemeError(f"scheme length must be at least 1, got {length}")


def n_forms(k: int) -> int:
    """Dimension of the space of degree-k forms in three variables."""
    _require_degree(k)
    return (k + 2) * (k + 1) // 2


def length_of(multiplicity: int) -> int:
    """Length of a fat point of the given multiplicity."""
    if multiplicity < 1:
        raise SchemeError(f"multiplicity must be at least 1, got {multiplicity}")
    return multiplicity * (multiplicity + 1) // 2


def scheme_length(a: int, b: int, c: int) -> int:
    """Length of a simple points, b double points and c triple points."""
    if min(a, b, c) < 0:
        raise SchemeError(f"point counts must be nonnegative, got ({a}, {b}, {c})")
    return a + 3 * b + 6 * c


def decompose6(k: int) -> DegreeDecomp6:
    """Split k(k+2) as 6q + r.

    Raises:
        ArithmeticError: If r comes out as 1 or 4, which cannot happen for a correct k(k+2).
    """
    _require_degree(k)
    q, r = divmod(k * (k + 2), 6)
    if r not in (0, 2, 3, 5):
        raise ArithmeticError(f"k(k+2) mod 6 = {r} for k={k}")
    return DegreeDecomp6(k=k, q=q, r=r)


def decompose12(k: int) -> DegreeDecomp12:
    """Split k(k+2) as 12u + rho using the closed forms per residue of k mod 6."""
    _require_degree(k)
    level, residue = divmod(k, 6)
    square = 3 * level * level
    u, rho = {
        0: (square + level, 0),
        1: (square + 2 * level, 3),
        2: (square + 3 * level, 8),
        3: (square + 4 * level + 1, 3),
        4: (square + 5 * level + 2, 0),
        5: (square + 6 * level + 2, 11),
    }[residue]
    if 12 * u + rho != k * (k + 2):
        raise ArithmeticError(f"closed form 12u+rho disagrees with k(k+2) for k={k}")
    return DegreeDecomp12(k=k, u=u, rho=rho)


def critical_degree(length: int) -> int:
    """Smallest v >= 0 with length <= n_forms(v); first degree holding a form through the scheme."""
    _require_length(length)
    v = 0
    while n_forms(v) < length:
        v += 1
    return v


def surjectivity_degree(length: int) -> int:
    """Smallest k >= 1 with k(k+2) >= 2*length; first degree where the multiplication map can be onto."""
    _require_length(length)
    k = 1
    while k * (k + 2) < 2 * length:
        k += 1
    return k


def expected_hilbert(length: int, k: int) -> int:
    """Dimension of degree-k forms through a scheme of the given length with maximal Hilbert function."""
    if length < 0:
        raise SchemeError(f"scheme length must be nonnegative, got {length}")
    return max(0, n_forms(k) - length)


def expected_resolution(a: int, b: int, c: int) -> ExpectedResolution:
    """Expected generator counts of the ideal of a simple, b double and c triple general points."""
    length = scheme_length(a, b, c)
    _require_length(length)
    v = critical_degree(length)
    return ExpectedResolution(
        length=length,
        v=v,
        gens_v=n_forms(v) - length,
        gens_v1=max(0, 2 * length - v * (v + 2)),
        hf_exception=(a, b, c) in HF_EXCEPTIONS,
        res_exception=(a, b, c) in RESOLUTION_EXCEPTIONS,
    )


def chain_consumption(n: int, k: int) -> int:
    """Double points absorbed by n chained descents of six degrees starting at degree k."""
    if k < 6 or n < 1 or 6 * n > k + 4:
        raise SchemeError(f"chain count n={n} outside 1..(k+4)/6 for k={k}")
    return n * (2 * k - 6 * n + 2)


def max_chain_count(d: int, k: int) -> int:
    """Largest number of chained descents that d double points can feed at degree k, or 0."""
    if d < 0:
        raise SchemeError(f"double point count must be nonnegative, got {d}")
    if k < 6:
        raise SchemeError(f"chained descents need k >= 6, got {k}")
    if d < 2 * k - 4:
        return 0
    best = 0
    for n in range(1, k // 6 + 1):
        if chain_consumption(n, k) <= d:
            best = n
    return best


def is_probable_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for n < 2**64."""
    if n < 2:
        return False
    for base in _MILLER_RABIN_BASES:
        if n % base == 0:
            return n == base
    odd, twos = n - 1, 0
    while odd % 2 == 0:
        odd //= 2
        twos += 1
    for base in _MILLER_RABIN_BASES:
        x = pow(base, odd, n)
        if x in (1, n - 1):
            continue
        for _ in range(twos - 1):
            x = pow(x, 2, n)
            if x == n - 1:
                break
        else:
            return False
    return True
