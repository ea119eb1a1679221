"""Graded Betti numbers of fat point ideals by exact rank computations."""

import logging
from collections import Counter
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, root_validator

from nornir_fatpoints.exceptions import DegenerateTrialError, SchemeError
from nornir_fatpoints.field_linalg import DEFAULT_PRIME, PrimeMatrix, kernel_basis, rank, row_reduce, transpose
from nornir_fatpoints.numerics import critical_degree, expected_hilbert, expected_resolution, n_forms
from nornir_fatpoints.schemes import (
    FatPointSpec,
    SupportedScheme,
    dumps,
    exponent_arrays,
    hilbert_function,
    ideal_basis,
    monomial_column,
    random_scheme,
)

LOGGER = logging.getLogger(__name__)

# Generators of a zero-dimensional ideal sit at most four degrees above the critical degree here.
GENERATOR_CAP = 4


class GradedPiece(BaseModel):
    """Degree-k slice of the ideal: its dimension, the image of the multiplication map and the cokernel."""

    k: int
    h0: int
    mu_rank: int
    gens: int

    @root_validator(skip_on_failure=True)
    def check_counts(cls, values):  # pylint: disable=no-self-argument
        """Keep gens = h0 - mu_rank and 0 <= mu_rank <= h0."""
        if values["gens"] != values["h0"] - values["mu_rank"]:
            raise ValueError(f"gens must equal h0 - mu_rank at degree {values['k']}")
        if not 0 <= values["mu_rank"] <= values["h0"]:
            raise ValueError(f"mu_rank out of range at degree {values['k']}")
        return values


class BettiReport(BaseModel):  # pylint: disable=too-few-public-methods
    """Outcome of one trial."""

    spec: str
    seed: Optional[int]
    prime: int
    support: str = ""
    length: int
    v: int
    hilbert: Dict[int, int] = {}
    pieces: List[GradedPiece] = []
    generators: Dict[int, int] = {}
    syzygies: Dict[int, int] = {}
    expected: Dict[int, int] = {}
    hf_maximal: bool = False
    matches_expected: bool = False
    identity_holds: bool = False
    euler_holds: bool = False
    degenerate: bool = False
    error: Optional[str] = None


class VerificationSummary(BaseModel):
    """Per-seed reports with the aggregate verdict."""

    spec: str
    expected: Dict[int, int]
    reports: List[BettiReport]
    majority_matches: bool
    majority_generators: Optional[Dict[int, int]]
    degenerate_seeds: List[Optional[int]]
    exception_expected: bool

    @property
    def settled_count(self) -> int:
        """Seeds that produced a report."""
        return len(self.reports) - len(self.degenerate_seeds)

    @property
    def as_expected(self) -> bool:
        """A match for ordinary triples, a mismatch for the flagged exceptions; never when every seed degenerated."""
        if not self.settled_count:
            return False
        return self.majority_matches != self.exception_expected


def _h1(h0: int, k: int, length: int) -> int:
    return h0 - n_forms(k) + length


@lru_cache(maxsize=None)
def _shift_maps(k: int) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Columns in degree k of x·m, y·m and z·m for every monomial m of degree k-1."""
    exp_x, exp_y = exponent_arrays(k - 1)
    maps = (
        monomial_column(k, exp_x + 1, exp_y),
        monomial_column(k, exp_x, exp_y + 1),
        monomial_column(k, exp_x, exp_y),
    )
    for columns in maps:
        columns.setflags(write=False)
    return maps


def _multiples(vectors: Sequence[np.ndarray], k: int, prime: int) -> PrimeMatrix:
    """Stack of x·f, y·f and z·f in degree k for forms f of degree k-1."""
    entries = np.vstack(vectors)
    blocks = []
    for target in _shift_maps(k):
        block = np.zeros((entries.shape[0], n_forms(k)), dtype=np.int64)
        block[:, target] = entries
        blocks.append(block)
    return PrimeMatrix(prime, np.vstack(blocks))


def mu_rank(scheme: SupportedScheme, k: int) -> int:
    """Rank of the multiplication map from (I_{k-1})^3 into degree k."""
    if k < 1:
        raise SchemeError(f"the multiplication map needs k >= 1, got {k}")
    basis = ideal_basis(scheme, k - 1)
    if not basis:
        return 0
    return rank(_multiples(basis, k, scheme.prime))


def generators_per_degree(scheme: SupportedScheme) -> List[GradedPiece]:
    """Graded pieces from degree 0 until the regularity bound is reached.

    Raises:
        DegenerateTrialError: The regularity bound is not reached within the cap.
    """
    length = scheme.length
    v = critical_degree(length)
    pieces: List[GradedPiece] = []
    previous: List[np.ndarray] = []
    for k in range(0, v + GENERATOR_CAP + 1):
        basis = ideal_basis(scheme, k)
        image = rank(_multiples(previous, k, scheme.prime)) if previous else 0
        if previous and image > 3 * len(previous):
            raise ArithmeticError(f"multiplication rank {image} exceeds 3*h0({k - 1})")
        pieces.append(GradedPiece(k=k, h0=len(basis), mu_rank=image, gens=len(basis) - image))
        LOGGER.debug("degree %s | h0=%s mu_rank=%s", k, len(basis), image)
        if k > v and _h1(pieces[k - 1].h0, k - 1, length) == 0:
            return pieces
        previous = basis
    raise DegenerateTrialError(f"no regularity bound by degree {v + GENERATOR_CAP} for {scheme.spec}")


def _minimal_generators(
    basis: Sequence[np.ndarray], previous: Sequence[np.ndarray], k: int, prime: int
) -> List[np.ndarray]:
    """Ideal forms of degree k that raise the rank over the image of the multiplication map.

    The image rows come first, so the pivot columns of the transposed stack past them pick the basis vectors
    greedily, in basis order.
    """
    if not previous:
        return list(basis)
    image = _multiples(previous, k, prime).entries
    stacked = PrimeMatrix(prime, np.vstack([image] + list(basis)))
    _, pivots = row_reduce(transpose(stacked))
    offset = image.shape[0]
    return [basis[index - offset] for index in pivots if index >= offset]


def _layout(degrees: Sequence[int], j: int) -> Tuple[List[int], int]:
    offsets = []
    total = 0
    for degree in degrees:
        offsets.append(total)
        if j >= degree:
            total += n_forms(j - degree)
    return offsets, total


def _generator_multiples(generators: Sequence[Tuple[int, np.ndarray]], j: int, prime: int) -> PrimeMatrix:
    """Rows m·f_i for every generator f_i and every monomial m of degree j - deg f_i."""
    offsets, total = _layout([degree for degree, _ in generators], j)
    entries = np.zeros((total, n_forms(j)), dtype=np.int64)
    for (degree, vector), offset in zip(generators, offsets):
        if j < degree:
            continue
        gen_x, gen_y = exponent_arrays(degree)
        mon_x, mon_y = exponent_arrays(j - degree)
        targets = monomial_column(j, gen_x[None, :] + mon_x[:, None], gen_y[None, :] + mon_y[:, None])
        block = np.zeros((len(mon_x), n_forms(j)), dtype=np.int64)
        block[np.arange(len(mon_x))[:, None], targets] = vector[None, :]
        entries[offset : offset + len(mon_x)] = block
    return PrimeMatrix(prime, entries)


def _lift_syzygies(syzygies: Sequence[np.ndarray], degrees: Sequence[int], j: int, prime: int) -> PrimeMatrix:
    """x, y and z multiples of degree j-1 syzygies, written in the degree j layout."""
    prev_offsets, prev_total = _layout(degrees, j - 1)
    offsets, total = _layout(degrees, j)
    maps = [np.zeros(prev_total, dtype=np.int64) for _ in range(3)]
    for degree, prev_offset, offset in zip(degrees, prev_offsets, offsets):
        if j - degree < 1:
            continue
        size = n_forms(j - degree - 1)
        for target_map, shift in zip(maps, _shift_maps(j - degree)):
            target_map[prev_offset : prev_offset + size] = offset + shift
    entries = np.vstack(syzygies)
    blocks = []
    for target_map in maps:
        block = np.zeros((entries.shape[0], total), dtype=np.int64)
        block[:, target_map] = entries
        blocks.append(block)
    return PrimeMatrix(prime, np.vstack(blocks))


def syzygies_per_degree(scheme: SupportedScheme, pieces: Sequence[GradedPiece]) -> Dict[int, int]:
    """Minimal first syzygies per degree, up to one past the last computed piece."""
    prime = scheme.prime
    generators: List[Tuple[int, np.ndarray]] = []
    previous: List[np.ndarray] = []
    for piece in pieces:
        basis = ideal_basis(scheme, piece.k)
        if piece.gens:
            picked = _minimal_generators(basis, previous, piece.k, prime)
            if len(picked) != piece.gens:
                raise ArithmeticError(f"picked {len(picked)} generators in degree {piece.k}, expected {piece.gens}")
            generators.extend((piece.k, vector) for vector in picked)
        previous = basis
    if not generators:
        raise DegenerateTrialError(f"no generators found for {scheme.spec}")
    degrees = [degree for degree, _ in generators]
    counts: Dict[int, int] = {}
    previous_syzygies: List[np.ndarray] = []
    for j in range(min(degrees) + 1, pieces[-1].k + 2):
        syzygies = kernel_basis(transpose(_generator_multiples(generators, j, prime)))
        lifted = rank(_lift_syzygies(previous_syzygies, degrees, j, prime)) if previous_syzygies else 0
        if len(syzygies) > lifted:
            counts[j] = len(syzygies) - lifted
        LOGGER.debug("degree %s | syzygies=%s lifted=%s", j, len(syzygies), lifted)
        previous_syzygies = syzygies
    return counts


def check_identity(report: BettiReport) -> bool:
    """3·h0(k) - h0(k+1) = k(k+2) - 2·length wherever h0(k) is maximal and positive."""
    for k, h0 in report.hilbert.items():
        if k + 1 not in report.hilbert:
            continue
        if h0 > 0 and h0 == expected_hilbert(report.length, k):
            if 3 * h0 - report.hilbert[k + 1] != k * (k + 2) - 2 * report.length:
                return False
    return True


def check_euler(report: BettiReport) -> bool:
    """Third difference of the Hilbert function against generators minus syzygies."""

    def h0(k: int) -> int:
        return report.hilbert.get(k, 0) if k >= 0 else 0

    for j in range(max(report.hilbert) + 1):
        difference = h0(j) - 3 * h0(j - 1) + 3 * h0(j - 2) - h0(j - 3)
        if report.generators.get(j, 0) - report.syzygies.get(j, 0) != difference:
            return False
    return sum(report.generators.values()) - sum(report.syzygies.values()) == 1


def analyse(scheme: SupportedScheme) -> BettiReport:
    """Full Betti pipeline for a placed scheme of multiplicity at most 3."""
    a, b, c = scheme.spec.counts
    expected = expected_resolution(a, b, c)
    pieces = generators_per_degree(scheme)
    syzygies = syzygies_per_degree(scheme, pieces)
    stop = pieces[-1].k
    hilbert = {piece.k: piece.h0 for piece in pieces}
    for k in range(stop + 1, max(expected.v + 3, stop + 1) + 1):
        hilbert[k] = hilbert_function(scheme, k)
    generators = {piece.k: piece.gens for piece in pieces if piece.gens}
    checked = [expected.v] + ([expected.v - 1] if expected.v >= 1 else [])
    hf_maximal = all(hilbert[k] == expected_hilbert(expected.length, k) for k in checked)
    matches = (
        hf_maximal
        and generators.get(expected.v, 0) == expected.gens_v
        and generators.get(expected.v + 1, 0) == expected.gens_v1
        and set(generators) <= {expected.v, expected.v + 1}
    )
    report = BettiReport(
        spec=str(scheme.spec),
        seed=scheme.seed,
        prime=scheme.prime,
        support=dumps(scheme),
        length=expected.length,
        v=expected.v,
        hilbert=hilbert,
        pieces=pieces,
        generators=generators,
        syzygies=syzygies,
        expected=expected.generators(),
        hf_maximal=hf_maximal,
        matches_expected=matches,
    )
    report.identity_holds = check_identity(report)
    report.euler_holds = check_euler(report)
    return report


def run_trial(a: int, b: int, c: int, seed: int, prime: int = DEFAULT_PRIME) -> BettiReport:
    """One seeded trial of the (a, b, c) scheme.

    Raises:
        DegenerateTrialError: The trial did not settle within the degree cap.
    """
    return analyse(random_scheme(FatPointSpec.from_counts(a, b, c), seed, prime))


def degenerate_report(a: int, b: int, c: int, seed: Optional[int], prime: int, error: str) -> BettiReport:
    """Placeholder report for a trial that raised."""
    expected = expected_resolution(a, b, c)
    return BettiReport(
        spec=str(FatPointSpec.from_counts(a, b, c)),
        seed=seed,
        prime=prime,
        length=expected.length,
        v=expected.v,
        expected=expected.generators(),
        degenerate=True,
        error=error,
    )


def summarize(a: int, b: int, c: int, reports: Sequence[BettiReport]) -> VerificationSummary:
    """Aggregate per-seed reports; a strict majority of the non-degenerate seeds must match."""
    expected = expected_resolution(a, b, c)
    settled = [report for report in reports if not report.degenerate]
    matches = sum(report.matches_expected for report in settled)
    shapes = Counter(tuple(sorted(report.generators.items())) for report in settled)
    majority_generators = dict(shapes.most_common(1)[0][0]) if shapes else None
    return VerificationSummary(
        spec=str(FatPointSpec.from_counts(a, b, c)),
        expected=expected.generators(),
        reports=list(reports),
        majority_matches=bool(settled) and 2 * matches > len(settled),
        majority_generators=majority_generators,
        degenerate_seeds=[report.seed for report in reports if report.degenerate],
        exception_expected=expected.res_exception,
    )


def verify_expected(
    a: int, b: int, c: int, seeds: Sequence[int], prime: int = DEFAULT_PRIME, jobs: int = 1
) -> VerificationSummary:
    """Run the seeded trials on the Nornir runner and aggregate them.

    Args:
        a (int): Simple points.
        b (int): Double points.
        c (int): Triple points.
        seeds (Sequence[int]): One trial per seed.
        prime (int): Field characteristic.
        jobs (int): Worker threads.

    Returns:
        VerificationSummary: Reports in seed order with the majority verdict.
    """
    from nornir_fatpoints.runner import betti_reports  # pylint: disable=import-outside-toplevel,cyclic-import

    return summarize(a, b, c, betti_reports([(a, b, c)], seeds, prime, jobs))
