"""Dense exact linear algebra over a prime field."""

import logging
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from nornir_fatpoints.exceptions import SchemeError

LOGGER = logging.getLogger(__name__)

DEFAULT_PRIME = 2147483647
# Residues below 2**31 keep every product of two residues below 2**62.
PRIME_BOUND = 2**31


@dataclass(frozen=True, eq=False)
class PrimeMatrix:
    """Read-only dense matrix with entries reduced modulo a prime."""

    prime: int
    entries: np.ndarray

    def __post_init__(self):
        """Reduce and freeze the entries."""
        if not 2 <= self.prime < PRIME_BOUND:
            raise SchemeError(f"prime must lie in [2, 2**31), got {self.prime}")
        array = np.array(self.entries, dtype=np.int64, copy=True)
        if array.ndim != 2:
            raise SchemeError(f"matrix entries must be two dimensional, got shape {array.shape}")
        array %= self.prime
        array.setflags(write=False)
        object.__setattr__(self, "entries", array)

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], prime: int, cols: Optional[int] = None) -> "PrimeMatrix":
        """Build a matrix from Python integers of any size.

        Args:
            rows (Iterable[Sequence[int]]): Row-major entries.
            prime (int): Field characteristic.
            cols (int, optional): Column count, required when there are no rows.

        Returns:
            PrimeMatrix: The reduced matrix.
        """
        reduced = [[int(value) % prime for value in row] for row in rows]
        if not reduced:
            if cols is None:
                raise SchemeError("an empty matrix needs an explicit column count")
            return cls.zeros(0, cols, prime)
        widths = {len(row) for row in reduced}
        if len(widths) != 1 or (cols is not None and widths != {cols}):
            raise SchemeError(f"ragged rows: widths {sorted(widths)}")
        return cls(prime, np.array(reduced, dtype=np.int64))

    @classmethod
    def zeros(cls, rows: int, cols: int, prime: int) -> "PrimeMatrix":
        """Zero matrix of the given shape."""
        return cls(prime, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, size: int, prime: int) -> "PrimeMatrix":
        """Identity matrix of the given size."""
        return cls(prime, np.eye(size, dtype=np.int64))

    @property
    def rows(self) -> int:
        """Number of rows."""
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        """Number of columns."""
        return self.entries.shape[1]

    def __repr__(self):
        """Short form with the shape and the prime."""
        return f"PrimeMatrix({self.rows}x{self.cols} mod {self.prime})"


def row_reduce(m: PrimeMatrix) -> Tuple[np.ndarray, List[int]]:
    """Gauss-Jordan elimination with first-nonzero pivoting.

    Args:
        m (PrimeMatrix): Matrix to reduce; left untouched.

    Returns:
        tuple: The reduced row echelon form (rank rows first, zero rows after) and the pivot columns.
    """
    prime = m.prime
    work = m.entries.copy()
    rows, cols = work.shape
    pivots: List[int] = []
    rank = 0
    for col in range(cols):
        if rank == rows:
            break
        candidates = np.flatnonzero(work[rank:, col])
        if candidates.size == 0:
            continue
        pivot_row = rank + int(candidates[0])
        if pivot_row != rank:
            work[[rank, pivot_row], :] = work[[pivot_row, rank], :]
        inverse = pow(int(work[rank, col]), -1, prime)
        work[rank, :] = (work[rank, :] * inverse) % prime
        factors = work[:, col].copy()
        factors[rank] = 0
        targets = np.flatnonzero(factors)
        if targets.size:
            update = np.outer(factors[targets], work[rank, :]) % prime
            work[targets, :] = (work[targets, :] - update) % prime
        pivots.append(col)
        rank += 1
    return work, pivots


def rank(m: PrimeMatrix) -> int:
    """Rank over the prime field."""
    if m.rows == 0 or m.cols == 0:
        return 0
    return len(row_reduce(m)[1])


def kernel_basis(m: PrimeMatrix) -> List[np.ndarray]:
    """Basis of the right null space, one vector per free column in increasing column order.

    Each vector has a 1 at its free column, 0 at the other free columns and the negated reduced entries at
    the pivot columns, so the basis only depends on the matrix.
    """
    prime = m.prime
    if m.rows == 0:
        return [row for row in np.eye(m.cols, dtype=np.int64)]
    reduced, pivots = row_reduce(m)
    pivot_set = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        vector = np.zeros(m.cols, dtype=np.int64)
        vector[free] = 1
        if pivots:
            vector[pivots] = (-reduced[: len(pivots), free]) % prime
        basis.append(vector)
    return basis


def stack(ms: Sequence[PrimeMatrix], cols: Optional[int] = None, prime: Optional[int] = None) -> PrimeMatrix:
    """Vertical concatenation.

    Args:
        ms (Sequence[PrimeMatrix]): Matrices to stack, top first.
        cols (int, optional): Declared column count; required for an empty list.
        prime (int, optional): Declared prime; defaults to the prime of the inputs.

    Raises:
        SchemeError: Column counts or primes disagree.
    """
    if not ms:
        if cols is None:
            raise SchemeError("stacking nothing needs a declared column count")
        return PrimeMatrix.zeros(0, cols, prime or DEFAULT_PRIME)
    primes = {matrix.prime for matrix in ms} | ({prime} if prime else set())
    if len(primes) != 1:
        raise SchemeError(f"cannot stack matrices over different primes {sorted(primes)}")
    widths = {matrix.cols for matrix in ms} | ({cols} if cols is not None else set())
    if len(widths) != 1:
        raise SchemeError(f"cannot stack matrices with column counts {sorted(widths)}")
    return PrimeMatrix(primes.pop(), np.vstack([matrix.entries for matrix in ms]))


def transpose(m: PrimeMatrix) -> PrimeMatrix:
    """Transposed matrix."""
    return PrimeMatrix(m.prime, m.entries.T)


def from_vectors(vectors: Sequence[np.ndarray], cols: int, prime: int) -> PrimeMatrix:
    """Matrix whose rows are the given vectors."""
    if not vectors:
        return PrimeMatrix.zeros(0, cols, prime)
    return PrimeMatrix(prime, np.vstack(vectors))


def matmul_vector(m: PrimeMatrix, vector: Sequence[int]) -> np.ndarray:
    """Product m·v reduced modulo the prime, accumulated with Python integers."""
    values = [int(value) % m.prime for value in vector]
    if len(values) != m.cols:
        raise SchemeError(f"vector of length {len(values)} does not match {m.cols} columns")
    return np.array(
        [sum(int(entry) * value for entry, value in zip(row, values)) % m.prime for row in m.entries],
        dtype=np.int64,
    )
