"""Tests of the prime field linear algebra."""
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nornir_fatpoints.exceptions import SchemeError
from nornir_fatpoints.field_linalg import (
    DEFAULT_PRIME,
    PrimeMatrix,
    from_vectors,
    kernel_basis,
    matmul_vector,
    rank,
    row_reduce,
    stack,
    transpose,
)


def test_entries_are_reduced_and_read_only():
    matrix = PrimeMatrix.from_rows([[-1, 7], [14, 3]], 7)
    assert matrix.entries.tolist() == [[6, 0], [0, 3]]
    with pytest.raises(ValueError):
        matrix.entries[0, 0] = 1


def test_from_rows_handles_big_integers():
    matrix = PrimeMatrix.from_rows([[2**80, 1]], DEFAULT_PRIME)
    assert int(matrix.entries[0, 0]) == pow(2, 80, DEFAULT_PRIME)


@pytest.mark.parametrize("prime", [1, 2**31])
def test_prime_out_of_range(prime):
    with pytest.raises(SchemeError):
        PrimeMatrix.zeros(1, 1, prime)


def test_ragged_rows():
    with pytest.raises(SchemeError):
        PrimeMatrix.from_rows([[1, 2], [3]], 5)


def test_row_reduce():
    reduced, pivots = row_reduce(PrimeMatrix.from_rows([[2, 4, 1], [1, 3, 3]], 5))
    assert pivots == [0, 1]
    assert reduced.tolist() == [[1, 0, 3], [0, 1, 0]]


def test_rank_depends_on_the_prime():
    rows = [[1, 1], [1, 4]]
    assert rank(PrimeMatrix.from_rows(rows, 3)) == 1
    assert rank(PrimeMatrix.from_rows(rows, 5)) == 2


def test_rank_of_empty_matrix():
    assert rank(PrimeMatrix.zeros(0, 4, 7)) == 0


def test_kernel_basis_of_empty_matrix_is_identity():
    basis = kernel_basis(PrimeMatrix.zeros(0, 3, 7))
    assert [vector.tolist() for vector in basis] == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]


def test_kernel_basis_shape():
    basis = kernel_basis(PrimeMatrix.from_rows([[1, 2, 3]], 7))
    assert [vector.tolist() for vector in basis] == [[5, 1, 0], [4, 0, 1]]


def test_stack_checks_columns_and_primes():
    with pytest.raises(SchemeError):
        stack([PrimeMatrix.zeros(1, 2, 7), PrimeMatrix.zeros(1, 3, 7)])
    with pytest.raises(SchemeError):
        stack([PrimeMatrix.zeros(1, 2, 7), PrimeMatrix.zeros(1, 2, 11)])
    assert stack([], cols=4, prime=7).cols == 4


def test_transpose_and_from_vectors():
    matrix = from_vectors([np.array([1, 2, 3]), np.array([4, 5, 6])], 3, 7)
    assert transpose(matrix).entries.tolist() == [[1, 4], [2, 5], [3, 6]]
    assert from_vectors([], 3, 7).rows == 0


def test_matmul_vector_length():
    with pytest.raises(SchemeError):
        matmul_vector(PrimeMatrix.identity(2, 7), [1, 2, 3])


@settings(max_examples=50, deadline=None)
@given(
    st.integers(min_value=1, max_value=6),
    st.integers(min_value=1, max_value=6),
    st.sampled_from([5, 7, 32003, DEFAULT_PRIME]),
    st.data(),
)
def test_rank_nullity_and_kernel(rows, cols, prime, data):
    values = data.draw(st.lists(st.integers(0, prime - 1), min_size=rows * cols, max_size=rows * cols))
    matrix = PrimeMatrix(prime, np.array(values, dtype=np.int64).reshape(rows, cols))
    basis = kernel_basis(matrix)
    assert rank(matrix) + len(basis) == cols
    for vector in basis:
        assert not matmul_vector(matrix, vector).any()
    assert rank(matrix) == rank(transpose(matrix))
