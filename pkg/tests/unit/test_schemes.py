"""Tests of fat point specs, placements and interpolation matrices."""
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nornir_fatpoints.exceptions import SchemeError
from nornir_fatpoints.numerics import expected_hilbert, n_forms
from nornir_fatpoints.schemes import (
    FatPointSpec,
    SupportedScheme,
    conditions_matrix,
    dumps,
    hilbert_function,
    ideal_basis,
    loads,
    monomial_column,
    monomial_index,
    monomials,
    random_scheme,
)


def test_spec_counts_and_length():
    spec = FatPointSpec.from_counts(2, 1, 1)
    assert spec.multiplicities == (1, 1, 2, 3)
    assert spec.counts == (2, 1, 1)
    assert spec.length == 11
    assert spec.point_count == 4
    assert str(spec) == "(2,1,1)"


def test_spec_without_counts_view():
    spec = FatPointSpec((4, 1))
    assert str(spec) == "[4,1]"
    with pytest.raises(SchemeError):
        spec.counts  # pylint: disable=pointless-statement


@pytest.mark.parametrize("multiplicities", [(0,), (2, -1)])
def test_spec_rejects_bad_multiplicity(multiplicities):
    with pytest.raises(SchemeError):
        FatPointSpec(multiplicities)


def test_monomial_order():
    assert monomials(2) == ((2, 0), (1, 1), (1, 0), (0, 2), (0, 1), (0, 0))
    for k in range(6):
        for column, (exp_x, exp_y) in enumerate(monomials(k)):
            assert monomial_index(k)[(exp_x, exp_y)] == column
            assert monomial_column(k, exp_x, exp_y) == column


def test_random_scheme_is_seeded(small_prime):
    spec = FatPointSpec.from_counts(3, 2, 1)
    first = random_scheme(spec, 11, small_prime)
    assert first == random_scheme(spec, 11, small_prime)
    assert len(set(first.support)) == spec.point_count
    assert all(0 <= x < small_prime and 0 <= y < small_prime for x, y in first.support)


def test_random_scheme_rejects_empty_spec():
    with pytest.raises(SchemeError):
        random_scheme(FatPointSpec(()), 1)


def test_supported_scheme_validation(small_prime):
    spec = FatPointSpec.from_counts(2, 0, 0)
    with pytest.raises(SchemeError):
        SupportedScheme(spec, ((1, 1), (1, 1)), None, small_prime)
    with pytest.raises(SchemeError):
        SupportedScheme(spec, ((1, 1),), None, small_prime)
    with pytest.raises(SchemeError):
        SupportedScheme(spec, ((1, 1), (small_prime, 0)), None, small_prime)


def test_conditions_matrix_shape(mixed_scheme):
    matrix = conditions_matrix(mixed_scheme, 4)
    assert (matrix.rows, matrix.cols) == (mixed_scheme.length, n_forms(4))


def test_conditions_at_origin():
    # At the origin the rows pick out z, then y, then x.
    scheme = SupportedScheme(FatPointSpec((2,)), ((0, 0),), None, 7)
    matrix = conditions_matrix(scheme, 1)
    assert matrix.entries.tolist() == [[0, 0, 1], [0, 1, 0], [1, 0, 0]]


@pytest.mark.parametrize("k, expected", [(0, 0), (1, 0), (2, 0), (3, 4), (4, 9)])
def test_hilbert_function_of_triple_point(triple_point_scheme, k, expected):
    assert hilbert_function(triple_point_scheme, k) == expected


def test_ideal_basis_is_annihilated(mixed_scheme):
    matrix = conditions_matrix(mixed_scheme, 4)
    basis = ideal_basis(mixed_scheme, 4)
    assert len(basis) == hilbert_function(mixed_scheme, 4)
    for vector in basis:
        assert not (matrix.entries @ vector % mixed_scheme.prime).any()


def test_ideal_basis_is_reused(mixed_scheme):
    first = ideal_basis(mixed_scheme, 5)
    second = ideal_basis(mixed_scheme, 5)
    assert first is not second
    assert all(left is right for left, right in zip(first, second))
    assert not any(vector.flags.writeable for vector in first)
    assert conditions_matrix(mixed_scheme, 5) is conditions_matrix(mixed_scheme, 5)


@settings(max_examples=25, deadline=None)
@given(
    st.integers(min_value=0, max_value=4),
    st.integers(min_value=0, max_value=3),
    st.integers(min_value=0, max_value=2),
    st.integers(min_value=0, max_value=10_000),
)
def test_hilbert_function_is_at_least_expected(a, b, c, seed):
    if a + b + c == 0:
        return
    scheme = random_scheme(FatPointSpec.from_counts(a, b, c), seed, 32003)
    for k in range(6):
        assert hilbert_function(scheme, k) >= expected_hilbert(scheme.length, k)


def test_dumps_and_loads(mixed_scheme):
    text = dumps(mixed_scheme)
    assert text.splitlines()[0].startswith("1:")
    restored = loads("# header\n\n" + text + "\n", mixed_scheme.prime)
    assert restored.support == mixed_scheme.support
    assert restored.spec == mixed_scheme.spec


@pytest.mark.parametrize("text, line", [("1:2:3\n2:5\n", "line 2"), ("x:1:1\n", "line 1")])
def test_loads_names_the_bad_line(text, line):
    with pytest.raises(SchemeError) as err:
        loads(text, 32003)

    assert line in str(err.value)
