import pytest
from hypothesis import given, settings, strategies as st

from floerzeta.exact_algebra import Polynomial, RationalFunction, expand_rational, zeta_series_from_counts
from floerzeta.subshift import (
    EnumerationLimitError,
    SignedSubshiftFamily,
    Subshift,
    SubshiftInputError,
    brute_force_count,
    naive_count,
    subshift_zeta,
    trace_count,
    trace_formula,
    trace_formula_sequence,
)

from conftest import FULL2, GOLDEN, zero_one_matrices

families = st.lists(
    st.tuples(zero_one_matrices(max_dim=4), st.sampled_from([1, -1])), min_size=1, max_size=3
).map(SignedSubshiftFamily)


def test_trace_count_examples():
    assert trace_count(Subshift(FULL2), 3) == 8
    assert [trace_count(Subshift(GOLDEN), n) for n in range(1, 5)] == [1, 3, 4, 7]
    assert all(trace_count(Subshift(((0,),)), n) == 0 for n in range(1, 6))


def test_brute_force_examples():
    assert brute_force_count(Subshift(FULL2), 3) == 8
    assert brute_force_count(Subshift(GOLDEN), 2) == 3
    assert brute_force_count(Subshift(((0,),)), 1) == 0


def test_brute_force_cap():
    with pytest.raises(EnumerationLimitError):
        brute_force_count(Subshift(FULL2), 13)
    with pytest.raises(EnumerationLimitError):
        brute_force_count(Subshift([[1] * 7] * 7), 2)
    assert brute_force_count(Subshift(FULL2), 13, max_n=13) == 2**13


def test_entries_must_be_zero_or_one():
    with pytest.raises(SubshiftInputError):
        Subshift(((2, 1), (1, 0)))
    with pytest.raises(SubshiftInputError):
        SignedSubshiftFamily([(GOLDEN, 2)])
    with pytest.raises(SubshiftInputError):
        SignedSubshiftFamily([])


def test_trace_formula_examples():
    assert trace_formula(SignedSubshiftFamily([(GOLDEN, 1)]), 2) == 3
    assert trace_formula(SignedSubshiftFamily([(FULL2, 1), (((1,),), -1)]), 3) == 7
    cancel = SignedSubshiftFamily([(((1,),), 1), (((1,),), -1)])
    assert all(trace_formula(cancel, n) == 0 for n in range(1, 8))


def test_subshift_zeta_examples():
    assert subshift_zeta(SignedSubshiftFamily([(GOLDEN, 1)])) == RationalFunction(Polynomial([1]), Polynomial([1, -1, -1]))
    assert subshift_zeta(SignedSubshiftFamily([(FULL2, 1)])) == RationalFunction(Polynomial([1]), Polynomial([1, -2]))
    assert subshift_zeta(SignedSubshiftFamily([(GOLDEN, 1), (GOLDEN, -1)])).is_one()


@settings(max_examples=40)
@given(zero_one_matrices(max_dim=4), st.integers(1, 8))
def test_trace_equals_enumeration(m, n):
    s = Subshift(m)
    assert brute_force_count(s, n) == trace_count(s, n)


@settings(max_examples=30)
@given(zero_one_matrices(max_dim=3), st.integers(1, 6))
def test_vectorized_enumeration_equals_naive(m, n):
    s = Subshift(m)
    assert brute_force_count(s, n) == naive_count(s, n)


@given(families, st.integers(1, 24))
def test_subshift_zeta_series_identity(f, K):
    assert expand_rational(subshift_zeta(f), K) == zeta_series_from_counts(trace_formula_sequence(f, K))


@given(families, st.integers(1, 10))
def test_sequence_matches_pointwise(f, n):
    assert trace_formula_sequence(f, n)[-1] == trace_formula(f, n)


@given(families)
def test_zeta_reduced_form_is_canonical(f):
    z = subshift_zeta(f)
    assert z.denominator[0] == 1
    assert RationalFunction(z.numerator, z.denominator) == z
