"""Exact sparse linear algebra: frozen small examples and randomized laws."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from coalqt.linalg import (
    DifferentialError,
    SparseMatrix,
    Subspace,
    homology_dim,
    image,
    inverse,
    kernel,
    parse_rational,
    project_to_complement,
    quotient_basis,
    rank,
    rref,
)

small = st.integers(min_value=-3, max_value=3)


@st.composite
def matrices(draw, max_rows=5, max_cols=5):
    r = draw(st.integers(1, max_rows))
    c = draw(st.integers(1, max_cols))
    rows = draw(st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r))
    return SparseMatrix.from_dense(rows)


# ---- kernel / image oracles


def test_kernel_of_identity_is_zero():
    assert kernel(SparseMatrix.identity(3)).dim == 0


def test_kernel_of_zero_map_is_everything():
    assert kernel(SparseMatrix.zero(2, 4)).dim == 4


def test_kernel_hand_example():
    K = kernel(SparseMatrix.from_dense([[1, 1], [2, 2]]))
    assert K.dim == 1
    assert K == Subspace.span(2, [{0: 1, 1: -1}])


def test_image_examples():
    assert image(SparseMatrix.identity(4)).dim == 4
    outer = SparseMatrix.from_dense([[1, 2, 3], [2, 4, 6]])
    assert image(outer).dim == 1
    assert image(SparseMatrix.from_dense([[1, 2], [2, 4], [0, 1]])).dim == 2


def test_no_stored_zeros():
    M = SparseMatrix.from_dense([[0, 1], [0, 0]])
    assert M.nnz() == 1
    assert (M - M).is_zero()


# ---- homology_dim


def test_homology_dim_zero_maps():
    assert homology_dim(SparseMatrix.zero(1, 5), SparseMatrix.zero(5, 1)) == 5


def test_homology_dim_identity_in():
    assert homology_dim(SparseMatrix.zero(1, 3), SparseMatrix.identity(3)) == 0


def test_homology_dim_k_0_k_1_k():
    # k --0--> k --1--> k, middle degree
    assert homology_dim(SparseMatrix.identity(1), SparseMatrix.zero(1, 1)) == 0


def test_homology_dim_rejects_nonzero_composite():
    with pytest.raises(DifferentialError):
        homology_dim(SparseMatrix.identity(2), SparseMatrix.identity(2))


# ---- quotient_basis


def test_quotient_basis_examples():
    assert quotient_basis(3, Subspace.zero(3)) == [{0: 1}, {1: 1}, {2: 1}]
    assert quotient_basis(3, Subspace.full(3)) == []
    reps = quotient_basis(2, Subspace.span(2, [{0: 1, 1: 1}]))
    assert len(reps) == 1
    assert not Subspace.span(2, [{0: 1, 1: 1}]).contains(reps[0])


@given(matrices())
def test_projection_to_complement_is_idempotent(M):
    sub = image(M)
    v = {i: Fraction(i + 1) for i in range(M.rows)}
    p = project_to_complement(sub, v)
    assert project_to_complement(sub, p) == p
    diff = {i: v.get(i, 0) - p.get(i, 0) for i in range(M.rows)}
    assert sub.contains({i: c for i, c in diff.items() if c})


# ---- randomized laws


@given(matrices())
def test_rank_nullity(M):
    assert kernel(M).dim + rank(M) == M.cols


@given(matrices())
def test_kernel_vectors_are_killed(M):
    for v in kernel(M).basis:
        assert M.apply(v) == {}


@given(matrices())
def test_rank_of_transpose(M):
    assert rank(M) == rank(M.transpose())


@given(matrices(max_rows=4, max_cols=4), st.integers(0, 1000))
def test_image_echelon_is_canonical(M, seed):
    # a shuffled spanning set gives the same reduced basis
    import random

    cols = [dict(c) for c in M.columns]
    random.Random(seed).shuffle(cols)
    assert rref(cols) == image(M).basis


@given(st.integers(1, 4), st.integers(0, 10_000))
def test_homology_invariant_under_basis_change(n, seed):
    import random

    from coalqt.complexes import random_unimodular

    rng = random.Random(seed)
    # a random square-zero pair: d_in = A, d_out = B with B A = 0 via B = projection off im A
    A = SparseMatrix.from_dense([[rng.randint(-1, 1) for _ in range(n)] for _ in range(n)])
    rows = kernel(A.transpose()).basis
    B = SparseMatrix.from_entries(len(rows), n, {(r, c): v for r, y in enumerate(rows) for c, v in y.items()})
    P = random_unimodular(n, rng)
    h = homology_dim(B, A)
    assert homology_dim(B @ inverse(P), P @ A) == h


@given(st.fractions(max_denominator=50), st.fractions(max_denominator=50))
def test_rational_addition_two_ways(a, b):
    direct = a + b
    by_hand = Fraction(a.numerator * b.denominator + b.numerator * a.denominator,
                       a.denominator * b.denominator)
    assert direct == by_hand
    assert direct.denominator > 0


def test_inverse_roundtrip():
    M = SparseMatrix.from_dense([[2, 1], [1, 1]])
    assert M @ inverse(M) == SparseMatrix.identity(2)


def test_parse_rational():
    assert parse_rational("-3/6") == Fraction(-1, 2)
    assert parse_rational("7") == 7
    for bad in ("0.5", "1e3", "1/0", "", "x"):
        with pytest.raises(ValueError):
            parse_rational(bad)


def test_subspace_operations():
    a = Subspace.span(3, [{0: 1}, {1: 1}])
    b = Subspace.span(3, [{1: 1}, {2: 1}])
    assert (a + b).dim == 3
    assert a.intersection(b) == Subspace.span(3, [{1: 1}])
    assert a.contains_subspace(Subspace.span(3, [{0: 2, 1: -1}]))
    assert a.coordinates({0: 3, 1: 4}) is not None
    assert a.coordinates({2: 1}) is None
