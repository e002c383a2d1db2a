"""The six complexes, their chain maps, and homology oracles."""

import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from coalqt.coalgebra import gl_coalgebra, group_coalgebra, lie_of, matrix_coalgebra, matrix_over
from coalqt.complexes import (
    ChainMap,
    GradedComplex,
    GradedDims,
    _restricted_complex,
    bar_differential,
    bar_homotopy,
    build_bar,
    build_ce,
    build_complex,
    build_cyclic,
    build_hochschild,
    build_reduced_ce,
    build_sym_ce,
    ce_differential,
    change_basis,
    coaction_matrix,
    epsilon_chain_map,
    hochschild_differential,
    homology,
    id_epsilon_chain_map,
    norm_chain_map,
    t_chain_map,
    tensor_id,
    wedge_reduce,
)
from coalqt.linalg import DifferentialError, RestrictionError, SparseMatrix, Subspace
from coalqt.perm import h_element
from coalqt.tensor import linear_extend, matrix_of


def scalar_differentials(X):
    return [X.d(m).to_dense()[0][0] if X.d(m).shape == (1, 1) else None for m in sorted(X.differentials)]


# ---- differentials on the ground field


def test_bar_of_k_alternates(k):
    # d^CB_n on k is sum_{j<n} (-1)^j = 0, 1, 0, 1, ...
    assert scalar_differentials(build_bar(k, 6)) == [0, 1, 0, 1, 0, 1]


def test_hochschild_of_k(k):
    # n even: 0 + 1 = 1 (except d_0 = 0); n odd: 1 - 1 = 0
    assert scalar_differentials(build_hochschild(k, 6)) == [0, 0, 1, 0, 1, 0]


def test_bar_homology_of_k(k):
    assert homology(build_bar(k, 6)).values == (1, 0, 0, 0, 0, 0)


def test_cyclic_of_k(k):
    X = build_cyclic(k, 7)
    assert X.lo == 1
    assert X.dims == (1, 0, 1, 0, 1, 0, 1)
    assert homology(X).values == (1, 0, 1, 0, 1, 0)


# ---- dimensions


def test_bar_dimensions(m2):
    assert build_bar(m2, 4).dims == (1, 4, 16, 64, 256)


def test_sym_dimensions(k, m2, g2):
    assert build_sym_ce(m2, 5).dims == (1, 4, 6, 4, 1, 0)
    assert build_sym_ce(k, 4).dims == (1, 1, 0, 0, 0)
    assert build_sym_ce(matrix_over(2, g2), 3).dims == (1, 8, 28, 56)


def test_ce_of_gl1_is_zero_complex(k):
    X = build_ce(gl_coalgebra(1, k), 5)
    assert all(d.is_zero() for d in X.differentials.values())
    assert homology(X).values == (1, 1, 1, 1, 1)


def test_reduced_ce_of_abelian_is_everything(g2):
    L = lie_of(g2)
    assert build_reduced_ce(L, 4).dims == build_ce(L, 4).dims


def test_reduced_ce_of_gl2(m2):
    X = build_reduced_ce(lie_of(m2), 3)
    # invariants of the diagonal coaction: the trace line, then the two Weyl invariants
    assert X.dims[:3] == (1, 1, 2)


# ---- independent homology oracles


def test_cyclic_homology_is_additive(g2):
    # k[Z/2] is two copies of k as a coalgebra, so HC doubles
    assert homology(build_cyclic(g2, 7)).values == (2, 0, 2, 0, 2, 0)


def test_cyclic_homology_is_morita_invariant(m2):
    assert homology(build_cyclic(m2, 4)).values == homology(build_cyclic(matrix_coalgebra(1), 4)).values


def test_hochschild_and_bar_of_m2(m2):
    assert homology(build_bar(m2, 4)).values == (1, 0, 0, 0)
    assert homology(build_hochschild(m2, 4)).values == (1, 1, 0, 0)


# ---- construction-time guards


def test_nonzero_square_is_rejected():
    d = {0: SparseMatrix.identity(1), 1: SparseMatrix.identity(1)}
    with pytest.raises(DifferentialError):
        GradedComplex("bad", 0, (1, 1, 1), d)


def test_shape_mismatch_is_rejected():
    with pytest.raises(ValueError):
        GradedComplex("bad", 0, (1, 2), {0: SparseMatrix.identity(1)})


def test_restriction_failure_is_reported():
    # the line spanned by e0 is not preserved by e0 -> e1
    amb = {0: SparseMatrix.from_dense([[0, 0], [1, 0]])}
    subs = {0: Subspace.span(2, [{0: 1}]), 1: Subspace.span(2, [{0: 1}])}
    with pytest.raises(RestrictionError):
        _restricted_complex("bad", 0, 1, subs, amb)


def test_chain_map_must_commute(k):
    X = build_bar(k, 2)
    with pytest.raises(DifferentialError):
        ChainMap("bad", X, X, {1: SparseMatrix.identity(1), 2: SparseMatrix.identity(1).scale(2)})


def test_unknown_kind(k):
    with pytest.raises(ValueError):
        build_complex(k, "spectral", 2)


# ---- chain maps between the complexes


@pytest.mark.parametrize("make", [t_chain_map, norm_chain_map, epsilon_chain_map, id_epsilon_chain_map])
def test_chain_maps_commute(make, m2, g2):
    for C, D in ((m2, 3), (g2, 5)):
        assert make(C, D).failing_degrees() == []


# ---- homotopies and word-level maps


def test_bar_homotopy_is_the_h_action():
    w = (0, 1, 2)
    assert bar_homotopy(w) == h_element(3).apply({w: Fraction(1)})


def test_ce_homotopy_sign(m2):
    """With (-1)^{n+1} in the CE homotopy the identity produces -rho_n; (-1)^n gives rho_n."""
    L = lie_of(m2)
    d = L.dim
    dce = lambda w: ce_differential(L, w)  # noqa: E731

    def side(sign_of):
        i = lambda w: {w: Fraction(sign_of(len(w)))}  # noqa: E731
        return (matrix_of(i, d, 3, 3) @ matrix_of(dce, d, 2, 3)
                + matrix_of(tensor_id(dce, 1), d, 2, 3) @ matrix_of(i, d, 2, 2))

    rho = coaction_matrix(L, 2)
    assert side(lambda n: (-1) ** n) == rho
    assert side(lambda n: (-1) ** (n + 1)) == rho.scale(-1)


def test_wedge_reduce():
    assert wedge_reduce({(1, 0): 1, (0, 1): 2, (0, 0): 5}) == {(0, 1): 1}


words4 = st.lists(st.integers(0, 3), min_size=0, max_size=4).map(tuple)


@given(words4)
def test_word_level_squares_vanish(w):
    m2 = matrix_coalgebra(2)
    L = lie_of(m2)
    for f in (lambda u: bar_differential(m2, u), lambda u: hochschild_differential(m2, u),
              lambda u: ce_differential(L, u)):
        assert linear_extend(f, f(w)) == {}


@given(st.integers(0, 10_000))
def test_homology_survives_basis_change(seed):
    X = build_bar(group_coalgebra(2), 4)
    assert homology(change_basis(X, seed)) == homology(X)


def test_graded_dims_lookup():
    g = GradedDims(1, (1, 0, 2))
    assert g[0] == 0 and g[3] == 2 and g[9] == 0
    assert g.as_dict() == {1: 1, 2: 0, 3: 2}
    with pytest.raises(ValueError):
        GradedDims(0, (-1,))


def test_sym_homology_of_gl3_k(k):
    assert homology(build_sym_ce(matrix_over(3, k), 4)).values == (1, 1, 0, 1)
    assert math.comb(9, 4) == build_sym_ce(matrix_over(3, k), 4).dim(4)
