"""Weyl dimensions, words times permutations, primitives and the LQT comparison."""

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from coalqt.coalgebra import group_coalgebra, matrix_coalgebra, trivial_coalgebra
from coalqt.complexes import GradedDims, build_cyclic
from coalqt.lqt import (
    SigmaAdElement,
    bar_invariants_dim,
    canonical_form,
    free_graded_commutative_dims,
    is_primitive,
    lqt_check,
    primitives_dim,
    restrict,
    sigma_ad_check,
    sigma_ad_coproduct,
    sigma_ad_product,
    stable_subsets,
    weyl_coinvariants_dim,
)
from coalqt.perm import Permutation, cyclic, direct_sum, long_cycle_class

ID = Permutation.identity


# ---- Weyl


@pytest.mark.parametrize("n,m,want", [(1, 1, 1), (2, 2, 2), (2, 1, 1), (3, 2, 2)])
def test_weyl_small(n, m, want):
    assert weyl_coinvariants_dim(n, m) == want == math.factorial(m)


def test_bar_invariants_examples():
    assert bar_invariants_dim(2, 1) == 1
    assert bar_invariants_dim(2, 2) == 2
    assert bar_invariants_dim(1, 2) == 1  # abelian, below the stable range


def test_weyl_below_stable_range_is_smaller():
    assert weyl_coinvariants_dim(1, 2) == 1 < 2
    assert weyl_coinvariants_dim(2, 3) == bar_invariants_dim(2, 3) < 6


# ---- words times permutations


def test_product_block_formula():
    a = SigmaAdElement.basis((0,), cyclic(1))
    b = SigmaAdElement.basis((1, 2), cyclic(2))
    ab = sigma_ad_product(a, b)
    assert ab.terms == {((0, 1, 2), direct_sum(ID(1), cyclic(2))): 1}
    unit = SigmaAdElement.unit()
    assert sigma_ad_product(unit, b) == b == sigma_ad_product(b, unit)


def test_product_associative_on_generators():
    x, y, z = (SigmaAdElement.basis((i,), ID(1)) for i in range(3))
    assert sigma_ad_product(sigma_ad_product(x, y), z) == sigma_ad_product(x, sigma_ad_product(y, z))


@pytest.mark.parametrize("m", [2, 3, 4])
def test_long_cycles_are_primitive(m):
    for s in long_cycle_class(m):
        assert stable_subsets(s) == [(), tuple(range(1, m + 1))]
        assert is_primitive(SigmaAdElement.basis(tuple(range(m)), s))


def test_identity_two_has_four_splittings():
    D = sigma_ad_coproduct(SigmaAdElement.basis((0, 1), ID(2)))
    assert len(D) == 4
    assert (((0,), ID(1)), ((1,), ID(1))) in D
    assert (((1,), ID(1)), ((0,), ID(1))) in D


def test_transposition_plus_fixed_point():
    s = direct_sum(cyclic(2), ID(1))
    assert stable_subsets(s) == [(), (3,), (1, 2), (1, 2, 3)]
    assert len(sigma_ad_coproduct(SigmaAdElement.basis((0, 1, 2), s))) == 4


def test_restriction_reindexes_along_p():
    s = Permutation.from_cycles(4, (1, 3), (2, 4))
    assert restrict((5, 6, 7, 8), s, (1, 3)) == ((5, 7), cyclic(2))


def test_canonical_form_identifies_relabellings():
    s = Permutation.from_cycles(3, (1, 2))
    t = Permutation.from_cycles(3, (2, 3))
    assert canonical_form((0, 0, 1), s) == canonical_form((1, 0, 0), t)
    assert canonical_form((0, 1, 1), s) != canonical_form((0, 0, 1), s)


@given(st.integers(0, 1000))
def test_hopf_samples(seed):
    rep = sigma_ad_check(d=2, max_m=3, seed=seed)
    assert rep.passed, rep.lines()


# ---- primitives


def test_primitives_of_k():
    k = trivial_coalgebra()
    assert [primitives_dim(k, m) for m in range(1, 7)] == [1, 0, 1, 0, 1, 0]


@pytest.mark.parametrize("C", [group_coalgebra(2), group_coalgebra(3), matrix_coalgebra(2)], ids=str)
def test_primitives_match_cyclic(C):
    X = build_cyclic(C, 4)
    assert [primitives_dim(C, m) for m in range(1, 5)] == list(X.dims)
    assert primitives_dim(C, 1) == C.dim


# ---- free graded-commutative algebras


def test_free_gc_examples():
    assert free_graded_commutative_dims(GradedDims(1, (1,)), 4).values == (1, 1, 0, 0, 0)
    assert free_graded_commutative_dims(GradedDims(1, (1, 0, 1)), 6).values == (1, 1, 0, 1, 1, 0, 0)
    assert free_graded_commutative_dims(GradedDims(1, (0, 1)), 4).values == (1, 0, 1, 0, 1)


def test_free_gc_rejects_degree_zero():
    with pytest.raises(ValueError):
        free_graded_commutative_dims(GradedDims(0, (1, 1)), 3)


@given(st.lists(st.integers(0, 2), min_size=1, max_size=4), st.integers(0, 6))
def test_free_gc_leading_coefficient(gens, top):
    out = free_graded_commutative_dims(GradedDims(1, tuple(gens)), top)
    assert out[0] == 1 and len(out.values) == top + 1
    if top >= 1:
        assert out[1] == gens[0]


# ---- LQT


def test_lqt_trivial_n3():
    r = lqt_check(trivial_coalgebra(), 3, 3)
    assert r.lie_homology_dims.values[:4] == (1, 1, 0, 1)
    assert r.expected_dims.values == (1, 1, 0, 1)
    assert r.passed and all(stable for *_, stable, _ in r.rows)


def test_lqt_trivial_n1():
    r = lqt_check(trivial_coalgebra(), 1, 1)
    assert [(m, a, b) for m, a, b, _, _ in r.rows] == [(0, 1, 1), (1, 1, 1)]
    assert r.passed


def test_lqt_group2_n2():
    r = lqt_check(group_coalgebra(2), 2, 2)
    assert r.passed
    assert [a for _, a, _, _, _ in r.rows] == [1, 2, 1]


def test_lqt_flags_unstable_degrees():
    r = lqt_check(trivial_coalgebra(), 1, 3)
    assert [stable for *_, stable, _ in r.rows] == [True, True, False, False]
    assert r.to_dict()["passed"] is True
