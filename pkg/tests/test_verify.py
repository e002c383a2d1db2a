"""Every identity report passes on small coalgebras and fails loudly on broken input."""

import pytest

from coalqt import verify as V
from coalqt.coalgebra import Coalgebra, group_coalgebra, matrix_coalgebra, trivial_coalgebra
from coalqt.linalg import SparseMatrix
from coalqt.report import Report

SMALL = [trivial_coalgebra(), group_coalgebra(2), matrix_coalgebra(2)]
IDS = [C.name for C in SMALL]


def assert_passes(rep: Report):
    assert rep.results, rep.title
    assert rep.passed, "\n".join(rep.lines())


@pytest.mark.parametrize("C", SMALL, ids=IDS)
def test_homotopies(C):
    assert_passes(V.bar_homotopy_check(C, 3))
    assert_passes(V.ce_homotopy_check(C, 3))


@pytest.mark.parametrize("C", SMALL, ids=IDS)
def test_comodule_structure(C):
    assert_passes(V.differential_comodule_check(C, 2))
    assert_passes(V.comodule_check(C, 2))
    assert_passes(V.representation_commute_check(C, 3))


@pytest.mark.parametrize("C", SMALL, ids=IDS)
def test_algebra_structures(C):
    assert_passes(V.bar_dga_check(C, 4))
    assert_passes(V.ce_identity_check(C, 4))


@pytest.mark.parametrize("C", SMALL, ids=IDS)
def test_exactness_and_commutators(C):
    assert_passes(V.tn_exactness_check(C, 3))
    assert_passes(V.commutator_check(C, 3))


@pytest.mark.parametrize("C", SMALL, ids=IDS)
def test_epsilon_maps(C):
    assert_passes(V.epsilon_chain_map_check(C, 3))


def test_epsilon_degree_one_is_the_cobracket():
    rep = V.epsilon_chain_map_check(matrix_coalgebra(2), 1)
    first = [r for r in rep.results if r.degree == 1 and r.identity.startswith("eps_{n+1}")]
    assert first and first[0].passed


@pytest.mark.parametrize("C", SMALL, ids=IDS)
def test_shuffle_and_deconcatenation(C):
    assert_passes(V.shuffle_product_check(C, 4))
    assert_passes(V.deconcat_coproduct_check(C, 4))


def test_deconcatenation_vacuous_on_k():
    rep = V.deconcat_coproduct_check(trivial_coalgebra(), 4)
    assert rep.passed


@pytest.mark.parametrize("C", SMALL, ids=IDS)
def test_complex_reports(C):
    assert_passes(V.differential_squares_check(C, 3))
    assert_passes(V.sym_ce_cross_check(C, 3))
    assert_passes(V.reduced_ce_check(C, 3))
    assert_passes(V.basis_change_check(C, 3, seed=5))


def test_group_algebra_identities():
    assert_passes(V.perm_identities_check(5))


def test_axioms_report():
    assert_passes(V.axioms_check(matrix_coalgebra(3)))


def broken_m2():
    m2 = matrix_coalgebra(2)
    delta = {i: list(t) for i, t in enumerate(m2.delta)}
    l, r, c = delta[1][0]
    delta[1][0] = (l, r, -c)
    return Coalgebra.create(m2.basis_names, delta, m2.counit, name="broken", check=False)


def test_broken_coalgebra_fails_axioms_and_squares():
    C = broken_m2()
    rep = V.axioms_check(C)
    assert not rep.passed
    assert any("e_1_2" in r.witness for r in rep.failures)
    sq = V.differential_squares_check(C, 3, kinds=("bar", "hochschild"))
    assert not sq.passed


def test_compare_names_a_witness():
    rep = Report("t")
    a = SparseMatrix.from_dense([[1, 0], [0, 1]])
    b = SparseMatrix.from_dense([[1, 0], [0, 2]])
    assert not V._compare(rep, "demo", 1, a, b, ("x", "y"), 1, 1)
    assert rep.failures[0].witness == "on (y): coefficient of (y) is 1 vs 2"
    assert "FAIL" in rep.lines()[0]
