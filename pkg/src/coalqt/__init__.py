"""Exact-rational chain complexes of coalgebras.

Bar, Hochschild, Chevalley-Eilenberg-Leibniz, symmetric and cyclic complexes
of finite-dimensional coalgebras over Q, checks of the identities relating
them, and a finite-size comparison of Lie coalgebra homology of gl_n^c(C)
with the free graded-commutative algebra on cyclic homology.
"""

from .coalgebra import (
    AxiomError,
    Coaction,
    Coalgebra,
    LeibnizCoalgebra,
    LieCoalgebra,
    check_coalgebra,
    check_leibniz,
    coinvariants_of_dual,
    diagonal_coaction,
    dualize,
    gl_coalgebra,
    group_coalgebra,
    invariants,
    lie_of,
    matrix_coalgebra,
    matrix_over,
    tensor_coalgebra,
    trivial_coalgebra,
)
from .complexes import (
    ChainMap,
    GradedComplex,
    GradedDims,
    build_bar,
    build_ce,
    build_complex,
    build_cyclic,
    build_hochschild,
    build_reduced_ce,
    build_sym_ce,
    homology,
)
from .linalg import SparseMatrix, Subspace, homology_dim, image, kernel, quotient_basis, rank
from .lqt import (
    SigmaAdElement,
    bar_invariants_dim,
    free_graded_commutative_dims,
    lqt_check,
    primitives_dim,
    sigma_ad_coproduct,
    sigma_ad_product,
    weyl_coinvariants_dim,
)
from .perm import (
    GroupAlgebraElement,
    Permutation,
    antisymmetrizer,
    cyclic,
    direct_sum,
    h_element,
    long_cycle_class,
    norm,
    shuffle_sums,
    t_operator,
)

__version__ = "0.1.0"
