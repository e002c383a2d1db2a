"""Bar, Hochschild, Chevalley-Eilenberg(-Leibniz), symmetric, reduced and cyclic complexes.

Every complex is cohomologically graded: the differential of degree ``m``
maps ``C^{(x)m}`` (or a subspace of it) to degree ``m + 1``.  A complex built
with ``max_deg=D`` stores the spaces of degrees ``lo..D`` and the
differentials leaving degrees ``lo..D-1``, so its homology is known in
degrees ``lo..D-1``.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from .coalgebra import Coalgebra, LeibnizCoalgebra, coaction_on_words, lie_of
from .linalg import (
    DifferentialError,
    RestrictionError,
    SparseMatrix,
    Subspace,
    bump,
    image,
    inverse,
    kernel,
    rank,
)
from .perm import GroupAlgebraElement, antisymmetrizer, h_element, norm, t_operator
from .tensor import increasing_words, matrix_of, sort_sign, to_vector, word_index, words

WordMap = Callable[[tuple], dict]


# ---------------------------------------------------------------- word-level operators


def face(C: Coalgebra, word: tuple, j: int) -> dict:
    """partial_j = id_j (x) Delta (x) id_{n-1-j}."""
    return C.apply_at(word, j)


def bar_differential(C: Coalgebra, word: tuple) -> dict:
    """d^CB_n = sum_{j<n} (-1)^j partial_j; zero on the empty word."""
    out: dict = {}
    for j in range(len(word)):
        sign = -1 if j % 2 else 1
        for w, c in face(C, word, j).items():
            bump(out, w, sign * c)
    return out


def rotate_left(word: tuple) -> tuple:
    """tau^{-1}: (c1, c2, ..., cn) -> (c2, ..., cn, c1)."""
    return word[1:] + word[:1]


def hochschild_differential(C: Coalgebra, word: tuple) -> dict:
    """d^CH_n = d^CB_n + (-1)^n tau_{n+1}^{-1} partial_0; zero in degree 0."""
    n = len(word)
    out = bar_differential(C, word)
    if n:
        sign = -1 if n % 2 else 1
        for w, c in face(C, word, 0).items():
            bump(out, rotate_left(w), sign * c)
    return out


def ce_differential(L: LeibnizCoalgebra, word: tuple) -> dict:
    """d^CE_n = sum_{j=1}^n (-1)^{j-1} (rho_j (x) id_{n-j})."""
    out: dict = {}
    for j in range(1, len(word) + 1):
        sign = -1 if (j - 1) % 2 else 1
        tail = word[j:]
        for w, c in coaction_on_words(L, word[:j]).items():
            bump(out, w + tail, sign * c)
    return out


@lru_cache(maxsize=None)
def _h(n: int) -> GroupAlgebraElement:
    return h_element(n)


def bar_homotopy(word: tuple) -> dict:
    """h_n(x1..xn) = sum_j (-1)^j (..^xj..) (x) xj: the action of h_n."""
    if not word:
        return {}
    return _h(len(word)).apply({word: Fraction(1)})


def ce_homotopy(word: tuple) -> dict:
    """Null-homotopy of the CE coaction: x1..xn -> (-1)^n (x1..x_{n-1}) (x) xn.

    The sign is (-1)^n rather than (-1)^{n+1}: with the latter the identity
    i d + (d (x) id) i comes out as -rho_n.
    """
    if not word:
        return {}
    return {word: Fraction(-1 if len(word) % 2 else 1)}


def tensor_id(f: WordMap, k: int) -> WordMap:
    """f (x) id_k."""
    if k == 0:
        return f

    def g(word):
        head, tail = word[:-k], word[-k:]
        return {w + tail: c for w, c in f(head).items()}
    return g


def id_tensor(k: int, f: WordMap) -> WordMap:
    """id_k (x) f."""
    def g(word):
        head, tail = word[:k], word[k:]
        return {head + w: c for w, c in f(tail).items()}
    return g


def group_action(g: GroupAlgebraElement) -> WordMap:
    return lambda word: g.apply({word: Fraction(1)})


# ---------------------------------------------------------------- graded values


@dataclass(frozen=True)
class GradedDims:
    """Per-degree nonnegative counts starting at degree ``lo``."""

    lo: int
    values: tuple

    def __post_init__(self):
        if any(v < 0 for v in self.values):
            raise ValueError("negative dimension")

    @property
    def degrees(self) -> range:
        return range(self.lo, self.lo + len(self.values))

    def __getitem__(self, degree: int) -> int:
        i = degree - self.lo
        return self.values[i] if 0 <= i < len(self.values) else 0

    def as_dict(self) -> dict:
        return {m: self[m] for m in self.degrees}


@dataclass(frozen=True, eq=False)
class GradedComplex:
    """Spaces of degrees lo..hi with differentials d_m: m -> m+1 for lo <= m < hi.

    ``bases[m]`` records how degree ``m`` sits inside its ambient tensor power:
    None for the full word basis, a Subspace for sub-complexes, or a tuple of
    strictly increasing words for the wedge basis.
    """

    name: str
    lo: int
    dims: tuple
    differentials: dict
    bases: dict = field(default_factory=dict)

    def __post_init__(self):
        for m, d in self.differentials.items():
            if d.shape != (self.dim(m + 1), self.dim(m)):
                raise ValueError(f"{self.name}: d_{m} has shape {d.shape}")
        for m in range(self.lo, self.hi - 1):
            if not (self.differentials[m + 1] @ self.differentials[m]).is_zero():
                raise DifferentialError(f"{self.name}: d_{m + 1} d_{m} != 0")

    @property
    def hi(self) -> int:
        return self.lo + len(self.dims) - 1

    def dim(self, m: int) -> int:
        i = m - self.lo
        return self.dims[i] if 0 <= i < len(self.dims) else 0

    def d(self, m: int) -> SparseMatrix:
        return self.differentials[m]


def homology(X: GradedComplex) -> GradedDims:
    """H_m = dim ker d_m - rank d_{m-1} for lo <= m < hi."""
    ranks = {m: rank(d) for m, d in X.differentials.items()}
    vals = []
    for m in range(X.lo, X.hi):
        vals.append(X.dim(m) - ranks[m] - ranks.get(m - 1, 0))
    return GradedDims(X.lo, tuple(vals))


def _standard_complex(name, d, lo, max_deg, f: WordMap) -> GradedComplex:
    if max_deg < lo:
        raise ValueError("max_deg below the first degree")
    diffs = {m: matrix_of(f, d, m, m + 1) for m in range(lo, max_deg)}
    return GradedComplex(name, lo, tuple(d**m for m in range(lo, max_deg + 1)), diffs)


def build_bar(C: Coalgebra, max_deg: int) -> GradedComplex:
    return _standard_complex(f"CB({C.name})", C.dim, 0, max_deg,
                             lambda w: bar_differential(C, w))


def build_hochschild(C: Coalgebra, max_deg: int) -> GradedComplex:
    return _standard_complex(f"CH({C.name})", C.dim, 0, max_deg,
                             lambda w: hochschild_differential(C, w))


def build_ce(L: LeibnizCoalgebra, max_deg: int) -> GradedComplex:
    return _standard_complex(f"CE({L.name})", L.dim, 0, max_deg,
                             lambda w: ce_differential(L, w))


def _restricted_complex(name, lo, max_deg, subspaces: dict, ambient: dict) -> GradedComplex:
    diffs = {}
    for m in range(lo, max_deg):
        src, tgt = subspaces[m], subspaces[m + 1]
        cols = []
        for b in src.basis:
            coords = tgt.coordinates(ambient[m].apply(b))
            if coords is None:
                raise RestrictionError(f"{name}: d_{m} leaves the subspace")
            cols.append(coords)
        diffs[m] = SparseMatrix.from_columns(tgt.dim, cols)
    dims = tuple(subspaces[m].dim for m in range(lo, max_deg + 1))
    return GradedComplex(name, lo, dims, diffs, dict(subspaces))


def norm_matrix(d: int, m: int) -> SparseMatrix:
    return matrix_of(group_action(norm(m)), d, m, m)


def t_matrix(d: int, m: int) -> SparseMatrix:
    return matrix_of(group_action(t_operator(m)), d, m, m)


def build_cyclic(C: Coalgebra, max_deg: int) -> GradedComplex:
    """CC^lambda[+1] realized as im(N) inside CH, degrees 1..max_deg."""
    if max_deg < 1:
        raise ValueError("the cyclic complex starts in degree 1")
    d = C.dim
    subs = {m: image(norm_matrix(d, m)) for m in range(1, max_deg + 1)}
    amb = {m: matrix_of(lambda w: hochschild_differential(C, w), d, m, m + 1)
           for m in range(1, max_deg)}
    return _restricted_complex(f"CC^lambda({C.name})[+1]", 1, max_deg, subs, amb)


def coaction_matrix(L: LeibnizCoalgebra, m: int) -> SparseMatrix:
    """rho_m : L^{(x)m} -> L^{(x)m+1}; zero in degree 0."""
    return matrix_of(lambda w: coaction_on_words(L, w), L.dim, m, m + 1)


def build_reduced_ce(L: LeibnizCoalgebra, max_deg: int) -> GradedComplex:
    """CE^red = ker(rho) with the restricted CE differential, degrees 0..max_deg."""
    d = L.dim
    subs = {m: kernel(coaction_matrix(L, m)) for m in range(0, max_deg + 1)}
    amb = {m: matrix_of(lambda w: ce_differential(L, w), d, m, m + 1) for m in range(0, max_deg)}
    return _restricted_complex(f"CE^red({L.name})", 0, max_deg, subs, amb)


def wedge_reduce(t: dict) -> dict:
    """Coordinates of eps(t) in the basis {eps(u) : u strictly increasing}."""
    out: dict = {}
    for w, c in t.items():
        s, u = sort_sign(w)
        if s:
            bump(out, u, s * c)
    return out


def build_sym_ce(C: Coalgebra, max_deg: int) -> GradedComplex:
    """CE^sym(Lie(C)) = im(eps) on the wedge basis, degrees 0..max_deg.

    Uses eps_{m+1} d^CB_m = d^CE_m eps_m, so the differential of eps(w) is
    read off eps(d^CB w) without expanding any antisymmetrizer.
    """
    d = C.dim
    bases = {m: tuple(increasing_words(d, m)) for m in range(0, max_deg + 1)}
    diffs = {}
    for m in range(0, max_deg):
        index = {u: i for i, u in enumerate(bases[m + 1])}
        cols = []
        for w in bases[m]:
            red = wedge_reduce(bar_differential(C, w))
            cols.append({index[u]: c for u, c in red.items()})
        diffs[m] = SparseMatrix.from_columns(len(bases[m + 1]), cols)
    dims = tuple(math.comb(d, m) for m in range(0, max_deg + 1))
    return GradedComplex(f"CE^sym(Lie({C.name}))", 0, dims, diffs, bases)


def wedge_vector(word: tuple, d: int) -> dict:
    """eps_m applied to a word, as an index vector in C^{(x)m}."""
    return to_vector(antisymmetrizer(len(word)).apply({word: Fraction(1)}), d)


COMPLEX_KINDS = ("bar", "hochschild", "ce", "ce-sym", "ce-red", "cyclic")


def build_complex(C: Coalgebra, kind: str, max_deg: int) -> GradedComplex:
    """Dispatch on a complex name; the CE kinds use Lie(C)."""
    if kind == "bar":
        return build_bar(C, max_deg)
    if kind == "hochschild":
        return build_hochschild(C, max_deg)
    if kind == "ce":
        return build_ce(lie_of(C), max_deg)
    if kind == "ce-sym":
        return build_sym_ce(C, max_deg)
    if kind == "ce-red":
        return build_reduced_ce(lie_of(C), max_deg)
    if kind == "cyclic":
        return build_cyclic(C, max_deg)
    raise ValueError(f"unknown complex kind {kind!r}; expected one of {', '.join(COMPLEX_KINDS)}")


# ---------------------------------------------------------------- chain maps


@dataclass(frozen=True, eq=False)
class ChainMap:
    """Per-degree matrices commuting with the differentials wherever both squares exist."""

    name: str
    source: GradedComplex
    target: GradedComplex
    matrices: dict

    def __post_init__(self):
        bad = self.failing_degrees()
        if bad:
            raise DifferentialError(f"{self.name} does not commute with d in degrees {bad}")

    def failing_degrees(self) -> list:
        out = []
        for m, f in self.matrices.items():
            if m + 1 in self.matrices and m in self.source.differentials and m in self.target.differentials:
                if self.matrices[m + 1] @ self.source.d(m) != self.target.d(m) @ f:
                    out.append(m)
        return out


def _group_chain_map(name, src, tgt, element: Callable[[int], GroupAlgebraElement], d, lo, hi):
    mats = {m: matrix_of(group_action(element(m)), d, m, m) for m in range(lo, hi + 1)}
    return ChainMap(name, src, tgt, mats)


def t_chain_map(C: Coalgebra, max_deg: int) -> ChainMap:
    """t: CH -> CB."""
    return _group_chain_map("t", build_hochschild(C, max_deg), build_bar(C, max_deg),
                            t_operator, C.dim, 1, max_deg)


def norm_chain_map(C: Coalgebra, max_deg: int) -> ChainMap:
    """N: CB -> CH."""
    return _group_chain_map("N", build_bar(C, max_deg), build_hochschild(C, max_deg),
                            norm, C.dim, 1, max_deg)


def epsilon_chain_map(C: Coalgebra, max_deg: int) -> ChainMap:
    """eps: CB(C) -> CE(Lie(C))."""
    return _group_chain_map("eps", build_bar(C, max_deg), build_ce(lie_of(C), max_deg),
                            antisymmetrizer, C.dim, 0, max_deg)


def id_epsilon(m: int) -> GroupAlgebraElement:
    """id_1 (x) eps_{m-1} in Q[S_m]."""
    return GroupAlgebraElement.identity(1).tensor(antisymmetrizer(m - 1))


def id_epsilon_chain_map(C: Coalgebra, max_deg: int) -> ChainMap:
    """id_1 (x) eps_{*-1}: CH(C) -> CE(Lie(C))."""
    return _group_chain_map("id(x)eps", build_hochschild(C, max_deg), build_ce(lie_of(C), max_deg),
                            id_epsilon, C.dim, 1, max_deg)


# ---------------------------------------------------------------- basis change


def random_unimodular(n: int, rng: random.Random) -> SparseMatrix:
    """L U with random small-integer unitriangular factors (determinant 1)."""
    lower = {(i, i): 1 for i in range(n)}
    upper = {(i, i): 1 for i in range(n)}
    for i in range(n):
        for j in range(i):
            if rng.random() < 0.5:
                lower[(i, j)] = rng.randint(-2, 2)
            if rng.random() < 0.5:
                upper[(j, i)] = rng.randint(-2, 2)
    return SparseMatrix.from_entries(n, n, lower) @ SparseMatrix.from_entries(n, n, upper)


def change_basis(X: GradedComplex, seed: int) -> GradedComplex:
    """Conjugate every differential by random invertible per-degree matrices."""
    rng = random.Random(seed)
    P = {m: random_unimodular(X.dim(m), rng) for m in range(X.lo, X.hi + 1)}
    diffs = {m: P[m + 1] @ d @ inverse(P[m]) for m, d in X.differentials.items()}
    return GradedComplex(X.name + " (rebased)", X.lo, X.dims, diffs)


__all__ = [
    "GradedComplex", "GradedDims", "ChainMap", "homology", "COMPLEX_KINDS", "build_complex",
    "build_bar", "build_hochschild", "build_ce", "build_sym_ce", "build_cyclic",
    "build_reduced_ce", "bar_differential", "hochschild_differential", "ce_differential",
    "bar_homotopy", "ce_homotopy", "face", "rotate_left", "tensor_id", "id_tensor",
    "group_action", "wedge_reduce", "wedge_vector", "coaction_matrix", "norm_matrix",
    "t_matrix", "t_chain_map", "norm_chain_map", "epsilon_chain_map", "id_epsilon",
    "id_epsilon_chain_map", "change_basis", "words", "word_index",
]
