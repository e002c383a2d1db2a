"""Finite-dimensional coassociative, Leibniz and Lie coalgebras.

Structure constants are stored sparsely: ``delta[i]`` is a tuple of
``(left, right, coef)`` triples with ``Delta(x_i) = sum coef x_left (x) x_right``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .linalg import SparseMatrix, Subspace, axpy, bump, kernel, rank_of_vectors
from .tensor import Tensor, linear_extend, to_vector, words


class AxiomError(ValueError):
    """A coalgebra or coaction failed one of its defining identities."""


def _freeze(structure: Mapping, dim: int) -> tuple:
    out = []
    for i in range(dim):
        acc: dict = {}
        for l, r, c in structure.get(i, ()):
            bump(acc, (l, r), Fraction(c))
        out.append(tuple((l, r, c) for (l, r), c in sorted(acc.items())))
    return tuple(out)


def _check_indices(structure: tuple, dim: int):
    for i, terms in enumerate(structure):
        for l, r, _ in terms:
            if not (0 <= l < dim and 0 <= r < dim):
                raise IndexError(f"structure constant of basis element {i} has index out of range")


@dataclass(frozen=True)
class Coalgebra:
    basis_names: tuple
    delta: tuple
    counit: dict | None = None
    name: str = ""

    @classmethod
    def create(cls, basis_names, delta: Mapping, counit: Mapping | None = None,
               name: str = "", check: bool = True) -> "Coalgebra":
        names = tuple(basis_names)
        cnt = None if counit is None else {i: Fraction(c) for i, c in counit.items() if c}
        C = cls(names, _freeze(delta, len(names)), cnt, name)
        _check_indices(C.delta, C.dim)
        if check:
            report = check_coalgebra(C)
            if not report.passed:
                raise AxiomError(f"{name or 'coalgebra'}: {report.summary()}")
        return C

    @property
    def dim(self) -> int:
        return len(self.basis_names)

    @property
    def counital(self) -> bool:
        return self.counit is not None

    def coproduct(self, i: int) -> Tensor:
        return {(l, r): c for l, r, c in self.delta[i]}

    def apply_at(self, word: tuple, j: int) -> Tensor:
        """id_j (x) Delta (x) id on a word: split slot ``j`` (0-based)."""
        head, tail = word[:j], word[j + 1:]
        return {head + (l, r) + tail: c for l, r, c in self.delta[word[j]]}

    def label(self, word: tuple) -> str:
        return "(x)".join(self.basis_names[i] for i in word) if word else "1"


@dataclass(frozen=True)
class LeibnizCoalgebra:
    basis_names: tuple
    cobracket: tuple
    name: str = ""

    @classmethod
    def create(cls, basis_names, cobracket: Mapping, name: str = "", check: bool = True):
        names = tuple(basis_names)
        L = cls(names, _freeze(cobracket, len(names)), name)
        _check_indices(L.cobracket, L.dim)
        if check:
            report = check_leibniz(L)
            if not report.passed:
                raise AxiomError(f"{name or 'Leibniz coalgebra'}: {report.summary()}")
        return L

    @property
    def dim(self) -> int:
        return len(self.basis_names)

    def bracket(self, i: int) -> Tensor:
        return {(l, r): c for l, r, c in self.cobracket[i]}

    def is_abelian(self) -> bool:
        return not any(self.cobracket)


@dataclass(frozen=True)
class LieCoalgebra(LeibnizCoalgebra):
    @classmethod
    def create(cls, basis_names, cobracket: Mapping, name: str = "", check: bool = True):
        L = super().create(basis_names, cobracket, name, check=False)
        if check:
            report = check_leibniz(L, antisymmetric=True)
            if not report.passed:
                raise AxiomError(f"{name or 'Lie coalgebra'}: {report.summary()}")
        return L


# ---------------------------------------------------------------- axiom reports


@dataclass
class AxiomResult:
    axiom: str
    passed: bool
    witness: str | None = None


@dataclass
class AxiomReport:
    subject: str
    results: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def summary(self) -> str:
        bad = [r for r in self.results if not r.passed]
        if not bad:
            return "all axioms hold"
        return "; ".join(f"{r.axiom} fails at {r.witness}" for r in bad)


def _first_failure(dim, lhs, rhs, names):
    for i in range(dim):
        if lhs(i) != rhs(i):
            return names[i]
    return None


def check_coalgebra(C: Coalgebra) -> AxiomReport:
    """Coassociativity and, if a counit is present, both counit laws."""
    names = C.basis_names

    def left(i):  # (Delta (x) id) Delta
        return linear_extend(lambda w: C.apply_at(w, 0), C.coproduct(i))

    def right(i):  # (id (x) Delta) Delta
        return linear_extend(lambda w: C.apply_at(w, 1), C.coproduct(i))

    report = AxiomReport(C.name or "coalgebra")
    w = _first_failure(C.dim, left, right, names)
    report.results.append(AxiomResult("coassociativity", w is None, w))
    if C.counit is not None:
        eta = C.counit

        def unit_left(i):
            out: dict = {}
            for l, r, c in C.delta[i]:
                bump(out, (r,), c * eta.get(l, 0))
            return out

        def unit_right(i):
            out: dict = {}
            for l, r, c in C.delta[i]:
                bump(out, (l,), c * eta.get(r, 0))
            return out

        ident = lambda i: {(i,): Fraction(1)}
        w = _first_failure(C.dim, unit_left, ident, names)
        report.results.append(AxiomResult("left counit", w is None, w))
        w = _first_failure(C.dim, unit_right, ident, names)
        report.results.append(AxiomResult("right counit", w is None, w))
    return report


def _cobracket_at(L, word: tuple, j: int) -> Tensor:
    head, tail = word[:j], word[j + 1:]
    return {head + (l, r) + tail: c for l, r, c in L.cobracket[word[j]]}


def cojacobi_sides(L: LeibnizCoalgebra, i: int):
    """Both sides of (id - id(x)tau_2)(delta(x)id)delta = (id(x)delta)delta on x_i."""
    first = linear_extend(lambda w: _cobracket_at(L, w, 0), L.bracket(i))
    lhs: dict = {}
    for (a, b, c), x in first.items():
        bump(lhs, (a, b, c), x)
        bump(lhs, (a, c, b), -x)
    rhs = linear_extend(lambda w: _cobracket_at(L, w, 1), L.bracket(i))
    return lhs, rhs


def check_leibniz(L: LeibnizCoalgebra, antisymmetric: bool | None = None) -> AxiomReport:
    """coJacobi identity; antisymmetry too when requested (default: for LieCoalgebra)."""
    if antisymmetric is None:
        antisymmetric = isinstance(L, LieCoalgebra)
    report = AxiomReport(L.name or "Leibniz coalgebra")
    witness = None
    for i in range(L.dim):
        lhs, rhs = cojacobi_sides(L, i)
        if lhs != rhs:
            witness = L.basis_names[i]
            break
    report.results.append(AxiomResult("coJacobi", witness is None, witness))
    if antisymmetric:
        witness = None
        for i in range(L.dim):
            sym: dict = {}
            for l, r, c in L.cobracket[i]:
                bump(sym, (l, r), c)
                bump(sym, (r, l), c)
            if sym:
                witness = L.basis_names[i]
                break
        report.results.append(AxiomResult("antisymmetry", witness is None, witness))
    return report


# ---------------------------------------------------------------- constructions


def lie_of(C: Coalgebra) -> LieCoalgebra:
    """Lie(C): cobracket (id - tau_2) Delta."""
    report = check_coalgebra(C)
    if not report.passed:
        raise AxiomError(f"{C.name}: {report.summary()}")
    cob = {}
    for i in range(C.dim):
        acc: dict = {}
        for l, r, c in C.delta[i]:
            bump(acc, (l, r), c)
            bump(acc, (r, l), -c)
        cob[i] = [(l, r, c) for (l, r), c in acc.items()]
    return LieCoalgebra.create(C.basis_names, cob, name=f"Lie({C.name})")


def trivial_coalgebra() -> Coalgebra:
    """The ground field k: Delta(1) = 1 (x) 1, eta(1) = 1."""
    return Coalgebra.create(("1",), {0: [(0, 0, 1)]}, {0: 1}, name="trivial")


def group_coalgebra(n: int) -> Coalgebra:
    """Group-like coalgebra k[Z/n]: Delta(g) = g (x) g, eta(g) = 1."""
    if n < 1:
        raise ValueError("group order must be >= 1")
    names = tuple(f"g{i}" for i in range(n))
    return Coalgebra.create(names, {i: [(i, i, 1)] for i in range(n)},
                            {i: 1 for i in range(n)}, name=f"group:{n}")


def matrix_coalgebra(n: int) -> Coalgebra:
    """M_n^c(k): Delta(e_ij) = sum_a e_ia (x) e_aj, eta(e_ij) = [i == j]."""
    if n < 1:
        raise ValueError("matrix size must be >= 1")
    idx = lambda i, j: (i - 1) * n + (j - 1)
    names = tuple(f"e_{i}_{j}" for i in range(1, n + 1) for j in range(1, n + 1))
    delta = {
        idx(i, j): [(idx(i, a), idx(a, j), 1) for a in range(1, n + 1)]
        for i in range(1, n + 1) for j in range(1, n + 1)
    }
    counit = {idx(i, i): 1 for i in range(1, n + 1)}
    return Coalgebra.create(names, delta, counit, name=f"matrix:{n}")


def tensor_coalgebra(X: Coalgebra, Y: Coalgebra, name: str | None = None) -> Coalgebra:
    """X (x) Y with Delta(x(x)y) = (x1(x)y1) (x) (x2(x)y2) and eta(x(x)y) = eta(x)eta(y)."""
    dy = Y.dim
    names = tuple(f"{a}|{b}" for a in X.basis_names for b in Y.basis_names)
    delta = {}
    for i in range(X.dim):
        for j in range(dy):
            delta[i * dy + j] = [
                (l1 * dy + l2, r1 * dy + r2, c1 * c2)
                for l1, r1, c1 in X.delta[i] for l2, r2, c2 in Y.delta[j]
            ]
    counit = None
    if X.counit is not None and Y.counit is not None:
        counit = {i * dy + j: a * b for i, a in X.counit.items() for j, b in Y.counit.items()}
    return Coalgebra.create(names, delta, counit, name=name or f"{X.name}(x){Y.name}")


def matrix_over(n: int, C: Coalgebra) -> Coalgebra:
    """M_n^c(C) = M_n^c(k) (x) C."""
    return tensor_coalgebra(matrix_coalgebra(n), C, name=f"matrix:{n}:{C.name}")


def gl_coalgebra(n: int, C: Coalgebra) -> LieCoalgebra:
    """gl_n^c(C) = Lie(M_n^c(C))."""
    if not C.counital:
        raise AxiomError("gl_n^c needs a counital coalgebra")
    L = lie_of(matrix_over(n, C))
    return LieCoalgebra(L.basis_names, L.cobracket, f"gl_{n}^c({C.name})")


# ---------------------------------------------------------------- comodules


@dataclass(frozen=True)
class Coaction:
    """Right coaction X -> X (x) L; ``structure[x]`` lists ``(x0, l, coef)``."""

    comodule_dim: int
    coalgebra: LeibnizCoalgebra
    structure: tuple

    def matrix(self) -> SparseMatrix:
        """Matrix X -> X (x) L with row index x0 * dim L + l."""
        d = self.coalgebra.dim
        cols = []
        for terms in self.structure:
            col: dict = {}
            for x0, l, c in terms:
                axpy(col, c, {x0 * d + l: 1})
            cols.append(col)
        return SparseMatrix.from_columns(self.comodule_dim * d, cols)


def check_coaction(rho: Coaction) -> AxiomReport:
    """Right L-comodule identity: (id - id(x)tau_2)(rho(x)id)rho = (id(x)delta)rho."""
    L = rho.coalgebra
    report = AxiomReport("coaction")
    witness = None
    for x in range(rho.comodule_dim):
        lhs: dict = {}
        rhs: dict = {}
        for x0, l, c in rho.structure[x]:
            for x00, l2, c2 in rho.structure[x0]:
                bump(lhs, (x00, l2, l), c * c2)
                bump(lhs, (x00, l, l2), -c * c2)
            for a, b, c3 in L.cobracket[l]:
                bump(rhs, (x0, a, b), c * c3)
        if lhs != rhs:
            witness = x
            break
    report.results.append(AxiomResult("comodule identity", witness is None, witness))
    return report


def coaction_on_words(L: LeibnizCoalgebra, word: tuple) -> Tensor:
    """rho_m(x1..xm) = sum_j (..xj_[1]..) (x) xj_[2], as a word of length m+1."""
    out: dict = {}
    for j, x in enumerate(word):
        head, tail = word[:j], word[j + 1:]
        for l, r, c in L.cobracket[x]:
            w = head + (l,) + tail + (r,)
            s = out.get(w, 0) + c
            if s:
                out[w] = s
            else:
                out.pop(w, None)
    return out


def diagonal_coaction(L: LeibnizCoalgebra, m: int) -> Coaction:
    """The diagonal coaction of L on L^{(x)m}, comodule basis in lexicographic order."""
    if m < 1:
        raise ValueError("m >= 1 required")
    d = L.dim
    structure = []
    for w in words(d, m):
        t = coaction_on_words(L, w)
        terms = []
        for v, c in sorted(t.items()):
            x0 = 0
            for a in v[:-1]:
                x0 = x0 * d + a
            terms.append((x0, v[-1], c))
        structure.append(tuple(terms))
    return Coaction(d**m, L, tuple(structure))


def coalgebra_as_coaction(C: Coalgebra) -> Coaction:
    """C coacting on itself on the right through Delta, read as a Lie(C)-coaction."""
    L = lie_of(C)
    return Coaction(C.dim, L, tuple(tuple(t) for t in C.delta))


def invariants(rho: Coaction) -> Subspace:
    """X^L = ker(rho)."""
    return kernel(rho.matrix())


# ---------------------------------------------------------------- duals


@dataclass(frozen=True)
class DualAlgebra:
    """Multiplication table of the dual: (f_a f_b)(x_c) = coefficient of x_a(x)x_b in Delta(x_c)."""

    basis_names: tuple
    table: dict  # (a, b) -> {c: coef}

    @property
    def dim(self) -> int:
        return len(self.basis_names)

    def mul(self, u: Mapping, v: Mapping) -> dict:
        out: dict = {}
        for a, x in u.items():
            for b, y in v.items():
                axpy(out, x * y, self.table.get((a, b), {}))
        return out

    def commutator(self, u: Mapping, v: Mapping) -> dict:
        out = self.mul(u, v)
        axpy(out, -1, self.mul(v, u))
        return out

    def is_associative(self) -> bool:
        e = lambda i: {i: Fraction(1)}
        r = range(self.dim)
        return all(self.mul(self.mul(e(a), e(b)), e(c)) == self.mul(e(a), self.mul(e(b), e(c)))
                   for a in r for b in r for c in r)

    def is_leibniz(self) -> bool:
        """[[f,g],h] - [[f,h],g] == [f,[g,h]] for the product read as a bracket."""
        e = lambda i: {i: Fraction(1)}
        r = range(self.dim)
        for a in r:
            for b in r:
                for c in r:
                    lhs = self.mul(self.mul(e(a), e(b)), e(c))
                    axpy(lhs, -1, self.mul(self.mul(e(a), e(c)), e(b)))
                    if lhs != self.mul(e(a), self.mul(e(b), e(c))):
                        return False
        return True


def dualize(C) -> DualAlgebra:
    """Dual algebra of a Coalgebra (convolution) or dual bracket of a Leibniz coalgebra."""
    structure = C.delta if isinstance(C, Coalgebra) else C.cobracket
    table: dict = {}
    for c, terms in enumerate(structure):
        for a, b, x in terms:
            table.setdefault((a, b), {})[c] = x
    return DualAlgebra(tuple(f"{n}^v" for n in C.basis_names), table)


def dual_action_vectors(rho: Coaction) -> list:
    """Images of the dual right action X^v (x) L^v -> X^v on basis pairs.

    (f . l^v)(x) = sum over rho(x) of f(x_[0]) l^v(x_[1]); for f = x'^v the
    image is sum_x rho(x)[x', l] x^v.
    """
    out: dict = {}
    for x, terms in enumerate(rho.structure):
        for x0, l, c in terms:
            out.setdefault((x0, l), {})[x] = c
    return [out[k] for k in sorted(out)]


def coinvariants_of_dual(rho: Coaction) -> int:
    """dim of (X^v)_{L^v} = X^v / (X^v . L^v)."""
    return rho.comodule_dim - rank_of_vectors(dual_action_vectors(rho))


def dual_action_operators(rho: Coaction) -> list:
    """One matrix per coalgebra basis element l: the operator f -> f . l^v on X^v."""
    n = rho.comodule_dim
    cols = [[{} for _ in range(n)] for _ in range(rho.coalgebra.dim)]
    for x, terms in enumerate(rho.structure):
        for x0, l, c in terms:
            cols[l][x0][x] = c
    return [SparseMatrix.from_columns(n, c) for c in cols]


def coreductive_splitting(rho: Coaction) -> dict:
    """Check V = V^g (+) g.V for the dual module V = X^v.

    Returns the dimensions and whether the sum is direct and exhaustive.
    """
    n = rho.comodule_dim
    ops = dual_action_operators(rho)
    stacked_rows = SparseMatrix(n * len(ops), n, tuple(
        {k * n + r: v for k, op in enumerate(ops) for r, v in op.columns[c].items()}
        for c in range(n)
    ))
    inv = kernel(stacked_rows)
    moved = Subspace.span(n, [col for op in ops for col in op.columns])
    meet = inv.intersection(moved)
    return {
        "ambient": n,
        "invariants": inv.dim,
        "image": moved.dim,
        "intersection": meet.dim,
        "splits": meet.dim == 0 and inv.dim + moved.dim == n,
    }
