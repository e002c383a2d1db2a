"""Exact sparse linear algebra over the rationals.

Vectors are plain dicts ``{index: Fraction}`` with no stored zeros.  Matrices
are :class:`SparseMatrix` values stored column-wise, since every map in this
package is produced one basis element (one column) at a time.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

Vector = dict  # index -> Fraction, zeros never stored


class DifferentialError(ArithmeticError):
    """Raised when a pair of maps expected to compose to zero does not."""


class RestrictionError(ArithmeticError):
    """Raised when a map fails to preserve a subspace it should preserve."""


def parse_rational(text) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` exactly; decimal notation is rejected."""
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise ValueError(f"expected a 'p/q' string, got {text!r}")
    s = text.strip()
    if not s or any(ch in s for ch in ".eE"):
        raise ValueError(f"not an exact rational: {text!r}")
    try:
        num, _, den = s.partition("/")
        value = Fraction(int(num), int(den)) if den else Fraction(int(num))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not an exact rational: {text!r}") from exc
    return value


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def axpy(acc: Vector, a, x: Mapping) -> None:
    """acc += a*x in place, dropping entries that cancel."""
    if not a:
        return
    for k, v in x.items():
        s = acc.get(k, 0) + a * v
        if s:
            acc[k] = s
        else:
            acc.pop(k, None)


def bump(acc: dict, key, a) -> None:
    """acc[key] += a, removing the key if it cancels."""
    s = acc.get(key, 0) + a
    if s:
        acc[key] = s
    else:
        acc.pop(key, None)


def scaled(a, x: Mapping) -> Vector:
    if not a:
        return {}
    return {k: a * v for k, v in x.items()}


@dataclass(frozen=True, eq=False)
class SparseMatrix:
    """A ``rows x cols`` rational matrix stored as a list of sparse columns."""

    rows: int
    cols: int
    columns: tuple = field(repr=False)

    def __post_init__(self):
        if len(self.columns) != self.cols:
            raise ValueError("column count mismatch")
        for col in self.columns:
            for r, v in col.items():
                if not 0 <= r < self.rows:
                    raise IndexError(f"row index {r} out of range")
                if not v:
                    raise ValueError("stored zero entry")

    @classmethod
    def from_columns(cls, rows: int, columns: Iterable[Mapping]) -> "SparseMatrix":
        cols = tuple({r: Fraction(v) for r, v in c.items() if v} for c in columns)
        return cls(rows, len(cols), cols)

    @classmethod
    def from_entries(cls, rows: int, cols: int, entries: Mapping) -> "SparseMatrix":
        columns = [dict() for _ in range(cols)]
        for (r, c), v in entries.items():
            if v:
                columns[c][r] = Fraction(v)
        return cls(rows, cols, tuple(columns))

    @classmethod
    def from_dense(cls, data) -> "SparseMatrix":
        data = [list(row) for row in data]
        rows = len(data)
        cols = len(data[0]) if rows else 0
        return cls.from_entries(
            rows, cols, {(i, j): data[i][j] for i in range(rows) for j in range(cols)}
        )

    @classmethod
    def zero(cls, rows: int, cols: int) -> "SparseMatrix":
        return cls(rows, cols, tuple({} for _ in range(cols)))

    @classmethod
    def identity(cls, n: int) -> "SparseMatrix":
        return cls(n, n, tuple({i: Fraction(1)} for i in range(n)))

    @property
    def entries(self) -> dict:
        return {(r, c): v for c, col in enumerate(self.columns) for r, v in col.items()}

    @property
    def shape(self):
        return (self.rows, self.cols)

    def nnz(self) -> int:
        return sum(len(c) for c in self.columns)

    def is_zero(self) -> bool:
        return not any(self.columns)

    def row_vectors(self) -> list:
        out = [dict() for _ in range(self.rows)]
        for c, col in enumerate(self.columns):
            for r, v in col.items():
                out[r][c] = v
        return out

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix(self.cols, self.rows, tuple(self.row_vectors()))

    def apply(self, x: Mapping) -> Vector:
        out: Vector = {}
        for c, v in x.items():
            axpy(out, v, self.columns[c])
        return out

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        return SparseMatrix(self.rows, other.cols, tuple(self.apply(c) for c in other.columns))

    def __add__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        cols = []
        for a, b in zip(self.columns, other.columns):
            c = dict(a)
            axpy(c, 1, b)
            cols.append(c)
        return SparseMatrix(self.rows, self.cols, tuple(cols))

    def __neg__(self) -> "SparseMatrix":
        return self.scale(-1)

    def __sub__(self, other: "SparseMatrix") -> "SparseMatrix":
        return self + (-other)

    def scale(self, a) -> "SparseMatrix":
        return SparseMatrix(self.rows, self.cols, tuple(scaled(Fraction(a), c) for c in self.columns))

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return self.shape == other.shape and self.columns == other.columns

    __hash__ = None

    def first_difference(self, other: "SparseMatrix"):
        """Return ``(row, col, self_value, other_value)`` of the first mismatch, or None."""
        for c, (a, b) in enumerate(zip(self.columns, other.columns)):
            if a != b:
                for r in sorted(set(a) | set(b)):
                    if a.get(r, 0) != b.get(r, 0):
                        return (r, c, a.get(r, Fraction(0)), b.get(r, Fraction(0)))
        return None

    def to_dense(self) -> list:
        out = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for c, col in enumerate(self.columns):
            for r, v in col.items():
                out[r][c] = v
        return out


class _Echelon:
    """Incremental semi-echelon basis.

    Each stored vector has a pivot that no *earlier* vector contains, so an
    incoming vector is reduced by eliminating pivots in insertion order.  The
    pivot of a new vector is its structurally sparsest entry, which keeps
    fill-in low on the +-1 matrices produced by permutation actions.
    """

    def __init__(self, weights: Mapping | None = None):
        self.pivot_of: dict = {}  # pivot index -> insertion number
        self.vectors: list = []
        self.pivots: list = []
        self.weights = weights or {}

    def reduce(self, v: Vector, record: Vector | None = None):
        v = dict(v)
        heap = [self.pivot_of[k] for k in v if k in self.pivot_of]
        heapq.heapify(heap)
        seen = set(heap)
        while heap:
            t = heapq.heappop(heap)
            p = self.pivots[t]
            a = v.get(p)
            if not a:
                continue
            vec, rec = self.vectors[t]
            for k, x in vec.items():
                s = v.get(k, 0) - a * x
                if s:
                    v[k] = s
                    t2 = self.pivot_of.get(k)
                    if t2 is not None and t2 not in seen:
                        seen.add(t2)
                        heapq.heappush(heap, t2)
                else:
                    v.pop(k, None)
            if record is not None:
                axpy(record, -a, rec)
        return v

    def insert(self, v: Vector, record: Vector | None = None) -> bool:
        """Add ``v``; return False (and leave ``record`` as a relation) if dependent."""
        v = self.reduce(v, record)
        if not v:
            return False
        w = self.weights
        p = min(v, key=lambda k: (w.get(k, 0), k))
        inv = 1 / v[p]
        v = {k: x * inv for k, x in v.items()}
        rec = scaled(inv, record) if record is not None else None
        self.pivot_of[p] = len(self.vectors)
        self.vectors.append((v, rec))
        self.pivots.append(p)
        return True

    def __len__(self):
        return len(self.vectors)


def _column_weights(vectors: Iterable[Mapping]) -> dict:
    counts: dict = {}
    for v in vectors:
        for k in v:
            counts[k] = counts.get(k, 0) + 1
    return counts


def rank_of_vectors(vectors) -> int:
    vectors = list(vectors)
    ech = _Echelon(_column_weights(vectors))
    for v in vectors:
        ech.insert(v)
    return len(ech)


def rank(M: SparseMatrix) -> int:
    """Rank of ``M``; eliminates along whichever side has fewer vectors."""
    if M.cols <= M.rows:
        return rank_of_vectors(M.columns)
    return rank_of_vectors(M.row_vectors())


def rref(vectors: Iterable[Mapping]) -> tuple:
    """Canonical reduced row-echelon basis of the span of ``vectors``.

    Pivots are the leftmost entries and are normalized to 1; each pivot index
    occurs in exactly one basis vector.  Two spans are equal iff their rref
    tuples are equal.
    """
    rows: dict = {}  # pivot -> vector
    holders: dict = {}  # index -> set of pivots whose vector contains it
    for v in vectors:
        v = {k: Fraction(x) for k, x in v.items() if x}
        for p in [k for k in v if k in rows]:
            a = v.get(p)
            if a:
                axpy(v, -a, rows[p])
        if not v:
            continue
        p = min(v)
        inv = 1 / v[p]
        v = {k: x * inv for k, x in v.items()}
        for q in list(holders.get(p, ())):
            row = rows[q]
            a = row[p]
            for k, x in v.items():
                s = row.get(k, 0) - a * x
                if s:
                    if k not in row:
                        holders.setdefault(k, set()).add(q)
                    row[k] = s
                else:
                    del row[k]
                    holders[k].discard(q)
        rows[p] = v
        for k in v:
            holders.setdefault(k, set()).add(p)
    return tuple(rows[p] for p in sorted(rows))


@dataclass(frozen=True, eq=False)
class Subspace:
    """A subspace of Q^ambient_dim held by its canonical rref basis."""

    ambient_dim: int
    basis: tuple

    @classmethod
    def span(cls, ambient_dim: int, vectors) -> "Subspace":
        return cls(ambient_dim, rref(vectors))

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(n, tuple({i: Fraction(1)} for i in range(n)))

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n, ())

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> tuple:
        return tuple(min(b) for b in self.basis)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    __hash__ = None

    def coordinates(self, v: Mapping):
        """Coordinates of ``v`` in the rref basis, or None if ``v`` is not in the span."""
        coords = {}
        rest = dict(v)
        for i, b in enumerate(self.basis):
            a = rest.get(min(b))
            if a:
                coords[i] = a
                axpy(rest, -a, b)
        return None if rest else coords

    def contains(self, v: Mapping) -> bool:
        return self.coordinates(v) is not None

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(b) for b in other.basis)

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace.span(self.ambient_dim, self.basis + other.basis)

    def intersection(self, other: "Subspace") -> "Subspace":
        """Intersection via the kernel of [A | -B]."""
        k = self.dim
        cols = list(self.basis) + [scaled(-1, b) for b in other.basis]
        rel = kernel(SparseMatrix.from_columns(self.ambient_dim, cols))
        vecs = []
        for r in rel.basis:
            v: Vector = {}
            for i, a in r.items():
                if i < k:
                    axpy(v, a, self.basis[i])
            vecs.append(v)
        return Subspace.span(self.ambient_dim, vecs)


def kernel(M: SparseMatrix) -> Subspace:
    """Basis of {v : Mv = 0} as a canonical subspace of Q^cols.

    Columns are inserted one at a time while tracking the combination that
    produced each stored vector; a column that reduces to zero yields a
    kernel vector directly.
    """
    ech = _Echelon(_column_weights(M.columns))
    relations = []
    for j, col in enumerate(M.columns):
        record = {j: Fraction(1)}
        if not ech.insert(col, record):
            relations.append(record)
    return Subspace.span(M.cols, relations)


def image(M: SparseMatrix) -> Subspace:
    """Column span of ``M``."""
    return Subspace.span(M.rows, M.columns)


def homology_dim(d_out: SparseMatrix, d_in: SparseMatrix) -> int:
    """dim ker(d_out) - rank(d_in) at the degree between the two maps.

    ``d_in`` maps into the degree, ``d_out`` maps out of it.
    """
    if d_in.rows != d_out.cols:
        raise ValueError(f"incompatible shapes: d_in {d_in.shape}, d_out {d_out.shape}")
    if not (d_out @ d_in).is_zero():
        raise DifferentialError("d_out . d_in != 0")
    return d_out.cols - rank(d_out) - rank(d_in)


def quotient_basis(ambient_dim: int, sub: Subspace) -> list:
    """Standard basis vectors complementing ``sub``: the non-pivot coordinates.

    The projection onto their span along ``sub`` is v -> v - sum v[p] b_p.
    """
    if sub.ambient_dim != ambient_dim:
        raise ValueError("ambient dimension mismatch")
    piv = set(sub.pivots)
    return [{i: Fraction(1)} for i in range(ambient_dim) if i not in piv]


def project_to_complement(sub: Subspace, v: Mapping) -> Vector:
    """Projection along ``sub`` onto the span of :func:`quotient_basis`."""
    rest = dict(v)
    for b in sub.basis:
        a = rest.get(min(b))
        if a:
            axpy(rest, -a, b)
    return rest


def inverse(M: SparseMatrix) -> SparseMatrix:
    """Exact inverse of a square matrix via Gauss-Jordan on [M | I]."""
    n = M.rows
    if M.cols != n:
        raise ValueError("inverse of a non-square matrix")
    rows = M.row_vectors()
    aug = [{**r, **{n + i: Fraction(1)}} for i, r in enumerate(rows)]
    basis = rref(aug)
    if len(basis) != n or any(min(b) >= n for b in basis):
        raise ZeroDivisionError("matrix is singular")
    entries = {}
    for i, b in enumerate(basis):
        for k, v in b.items():
            if k >= n:
                entries[(i, k - n)] = v
    return SparseMatrix.from_entries(n, n, entries)
