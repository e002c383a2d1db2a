"""Weyl dimensions, the Hopf algebra on words times permutations, and the LQT comparison.

The comparison is between two independent computations:

* the homology of CE^sym of gl_n^c(C) = Lie(M_n^c(k) (x) C), read off the
  wedge-basis complex, and
* the free graded-commutative algebra generated by HC_*(C)[+1], which is the
  homology of the cyclic complex im(N) fed through a generating function.

Agreement is asserted only in the stable range m <= n.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .coalgebra import (
    Coalgebra,
    diagonal_coaction,
    dualize,
    gl_coalgebra,
    invariants,
    matrix_coalgebra,
    matrix_over,
    trivial_coalgebra,
)
from .complexes import GradedDims, build_cyclic, build_sym_ce, homology
from .linalg import bump, rank_of_vectors
from .perm import Permutation, all_permutations, direct_sum, long_cycle_class
from .report import Report
from .tensor import word_index, words

# ---------------------------------------------------------------- Weyl dimensions


def weyl_coinvariants_dim(n: int, m: int) -> int:
    """dim of M_n(k)^{(x)m} modulo the diagonal adjoint action of gl_n(k).

    The matrix algebra is obtained by dualizing the matrix coalgebra; the
    action of a generator a on a word is sum_j x1..[x_j, a]..xm.
    """
    if n < 1 or m < 1:
        raise ValueError("n, m >= 1 required")
    A = dualize(matrix_coalgebra(n))
    N = A.dim
    brackets = {(x, a): A.commutator({x: 1}, {a: 1}) for x in range(N) for a in range(N)}
    vectors = []
    for w in words(N, m):
        for a in range(N):
            v: dict = {}
            for j, x in enumerate(w):
                for y, c in brackets[(x, a)].items():
                    bump(v, word_index(w[:j] + (y,) + w[j + 1:], N), c)
            if v:
                vectors.append(v)
    return N**m - rank_of_vectors(vectors)


def bar_invariants_dim(n: int, m: int) -> int:
    """dim of the gl_n^c(k)-invariants of (M_n^c(k))^{(x)m} under the diagonal coaction."""
    if n < 1 or m < 1:
        raise ValueError("n, m >= 1 required")
    return invariants(diagonal_coaction(gl_coalgebra(n, trivial_coalgebra()), m)).dim


# ---------------------------------------------------------------- words times permutations


def _relabel(word: tuple, sigma: Permutation, pi: Permutation):
    """Transport (c, s) along a relabelling of positions: c'_j = c_{pi(j)}, s' = pi^-1 s pi."""
    pinv = pi.inverse()
    s2 = Permutation(tuple(pinv(sigma(pi(j))) for j in range(1, sigma.n + 1)))
    return pi.act(word), s2


def canonical_form(word: tuple, sigma: Permutation):
    """Least relabelling of (c, s); two pairs share it iff they are relabellings of each other."""
    return min((_relabel(word, sigma, pi) for pi in all_permutations(sigma.n)),
               key=lambda ws: (ws[0], ws[1].images))


def stable_subsets(sigma: Permutation) -> list:
    """All P of {1..m} with s(P) = P (unions of cycles), including the empty set and everything."""
    cycles = []
    seen = set()
    for i in range(1, sigma.n + 1):
        if i not in seen:
            cyc, j = [], i
            while j not in seen:
                seen.add(j)
                cyc.append(j)
                j = sigma(j)
            cycles.append(cyc)
    out = []
    for r in range(len(cycles) + 1):
        for pick in itertools.combinations(cycles, r):
            out.append(tuple(sorted(x for cyc in pick for x in cyc)))
    return sorted(out, key=lambda P: (len(P), P))


def restrict(word: tuple, sigma: Permutation, P: tuple):
    """(c^P, s^P) with s^P reindexed along the increasing enumeration of P."""
    pos = {p: i for i, p in enumerate(P, 1)}
    return tuple(word[p - 1] for p in P), Permutation(tuple(pos[sigma(p)] for p in P))


@dataclass
class SigmaAdElement:
    """A rational combination of pairs (word of length m, permutation in S_m)."""

    m: int
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for (w, s), c in self.terms.items():
            if len(w) != self.m or s.n != self.m:
                raise ValueError("word length and permutation degree must both equal m")
            if c:
                clean[(tuple(w), s)] = Fraction(c)
        self.terms = clean

    @classmethod
    def basis(cls, word, sigma: Permutation, coef=1) -> "SigmaAdElement":
        return cls(len(word), {(tuple(word), sigma): coef})

    @classmethod
    def unit(cls) -> "SigmaAdElement":
        return cls.basis((), Permutation(()))

    def __add__(self, other):
        if self.m != other.m:
            raise ValueError("degree mismatch")
        out = dict(self.terms)
        for k, c in other.terms.items():
            bump(out, k, c)
        return SigmaAdElement(self.m, out)

    def scale(self, a) -> "SigmaAdElement":
        return SigmaAdElement(self.m, {k: a * c for k, c in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, SigmaAdElement) and self.m == other.m and self.terms == other.terms

    def canonical(self) -> dict:
        """Image in the quotient by relabellings (unsigned coinvariants)."""
        out: dict = {}
        for (w, s), c in self.terms.items():
            bump(out, canonical_form(w, s), c)
        return out


def sigma_ad_product(a: SigmaAdElement, b: SigmaAdElement) -> SigmaAdElement:
    """(c, s) . (d, t) = (c d, s (+) t), extended bilinearly."""
    out: dict = {}
    for (u, s), x in a.terms.items():
        for (v, t), y in b.terms.items():
            bump(out, (u + v, direct_sum(s, t)), x * y)
    return SigmaAdElement(a.m + b.m, out)


def sigma_ad_coproduct(a: SigmaAdElement) -> dict:
    """Sum over s-stable P with complement Q of (c^P, s^P) (x) (c^Q, s^Q)."""
    out: dict = {}
    for (w, s), c in a.terms.items():
        full = tuple(range(1, a.m + 1))
        for P in stable_subsets(s):
            Q = tuple(i for i in full if i not in P)
            bump(out, (restrict(w, s, P), restrict(w, s, Q)), c)
    return out


def _pair_product(x: dict, y: dict) -> dict:
    out: dict = {}
    for ((u1, s1), (v1, t1)), a in x.items():
        for ((u2, s2), (v2, t2)), b in y.items():
            bump(out, ((u1 + u2, direct_sum(s1, s2)), (v1 + v2, direct_sum(t1, t2))), a * b)
    return out


def _canonical_pairs(x: dict) -> dict:
    out: dict = {}
    for (left, right), c in x.items():
        bump(out, (canonical_form(*left), canonical_form(*right)), c)
    return out


def is_primitive(a: SigmaAdElement) -> bool:
    """Delta(a) = 1 (x) a + a (x) 1."""
    unit = ((), Permutation(()))
    expected: dict = {}
    for (w, s), c in a.terms.items():
        bump(expected, (unit, (w, s)), c)
        bump(expected, ((w, s), unit), c)
    return sigma_ad_coproduct(a) == expected


def sigma_ad_check(d: int = 2, max_m: int = 4, seed: int = 0) -> Report:
    """Hopf-structure samples on words over a d-letter alphabet.

    Long cycles must be primitive.  Random samples test associativity of the
    product and the coproduct laws; equivariance is only expected after
    passing to the quotient by relabellings.
    """
    rng = random.Random(seed)
    rep = Report(f"words (x) permutations, alphabet {d}")
    for m in range(1, max_m + 1):
        ok = all(is_primitive(SigmaAdElement.basis(w, s))
                 for s in sorted(long_cycle_class(m)) for w in words(d, m))
        rep.add("long cycles are primitive", m, ok)

    def sample(m):
        return SigmaAdElement.basis(tuple(rng.randrange(d) for _ in range(m)),
                                    rng.choice(list(all_permutations(m))), rng.randint(1, 3))

    for _ in range(6):
        p, q, r = (rng.randint(0, 2) for _ in range(3))
        a, b, c = sample(p), sample(q), sample(r)
        lhs = sigma_ad_product(sigma_ad_product(a, b), c)
        rhs = sigma_ad_product(a, sigma_ad_product(b, c))
        rep.add("product associative", (p, q, r), lhs == rhs)
        rep.add("coproduct multiplicative", (p, q),
                sigma_ad_coproduct(sigma_ad_product(a, b))
                == _pair_product(sigma_ad_coproduct(a), sigma_ad_coproduct(b)))
    for m in range(1, max_m + 1):
        coassoc = cocomm = equiv = True
        for _ in range(4):
            x = sample(m)
            D = sigma_ad_coproduct(x)
            cocomm &= D == {(r, l): c for (l, r), c in D.items()}
            left: dict = {}
            right: dict = {}
            for (l, r), c in D.items():
                for (ll, lr), c2 in sigma_ad_coproduct(SigmaAdElement.basis(*l)).items():
                    bump(left, (ll, lr, r), c * c2)
                for (rl, rr), c2 in sigma_ad_coproduct(SigmaAdElement.basis(*r)).items():
                    bump(right, (l, rl, rr), c * c2)
            coassoc &= left == right
            (w, s), c = next(iter(x.terms.items()))
            pi = rng.choice(list(all_permutations(m)))
            moved = SigmaAdElement.basis(*_relabel(w, s, pi), c)
            equiv &= _canonical_pairs(D) == _canonical_pairs(sigma_ad_coproduct(moved))
        rep.add("coproduct coassociative", m, coassoc)
        rep.add("coproduct cocommutative", m, cocomm)
        rep.add("coproduct equivariant modulo relabelling", m, equiv)
    return rep


# ---------------------------------------------------------------- primitives and Lambda


def primitives_dim(C: Coalgebra, m: int) -> int:
    """dim of C^{(x)m} coinvariants under tau acting with sign (-1)^{m-1}.

    Each rotation orbit of words contributes one dimension when the sign
    character is trivial on its stabilizer, generated by tau^p with p the
    minimal period of the word.
    """
    if m < 1:
        raise ValueError("m >= 1 required")
    count, seen = 0, set()
    for w in words(C.dim, m):
        if w in seen:
            continue
        orbit = {w[j:] + w[:j] for j in range(m)}
        seen |= orbit
        period = len(orbit)
        if ((m - 1) * period) % 2 == 0:
            count += 1
    return count


def free_graded_commutative_dims(g: GradedDims, max_degree: int) -> GradedDims:
    """Coefficients of prod_{odd m} (1 + t^m)^{g_m} prod_{even m} (1 - t^m)^{-g_m}."""
    if g[0]:
        raise ValueError("degree-0 generators are not allowed")
    if any(v and m < 0 for m, v in g.as_dict().items()):
        raise ValueError("negative-degree generators are not allowed")
    series = [1] + [0] * max_degree
    for m, count in g.as_dict().items():
        if m < 1 or m > max_degree:
            continue
        for _ in range(count):
            if m % 2:
                series = [series[i] + (series[i - m] if i >= m else 0) for i in range(max_degree + 1)]
            else:
                for i in range(m, max_degree + 1):
                    series[i] += series[i - m]
    return GradedDims(0, tuple(series))


@dataclass
class StableRangeReport:
    coalgebra: str
    n: int
    max_degree: int
    lie_homology_dims: GradedDims
    cyclic_homology_dims: GradedDims
    expected_dims: GradedDims
    rows: list  # (degree, lie, expected, stable, agree)

    @property
    def passed(self) -> bool:
        return all(agree for _, _, _, stable, agree in self.rows if stable)

    def to_dict(self) -> dict:
        return {
            "coalgebra": self.coalgebra,
            "n": self.n,
            "max_degree": self.max_degree,
            "lie_homology": list(self.lie_homology_dims.values),
            "cyclic_homology_shifted": self.cyclic_homology_dims.as_dict(),
            "expected": list(self.expected_dims.values),
            "rows": [{"degree": m, "lie": a, "expected": b, "stable": s, "agree": ok}
                     for m, a, b, s, ok in self.rows],
            "passed": self.passed,
        }


def lqt_check(C: Coalgebra, n: int, max_degree: int) -> StableRangeReport:
    """Compare H_* CE^sym(gl_n^c(C)) with the free graded-commutative algebra on HC_*(C)[+1]."""
    if max_degree < 1:
        raise ValueError("max_degree >= 1 required")
    if not C.counital:
        raise ValueError("the LQT comparison needs a counital coalgebra")
    lie = homology(build_sym_ce(matrix_over(n, C), max_degree + 1))
    hc = homology(build_cyclic(C, max_degree + 1))
    expected = free_graded_commutative_dims(hc, max_degree)
    rows = []
    for m in range(0, max_degree + 1):
        a, b = lie[m], expected[m]
        rows.append((m, a, b, m <= n, a == b))
    return StableRangeReport(C.name, n, max_degree, lie, hc, expected, rows)


def weyl_check(n: int, max_m: int) -> Report:
    """weyl_coinvariants_dim = bar_invariants_dim always, and = m! when m <= n."""
    rep = Report(f"Weyl dimensions for n = {n}")
    for m in range(1, max_m + 1):
        w, b = weyl_coinvariants_dim(n, m), bar_invariants_dim(n, m)
        rep.add(f"coinvariants {w} = invariants {b}", m, w == b, f"{w} vs {b}")
        if m <= n:
            rep.add(f"coinvariants {w} = m! = {math.factorial(m)}", m, w == math.factorial(m))
        else:
            rep.notes.append(f"m = {m} > n: {w} (m! = {math.factorial(m)}), outside the stable range")
    return rep


def primitives_check(C: Coalgebra, max_m: int) -> Report:
    rep = Report(f"primitives vs cyclic complex on {C.name}")
    X = build_cyclic(C, max_m)
    for m in range(1, max_m + 1):
        p = primitives_dim(C, m)
        rep.add("primitives_dim = dim im N_m", m, p == X.dim(m), f"{p} vs {X.dim(m)}")
    return rep


__all__ = [
    "weyl_coinvariants_dim", "bar_invariants_dim", "SigmaAdElement", "sigma_ad_product",
    "sigma_ad_coproduct", "stable_subsets", "restrict", "canonical_form", "is_primitive",
    "sigma_ad_check", "primitives_dim", "free_graded_commutative_dims", "StableRangeReport",
    "lqt_check", "weyl_check", "primitives_check",
]
