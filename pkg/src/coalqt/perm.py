"""Permutations, the group algebra Q[S_n], and their place action on tensor words.

Convention: a permutation ``s`` acts on a word by moving the content of slot
``s(i)`` into slot ``i``::

    (s . w)[i] = w[s(i)]

so the inverse rotation sends ``(c1, c2, ..., cn)`` to ``(c2, ..., cn, c1)``.
Products are defined so that the action is a left action,
``apply(g * h, t) == apply(g, apply(h, t))``; as functions this means
``(g * h)(i) == h(g(i))``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .linalg import axpy


@dataclass(frozen=True, order=True)
class Permutation:
    """A bijection of {1..n}; ``images[i-1] == s(i)``."""

    images: tuple

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation: {self.images}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, n: int, *cycles) -> "Permutation":
        img = list(range(1, n + 1))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                img[a - 1] = b
        return cls(tuple(img))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.n != other.n:
            raise ValueError("degree mismatch")
        return Permutation(tuple(other.images[s - 1] for s in self.images))

    def __pow__(self, k: int) -> "Permutation":
        base = self if k >= 0 else self.inverse()
        out = Permutation.identity(self.n)
        for _ in range(abs(k)):
            out = out * base
        return out

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, s in enumerate(self.images, 1):
            inv[s - 1] = i
        return Permutation(tuple(inv))

    def sign(self) -> int:
        seen = [False] * self.n
        parity = 0
        for i in range(self.n):
            if not seen[i]:
                j, length = i, 0
                while not seen[j]:
                    seen[j] = True
                    j = self.images[j] - 1
                    length += 1
                parity += length - 1
        return -1 if parity % 2 else 1

    def cycle_type(self) -> tuple:
        seen = set()
        lengths = []
        for i in range(1, self.n + 1):
            if i not in seen:
                j, length = i, 0
                while j not in seen:
                    seen.add(j)
                    j = self(j)
                    length += 1
                lengths.append(length)
        return tuple(sorted(lengths, reverse=True))

    def is_identity(self) -> bool:
        return self.images == tuple(range(1, self.n + 1))

    def act(self, word: tuple) -> tuple:
        if len(word) != self.n:
            raise ValueError(f"word length {len(word)} != permutation degree {self.n}")
        return tuple(word[s - 1] for s in self.images)

    def __repr__(self):
        return f"Permutation{self.images}"


def all_permutations(n: int):
    for p in itertools.permutations(range(1, n + 1)):
        yield Permutation(p)


def direct_sum(s: Permutation, t: Permutation) -> Permutation:
    """``s`` on {1..p} and ``t`` shifted onto {p+1..p+q}."""
    p = s.n
    return Permutation(s.images + tuple(x + p for x in t.images))


def cyclic(n: int) -> Permutation:
    """The generator tau_n: ``tau_n . (c1..cn) == (cn, c1, ..., c_{n-1})``."""
    if n < 1:
        raise ValueError("n >= 1 required")
    return Permutation(tuple(n if i == 1 else i - 1 for i in range(1, n + 1)))


def long_cycle_class(m: int) -> set:
    """All m-cycles in S_m (the conjugacy class of tau_m)."""
    return {s for s in all_permutations(m) if s.cycle_type() == (m,)}


def centralizer(s: Permutation) -> set:
    return {g for g in all_permutations(s.n) if g * s == s * g}


class GroupAlgebraElement:
    """Finite rational combination of permutations of a fixed degree."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping | None = None):
        self.n = n
        clean = {}
        for s, c in (terms or {}).items():
            if s.n != n:
                raise ValueError("mixed degrees in group algebra element")
            if c:
                clean[s] = Fraction(c)
        self.terms = clean

    @classmethod
    def of(cls, s: Permutation, coef=1) -> "GroupAlgebraElement":
        return cls(s.n, {s: coef})

    @classmethod
    def identity(cls, n: int) -> "GroupAlgebraElement":
        return cls.of(Permutation.identity(n))

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        axpy(out, 1, other.terms)
        return GroupAlgebraElement(self.n, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, a) -> "GroupAlgebraElement":
        return GroupAlgebraElement(self.n, {s: a * c for s, c in self.terms.items()})

    def __rmul__(self, a):
        return self.scale(a)

    def __mul__(self, other):
        if not isinstance(other, GroupAlgebraElement):
            return self.scale(other)
        self._check(other)
        out: dict = {}
        for s, a in self.terms.items():
            for t, b in other.terms.items():
                st = s * t
                v = out.get(st, 0) + a * b
                if v:
                    out[st] = v
                else:
                    out.pop(st, None)
        return GroupAlgebraElement(self.n, out)

    def __eq__(self, other):
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    __hash__ = None

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        parts = [f"{c}*{s.images}" for s, c in sorted(self.terms.items())]
        return f"GroupAlgebraElement(n={self.n}: " + " + ".join(parts) + ")"

    def _check(self, other):
        if self.n != other.n:
            raise ValueError("degree mismatch")

    def tensor(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        """The block element ``self (x) other`` in Q[S_{p+q}]."""
        out = {}
        for s, a in self.terms.items():
            for t, b in other.terms.items():
                out[direct_sum(s, t)] = a * b
        return GroupAlgebraElement(self.n + other.n, out)

    def antipode(self) -> "GroupAlgebraElement":
        """Linear extension of s -> s^{-1}."""
        return GroupAlgebraElement(self.n, {s.inverse(): c for s, c in self.terms.items()})

    def apply(self, tensor: Mapping) -> dict:
        """Linear place action on a sparse tensor ``{word: coef}``."""
        out: dict = {}
        for w, c in tensor.items():
            if len(w) != self.n:
                raise ValueError(f"word length {len(w)} != degree {self.n}")
            for s, a in self.terms.items():
                v = s.act(w)
                x = out.get(v, 0) + a * c
                if x:
                    out[v] = x
                else:
                    out.pop(v, None)
        return out


def _signed_sum(perms: Iterable[Permutation], n: int, invert=False) -> GroupAlgebraElement:
    terms = {}
    for s in perms:
        terms[s.inverse() if invert else s] = s.sign()
    return GroupAlgebraElement(n, terms)


def antisymmetrizer(n: int) -> GroupAlgebraElement:
    """epsilon_n = sum of sgn(s) s over S_n."""
    if n < 0:
        raise ValueError("n >= 0 required")
    return _signed_sum(all_permutations(n), n)


def norm(n: int) -> GroupAlgebraElement:
    """N_n = sum_j (-1)^{(n-1)j} tau_n^j."""
    if n < 1:
        raise ValueError("n >= 1 required")
    tau = cyclic(n)
    out = GroupAlgebraElement(n)
    for j in range(n):
        out = out + GroupAlgebraElement.of(tau**j, (-1) ** ((n - 1) * j))
    return out


def t_operator(n: int) -> GroupAlgebraElement:
    """t_n = id - (-1)^{n-1} tau_n^{-1}."""
    if n < 1:
        raise ValueError("n >= 1 required")
    return GroupAlgebraElement.identity(n) - GroupAlgebraElement.of(cyclic(n) ** -1, (-1) ** (n - 1))


def h_element(n: int) -> GroupAlgebraElement:
    """h_n = sum_{j<n} (-1)^{j+1} (id_j (x) tau_{n-j}^{-1}).

    Acting on a word this is x1..xn -> sum_j (-1)^j (x1..^xj..xn) xj, i.e. the
    bar-complex null-homotopy with its last slot read as the coacting factor.
    """
    if n < 1:
        raise ValueError("n >= 1 required")
    out = GroupAlgebraElement(n)
    for j in range(n):
        s = direct_sum(Permutation.identity(j), cyclic(n - j) ** -1)
        out = out + GroupAlgebraElement.of(s, (-1) ** (j + 1))
    return out


def shuffles(p: int, q: int) -> list:
    """(p,q)-shuffles: s(1)<...<s(p) and s(p+1)<...<s(p+q)."""
    out = []
    for first in itertools.combinations(range(1, p + q + 1), p):
        rest = tuple(i for i in range(1, p + q + 1) if i not in first)
        out.append(Permutation(first + rest))
    return out


def shuffle_sums(p: int, q: int):
    """Return (eps^{(p,q)}, eps_{(p,q)}): signed shuffle sums, the second over inverses."""
    if p < 0 or q < 0:
        raise ValueError("p, q >= 0 required")
    sh = shuffles(p, q)
    return _signed_sum(sh, p + q), _signed_sum(sh, p + q, invert=True)


def shuffle_count(p: int, q: int) -> int:
    return math.comb(p + q, p)
