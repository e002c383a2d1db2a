"""Sparse tensors over a fixed basis and the lexicographic word layout.

A sparse tensor is a dict ``{word: Fraction}`` where a word is a tuple of
basis indices.  Degree-m basis words are enumerated lexicographically, so the
index of a word is its value as a base-``d`` numeral.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Callable, Iterable, Mapping

from .linalg import SparseMatrix, axpy

Tensor = dict  # word tuple -> Fraction


def words(d: int, m: int) -> list:
    return list(itertools.product(range(d), repeat=m))


def increasing_words(d: int, m: int) -> list:
    return list(itertools.combinations(range(d), m))


def word_index(word: tuple, d: int) -> int:
    i = 0
    for x in word:
        i = i * d + x
    return i


def add(*tensors: Mapping) -> Tensor:
    out: Tensor = {}
    for t in tensors:
        axpy(out, 1, t)
    return out


def scale(a, t: Mapping) -> Tensor:
    a = Fraction(a)
    return {w: a * c for w, c in t.items()} if a else {}


def concat(a: Mapping, b: Mapping) -> Tensor:
    """The tensor product of two sparse tensors (word concatenation)."""
    out: Tensor = {}
    for u, x in a.items():
        for v, y in b.items():
            out[u + v] = x * y
    return out


def linear_extend(f: Callable[[tuple], Mapping], t: Mapping) -> Tensor:
    out: Tensor = {}
    for w, c in t.items():
        axpy(out, c, f(w))
    return out


def sort_sign(word: tuple):
    """(sign, sorted word) for a word of distinct letters, or (0, None)."""
    if len(set(word)) != len(word):
        return 0, None
    inversions = sum(1 for i in range(len(word)) for j in range(i + 1, len(word)) if word[i] > word[j])
    return (-1 if inversions % 2 else 1), tuple(sorted(word))


def to_vector(t: Mapping, d: int) -> dict:
    return {word_index(w, d): c for w, c in t.items()}


def from_vector(v: Mapping, d: int, m: int) -> Tensor:
    out = {}
    for i, c in v.items():
        w = []
        for _ in range(m):
            i, r = divmod(i, d)
            w.append(r)
        out[tuple(reversed(w))] = c
    return out


def matrix_of(f: Callable[[tuple], Mapping], d: int, m_src: int, m_tgt: int,
              domain: Iterable[tuple] | None = None) -> SparseMatrix:
    """Matrix of a word-level linear map C^{(x)m_src} -> C^{(x)m_tgt}."""
    domain = words(d, m_src) if domain is None else list(domain)
    cols = [to_vector(f(w), d) for w in domain]
    return SparseMatrix.from_columns(d**m_tgt, cols)
