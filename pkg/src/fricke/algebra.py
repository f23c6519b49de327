"""Complex 2x2 matrix algebra for SL(2,C) computations.

Matrices are plain 2x2 complex numpy arrays with determinant 1 (up to
``TOL_ALG``).  Group words are sequences of ``(generator_index, exponent)``
pairs with exponent +1 or -1, evaluated right-to-left: the last letter of
the word acts first, so ``evaluate_word([(0,1),(1,1)], [A,B]) == A @ B``
is the matrix of "first do B's loop, then A's".
"""

from __future__ import annotations

import numpy as np

TOL_ALG = 1e-9

IDENTITY = np.eye(2, dtype=complex)


class AlgebraError(ValueError):
    pass


class IndexOutOfAlphabet(AlgebraError):
    """A group word refers to a generator index outside the alphabet."""


def make(a, b, c, d):
    """Build a 2x2 complex matrix from its row-major entries."""
    return np.array([[a, b], [c, d]], dtype=complex)


def det(m):
    return m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]


def trace(m):
    return m[0, 0] + m[1, 1]


def inverse(m):
    """Inverse of a unimodular matrix via the adjugate (exact for det=1)."""
    return np.array([[m[1, 1], -m[0, 1]], [-m[1, 0], m[0, 0]]], dtype=complex)


def norm_inf(m):
    """Max-abs entry norm; cheap and basis-stable at 2x2."""
    return float(np.max(np.abs(m)))


def is_unimodular(m, tol=TOL_ALG):
    return abs(det(m) - 1.0) <= tol


def normalize(m):
    """Rescale so det = 1; raises if the determinant vanishes."""
    d = det(m)
    if abs(d) < 1e-30:
        raise AlgebraError("matrix is singular, cannot normalize to SL(2,C)")
    return np.asarray(m, dtype=complex) / np.sqrt(d)


def multiply(a, b):
    return a @ b


def power(m, n):
    if n < 0:
        return power(inverse(m), -n)
    out = IDENTITY.copy()
    base = m
    while n:
        if n & 1:
            out = out @ base
        base = base @ base
        n >>= 1
    return out


def order_of(m, max_order=64, tol=TOL_ALG):
    """Smallest n <= max_order with m^n = Id (entrywise within tol), else None."""
    if max_order < 1:
        raise AlgebraError("max_order must be >= 1")
    acc = m
    for n in range(1, max_order + 1):
        if norm_inf(acc - IDENTITY) <= tol:
            return n
        acc = acc @ m
    return None


def evaluate_word(word, alphabet):
    """Product of word letters over the alphabet, rightmost letter first.

    ``word`` is iterated left to right and multiplied on the right, so the
    returned matrix is letters[0] @ letters[1] @ ... which composes loops
    right-to-left.
    """
    out = IDENTITY.copy()
    for idx, exp in word:
        if not 0 <= idx < len(alphabet):
            raise IndexOutOfAlphabet(f"generator index {idx} not in alphabet of size {len(alphabet)}")
        g = alphabet[idx]
        out = out @ (g if exp == 1 else inverse(g))
    return out


def classify(m, tol=TOL_ALG):
    """Conjugacy type of a unimodular matrix.

    Returns one of 'central', 'elliptic', 'parabolic', 'hyperbolic',
    'loxodromic'.  Central means +-Id; the rest follow the trace:
    real in (-2,2) elliptic, +-2 parabolic, real with |tr|>2 hyperbolic,
    non-real loxodromic.
    """
    if norm_inf(m - IDENTITY) <= tol or norm_inf(m + IDENTITY) <= tol:
        return "central"
    t = trace(m)
    if abs(t.imag) <= tol:
        tr = t.real
        if abs(abs(tr) - 2.0) <= tol:
            return "parabolic"
        if abs(tr) < 2.0:
            return "elliptic"
        return "hyperbolic"
    return "loxodromic"


def commutator(a, b):
    """b^-1 a^-1 b a, the monodromy of a commutator loop (a's loop first)."""
    return inverse(b) @ inverse(a) @ b @ a


def to_json_entries(m):
    """Row-major [[re,im],...] encoding used by the CLI."""
    return [[float(np.real(x)), float(np.imag(x))] for x in np.asarray(m).reshape(-1)]


def from_json_entries(entries):
    if len(entries) != 4:
        raise AlgebraError("matrix JSON must have 4 [re,im] pairs")
    vals = [complex(re, im) for re, im in entries]
    return make(*vals)
