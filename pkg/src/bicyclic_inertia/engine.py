"""Exact inertia of rational symmetric matrices.

Two routes that share nothing but the matrix type:

* :func:`congruence_inertia` diagonalises by symmetric row/column operations
  (Sylvester's law of inertia keeps the signs invariant);
* :func:`descartes_inertia` reads the signs off the characteristic polynomial.
  Every root of a real symmetric matrix's characteristic polynomial is real,
  so Descartes' rule of signs counts positive roots exactly.
"""
from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction
from typing import Union

from .graph import Inertia, SymmetricMatrix, to_fraction

MatrixLike = Union[SymmetricMatrix, Sequence[Sequence]]


def as_symmetric(m: MatrixLike) -> SymmetricMatrix:
    if isinstance(m, SymmetricMatrix):
        return m
    return SymmetricMatrix.from_rows(m)


def congruence_inertia(m: MatrixLike) -> Inertia:
    """Inertia by congruence elimination.

    Pivot on the first nonzero diagonal entry; when the diagonal vanishes but
    ``a[i][j] != 0`` for the lexicographically first ``i < j``, adding row and
    column ``j`` to ``i`` puts ``2 a[i][j]`` on the diagonal.
    """
    m = as_symmetric(m)
    a = m.rows()
    active = list(range(m.order))
    pos = neg = 0
    while active:
        piv = next((i for i in active if a[i][i] != 0), None)
        if piv is None:
            pair = next(((i, j) for x, i in enumerate(active) for j in active[x + 1:] if a[i][j] != 0), None)
            if pair is None:
                break
            i, j = pair
            for k in active:
                a[i][k] += a[j][k]
            for k in active:
                a[k][i] += a[k][j]
            piv = i
        d = a[piv][piv]
        if d > 0:
            pos += 1
        else:
            neg += 1
        active.remove(piv)
        row = a[piv]
        for j in active:
            f = row[j]
            if f == 0:
                continue
            f = f / d
            aj = a[j]
            for k in active:
                if row[k]:
                    aj[k] -= f * row[k]
    return Inertia(pos, neg, m.order - pos - neg)


def char_poly(m: MatrixLike) -> list[Fraction]:
    """Coefficients of ``det(xI - m)``, highest degree first (Faddeev-LeVerrier)."""
    if isinstance(m, SymmetricMatrix):
        a = m.entries
    else:
        a = [[to_fraction(x) for x in row] for row in m]
        if any(len(row) != len(a) for row in a):
            raise ValueError("square matrix required")
    n = len(a)
    coeffs = [Fraction(1)]
    # M_k = A M_{k-1} + c_{n-k+1} I ;  c_{n-k} = -tr(A M_k) / k
    am = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        for i in range(n):
            am[i][i] += coeffs[-1]
        am = _matmul(a, am)
        coeffs.append(-sum(am[i][i] for i in range(n)) / k)
    return coeffs


def _matmul(a, b) -> list[list[Fraction]]:
    n = len(a)
    cols = list(zip(*b)) if n else []
    return [[sum((x * y for x, y in zip(row, col) if x and y), Fraction(0)) for col in cols] for row in a]


def sign_variations(coeffs: Sequence[Fraction]) -> int:
    signs = [c > 0 for c in coeffs if c != 0]
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def descartes_inertia(m: MatrixLike) -> Inertia:
    m = as_symmetric(m)
    p = char_poly(m)
    n = m.order
    zero = 0
    while zero < n and p[n - zero] == 0:
        zero += 1
    trimmed = p[: n + 1 - zero]
    pos = sign_variations(trimmed)
    return Inertia(pos, n - pos - zero, zero)
