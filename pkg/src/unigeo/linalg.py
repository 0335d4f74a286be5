"""Exact linear algebra over any field whose scalars support ``+ - * /``.

Vectors are plain tuples of scalars. Nothing here compares against a
tolerance, so these routines are meant for exact fields.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence, Tuple

from .errors import DimensionMismatch

Vec = Tuple


def vadd(U, V) -> Vec:
    return tuple(a + b for a, b in zip(U, V))


def vsub(U, V) -> Vec:
    return tuple(a - b for a, b in zip(U, V))


def vscale(c, U) -> Vec:
    return tuple(c * a for a in U)


def vcomb(*terms) -> Vec:
    """Linear combination of ``(coefficient, vector)`` pairs."""
    out = None
    for c, U in terms:
        part = vscale(c, U)
        out = part if out is None else vadd(out, part)
    return out


def is_zero(U) -> bool:
    return all(a == 0 for a in U)


def cross3(U, V) -> Vec:
    if len(U) != 3 or len(V) != 3:
        raise DimensionMismatch("cross product needs 3-vectors")
    return (
        U[1] * V[2] - U[2] * V[1],
        U[2] * V[0] - U[0] * V[2],
        U[0] * V[1] - U[1] * V[0],
    )


def proportional(U, V) -> bool:
    """True when U and V span the same line (cross-multiplication test)."""
    n = len(U)
    if n != len(V):
        raise DimensionMismatch(f"lengths {n} and {len(V)} differ")
    return all(U[i] * V[j] == U[j] * V[i] for i in range(n) for j in range(i + 1, n))


def _check_rows(rows: Sequence[Sequence]) -> int:
    if not rows:
        raise ValueError("empty list of vectors")
    n = len(rows[0])
    for r in rows:
        if len(r) != n:
            raise DimensionMismatch("vectors of unequal length")
    return n


def rank(vectors: Sequence[Sequence]) -> int:
    """Rank of the span, by fraction-free elimination with first-nonzero pivots."""
    n = _check_rows(vectors)
    rows: List[list] = [list(v) for v in vectors]
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][col]
        for i in range(r + 1, len(rows)):
            f = rows[i][col]
            if f != 0:
                rows[i] = [p * x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r


def _exact_rows(matrix):
    # plain ints would fall into float division; lift them to Fraction
    return [[Fraction(x) if type(x) is int else x for x in r] for r in matrix]


def determinant(matrix: Sequence[Sequence]):
    """Determinant by Gaussian elimination; the matrix must be square."""
    n = _check_rows(matrix)
    if len(matrix) != n:
        raise DimensionMismatch("determinant of a non-square matrix")
    a = _exact_rows(matrix)
    det = 1
    for col in range(n):
        piv = next((i for i in range(col, n) if a[i][col] != 0), None)
        if piv is None:
            return a[col][col] * 0
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        p = a[col][col]
        det = det * p
        for i in range(col + 1, n):
            f = a[i][col] / p
            if f != 0:
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    return det


def rref(matrix: Sequence[Sequence]):
    """Reduced row echelon form; returns ``(rows, pivot_columns)``."""
    _check_rows(matrix)
    a = _exact_rows(matrix)
    m, n = len(a), len(a[0])
    pivots = []
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, m) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][col]
        a[r] = [x / p for x in a[r]]
        for i in range(m):
            if i != r and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(col)
        r += 1
        if r == m:
            break
    return a, pivots


def nullspace(matrix: Sequence[Sequence], zero, one) -> List[Vec]:
    """Basis of {x : matrix @ x = 0}; ``zero``/``one`` fix the scalar type."""
    a, pivots = rref(matrix)
    n = len(a[0])
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        x = [zero] * n
        x[f] = one
        for row, pc in zip(a, pivots):
            x[pc] = -row[f]
        basis.append(tuple(x))
    return basis


def solve_square(matrix: Sequence[Sequence], rhs: Sequence):
    """Unique solution of a square system, or None when it is singular."""
    n = len(matrix)
    aug = [list(r) + [b] for r, b in zip(matrix, rhs)]
    a, pivots = rref(aug)
    if pivots[:n] != list(range(n)) or len(pivots) != n:
        return None
    return tuple(a[i][n] for i in range(n))
