"""Symmetric bilinear forms and the predicates built from them.

Throughout, ``a_U`` stands for ``U.U`` and ``b_UV`` for ``U.V`` under the
fixed form.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import (
    AsymmetricForm,
    CoincidentPoints,
    DependentInput,
    DimensionMismatch,
    NullCarrier,
    NullCommonPoint,
    ZeroVector,
)
from .fields import QQ, Field
from .linalg import Vec, determinant, is_zero, rank, vscale, vsub

__all__ = [
    "QForm",
    "form_eval",
    "is_null_vector",
    "is_null_line",
    "project_onto_line",
    "planes_perpendicular",
    "perp_residue",
    "rank",
    "gram_matrix",
    "gram_determinant",
]


class QForm:
    """A symmetric n x n matrix over ``field``; degenerate forms are allowed."""

    __slots__ = ("matrix", "field", "dim")

    def __init__(self, matrix: Sequence[Sequence], field: Field = QQ):
        rows = [[field(x) for x in row] for row in matrix]
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise DimensionMismatch("form matrix must be square and non-empty")
        for i in range(n):
            for j in range(i + 1, n):
                if rows[i][j] != rows[j][i]:
                    raise AsymmetricForm(f"form entry ({i},{j}) differs from ({j},{i})")
        self.matrix = tuple(tuple(r) for r in rows)
        self.field = field
        self.dim = n

    @classmethod
    def diagonal(cls, entries: Iterable, field: Field = QQ) -> "QForm":
        entries = list(entries)
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)], field)

    @classmethod
    def identity(cls, n: int, field: Field = QQ) -> "QForm":
        return cls.diagonal([1] * n, field)

    def vec(self, coords: Iterable) -> Vec:
        v = tuple(self.field(c) for c in coords)
        if len(v) != self.dim:
            raise DimensionMismatch(f"expected {self.dim} coordinates, got {len(v)}")
        return v

    def dot(self, U: Sequence, V: Sequence):
        n = self.dim
        if len(U) != n or len(V) != n:
            raise DimensionMismatch(
                f"vectors of length {len(U)} and {len(V)} against a {n}-dimensional form"
            )
        M = self.matrix
        total = self.field.zero
        for i in range(n):
            ui = U[i]
            if ui == 0:
                continue
            row = M[i]
            s = self.field.zero
            for j in range(n):
                if row[j] != 0:
                    s = s + row[j] * V[j]
            total = total + ui * s
        return total

    def a(self, U):
        return self.dot(U, U)

    def is_hyperbolic_plane_form(self) -> bool:
        """True for the 3-D form x1x2 + y1y2 - z1z2."""
        return self.dim == 3 and self.matrix == QForm.diagonal([1, 1, -1], self.field).matrix

    def determinant(self):
        return determinant(self.matrix)

    def __eq__(self, other):
        return isinstance(other, QForm) and self.field == other.field and self.matrix == other.matrix

    def __hash__(self):
        return hash((self.field, self.matrix))

    def __repr__(self):
        rows = "; ".join(" ".join(self.field.format(x) for x in r) for r in self.matrix)
        return f"QForm([{rows}] over {self.field!r})"


def form_eval(form: QForm, U, V):
    return form.dot(U, V)


def is_null_vector(form: QForm, U) -> bool:
    if is_zero(U):
        raise ZeroVector("nullity of the zero vector is not asked about")
    return form.dot(U, U) == 0


def is_null_line(form: QForm, U, V) -> bool:
    D = vsub(V, U)
    if is_zero(D):
        raise CoincidentPoints("a line needs two distinct points")
    return form.dot(D, D) == 0


def project_onto_line(form: QForm, U, V) -> Vec:
    """Projection of U onto the line [V]: ((U.V)/(V.V)) V."""
    aV = form.dot(V, V)
    if aV == 0:
        raise NullCarrier("cannot project onto a null line")
    return vscale(form.dot(U, V) / aV, V)


def perp_residue(form: QForm, U, V, W):
    """a_W b_UV - b_UW b_VW; zero exactly when planes [U,W] and [V,W] are perpendicular."""
    return form.dot(W, W) * form.dot(U, V) - form.dot(U, W) * form.dot(V, W)


def planes_perpendicular(form: QForm, U, V, W) -> bool:
    if form.dot(W, W) == 0:
        raise NullCommonPoint("the common vector W is null")
    for X, Y in ((U, V), (U, W), (V, W)):
        if rank([X, Y]) < 2:
            raise DependentInput("U, V, W must be pairwise independent")
    return perp_residue(form, U, V, W) == 0


def gram_matrix(form: QForm, vectors: Sequence):
    return [[form.dot(X, Y) for Y in vectors] for X in vectors]


def gram_determinant(form: QForm, vectors: Sequence):
    """Determinant of the 4 x 4 matrix of a's and b's of four vectors."""
    if len(vectors) != 4:
        raise DimensionMismatch(f"expected four vectors, got {len(vectors)}")
    return determinant(gram_matrix(form, vectors))
