"""Affine rational trigonometry in n dimensions.

Labels follow the usual convention: for a triangle UVW the quadrance
opposite a vertex carries that vertex's name, so Q_W = Q(U, V),
Q_U = Q(V, W), Q_V = Q(U, W), and s_U is the spread at U between UV and UW.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Optional

from .bilinear import QForm
from .errors import CoincidentPoints, CollinearPoints, NullLine, SingularCenterSystem, UndefinedSpread
from .fields import require_exact
from .linalg import Vec, is_zero, rank, solve_square, vadd, vcomb, vscale, vsub


def quadrance(form: QForm, U, V):
    D = vsub(V, U)
    return form.dot(D, D)


def spread(form: QForm, line1, line2):
    """Spread between the lines through ``line1 = (U, W)`` and ``line2 = (V, Z)``."""
    U, W = line1
    V, Z = line2
    d1, d2 = vsub(W, U), vsub(Z, V)
    Q1, Q2 = form.dot(d1, d1), form.dot(d2, d2)
    if Q1 == 0 or Q2 == 0:
        raise NullLine("spread between null lines is undefined")
    b = form.dot(d1, d2)
    return 1 - b * b / (Q1 * Q2)


def is_perpendicular(form: QForm, line1, line2) -> bool:
    U, V = line1
    W, Z = line2
    return form.dot(vsub(V, U), vsub(Z, W)) == 0


@dataclass(frozen=True)
class AffineTriangle:
    form: QForm
    U: Vec
    V: Vec
    W: Vec

    def __post_init__(self):
        f = self.form
        for name in ("U", "V", "W"):
            object.__setattr__(self, name, f.vec(getattr(self, name)))
        if self.U == self.V or self.V == self.W or self.U == self.W:
            raise CoincidentPoints("triangle vertices must be distinct")
        if rank([vsub(self.V, self.U), vsub(self.W, self.U)]) < 2:
            raise CollinearPoints("triangle vertices are collinear")

    @property
    def points(self):
        return (self.U, self.V, self.W)

    def is_null(self) -> bool:
        f = self.form
        return any(quadrance(f, X, Y) == 0 for X, Y in ((self.U, self.V), (self.V, self.W), (self.U, self.W)))


@dataclass(frozen=True)
class TriangleMeasure:
    Q_U: object
    Q_V: object
    Q_W: object
    s_U: Optional[object] = None
    s_V: Optional[object] = None
    s_W: Optional[object] = None
    field: object = None
    collinear: bool = False

    @property
    def partial(self) -> bool:
        """True when some line is null and the spreads were left undefined."""
        return not self.collinear and self.s_U is None

    @property
    def D(self):
        """Common value Q/s of the Spread law; raises UndefinedSpread when no spread is non-zero."""
        if self.s_U is not None:
            for s, Q in ((self.s_U, self.Q_U), (self.s_V, self.Q_V), (self.s_W, self.Q_W)):
                if s != 0:
                    return Q / s
        raise UndefinedSpread("the Spread-law ratio D is undefined for this triangle")

    @property
    def spread_ratio(self):
        """Common value s/Q of the Spread law, when it is defined."""
        if self.s_U is None:
            return None
        for s, Q in ((self.s_U, self.Q_U), (self.s_V, self.Q_V), (self.s_W, self.Q_W)):
            if Q != 0:
                return s / Q
        return None

    def quadrances(self):
        return (self.Q_U, self.Q_V, self.Q_W)

    def spreads(self):
        return (self.s_U, self.s_V, self.s_W)


def measure_points(form: QForm, U, V, W) -> TriangleMeasure:
    """Quadrances of any three points plus spreads when they form a non-null triangle."""
    U, V, W = form.vec(U), form.vec(V), form.vec(W)
    Q_W = quadrance(form, U, V)
    Q_U = quadrance(form, V, W)
    Q_V = quadrance(form, U, W)
    if rank([vsub(V, U), vsub(W, U)]) < 2:
        return TriangleMeasure(Q_U, Q_V, Q_W, field=form.field, collinear=True)
    if Q_U == 0 or Q_V == 0 or Q_W == 0:
        return TriangleMeasure(Q_U, Q_V, Q_W, field=form.field)
    s_U = spread(form, (U, V), (U, W))
    s_V = spread(form, (V, W), (V, U))
    s_W = spread(form, (W, U), (W, V))
    return TriangleMeasure(Q_U, Q_V, Q_W, s_U, s_V, s_W, field=form.field)


def triangle_measure(T: AffineTriangle) -> TriangleMeasure:
    return measure_points(T.form, T.U, T.V, T.W)


def triple_quad_residual(Q1, Q2, Q3):
    return (Q1 + Q2 + Q3) ** 2 - 2 * (Q1 * Q1 + Q2 * Q2 + Q3 * Q3)


def triple_spread_residual(s1, s2, s3):
    return (s1 + s2 + s3) ** 2 - 2 * (s1 * s1 + s2 * s2 + s3 * s3) - 4 * s1 * s2 * s3


def cross_residual(Q_a, Q_b, Q_c, s_c):
    """(Q_a + Q_b - Q_c)^2 - 4 Q_a Q_b (1 - s_c)."""
    return (Q_a + Q_b - Q_c) ** 2 - 4 * Q_a * Q_b * (1 - s_c)


def law_residuals(m: TriangleMeasure) -> Dict[str, object]:
    """Exact residuals of every affine law that applies to ``m``.

    Each value is zero on valid input. Collinear triples only get the
    triple quad residual; partial (null-line) measures get none beyond it.
    """
    if m.field is not None:
        require_exact(m.field, "law verification")
    Q_U, Q_V, Q_W = m.Q_U, m.Q_V, m.Q_W
    out: Dict[str, object] = {}
    if m.collinear:
        out["triple_quad"] = triple_quad_residual(Q_U, Q_V, Q_W)
        return out
    if m.s_U is None:
        return out
    s_U, s_V, s_W = m.s_U, m.s_V, m.s_W
    out["spread_law_UV"] = s_U * Q_V - s_V * Q_U
    out["spread_law_VW"] = s_V * Q_W - s_W * Q_V
    out["spread_law_UW"] = s_U * Q_W - s_W * Q_U
    out["cross_U"] = cross_residual(Q_V, Q_W, Q_U, s_U)
    out["cross_V"] = cross_residual(Q_U, Q_W, Q_V, s_V)
    out["cross_W"] = cross_residual(Q_U, Q_V, Q_W, s_W)
    out["triple_spread"] = triple_spread_residual(s_U, s_V, s_W)
    # right-angle specialisations
    for vertex, s, Q_hyp, legs, others in (
        ("U", s_U, Q_U, (Q_V, Q_W), (("V", s_V, Q_V), ("W", s_W, Q_W))),
        ("V", s_V, Q_V, (Q_U, Q_W), (("U", s_U, Q_U), ("W", s_W, Q_W))),
        ("W", s_W, Q_W, (Q_U, Q_V), (("U", s_U, Q_U), ("V", s_V, Q_V))),
    ):
        if s == 1:
            out[f"pythagoras_{vertex}"] = legs[0] + legs[1] - Q_hyp
            for name, s_o, Q_o in others:
                out[f"thales_{vertex}_{name}"] = s_o * Q_hyp - Q_o
            out[f"complementary_{vertex}"] = others[0][1] + others[1][1] - 1
    return out


@dataclass(frozen=True)
class TriangleCenters:
    C: Vec
    K: object
    O: Vec
    G: Vec
    N: Vec
    euler_collinear: bool


def _plane_point(U, e1, e2, alpha, beta):
    return vadd(U, vcomb((alpha, e1), (beta, e2)))


def circumcenter(T: AffineTriangle):
    """Point C in the plane UVW with Q(C,U) = Q(C,V) = Q(C,W), and K = Q(C,U)."""
    f = T.form
    e1, e2 = vsub(T.V, T.U), vsub(T.W, T.U)
    g11, g12, g22 = f.dot(e1, e1), f.dot(e1, e2), f.dot(e2, e2)
    sol = solve_square([[g11, g12], [g12, g22]], [g11 / 2, g22 / 2])
    if sol is None:
        raise SingularCenterSystem("circumcenter system is singular")
    C = _plane_point(T.U, e1, e2, *sol)
    return C, quadrance(f, C, T.U)


def orthocenter(T: AffineTriangle) -> Vec:
    """Point O in the plane UVW with (O-U).(W-V) = 0 and (O-V).(W-U) = 0."""
    f = T.form
    e1, e2 = vsub(T.V, T.U), vsub(T.W, T.U)
    g11, g12, g22 = f.dot(e1, e1), f.dot(e1, e2), f.dot(e2, e2)
    sol = solve_square([[g12 - g11, g22 - g12], [g12, g22]], [g12 - g12, g12])
    if sol is None:
        raise SingularCenterSystem("orthocenter system is singular")
    return _plane_point(T.U, e1, e2, *sol)


def centroid(T: AffineTriangle) -> Vec:
    if T.form.field.characteristic == 3:
        raise SingularCenterSystem("centroid needs division by 3")
    third = T.form.field(1) / 3
    return vscale(third, vadd(vadd(T.U, T.V), T.W))


def triangle_centers(T: AffineTriangle) -> TriangleCenters:
    C, K = circumcenter(T)
    O = orthocenter(T)
    G = centroid(T)
    half = T.form.field(1) / 2
    N = vscale(half, vadd(C, O))
    d1, d2 = vsub(O, C), vsub(G, C)
    collinear = is_zero(d1) or is_zero(d2) or rank([d1, d2]) <= 1
    return TriangleCenters(C=C, K=K, O=O, G=G, N=N, euler_collinear=collinear)


def euler_residuals(T: AffineTriangle, c: TriangleCenters) -> Dict[str, Vec]:
    """G - (2C + O)/3 and N - (C + O)/2; both are zero vectors."""
    f = T.form.field
    third, half = f(1) / 3, f(1) / 2
    return {
        "G_on_euler": vsub(c.G, vcomb((2 * third, c.C), (third, c.O))),
        "N_midpoint": vsub(c.N, vcomb((half, c.C), (half, c.O))),
    }


def cross_law_sides(m: TriangleMeasure):
    """Both sides of the Cross law at W: (Q_U + Q_V - Q_W)^2 and 4 Q_U Q_V (1 - s_W)."""
    return (m.Q_U + m.Q_V - m.Q_W) ** 2, 4 * m.Q_U * m.Q_V * (1 - m.s_W)


def triple_spread_sides(m: TriangleMeasure):
    """Both sides of the Triple spread formula for the three spreads of ``m``."""
    a, b, c = m.s_U, m.s_V, m.s_W
    return (a + b + c) ** 2, 2 * (a * a + b * b + c * c) + 4 * a * b * c
