"""Projective rational trigonometry.

A projective point is a 1-D subspace, held by any nonzero representative
vector; a projective line is a 2-D subspace held by two spanning vectors.
Every measurement here is independent of which representatives are used.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Dict, List, Optional, Tuple

from .bilinear import QForm, perp_residue
from .errors import (
    CoincidentPoints,
    CollinearPoints,
    IdenticalLines,
    InexactField,
    NoCommonPoint,
    NotThreeDimensional,
    NullProjectivePoint,
    NullTriangle,
    SingularAltitude,
    UndefinedSpread,
    WrongForm,
    ZeroVector,
)
from .fields import PrimeField, RationalField, require_exact
from .linalg import Vec, cross3, is_zero, nullspace, proportional, rank, vcomb, vscale


class ProjPoint:
    """The projective point [rep] relative to ``form``."""

    __slots__ = ("rep", "form")

    def __init__(self, rep, form: QForm):
        rep = form.vec(rep)
        if is_zero(rep):
            raise ZeroVector("a projective point needs a nonzero representative")
        self.rep = rep
        self.form = form

    @classmethod
    def parse(cls, text: str, form: QForm) -> "ProjPoint":
        body = text.strip().lstrip("[").rstrip("]")
        return cls([form.field.parse(t) for t in body.split(":")], form)

    @property
    def a(self):
        return self.form.dot(self.rep, self.rep)

    @property
    def is_null(self) -> bool:
        return self.a == 0

    def scaled(self, c) -> "ProjPoint":
        return ProjPoint(vscale(c, self.rep), self.form)

    def canonical(self) -> Tuple:
        """Representative with first nonzero coordinate 1 (used for hashing)."""
        lead = next(x for x in self.rep if x != 0)
        return tuple(x / lead for x in self.rep)

    def __eq__(self, other):
        if not isinstance(other, ProjPoint):
            return NotImplemented
        if len(self.rep) != len(other.rep):
            return False
        return proportional(self.rep, other.rep)

    def __hash__(self):
        return hash(self.canonical())

    def __repr__(self):
        return f"ProjPoint({format_point(self)})"


def _tidy(rep, field) -> List[str]:
    """Over Q: coprime integers, first nonzero entry positive.
    Over F_p: last nonzero entry scaled to 1.
    """
    if isinstance(field, RationalField):
        den = lcm(*(Fraction(x).denominator for x in rep))
        ints = [int(Fraction(x) * den) for x in rep]
        g = gcd(*ints)
        ints = [i // g for i in ints]
        if next(i for i in ints if i != 0) < 0:
            ints = [-i for i in ints]
        return [str(i) for i in ints]
    if isinstance(field, PrimeField):
        last = next(x for x in reversed(rep) if x != 0)
        rep = tuple(x / last for x in rep)
    return [field.format(x) for x in rep]


def format_point(u: ProjPoint) -> str:
    """Colon notation with a tidy representative, e.g. ``[9:1:0:4:1]``."""
    return "[" + ":".join(_tidy(u.rep, u.form.field)) + "]"


def format_line(L: "LineCoords3") -> str:
    """Line coordinates as ``(l:m:n)`` with the same tidying as points."""
    field = L.form.field if L.form is not None else RationalField()
    return "(" + ":".join(_tidy(L.coords, field)) + ")"


class ProjLine:
    """The projective line spanned by two independent vectors."""

    __slots__ = ("span", "form")

    def __init__(self, V, W, form: QForm):
        V, W = form.vec(V), form.vec(W)
        if rank([V, W]) != 2:
            raise CoincidentPoints("a projective line needs two independent vectors")
        self.span = (V, W)
        self.form = form

    def contains(self, u: ProjPoint) -> bool:
        return rank([*self.span, u.rep]) == 2

    def point(self, s, t) -> ProjPoint:
        return ProjPoint(vcomb((s, self.span[0]), (t, self.span[1])), self.form)

    def __eq__(self, other):
        if not isinstance(other, ProjLine):
            return NotImplemented
        return rank([*self.span, *other.span]) == 2

    def __hash__(self):
        return hash(len(self.span[0]))

    def __repr__(self):
        V, W = self.span
        return f"ProjLine({format_point(ProjPoint(V, self.form))}, {format_point(ProjPoint(W, self.form))})"


def join(u: ProjPoint, v: ProjPoint) -> ProjLine:
    if u == v:
        raise CoincidentPoints("the join of a point with itself is undefined")
    return ProjLine(u.rep, v.rep, u.form)


def collinear(*points: ProjPoint) -> bool:
    return rank([p.rep for p in points]) <= 2


def coplanar(*points: ProjPoint) -> bool:
    return rank([p.rep for p in points]) <= 3


# -- 3-D line coordinates for the form x1x2 + y1y2 - z1z2 --------------------


@dataclass(frozen=True, eq=False)
class LineCoords3:
    """Line (l:m:n), the plane lx + my - nz = 0."""

    l: object
    m: object
    n: object
    form: Optional[QForm] = None

    def __post_init__(self):
        if self.l == 0 and self.m == 0 and self.n == 0:
            raise ZeroVector("line coordinates cannot all vanish")

    @property
    def coords(self):
        return (self.l, self.m, self.n)

    def incident(self, u: ProjPoint) -> bool:
        x, y, z = u.rep
        return self.l * x + self.m * y - self.n * z == 0

    def __eq__(self, other):
        if not isinstance(other, LineCoords3):
            return NotImplemented
        return proportional(self.coords, other.coords)

    def __hash__(self):
        return 0

    def __repr__(self):
        return "(" + ":".join(str(x) for x in self.coords) + ")"


def _require_3d(form: QForm):
    if form.dim != 3:
        raise NotThreeDimensional(f"line coordinates need a 3-D ambient space, got {form.dim}")


def line_coords_3d(u: ProjPoint, v: ProjPoint) -> LineCoords3:
    _require_3d(u.form)
    if not u.form.is_hyperbolic_plane_form():
        raise WrongForm("line coordinates (l:m:n) are tied to the form diag(1,1,-1)")
    if u == v:
        raise CoincidentPoints("two distinct points are needed for a line")
    nx, ny, nz = cross3(u.rep, v.rep)
    return LineCoords3(nx, ny, -nz, u.form)


def meet_3d(L1: LineCoords3, L2: LineCoords3) -> ProjPoint:
    if L1 == L2:
        raise IdenticalLines("identical lines have no unique meet")
    form = L1.form or L2.form
    if form is None:
        raise WrongForm("line coordinates carry no form")
    _require_3d(form)
    P = cross3((L1.l, L1.m, -L1.n), (L2.l, L2.m, -L2.n))
    return ProjPoint(P, form)


def proj_spread_from_line_coords(L1: LineCoords3, L2: LineCoords3):
    """Spread between (l1:m1:n1) and (l2:m2:n2) under diag(1,1,-1)."""
    for L in (L1, L2):
        if L.form is not None and not L.form.is_hyperbolic_plane_form():
            raise WrongForm("coordinate spread formula assumes diag(1,1,-1)")
    l1, m1, n1 = L1.coords
    l2, m2, n2 = L2.coords
    den = (l1 * l1 + m1 * m1 - n1 * n1) * (l2 * l2 + m2 * m2 - n2 * n2)
    if den == 0:
        raise UndefinedSpread("a null line has no spread")
    num = (l1 * m2 - l2 * m1) ** 2 - (m1 * n2 - m2 * n1) ** 2 - (n1 * l2 - n2 * l1) ** 2
    return num / den


# -- projective quadrance and spread ----------------------------------------


def proj_quadrance(u: ProjPoint, v: ProjPoint):
    f = u.form
    aU, aV = f.a(u.rep), f.a(v.rep)
    if aU == 0 or aV == 0:
        raise NullProjectivePoint("projective quadrance needs non-null points")
    b = f.dot(u.rep, v.rep)
    return 1 - b * b / (aU * aV)


def proj_spread(w: ProjPoint, u: ProjPoint, v: ProjPoint):
    """Spread S(wu, wv) between the projective lines wu and wv at w."""
    f = w.form
    U, V, W = u.rep, v.rep, w.rep
    aU, aV, aW = f.a(U), f.a(V), f.a(W)
    bUV, bUW, bVW = f.dot(U, V), f.dot(U, W), f.dot(V, W)
    den = (aU * aW - bUW * bUW) * (aV * aW - bVW * bVW)
    if den == 0:
        raise UndefinedSpread("projective spread has a vanishing denominator")
    num = aW * bUV - bUW * bVW
    return 1 - num * num / den


def lines_perpendicular(w: ProjPoint, u: ProjPoint, v: ProjPoint) -> bool:
    """wu perpendicular to wv."""
    return perp_residue(w.form, u.rep, v.rep, w.rep) == 0


@dataclass(frozen=True)
class ProjTriangleMeasure:
    q_u: object
    q_v: object
    q_w: object
    S_u: object
    S_v: object
    S_w: object

    @property
    def quadrea(self):
        return self.S_w * self.q_u * self.q_v

    @property
    def spread_ratio(self):
        for S, q in ((self.S_u, self.q_u), (self.S_v, self.q_v), (self.S_w, self.q_w)):
            if q != 0:
                return S / q
        return None

    def quadrances(self):
        return (self.q_u, self.q_v, self.q_w)

    def spreads(self):
        return (self.S_u, self.S_v, self.S_w)


def _check_triangle(u, v, w):
    if u == v or v == w or u == w:
        raise CoincidentPoints("projective triangle vertices must be distinct")
    if collinear(u, v, w):
        raise CollinearPoints("projective triangle vertices are collinear")
    if u.is_null or v.is_null or w.is_null:
        raise NullTriangle("projective triangle has a null vertex")


def proj_triangle_measure(u: ProjPoint, v: ProjPoint, w: ProjPoint) -> ProjTriangleMeasure:
    _check_triangle(u, v, w)
    return ProjTriangleMeasure(
        q_u=proj_quadrance(v, w),
        q_v=proj_quadrance(u, w),
        q_w=proj_quadrance(u, v),
        S_u=proj_spread(u, v, w),
        S_v=proj_spread(v, w, u),
        S_w=proj_spread(w, u, v),
    )


def proj_cross_residual(q_a, q_b, q_c, S_c):
    """(S_c q_a q_b - q_a - q_b - q_c + 2)^2 - 4(1-q_a)(1-q_b)(1-q_c)."""
    return (S_c * q_a * q_b - q_a - q_b - q_c + 2) ** 2 - 4 * (1 - q_a) * (1 - q_b) * (1 - q_c)


def cross_law_sides(m: "ProjTriangleMeasure"):
    """Both sides of the projective Cross law at w."""
    lhs = (m.S_w * m.q_u * m.q_v - m.q_u - m.q_v - m.q_w + 2) ** 2
    return lhs, 4 * (1 - m.q_u) * (1 - m.q_v) * (1 - m.q_w)


def dual_cross_law_sides(m: "ProjTriangleMeasure"):
    """Both sides of the dual projective Cross law at w."""
    lhs = (m.q_w * m.S_u * m.S_v - m.S_u - m.S_v - m.S_w + 2) ** 2
    return lhs, 4 * (1 - m.S_u) * (1 - m.S_v) * (1 - m.S_w)


def triple_spread_residual(a, b, c):
    return (a + b + c) ** 2 - 2 * (a * a + b * b + c * c) - 4 * a * b * c


def projective_law_residuals(
    m: ProjTriangleMeasure, perpendicular: Optional[Dict[str, bool]] = None
) -> Dict[str, object]:
    """Exact residuals of the projective laws for a measured triangle.

    ``perpendicular`` maps a vertex name to whether its two sides are
    perpendicular; Pythagoras is reported only where that holds. When it
    is omitted, a spread equal to 1 is taken as the perpendicularity
    witness (the two agree for non-null triangles with defined spreads).
    """
    q_u, q_v, q_w = m.q_u, m.q_v, m.q_w
    S_u, S_v, S_w = m.S_u, m.S_v, m.S_w
    if isinstance(q_u, float):
        raise InexactField("law verification needs an exact field")
    out: Dict[str, object] = {
        "spread_law_uv": S_u * q_v - S_v * q_u,
        "spread_law_vw": S_v * q_w - S_w * q_v,
        "spread_law_uw": S_u * q_w - S_w * q_u,
        "quadrea_u": S_u * q_v * q_w - m.quadrea,
        "quadrea_v": S_v * q_u * q_w - m.quadrea,
        "cross_u": proj_cross_residual(q_v, q_w, q_u, S_u),
        "cross_v": proj_cross_residual(q_u, q_w, q_v, S_v),
        "cross_w": proj_cross_residual(q_u, q_v, q_w, S_w),
        "dual_cross_u": proj_cross_residual(S_v, S_w, S_u, q_u),
        "dual_cross_v": proj_cross_residual(S_u, S_w, S_v, q_v),
        "dual_cross_w": proj_cross_residual(S_u, S_v, S_w, q_w),
    }
    if perpendicular is None:
        perpendicular = {"u": S_u == 1, "v": S_v == 1, "w": S_w == 1}
    sides = {
        "u": (q_u, q_v, q_w, S_v, S_w),
        "v": (q_v, q_u, q_w, S_u, S_w),
        "w": (q_w, q_u, q_v, S_u, S_v),
    }
    for vertex, (q_opp, q_a, q_b, S_a, S_b) in sides.items():
        # q_opp is the side facing the vertex; q_a, q_b are the adjacent legs
        if perpendicular.get(vertex):
            out[f"pythagoras_{vertex}"] = q_opp - q_a - q_b + q_a * q_b
            out[f"thales_{vertex}"] = S_a * q_opp - q_a
        if q_opp == 1:
            out[f"dual_pythagoras_{vertex}"] = (
                {"u": S_u, "v": S_v, "w": S_w}[vertex] - S_a - S_b + S_a * S_b
            )
    return out


def pythagoras_residual(u: ProjPoint, v: ProjPoint, w: ProjPoint):
    """q_w - q_u - q_v + q_u q_v for the triangle uvw (right angle sought at w)."""
    q_u, q_v, q_w = proj_quadrance(v, w), proj_quadrance(u, w), proj_quadrance(u, v)
    return q_w - q_u - q_v + q_u * q_v


def proj_triple_quad_residual(u: ProjPoint, v: ProjPoint, w: ProjPoint):
    """Projective triple quad residual; zero whenever u, v, w are collinear."""
    return triple_spread_residual(proj_quadrance(v, w), proj_quadrance(u, w), proj_quadrance(u, v))


def proj_triple_spread_residual(u: ProjPoint, v: ProjPoint, w: ProjPoint, z: ProjPoint):
    """Triple spread residual of the three lines zu, zv, zw through z."""
    R_u = proj_spread(z, v, w)
    R_v = proj_spread(z, u, w)
    R_w = proj_spread(z, u, v)
    return triple_spread_residual(R_u, R_v, R_w)


# -- altitudes, orthocenter, bisectors --------------------------------------


def altitude_foot(u: ProjPoint, v: ProjPoint, w: ProjPoint) -> ProjPoint:
    """Foot on vw of the altitude from u.

    The foot is F = den*V + num*W with num = a_V b_UW - b_UV b_VW and
    den = a_W b_UV - b_UW b_VW, i.e. V + tW with t = num/den written
    homogeneously so that den = 0 gives F = W.
    """
    f = u.form
    U, V, W = u.rep, v.rep, w.rep
    aV, aW = f.a(V), f.a(W)
    bUV, bUW, bVW = f.dot(U, V), f.dot(U, W), f.dot(V, W)
    num = aV * bUW - bUV * bVW
    den = aW * bUV - bUW * bVW
    if num == 0 and den == 0:
        raise SingularAltitude("altitude foot is undetermined")
    return ProjPoint(vcomb((den, V), (num, W)), f)


def _altitudes_meet(u: ProjPoint, fu: ProjPoint, v: ProjPoint, fv: ProjPoint) -> ProjPoint:
    field = u.form.field
    if u == fu or v == fv:
        raise SingularAltitude("altitude degenerates to a point")
    cols = [u.rep, fu.rep, tuple(-x for x in v.rep), tuple(-x for x in fv.rep)]
    rows = [[c[i] for c in cols] for i in range(len(u.rep))]
    ker = nullspace(rows, field.zero, field.one)
    if len(ker) != 1:
        raise NoCommonPoint("altitudes do not meet in a single projective point")
    a, b, _, _ = ker[0]
    P = vcomb((a, u.rep), (b, fu.rep))
    if is_zero(P):
        raise NoCommonPoint("altitudes do not meet in a single projective point")
    return ProjPoint(P, u.form)


def proj_orthocenter(u: ProjPoint, v: ProjPoint, w: ProjPoint) -> ProjPoint:
    _check_triangle(u, v, w)
    fu = altitude_foot(u, v, w)
    fv = altitude_foot(v, w, u)
    fw = altitude_foot(w, u, v)
    O = _altitudes_meet(u, fu, v, fv)
    if w == fw or not collinear(w, fw, O):
        raise NoCommonPoint("third altitude misses the meet of the other two")
    return O


_VERTEX = {"u": 0, "v": 1, "w": 2}


def _bisector_condition(v: ProjPoint, u: ProjPoint, w: ProjPoint, b: ProjPoint):
    try:
        s1 = proj_spread(v, u, b)
        s2 = proj_spread(v, w, b)
    except UndefinedSpread:
        return None
    return s1 if s1 == s2 else None


def vertex_bisectors(
    u: ProjPoint, v: ProjPoint, w: ProjPoint, at: str = "v", method: str = "auto"
) -> List[Tuple[ProjPoint, object]]:
    """Points b on the opposite side with S(xa, xb) = S(xc, xb) at vertex x.

    Returns ``(b, spread)`` pairs sorted by their display form. Over F_p
    (``method="enumerate"``, the default there) every point of the
    opposite line is tried; otherwise the equal-spread condition is
    reduced to t^2 = A/C along b = A' + t C' and solved with a square root.
    """
    pts = [u, v, w]
    if at not in _VERTEX:
        raise ValueError(f"vertex must be one of u, v, w, got {at!r}")
    x = pts[_VERTEX[at]]
    a, c = [p for i, p in enumerate(pts) if i != _VERTEX[at]]
    if a == c or a == x or c == x:
        raise CoincidentPoints("bisectors need three distinct points")
    field = x.form.field
    require_exact(field, "bisector search")
    if method == "auto":
        method = "enumerate" if isinstance(field, PrimeField) and field.p < 1 << 16 else "solve"
    found = {}
    if method == "enumerate":
        if not isinstance(field, PrimeField):
            raise ValueError("enumeration needs a finite field")
        cands = [ProjPoint(vcomb((1, a.rep), (t, c.rep)), x.form) for t in field.elements()]
        cands.append(c)
    else:
        cands = _bisector_candidates(x, a, c)
    for b in cands:
        s = _bisector_condition(x, a, c, b)
        if s is not None:
            found[b] = s
    return sorted(found.items(), key=lambda kv: format_point(kv[0]))


def _bisector_candidates(x: ProjPoint, a: ProjPoint, c: ProjPoint) -> List[ProjPoint]:
    f = x.form
    X = x.rep
    aX = f.a(X)
    # project away from X; the spread at x only sees these components
    A_ = vcomb((aX, a.rep), (-f.dot(a.rep, X), X))
    C_ = vcomb((aX, c.rep), (-f.dot(c.rep, X), X))
    A, C = f.a(A_), f.a(C_)
    if C == 0:
        return []
    roots = f.field.sqrt(A / C)
    if roots is None:
        return []
    out = []
    for t in set(roots):
        B = vcomb((1, a.rep), (t, c.rep))
        if not is_zero(B):
            out.append(ProjPoint(B, f))
    return out
