"""Closed-form solvers for special projective figures.

Right triangles (Napier's rules), isosceles and equilateral triangles,
Lambert quadrilaterals and right hexagons.
"""

from __future__ import annotations

from dataclasses import dataclass, fields
from typing import Dict, Mapping, Optional, Sequence, Tuple

from .errors import (
    InconsistentKnowns,
    NotPlanar,
    NotRightHexagon,
    SingularDenominator,
    UndefinedCase,
    UndefinedSpread,
    ZeroQuadrance,
)
from .fields import Field, field_of
from .projective import ProjPoint, coplanar, proj_quadrance, proj_spread

NAPIER_KEYS = ("q_u", "q_v", "q_w", "S_u", "S_v")


@dataclass(frozen=True)
class RightTriangle:
    """Quantities of a projective triangle with S_w = 1."""

    q_u: object
    q_v: object
    q_w: object
    S_u: object
    S_v: object
    # the q_w = 0 root is discarded when solving from two spreads
    degenerate_root: Optional[str] = None

    @property
    def S_w(self):
        return self.q_w * 0 + 1

    def values(self) -> Dict[str, object]:
        return {k: getattr(self, k) for k in NAPIER_KEYS}

    def basic_residuals(self) -> Tuple:
        q_u, q_v, q_w, S_u, S_v = (getattr(self, k) for k in NAPIER_KEYS)
        return (q_u + q_v - q_u * q_v - q_w, S_u * q_w - q_u, S_v * q_w - q_v)


def _div(num, den, case):
    if den == 0:
        raise UndefinedCase(f"{case}: vanishing denominator")
    return num / den


def _solve_pair(k: Dict[str, object]) -> RightTriangle:
    names = frozenset(k)
    degenerate = None
    if names == {"q_u", "q_v"}:
        q_u, q_v = k["q_u"], k["q_v"]
        q_w = q_u + q_v - q_u * q_v
    elif names == {"q_u", "q_w"}:
        q_u, q_w = k["q_u"], k["q_w"]
        q_v = _div(q_w - q_u, 1 - q_u, "q_u, q_w")
    elif names == {"q_v", "q_w"}:
        q_v, q_w = k["q_v"], k["q_w"]
        q_u = _div(q_w - q_v, 1 - q_v, "q_v, q_w")
    elif names == {"S_u", "S_v"}:
        S_u, S_v = k["S_u"], k["S_v"]
        t = S_u + S_v - 1
        q_u = _div(t, S_v, "S_u, S_v")
        q_v = _div(t, S_u, "S_u, S_v")
        q_w = t / (S_u * S_v)
        degenerate = "q_w = 0"
    else:
        # one spread and one quadrance; reduce the S_v cases to S_u by symmetry
        swap = "S_v" in names
        if swap:
            k = {_swap_name(n): val for n, val in k.items()}
        S_u = k["S_u"]
        if "q_w" in k:
            q_w = k["q_w"]
            q_u = S_u * q_w
            q_v = _div(q_w - S_u * q_w, 1 - S_u * q_w, "S_u, q_w")
        elif "q_u" in k:
            q_u = k["q_u"]
            q_w = _div(q_u, S_u, "S_u, q_u")
            q_v = _div(q_u * (1 - S_u), S_u * (1 - q_u), "S_u, q_u")
        else:
            q_v = k["q_v"]
            d = 1 - S_u * (1 - q_v)
            q_w = _div(q_v, d, "S_u, q_v")
            q_u = S_u * q_w
        if swap:
            q_u, q_v = q_v, q_u
    if q_w == 0:
        raise UndefinedCase("solution has q_w = 0, so the spreads are undefined")
    return RightTriangle(q_u, q_v, q_w, q_u / q_w, q_v / q_w, degenerate)


def _swap_name(name: str) -> str:
    return {"q_u": "q_v", "q_v": "q_u", "S_u": "S_v", "S_v": "S_u", "q_w": "q_w"}[name]


def napier_solve(knowns: Mapping[str, object], field: Optional[Field] = None) -> RightTriangle:
    """Complete a right projective triangle (S_w = 1) from two of its five quantities.

    Extra knowns beyond two are checked against the completion and
    rejected with :class:`InconsistentKnowns` when they disagree.
    """
    unknown = set(knowns) - set(NAPIER_KEYS)
    if unknown:
        raise InconsistentKnowns(f"unknown quantities {sorted(unknown)}")
    if len(knowns) < 2:
        raise InconsistentKnowns("need at least two of q_u, q_v, q_w, S_u, S_v")
    if field is None:
        field = field_of(next(iter(knowns.values())))
    vals = {k: field(v) for k, v in knowns.items()}
    ordered = [k for k in NAPIER_KEYS if k in vals]
    first = {k: vals[k] for k in ordered[:2]}
    sol = _solve_pair(first)
    for k in ordered[2:]:
        if getattr(sol, k) != vals[k]:
            raise InconsistentKnowns(f"{k} = {vals[k]} contradicts the completion {getattr(sol, k)}")
    return sol


@dataclass(frozen=True)
class IsoscelesApex:
    q_w: object
    S_w: object


def isosceles_derive(q, S) -> IsoscelesApex:
    """Base quadrance q_w and apex spread S_w when q_u = q_v = q and S_u = S_v = S."""
    if q == 0:
        raise ZeroQuadrance("isosceles formulas need q != 0")
    d = 1 - S * q
    if d == 0:
        raise SingularDenominator("1 - S q vanishes")
    common = 4 * (1 - S) * (1 - q) / (d * d)
    return IsoscelesApex(q_w=q * common, S_w=S * common)


def equilateral_solve(field: Field, q=None, S=None) -> Tuple:
    """Solve (1 - S q)^2 = 4 (1 - S)(1 - q) for the missing one of q, S.

    The relation is symmetric, so the same quadratic serves both ways.
    Solving for q discards q = 0 (an equilateral triangle has non-zero
    quadrance). Roots come back sorted and without repeats.
    """
    if (q is None) == (S is None):
        raise ValueError("give exactly one of q or S")
    g = field(S if q is None else q)
    solving_q = q is None
    if not solving_q and g == 0:
        return ()
    # g^2 x^2 + (4 - 6g) x + (4g - 3) = 0
    a, b, c = g * g, 4 - 6 * g, 4 * g - 3
    if a == 0:
        roots = [-c / b]
    else:
        disc = b * b - 4 * a * c
        sq = field.sqrt(disc)
        if sq is None:
            return ()
        roots = [(-b + r) / (2 * a) for r in sq]
    if solving_q:
        roots = [r for r in roots if r != 0]
    uniq = {field.sort_key(r): r for r in roots}
    return tuple(uniq[k] for k in sorted(uniq))


@dataclass(frozen=True)
class Lambert:
    """Quantities of a Lambert quadrilateral uvwz with q(u,v) = q, q(v,w) = p."""

    q: object
    p: object
    y: object  # q(w, z)
    x: object  # q(u, z)
    s: object  # q(u, w)
    r: object  # q(v, z)
    S_vu_vz: object
    S_vw_vz: object
    S_wv_wu: object
    S_uw_uv: object
    S_uw_uz: object
    S_wu_wz: object
    S: object  # S(zu, zw)

    def as_dict(self) -> Dict[str, object]:
        return {f.name: getattr(self, f.name) for f in fields(self)}


def lambert_solve(q, p) -> Lambert:
    d = 1 - q * p
    if d == 0:
        raise SingularDenominator("1 - q p vanishes")
    y = q * (1 - p) / d
    x = p * (1 - q) / d
    s = q + p - q * p
    r = (q + p - 2 * q * p) / d
    if r == 0 or s == 0:
        raise SingularDenominator("r or s vanishes, spreads at v, u, w are undefined")
    return Lambert(
        q=q, p=p, y=y, x=x, s=s, r=r,
        S_vu_vz=x / r,
        S_vw_vz=y / r,
        S_wv_wu=q / s,
        S_uw_uv=p / s,
        S_uw_uz=q * (1 - p) / s,
        S_wu_wz=p * (1 - q) / s,
        S=1 - p * q,
    )


def measure_lambert(u: ProjPoint, v: ProjPoint, w: ProjPoint, z: ProjPoint) -> Lambert:
    """Measure the same 13 quantities directly on a configuration."""
    return Lambert(
        q=proj_quadrance(u, v),
        p=proj_quadrance(v, w),
        y=proj_quadrance(w, z),
        x=proj_quadrance(u, z),
        s=proj_quadrance(u, w),
        r=proj_quadrance(v, z),
        S_vu_vz=proj_spread(v, u, z),
        S_vw_vz=proj_spread(v, w, z),
        S_wv_wu=proj_spread(w, v, u),
        S_uw_uv=proj_spread(u, w, v),
        S_uw_uz=proj_spread(u, w, z),
        S_wu_wz=proj_spread(w, u, z),
        S=proj_spread(z, u, w),
    )


@dataclass(frozen=True)
class HexagonCheck:
    """``ratios`` are q12/q45, q34/q61, q56/q23, which agree on every right
    hexagon. ``literal`` keeps q12/q45, q23/q56, q34/q61 for comparison;
    its middle entry is the reciprocal of the others in general.
    """

    ratios: Tuple
    equal: bool
    literal: Tuple = ()


def right_hexagon_check(points: Sequence[ProjPoint]) -> HexagonCheck:
    """Opposite-side quadrance ratios of a planar right hexagon a1..a6."""
    if len(points) != 6:
        raise ValueError("a hexagon has six vertices")
    if not coplanar(*points):
        raise NotPlanar("hexagon vertices do not lie in one projective plane")
    a = list(points)
    for i in range(6):
        prev, here, nxt = a[i - 1], a[i], a[(i + 1) % 6]
        try:
            S = proj_spread(here, nxt, prev)
        except UndefinedSpread as exc:
            raise NotRightHexagon(f"spread at a{i + 1} is undefined") from exc
        if S != 1:
            raise NotRightHexagon(f"spread at a{i + 1} is {S}, not 1")
    # q[0] = q(a1,a2), ..., q[5] = q(a6,a1)
    q = [proj_quadrance(a[i], a[(i + 1) % 6]) for i in range(6)]
    if any(x == 0 for x in q):
        raise SingularDenominator("a side has zero quadrance")
    pairs = ((q[0], q[3]), (q[2], q[5]), (q[4], q[1]))
    ratios = tuple(n / d for n, d in pairs)
    # cross-multiplied so the comparison never divides
    equal = q[0] * q[5] == q[2] * q[3] and q[2] * q[1] == q[4] * q[5]
    literal = (q[0] / q[3], q[1] / q[4], q[2] / q[5])
    return HexagonCheck(ratios=ratios, equal=equal, literal=literal)
