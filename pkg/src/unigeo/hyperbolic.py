"""Float bridge from the projective model of the hyperbolic plane to the
Poincare disk.

Exact quantities are computed over Q first and converted to float once,
here at the boundary. Comparisons use a fixed absolute tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Tuple

from .errors import DegenerateTriangle, OutsideCone, ToleranceExceeded, WrongForm, ZDivisionImpossible
from .projective import ProjPoint, proj_quadrance, proj_triangle_measure

TOL = 1e-9
DISK_TOL = 1e-12
ACOS_SLACK = 1e-9


@dataclass(frozen=True)
class DiskPoint:
    re: float
    im: float

    def __post_init__(self):
        if self.re * self.re + self.im * self.im >= 1 - DISK_TOL:
            raise OutsideCone(f"({self.re}, {self.im}) is not inside the unit disk")

    @property
    def z(self) -> complex:
        return complex(self.re, self.im)

    def __complex__(self):
        return self.z


def affine_coords(a: ProjPoint) -> Tuple[Fraction, Fraction]:
    """(x0, y0) with a = [x0 : y0 : 1], checked to lie inside the null cone."""
    if not a.form.is_hyperbolic_plane_form():
        raise WrongForm("the Poincare bridge needs the 3-D form diag(1,1,-1)")
    x, y, z = a.rep
    if z == 0:
        raise ZDivisionImpossible(f"{a} has z = 0")
    x0, y0 = x / z, y / z
    if x0 * x0 + y0 * y0 >= 1:
        raise OutsideCone(f"{a} lies on or outside the null cone")
    return x0, y0


def poincare_map(a: ProjPoint) -> DiskPoint:
    """Send [x0 : y0 : 1] through the hemisphere to the Poincare disk."""
    x0, y0 = affine_coords(a)
    r2 = x0 * x0 + y0 * y0
    if r2 == 0:
        return DiskPoint(0.0, 0.0)
    k = (1 - math.sqrt(1 - float(r2))) / float(r2)
    return DiskPoint(float(x0) * k, float(y0) * k)


def hyp_distance(z: DiskPoint, w: DiskPoint) -> float:
    zc, wc = z.z, w.z
    A = abs(1 - zc * wc.conjugate())
    B = abs(zc - wc)
    return math.log((A + B) / (A - B))


def _angle(cos_value: float) -> float:
    if cos_value > 1 + ACOS_SLACK or cos_value < -1 - ACOS_SLACK:
        raise DegenerateTriangle(f"cosine {cos_value} out of range")
    return math.acos(max(-1.0, min(1.0, cos_value)))


def hyp_angles(rho1: float, rho2: float, rho3: float) -> Tuple[float, float, float]:
    """Angles opposite sides rho1, rho2, rho3 by the hyperbolic cosine rule."""
    rhos = (rho1, rho2, rho3)
    out = []
    for i in range(3):
        r = rhos[i]
        a, b = rhos[(i + 1) % 3], rhos[(i + 2) % 3]
        den = math.sinh(a) * math.sinh(b)
        if den == 0:
            raise DegenerateTriangle("a side has zero length")
        out.append(_angle((math.cosh(a) * math.cosh(b) - math.cosh(r)) / den))
    return tuple(out)


def sine_law_constants(rhos, thetas) -> Tuple[float, float, float]:
    return tuple(math.sin(t) / math.sinh(r) for r, t in zip(rhos, thetas))


def distance_from_origin(x0, y0) -> float:
    """rho(0, z_A) for a = [x0 : y0 : 1], in closed form."""
    r = math.sqrt(float(x0 * x0 + y0 * y0))
    return 0.5 * math.log((1 + r) / (1 - r))


@dataclass
class CrossCheck:
    points: Tuple[DiskPoint, DiskPoint, DiskPoint]
    rhos: Tuple[float, float, float]
    thetas: Tuple[float, float, float]
    q: Tuple
    S: Tuple
    residuals: Dict[str, float] = field(default_factory=dict)

    @property
    def worst(self) -> float:
        return max(abs(v) for v in self.residuals.values())

    @property
    def ok(self) -> bool:
        return self.worst < TOL


def crosscheck(a1: ProjPoint, a2: ProjPoint, a3: ProjPoint, strict: bool = True) -> CrossCheck:
    """Compare q with -sinh^2(rho) and S with sin^2(theta) for a triangle.

    Side i is opposite vertex i, so rho1 = rho(z2, z3) pairs with
    q1 = q(a2, a3), and theta1 at z1 pairs with S1 at a1.
    """
    m = proj_triangle_measure(a1, a2, a3)
    z = tuple(poincare_map(a) for a in (a1, a2, a3))
    rhos = (hyp_distance(z[1], z[2]), hyp_distance(z[0], z[2]), hyp_distance(z[0], z[1]))
    thetas = hyp_angles(*rhos)
    q = m.quadrances()
    S = m.spreads()
    res = {}
    for i in range(3):
        res[f"sinh2_rho{i + 1}+q{i + 1}"] = math.sinh(rhos[i]) ** 2 + float(q[i])
        res[f"sin2_theta{i + 1}-S{i + 1}"] = math.sin(thetas[i]) ** 2 - float(S[i])
    report = CrossCheck(z, rhos, thetas, q, S, res)
    if strict and not report.ok:
        raise ToleranceExceeded(f"cross-check residual {report.worst:.3e} exceeds {TOL}", res)
    return report


def origin_identity_residuals(a: ProjPoint) -> Dict[str, float]:
    """Residuals of the three relations tying a point to the origin o = [0:0:1]."""
    x0, y0 = affine_coords(a)
    o = ProjPoint((0, 0, 1), a.form)
    za = poincare_map(a)
    rho = hyp_distance(DiskPoint(0.0, 0.0), za)
    r2 = float(x0 * x0 + y0 * y0)
    out = {
        "rho_closed_form": rho - distance_from_origin(x0, y0),
        "sinh2_closed_form": math.sinh(rho) ** 2 - r2 / (1 - r2),
        "sinh2_plus_q": math.sinh(rho) ** 2 + float(proj_quadrance(o, a)),
    }
    if r2 > 0:
        out["half_of_w"] = rho - 0.5 * hyp_distance(DiskPoint(0.0, 0.0), DiskPoint(float(x0), float(y0)))
    return out


MOTIVATING_POINTS = ("1:0:2", "1:-1:3", "2:1:5")
