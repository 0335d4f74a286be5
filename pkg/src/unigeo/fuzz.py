"""Random configurations and exact law-residual assertions.

Everything is driven by one ``random.Random(seed)`` so a run is fully
reproducible from its seed. Degenerate draws (null points, undefined
spreads, collinear vertices) are skipped and counted, never asserted on.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional, Sequence

from .affine import AffineTriangle, law_residuals, measure_points, quadrance, triangle_centers
from .bilinear import QForm
from .errors import GeometryError
from .fields import Field, PrimeField, make_field
from .linalg import cross3, nullspace, rank, vcomb, vscale
from .projective import (
    ProjPoint,
    proj_triangle_measure,
    proj_triple_spread_residual,
    projective_law_residuals,
    pythagoras_residual,
)
from .solvers import NAPIER_KEYS, lambert_solve, measure_lambert, napier_solve

DEFAULT_FIELDS = ("Q", "F11", "F1009", "F65537")


def random_scalar(rng: random.Random, field: Field, nonzero: bool = False):
    while True:
        if isinstance(field, PrimeField):
            x = field(rng.randrange(field.p))
        elif rng.random() < 0.2:
            x = field(Fraction(rng.randint(-9, 9), rng.randint(1, 5)))
        else:
            x = field(rng.randint(-6, 6))
        if not nonzero or x != 0:
            return x


def random_vector(rng: random.Random, field: Field, n: int):
    return tuple(random_scalar(rng, field) for _ in range(n))


def random_form(rng: random.Random, field: Field, n: int, singular: bool = False) -> QForm:
    """A random symmetric n x n form; ``singular`` forces rank < n via A^T D A."""
    if singular:
        k = rng.randint(1, n - 1)
        A = [random_vector(rng, field, n) for _ in range(k)]
        D = [random_scalar(rng, field, nonzero=True) for _ in range(k)]
        M = [[sum(A[t][i] * D[t] * A[t][j] for t in range(k)) for j in range(n)] for i in range(n)]
        # entries may all vanish over a small field; that is still a valid form
        return QForm(M, field)
    M = [[field(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            M[i][j] = M[j][i] = random_scalar(rng, field)
    return QForm(M, field)


def _linear_row(form: QForm, vertex, known):
    """Row r with r.B = a_X b_AB - b_AX b_BX for vertex X, known A, unknown B."""
    X, A = vertex, known
    P = vcomb((form.a(X), A), (-form.dot(A, X), X))
    return form.vec(form.dot(P, e) for e in _basis(form))


def _basis(form: QForm):
    n = len(form.matrix)
    one, zero = form.field.one, form.field.zero
    return [tuple(one if i == j else zero for j in range(n)) for i in range(n)]


def _solve_in_span(rng, form: QForm, rows, span):
    """Random vector in span(span) annihilated by every row."""
    field = form.field
    A = [[sum(r[k] * B[k] for k in range(len(r))) for B in span] for r in rows]
    ker = nullspace(A, field.zero, field.one)
    if not ker:
        return None
    coeffs = [random_scalar(rng, field, nonzero=True) for _ in ker]
    c = [sum(k[i] * a for k, a in zip(ker, coeffs)) for i in range(len(span))]
    return vcomb(*zip(c, span))


def right_projective_triangle(rng, form: QForm):
    """u, v, w with wu perpendicular to wv, built through a linear condition on v."""
    n = len(form.matrix)
    u = random_vector(rng, form.field, n)
    w = random_vector(rng, form.field, n)
    v = _solve_in_span(rng, form, [_linear_row(form, w, u)], _basis(form))
    if v is None:
        return None
    try:
        return tuple(ProjPoint(x, form) for x in (u, v, w))
    except GeometryError:
        return None


def right_affine_triangle(rng, form: QForm):
    """U, V, W with (V - U).(W - U) = 0."""
    n = len(form.matrix)
    field = form.field
    U = random_vector(rng, field, n)
    d = random_vector(rng, field, n)
    a = form.dot(d, d)
    if a == 0:
        return None
    r = random_vector(rng, field, n)
    e = vcomb((1, r), (-form.dot(r, d) / a, d))
    return U, vcomb((1, U), (1, d)), vcomb((1, U), (1, e))


def lambert_configuration(rng, form: QForm):
    """Coplanar u, v, w, z with right spreads at u, v and w.

    The plane is a random 3-D subspace; v and w are fixed by perpendicularity
    at v, then z by perpendicularity at u and at w.
    """
    n = len(form.matrix)
    field = form.field
    span = [random_vector(rng, field, n) for _ in range(3)]
    if rank(span) < 3:
        return None
    pick = lambda: vcomb(*((random_scalar(rng, field), B) for B in span))  # noqa: E731
    u, v = pick(), pick()
    w = _solve_in_span(rng, form, [_linear_row(form, v, u)], span)
    if w is None:
        return None
    z = _solve_in_span(rng, form, [_linear_row(form, u, v), _linear_row(form, w, v)], span)
    if z is None:
        return None
    try:
        return tuple(ProjPoint(x, form) for x in (u, v, w, z))
    except GeometryError:
        return None


def right_hexagon(rng, form: QForm):
    """Six vertices of a right hexagon for a non-degenerate 3-D form.

    Pick poles p1..p6 with consecutive poles perpendicular (p6 also
    perpendicular to p1). Side i is the polar line of p_i and vertex i is
    the meet of sides i and i+1.
    """
    field = form.field
    M = form.matrix
    poles = [random_vector(rng, field, 3)]
    for i in range(4):
        nxt = _solve_in_span(rng, form, [form.vec(_mat_vec(M, poles[-1]))], _basis(form))
        if nxt is None:
            return None
        poles.append(nxt)
    last = nullspace([_mat_vec(M, poles[-1]), _mat_vec(M, poles[0])], field.zero, field.one)
    if len(last) != 1:
        return None
    poles.append(last[0])
    normals = [_mat_vec(M, p) for p in poles]
    try:
        return [ProjPoint(cross3(normals[i], normals[(i + 1) % 6]), form) for i in range(6)]
    except GeometryError:
        return None


def _mat_vec(M, p):
    return tuple(sum(M[i][j] * p[j] for j in range(len(p))) for i in range(len(M)))


@dataclass
class FieldReport:
    field: str
    forms: int = 0
    singular_forms: int = 0
    affine_triangles: int = 0
    projective_triangles: int = 0
    right_affine: int = 0
    right_projective: int = 0
    lambert: int = 0
    napier: int = 0
    rescaled: int = 0
    skipped: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def triangles(self) -> int:
        return self.affine_triangles + self.projective_triangles


@dataclass
class FuzzReport:
    seed: int
    fields: Dict[str, FieldReport] = field(default_factory=dict)

    @property
    def failures(self) -> List[str]:
        return [f"{k}: {msg}" for k, r in self.fields.items() for msg in r.failures]

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def triangles(self) -> int:
        return sum(r.triangles for r in self.fields.values())

    def summary(self) -> Dict[str, object]:
        out: Dict[str, object] = {"seed": self.seed}
        for name, r in self.fields.items():
            for key in (
                "forms", "singular_forms", "affine_triangles", "projective_triangles",
                "right_affine", "right_projective", "lambert", "napier", "rescaled", "skipped",
            ):
                out[f"{name}.{key}"] = getattr(r, key)
            out[f"{name}.failures"] = len(r.failures)
        out["triangles"] = self.triangles
        out["ok"] = self.ok
        return out


def _nonzero(res: Dict[str, object]) -> List[str]:
    return [k for k, v in res.items() if v != 0]


def _check_affine(rng, form, rep: FieldReport):
    n = len(form.matrix)
    pts = [random_vector(rng, form.field, n) for _ in range(3)]
    m = measure_points(form, *pts)
    if m.collinear or m.partial:
        rep.skipped += 1
        return
    bad = _nonzero(law_residuals(m))
    if bad:
        rep.failures.append(f"affine laws {bad} at {pts} under {form}")
    rep.affine_triangles += 1
    try:
        c = triangle_centers(AffineTriangle(form, *pts))
    except GeometryError:
        return
    if not c.euler_collinear:
        rep.failures.append(f"Euler line fails at {pts} under {form}")


def _check_projective(rng, form, rep: FieldReport):
    n = len(form.matrix)
    try:
        tri = [ProjPoint(random_vector(rng, form.field, n), form) for _ in range(3)]
        m = proj_triangle_measure(*tri)
    except GeometryError:
        rep.skipped += 1
        return
    bad = _nonzero(projective_law_residuals(m))
    if bad:
        rep.failures.append(f"projective laws {bad} at {tri} under {form}")
    rep.projective_triangles += 1
    # coplanar z: the triple spread formula holds at z for lines to u, v, w
    coeffs = [random_scalar(rng, form.field) for _ in range(3)]
    try:
        z = ProjPoint(vcomb(*zip(coeffs, (p.rep for p in tri))), form)
        if proj_triple_spread_residual(*tri, z) != 0:
            rep.failures.append(f"triple spread at z fails for {tri}, z={z}")
    except GeometryError:
        pass
    # rescaling invariance
    scaled = [p.scaled(random_scalar(rng, form.field, nonzero=True)) for p in tri]
    if proj_triangle_measure(*scaled) != m:
        rep.failures.append(f"rescaling changed measures of {tri}")
    rep.rescaled += 1


def _check_right(rng, form, rep: FieldReport):
    tri = right_affine_triangle(rng, form)
    if tri is not None:
        m = measure_points(form, *tri)
        if not (m.collinear or m.partial):
            # right angle at U: Q(U,V) + Q(U,W) = Q(V,W)
            if m.Q_W + m.Q_V != m.Q_U or m.s_U != 1:
                rep.failures.append(f"affine Pythagoras fails at {tri}")
            rep.right_affine += 1
    ptri = right_projective_triangle(rng, form)
    if ptri is None:
        return
    try:
        m = proj_triangle_measure(*ptri)
    except GeometryError:
        return
    if pythagoras_residual(*ptri) != 0 or m.S_w != 1:
        rep.failures.append(f"projective Pythagoras fails at {ptri}")
    rep.right_projective += 1
    _check_napier(m, ptri, rep, rng)


def _check_napier(m, tri, rep: FieldReport, rng):
    truth = {"q_u": m.q_u, "q_v": m.q_v, "q_w": m.q_w, "S_u": m.S_u, "S_v": m.S_v}
    for pair in combinations(NAPIER_KEYS, 2):
        try:
            sol = napier_solve({k: truth[k] for k in pair}, field=tri[0].form.field)
        except GeometryError:
            continue
        if sol.values() != truth:
            rep.failures.append(f"napier from {pair} gave {sol.values()} not {truth}")
    scaled = [p.scaled(random_scalar(rng, p.form.field, nonzero=True)) for p in tri]
    m2 = proj_triangle_measure(*scaled)
    try:
        a = napier_solve({"q_u": m.q_u, "q_v": m.q_v})
        b = napier_solve({"q_u": m2.q_u, "q_v": m2.q_v})
    except GeometryError:
        return
    if a != b:
        rep.failures.append("rescaling changed napier output")
    rep.napier += 1


def _check_lambert(rng, form, rep: FieldReport):
    cfg = lambert_configuration(rng, form)
    if cfg is None:
        return
    try:
        measured = measure_lambert(*cfg)
        predicted = lambert_solve(measured.q, measured.p)
    except GeometryError:
        return
    if measured != predicted:
        diff = [k for k, v in measured.as_dict().items() if predicted.as_dict()[k] != v]
        rep.failures.append(f"Lambert mismatch in {diff} at {cfg}")
    rep.lambert += 1


def run_field(field_name: str, seed: int, count: int, forms: int = 10) -> FieldReport:
    """``count`` triangles of each kind spread over ``forms`` random forms (half singular)."""
    rng = random.Random(f"{seed}:{field_name}")
    fld = make_field(field_name)
    rep = FieldReport(field=field_name)
    per_form = max(1, -(-count // forms))
    for i in range(forms):
        singular = i % 2 == 1
        n = rng.randint(3, 4)
        form = random_form(rng, fld, n, singular=singular)
        rep.forms += 1
        rep.singular_forms += singular
        for _ in range(per_form):
            _check_affine(rng, form, rep)
            _check_projective(rng, form, rep)
            _check_right(rng, form, rep)
            _check_lambert(rng, form, rep)
    return rep


def run_fuzz(seed: int = 0, count: int = 100, fields: Optional[Sequence[str]] = None, forms: int = 10) -> FuzzReport:
    report = FuzzReport(seed=seed)
    for name in fields or DEFAULT_FIELDS:
        report.fields[name] = run_field(name, seed, count, forms)
    return report


__all__ = [
    "DEFAULT_FIELDS",
    "FieldReport",
    "FuzzReport",
    "lambert_configuration",
    "random_form",
    "random_scalar",
    "random_vector",
    "right_affine_triangle",
    "right_hexagon",
    "right_projective_triangle",
    "run_field",
    "run_fuzz",
]
