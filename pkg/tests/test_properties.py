"""Property tests: algebraic identities that must hold on every valid input."""

import random
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from unigeo.affine import AffineTriangle, law_residuals, measure_points, triangle_centers, euler_residuals
from unigeo.bilinear import QForm, gram_determinant, perp_residue, project_onto_line
from unigeo.errors import GeometryError
from unigeo.fields import GF, QQ
from unigeo.fuzz import random_form, random_vector, right_affine_triangle, right_projective_triangle
from unigeo.linalg import rank, vcomb, vsub
from unigeo.projective import (
    ProjPoint,
    format_point,
    line_coords_3d,
    meet_3d,
    proj_quadrance,
    proj_spread,
    proj_spread_from_line_coords,
    proj_triangle_measure,
    proj_triple_quad_residual,
    projective_law_residuals,
)
from unigeo.solvers import NAPIER_KEYS, napier_solve
from unigeo.affine import triple_spread_residual
from unigeo.spreadpoly import spread_poly

FIELDS = [QQ, GF(11), GF(1009), GF(65537)]
PRIMES = [GF(3), GF(11), GF(1009), GF(65537)]

fields = st.sampled_from(FIELDS)
seeds = st.integers(min_value=0, max_value=2**32)
rationals = st.fractions(max_denominator=50).filter(lambda x: abs(x.numerator) < 10**6)


def scalars(fld):
    if fld is QQ:
        return rationals
    return st.integers(0, fld.p - 1).map(fld)


@st.composite
def field_and_scalars(draw, k=3):
    fld = draw(fields)
    return fld, [draw(scalars(fld)) for _ in range(k)]


def zeros(res):
    return {k: v for k, v in res.items() if v != 0}


# -- fields -----------------------------------------------------------------


@given(field_and_scalars(3))
def test_field_axioms(fs):
    fld, (a, b, c) = fs
    assert a + b == b + a and a * b == b * a
    assert (a + b) + c == a + (b + c) and (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == fld.zero and a * fld.one == a
    if a != 0:
        assert a * (fld.one / a) == fld.one


@given(field_and_scalars(1))
def test_parse_format_round_trip(fs):
    fld, (a,) = fs
    assert fld.parse(fld.format(a)) == a


@given(st.sampled_from(PRIMES), st.integers(min_value=0))
def test_sqrt_over_prime_fields(fld, n):
    x = fld(n)
    roots = fld.sqrt(x)
    if roots is None:
        assert not fld.is_square(x)
        assert all(r * r != x for r in map(fld, range(min(fld.p, 200)))) or fld.p > 200
    else:
        assert all(r * r == x for r in roots)


@given(rationals)
def test_sqrt_of_rational_squares(x):
    r = QQ.sqrt(x * x)
    assert r is not None and all(y * y == x * x for y in r)


# -- forms ------------------------------------------------------------------


@given(seeds, fields, st.integers(2, 5), st.booleans())
def test_forms_are_symmetric(seed, fld, n, singular):
    rng = random.Random(seed)
    f = random_form(rng, fld, n, singular)
    U, V = random_vector(rng, fld, n), random_vector(rng, fld, n)
    assert f.dot(U, V) == f.dot(V, U)
    if singular:
        assert f.determinant() == 0


def test_asymmetric_matrix_rejected():
    with pytest.raises(GeometryError):
        QForm([[1, 2], [3, 4]])


@given(seeds, fields, st.integers(2, 5))
def test_projection_residual_is_perpendicular(seed, fld, n):
    rng = random.Random(seed)
    f = random_form(rng, fld, n)
    U, V = random_vector(rng, fld, n), random_vector(rng, fld, n)
    assume(f.dot(V, V) != 0)
    P = project_onto_line(f, U, V)
    assert f.dot(vsub(U, P), V) == 0


@given(seeds, fields, st.integers(4, 5))
def test_gram_determinant_vanishes_in_low_rank(seed, fld, n):
    rng = random.Random(seed)
    f = random_form(rng, fld, n)
    base = [random_vector(rng, fld, n) for _ in range(3)]
    coeffs = [random_vector(rng, fld, 3) for _ in range(4)]
    vecs = [vcomb(*zip(c, base)) for c in coeffs]
    assert rank(vecs) <= 3
    assert gram_determinant(f, vecs) == 0


@given(seeds, fields)
def test_perp_residue_is_bilinear_in_scale(seed, fld):
    rng = random.Random(seed)
    f = random_form(rng, fld, 3)
    U, V, W = (random_vector(rng, fld, 3) for _ in range(3))
    c = fld(rng.randrange(1, 7))
    assert perp_residue(f, vcomb((c, U)), V, W) == c * perp_residue(f, U, V, W)


# -- affine -----------------------------------------------------------------


@settings(max_examples=60)
@given(seeds, fields, st.integers(2, 4))
def test_affine_laws_on_random_triangles(seed, fld, n):
    rng = random.Random(seed)
    f = random_form(rng, fld, n, singular=rng.random() < 0.3)
    pts = [random_vector(rng, fld, n) for _ in range(3)]
    try:
        m = measure_points(f, *pts)
    except GeometryError:
        assume(False)
    assert not zeros(law_residuals(m))


@settings(max_examples=40)
@given(seeds, fields, st.integers(2, 4))
def test_euler_line(seed, fld, n):
    rng = random.Random(seed)
    f = random_form(rng, fld, n)
    pts = [random_vector(rng, fld, n) for _ in range(3)]
    try:
        T = AffineTriangle(f, *pts)
        c = triangle_centers(T)
    except GeometryError:
        assume(False)
    Q = lambda A, B: f.dot(vsub(A, B), vsub(A, B))
    assert Q(c.C, pts[0]) == Q(c.C, pts[1]) == Q(c.C, pts[2]) == c.K
    assert c.euler_collinear
    assert all(all(x == 0 for x in v) for v in euler_residuals(T, c).values())


@settings(max_examples=60)
@given(seeds, fields, st.integers(2, 4))
def test_affine_pythagoras_when_perpendicular(seed, fld, n):
    rng = random.Random(seed)
    f = random_form(rng, fld, n)
    tri = right_affine_triangle(rng, f)
    assume(tri is not None)
    U, V, W = tri
    Q = lambda A, B: f.dot(vsub(A, B), vsub(A, B))
    # right angle at U: the side VW is the hypotenuse
    assert Q(U, V) + Q(U, W) == Q(V, W)


@settings(max_examples=60)
@given(seeds, fields, st.integers(2, 4))
def test_pons_asinorum(seed, fld, n):
    rng = random.Random(seed)
    f = random_form(rng, fld, n)
    U, V = random_vector(rng, fld, n), random_vector(rng, fld, n)
    d = vsub(V, U)
    a = f.dot(d, d)
    assume(a != 0)
    r = random_vector(rng, fld, n)
    normal = vcomb((1, r), (-f.dot(r, d) / a, d))
    half = fld.one / 2
    W = vcomb((half, U), (half, V), (1, normal))
    try:
        m = measure_points(f, U, V, W)
    except GeometryError:
        assume(False)
    assume(m.s_U is not None)
    assert m.Q_U == m.Q_V and m.s_U == m.s_V


# -- projective -------------------------------------------------------------


def random_proj_triangle(rng, fld, n):
    f = random_form(rng, fld, n, singular=rng.random() < 0.3)
    pts = [random_vector(rng, fld, n) for _ in range(3)]
    try:
        u, v, w = (ProjPoint(p, f) for p in pts)
        return u, v, w, proj_triangle_measure(u, v, w)
    except GeometryError:
        return None


@settings(max_examples=60)
@given(seeds, fields, st.integers(3, 5))
def test_projective_laws_on_random_triangles(seed, fld, n):
    got = random_proj_triangle(random.Random(seed), fld, n)
    assume(got is not None)
    assert not zeros(projective_law_residuals(got[3]))


@settings(max_examples=60)
@given(seeds, fields, st.integers(3, 5))
def test_rescaling_invariance(seed, fld, n):
    rng = random.Random(seed)
    got = random_proj_triangle(rng, fld, n)
    assume(got is not None)
    u, v, w, m = got
    c = fld(rng.randrange(1, 10**4))
    assume(c != 0)
    m2 = proj_triangle_measure(u.scaled(c), v, w.scaled(c * c + 1) if c * c + 1 != 0 else w)
    assert m2.quadrances() == m.quadrances() and m2.spreads() == m.spreads()
    assert u.scaled(c) == u and format_point(u.scaled(c)) == format_point(u)


@settings(max_examples=60)
@given(seeds, fields, st.integers(3, 4))
def test_projective_pythagoras_when_perpendicular(seed, fld, n):
    rng = random.Random(seed)
    f = random_form(rng, fld, n)
    tri = right_projective_triangle(rng, f)
    assume(tri is not None)
    u, v, w = tri
    try:
        q_u, q_v, q_w = proj_quadrance(v, w), proj_quadrance(u, w), proj_quadrance(u, v)
    except GeometryError:
        assume(False)
    assert q_w == q_u + q_v - q_u * q_v


@settings(max_examples=60)
@given(seeds, fields)
def test_collinear_points_satisfy_triple_quad(seed, fld):
    rng = random.Random(seed)
    f = random_form(rng, fld, 3)
    A, B = random_vector(rng, fld, 3), random_vector(rng, fld, 3)
    s, t = random_vector(rng, fld, 2)
    try:
        u, v = ProjPoint(A, f), ProjPoint(B, f)
        w = ProjPoint(vcomb((s, A), (t, B)), f)
        res = proj_triple_quad_residual(u, v, w)
    except GeometryError:
        assume(False)
    assert res == 0


HYP = QForm.diagonal([1, 1, -1])


@given(st.lists(st.tuples(*[st.integers(-20, 20)] * 3), min_size=3, max_size=3))
def test_line_coordinate_spread_matches_point_spread(reps):
    try:
        u, v, w = (ProjPoint(r, HYP) for r in reps)
        L1, L2 = line_coords_3d(w, u), line_coords_3d(w, v)
        S = proj_spread(w, u, v)
    except GeometryError:
        assume(False)
    assume(L1 != L2)
    assert meet_3d(L1, L2) == w
    assert proj_spread_from_line_coords(L1, L2) == S


@settings(max_examples=60)
@given(seeds, fields, st.integers(3, 4), st.integers(0, 9))
def test_napier_round_trip(seed, fld, n, pair):
    rng = random.Random(seed)
    tri = right_projective_triangle(rng, random_form(rng, fld, n))
    assume(tri is not None)
    u, v, w = tri
    try:
        m = proj_triangle_measure(u, v, w)
    except GeometryError:
        assume(False)
    assume(m.S_w == 1)
    measured = dict(zip(NAPIER_KEYS, (m.q_u, m.q_v, m.q_w, m.S_u, m.S_v)))
    pairs = [(a, b) for i, a in enumerate(NAPIER_KEYS) for b in NAPIER_KEYS[i + 1 :]]
    a, b = pairs[pair]
    try:
        sol = napier_solve({a: measured[a], b: measured[b]}, fld)
    except GeometryError:
        assume(False)
    # two spreads determine q_w only up to the quadratic's two roots
    if {a, b} == {"S_u", "S_v"}:
        assert all(r == 0 for r in sol.basic_residuals())
    else:
        assert sol.values() == measured


# -- spread polynomials -----------------------------------------------------


@given(st.integers(1, 25), field_and_scalars(1))
def test_spread_polynomial_triples(n, fs):
    fld, (s,) = fs
    a, b = spread_poly(n - 1)(s), spread_poly(n)(s)
    assert triple_spread_residual(a, s, b) == 0


@given(st.integers(1, 6), st.integers(1, 6), rationals)
def test_spread_composition_pointwise(n, m, s):
    assert spread_poly(n)(spread_poly(m)(s)) == spread_poly(n * m)(s)
