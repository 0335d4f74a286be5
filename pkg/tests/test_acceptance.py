"""Acceptance criteria, one test each, at the stated tolerances and time limits.

Each test prints a single PASS/FAIL line to the terminal.
"""

import time
from fractions import Fraction as F
from math import gcd


from unigeo.affine import (
    AffineTriangle,
    cross_law_sides,
    euler_residuals,
    law_residuals,
    measure_points,
    triangle_centers,
    triple_spread_sides,
)
from unigeo.bilinear import QForm
from unigeo.fields import GF, QQ
from unigeo.hyperbolic import crosscheck, sine_law_constants
from unigeo.projective import (
    LineCoords3,
    ProjPoint,
    cross_law_sides as proj_cross_sides,
    dual_cross_law_sides,
    line_coords_3d,
    proj_orthocenter,
    proj_triangle_measure,
    projective_law_residuals,
    vertex_bisectors,
)
from unigeo.fuzz import run_fuzz
from unigeo.linalg import rank, vsub
from unigeo.solvers import equilateral_solve
from unigeo.spreadpoly import (
    IntPolynomial,
    chebyshev_relation_check,
    composition_check,
    spread_cyclotomic,
    spread_poly,
)

from conftest import F11_POINTS, HYP_POINTS, M4, M5, U4, V4, W4


def _criterion(capsys, number, title, limit, body):
    start = time.perf_counter()
    failed = []
    try:
        body(failed)
    except Exception as exc:  # report, then fail
        failed.append(f"raised {type(exc).__name__}: {exc}")
    elapsed = time.perf_counter() - start
    if elapsed >= limit:
        failed.append(f"took {elapsed:.2f}s, limit {limit}s")
    status = "PASS" if not failed else "FAIL"
    with capsys.disabled():
        print(f"\ncriterion {number} [{status}] {title} ({elapsed:.2f}s)")
        for msg in failed:
            print(f"    - {msg}")
    assert not failed, failed


def _expect(failed, label, got, want):
    if got != want:
        failed.append(f"{label}: got {got}, want {want}")


def test_criterion_1_affine_rational_example(capsys):
    def body(failed):
        f = QForm(M4, QQ)
        U, V, W = (f.vec(p) for p in (U4, V4, W4))
        m = measure_points(f, U, V, W)
        _expect(failed, "Q", m.quadrances(), (F(177, 4), F(71, 4), F(38)))
        _expect(failed, "s", m.spreads(), (F(10263, 10792), F(3421, 8968), F(3421, 4189)))
        _expect(failed, "spread ratio", m.spread_ratio, F(3421, 159182))
        lhs, rhs = cross_law_sides(m)
        _expect(failed, "cross law", lhs, rhs)
        lhs, rhs = triple_spread_sides(m)
        _expect(failed, "triple spread", (lhs, rhs), (F(29258102500, 6334727281),) * 2)
        bad = {k: v for k, v in law_residuals(m).items() if v != 0}
        _expect(failed, "law residuals", bad, {})
        T = AffineTriangle(f, U, V, W)
        c = triangle_centers(T)
        _expect(failed, "C", c.C, (F(144, 311), F(3789, 3421), F(18773, 13684), F(46709, 13684)))
        _expect(failed, "K", c.K, F(79591, 6842))
        _expect(failed, "O", c.O, (F(334, 311), F(6106, 3421), F(9429, 3421), F(9145, 3421)))
        _expect(failed, "G", c.G, (F(2, 3), F(4, 3), F(11, 6), F(19, 6)))
        _expect(failed, "N", c.N, (F(239, 311), F(9895, 6842), F(56489, 27368), F(83289, 27368)))
        _expect(failed, "collinear", rank([vsub(X, c.C) for X in (c.G, c.N, c.O)]), 1)
        _expect(failed, "euler flag", c.euler_collinear, True)
        for k, v in euler_residuals(T, c).items():
            _expect(failed, k, all(x == 0 for x in v), True)

    _criterion(capsys, 1, "affine Q^4 example", 1.0, body)


def test_criterion_2_hyperbolic_example(capsys):
    def body(failed):
        f = QForm.diagonal([1, 1, -1])
        a1, a2, a3 = (ProjPoint.parse(t, f) for t in HYP_POINTS)
        lines = (line_coords_3d(a2, a3), line_coords_3d(a1, a3), line_coords_3d(a1, a2))
        want = [(8, -1, 3), (2, 1, 1), (2, -1, 1)]
        for i, (L, w) in enumerate(zip(lines, want), 1):
            _expect(failed, f"line {i}", L, LineCoords3(*w, f))
        m = proj_triangle_measure(a1, a2, a3)
        _expect(failed, "q", m.quadrances(), (F(-2, 5), F(-1, 15), F(-4, 21)))
        _expect(failed, "S", m.spreads(), (F(3, 4), F(1, 8), F(5, 14)))
        ratios = {S / q for S, q in zip(m.spreads(), m.quadrances())}
        _expect(failed, "S/q", ratios, {F(-15, 8)})

        cc = crosscheck(a1, a2, a3, strict=False)
        for got, want in zip(cc.rhos, (0.596455365, 0.255412812, 0.423648930)):
            if abs(got - want) >= 1e-8:
                failed.append(f"rho {got} vs {want}")
        if abs(cc.thetas[0] - 2.094395102) >= 1e-8:
            failed.append(f"theta1 {cc.thetas[0]}")
        for k in sine_law_constants(cc.rhos, cc.thetas):
            if abs(k - 1.36931) >= 1e-4:
                failed.append(f"sine-law constant {k}")
        for name, r in cc.residuals.items():
            if abs(r) >= 1e-9:
                failed.append(f"{name} = {r:.3e}")

    _criterion(capsys, 2, "hyperbolic motivating example", 1.0, body)


def test_criterion_3_f11_example(capsys):
    def body(failed):
        GF11 = GF(11)
        f = QForm(M5, GF11)
        u, v, w = (ProjPoint.parse(t, f) for t in F11_POINTS)
        m = proj_triangle_measure(u, v, w)
        _expect(failed, "q", m.quadrances(), tuple(map(GF11, (9, 8, 1))))
        _expect(failed, "S", m.spreads(), tuple(map(GF11, (2, 3, 10))))
        _expect(failed, "spread ratio", m.spread_ratio, GF11(10))
        _expect(failed, "cross law", proj_cross_sides(m), (GF11(0), GF11(0)))
        _expect(failed, "dual cross law", dual_cross_law_sides(m), (GF11(5), GF11(5)))
        S_u, S_v, S_w = m.spreads()
        _expect(failed, "dual Pythagoras", S_w, S_u + S_v - S_u * S_v)
        _expect(failed, "dual Pythagoras value", S_w, GF11(10))
        res = projective_law_residuals(m)
        _expect(failed, "law residuals", {k: v for k, v in res.items() if v != 0}, {})

        found = vertex_bisectors(u, v, w, at="v")
        want = {
            ProjPoint.parse("3:0:5:8:7", f): GF11(10),
            ProjPoint.parse("3:2:7:6:10", f): GF11(2),
        }
        _expect(failed, "bisectors at v", dict(found), want)
        _expect(failed, "bisectors at u", vertex_bisectors(u, v, w, at="u"), [])
        _expect(failed, "bisectors at w", vertex_bisectors(u, v, w, at="w"), [])
        _expect(failed, "orthocenter", proj_orthocenter(u, v, w), ProjPoint.parse("9:1:0:4:1", f))

    _criterion(capsys, 3, "projective F11 example", 1.0, body)


def _totient(n):
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def test_criterion_4_spread_polynomials(capsys):
    printed = {
        0: (),
        1: (0, 1),
        2: (0, 4, -4),
        3: (0, 9, -24, 16),
        4: (0, 16, -80, 128, -64),
        5: (0, 25, -200, 560, -640, 256),
    }

    def body(failed):
        for n, coeffs in printed.items():
            _expect(failed, f"S_{n}", spread_poly(n).coeffs, coeffs)
        for n in range(1, 7):
            for k in range(1, 7):
                if not composition_check(n, k):
                    failed.append(f"S_{n} o S_{k} != S_{n * k}")
        for n in range(11):
            if not chebyshev_relation_check(n):
                failed.append(f"Chebyshev relation fails at n = {n}")
        for n in range(1, 31):
            prod = IntPolynomial([1])
            for d in range(1, n + 1):
                if n % d == 0:
                    prod = prod * spread_cyclotomic(d)
            _expect(failed, f"product at n = {n}", prod, spread_poly(n))
            _expect(failed, f"deg phi_{n}", spread_cyclotomic(n).degree, _totient(n))
        _expect(failed, "equilateral q for S = 3/4", equilateral_solve(QQ, S=F(3, 4)), (F(8, 9),))

    _criterion(capsys, 4, "spread polynomials", 5.0, body)


def test_criterion_5_property_suites(capsys):
    def body(failed):
        report = run_fuzz(seed=2024, count=200, forms=10)
        s = report.summary()
        if report.triangles < 1000:
            failed.append(f"only {report.triangles} triangles")
        for name, r in report.fields.items():
            if r.forms < 10 or r.singular_forms == 0:
                failed.append(f"{name}: {r.forms} forms, {r.singular_forms} singular")
            for key in ("right_affine", "right_projective", "lambert", "napier", "rescaled"):
                if getattr(r, key) == 0:
                    failed.append(f"{name}: no {key} checks ran")
        failed.extend(report.failures[:10])
        with capsys.disabled():
            print(
                f"\n    {report.triangles} triangles; "
                + ", ".join(f"{k}={s[f'{k}.lambert']}/{s[f'{k}.napier']}" for k in report.fields)
                + " (lambert/napier per field)"
            )

    _criterion(capsys, 5, "property suites over Q, F11, F1009, F65537", 60.0, body)
