import random
from fractions import Fraction as F
from itertools import combinations

import pytest

from unigeo.bilinear import QForm
from unigeo.errors import (
    InconsistentKnowns,
    NotPlanar,
    NotRightHexagon,
    SingularDenominator,
    UndefinedCase,
    ZeroQuadrance,
)
from unigeo.fields import GF, QQ
from unigeo.fuzz import lambert_configuration, right_hexagon
from unigeo.linalg import cross3, rank
from unigeo.projective import ProjPoint
from unigeo.solvers import (
    NAPIER_KEYS,
    equilateral_solve,
    isosceles_derive,
    lambert_solve,
    measure_lambert,
    napier_solve,
    right_hexagon_check,
)


def test_napier_two_quadrances():
    sol = napier_solve({"q_u": F(1, 2), "q_v": F(1, 2)})
    assert (sol.q_w, sol.S_u, sol.S_v) == (F(3, 4), F(2, 3), F(2, 3))
    assert all(r == 0 for r in sol.basic_residuals())
    assert sol.S_w == 1


def test_napier_two_spreads_flags_degenerate_root():
    sol = napier_solve({"S_u": 1, "S_v": 1})
    assert (sol.q_u, sol.q_v, sol.q_w) == (1, 1, 1)
    assert sol.degenerate_root == "q_w = 0"


def test_napier_spread_and_hypotenuse():
    sol = napier_solve({"S_u": F(2, 3), "q_w": F(3, 4)})
    assert (sol.q_u, sol.q_v, sol.S_v) == (F(1, 2), F(1, 2), F(2, 3))


@pytest.mark.parametrize("pair", list(combinations(NAPIER_KEYS, 2)))
def test_napier_round_trip_every_pair(pair):
    truth = napier_solve({"q_u": F(1, 3), "q_v": F(2, 7)}).values()
    sol = napier_solve({k: truth[k] for k in pair})
    assert sol.values() == truth


@pytest.mark.parametrize("pair", list(combinations(NAPIER_KEYS, 2)))
def test_napier_round_trip_f1009(pair):
    f = GF(1009)
    truth = napier_solve({"q_u": f(5), "q_v": f(77)}).values()
    assert napier_solve({k: truth[k] for k in pair}).values() == truth


def test_napier_errors():
    with pytest.raises(UndefinedCase):
        napier_solve({"q_u": 1, "q_w": F(1, 2)})
    with pytest.raises(UndefinedCase):
        napier_solve({"S_u": F(1, 2), "S_v": F(1, 2)})
    with pytest.raises(InconsistentKnowns):
        napier_solve({"q_u": F(1, 2), "q_v": F(1, 2), "q_w": F(1, 3)})
    with pytest.raises(InconsistentKnowns):
        napier_solve({"q_u": F(1, 2)})
    with pytest.raises(InconsistentKnowns):
        napier_solve({"q_x": 1, "q_u": 2})


def test_napier_consistent_extra_known():
    sol = napier_solve({"q_u": F(1, 2), "q_v": F(1, 2), "q_w": F(3, 4)})
    assert sol.S_u == F(2, 3)


def test_isosceles():
    r = isosceles_derive(F(1, 2), F(1, 2))
    assert r.q_w == r.S_w == F(8, 9)
    r = isosceles_derive(F(1, 3), 1)
    assert r.q_w == 0 and r.S_w == 0
    assert isosceles_derive(F(8, 9), F(3, 4)).q_w == F(8, 9)
    r = isosceles_derive(F(2, 5), F(1, 7))
    assert r.S_w * F(2, 5) == F(1, 7) * r.q_w
    with pytest.raises(ZeroQuadrance):
        isosceles_derive(0, F(1, 2))
    with pytest.raises(SingularDenominator):
        isosceles_derive(2, F(1, 2))


def test_equilateral():
    assert equilateral_solve(QQ, S=F(3, 4)) == (F(8, 9),)
    assert equilateral_solve(QQ, S=0) == (F(3, 4),)
    assert equilateral_solve(QQ, S=1) == (1,)
    # the relation is symmetric in S and q, and q = 8/9 admits a second spread
    assert equilateral_solve(QQ, q=F(8, 9)) == (F(3, 4), F(15, 16))
    for x in equilateral_solve(QQ, S=F(1, 2)) or ():
        assert (1 - F(1, 2) * x) ** 2 == 4 * (1 - F(1, 2)) * (1 - x)
    with pytest.raises(ValueError):
        equilateral_solve(QQ)


def test_equilateral_finite_field():
    f = GF(11)
    for S in f.elements():
        for q in equilateral_solve(f, S=S):
            assert (1 - S * q) ** 2 == 4 * (1 - S) * (1 - q)
            assert q != 0


def test_lambert_closed_forms():
    L = lambert_solve(F(1, 2), F(1, 3))
    assert (L.y, L.x, L.s, L.r, L.S) == (F(2, 5), F(1, 5), F(2, 3), F(3, 5), F(5, 6))
    L = lambert_solve(F(1, 2), 0)
    assert (L.x, L.y, L.s, L.r, L.S) == (0, F(1, 2), F(1, 2), F(1, 2), 1)
    with pytest.raises(SingularDenominator):
        lambert_solve(-1, -1)


@pytest.mark.parametrize("field", [QQ, GF(1009)])
def test_lambert_matches_constructed_configuration(field):
    rng = random.Random(7)
    forms = [QForm.diagonal([1, 1, -1], field), QForm([[2, 1, 0, 0], [1, 3, 0, 1], [0, 0, -1, 2], [0, 1, 2, 5]], field)]
    checked = 0
    for form in forms:
        for _ in range(15):
            cfg = lambert_configuration(rng, form)
            if cfg is None:
                continue
            assert rank([p.rep for p in cfg]) == 3
            try:
                measured = measure_lambert(*cfg)
                predicted = lambert_solve(measured.q, measured.p)
            except (SingularDenominator, ArithmeticError, ValueError):
                continue
            assert measured == predicted
            checked += 1
    assert checked >= 10


def test_right_hexagon_equal_ratios():
    rng = random.Random(1)
    H = QForm.diagonal([1, 1, -1])
    seen = 0
    while seen < 5:
        pts = right_hexagon(rng, H)
        if pts is None:
            continue
        try:
            r = right_hexagon_check(pts)
        except (NotRightHexagon, SingularDenominator):
            continue
        assert r.equal and len(set(r.ratios)) == 1
        seen += 1


def test_symmetric_hexagon_ratios_are_one():
    # the coordinate triangle traversed twice: opposite sides coincide
    I3 = QForm.identity(3)
    poles = [(1, 0, 0), (0, 1, 0), (0, 0, 1)] * 2
    pts = [ProjPoint(cross3(poles[i], poles[(i + 1) % 6]), I3) for i in range(6)]
    r = right_hexagon_check(pts)
    assert r.equal and r.ratios == (1, 1, 1)


def test_hexagon_scene_ratios():
    pts = [ProjPoint.parse(t, QForm.diagonal([1, 1, -1])) for t in ("1:-3:2", "4:-2:3", "9:1:-7", "7:3:-6", "9:7:8", "1:3:2")]
    r = right_hexagon_check(pts)
    assert r.equal and r.ratios == (F(-25, 363),) * 3
    # the alternative pairing disagrees in its middle entry
    assert r.literal[1] == 1 / r.literal[0]


def test_hexagon_errors():
    H = QForm.diagonal([1, 1, -1])
    pts = [ProjPoint.parse(t, H) for t in ("1:-3:2", "4:-2:3", "9:1:-7", "7:3:-6", "9:7:8", "1:3:2")]
    bent = pts[:5] + [ProjPoint.parse("1:3:3", H)]
    with pytest.raises(NotRightHexagon):
        right_hexagon_check(bent)
    I4 = QForm.identity(4)
    e = [ProjPoint(v, I4) for v in ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1), (1, 1, 0, 0), (0, 0, 1, 1))]
    with pytest.raises(NotPlanar):
        right_hexagon_check(e)
