from fractions import Fraction as F

import pytest

from unigeo.bilinear import QForm
from unigeo.fields import GF, QQ
from unigeo.projective import ProjPoint

M4 = [[0, 1, 0, 3], [1, 1, 2, -1], [0, 2, 1, 0], [3, -1, 0, -1]]
U4 = (1, 2, 4, F(3, 2))
V4 = (-1, 0, F(1, 2), 3)
W4 = (2, 2, 1, 5)

M5 = [
    [1, 10, 1, 0, 0],
    [10, 2, 5, 2, 0],
    [1, 5, 1, 4, 3],
    [0, 2, 4, 7, 2],
    [0, 0, 3, 2, 8],
]
F11_POINTS = ("1:4:2:6:1", "1:2:3:4:1", "0:8:8:3:1")
HYP_POINTS = ("1:0:2", "1:-1:3", "2:1:5")


@pytest.fixture
def q4_form():
    return QForm(M4, QQ)


@pytest.fixture
def q4_points(q4_form):
    return tuple(q4_form.vec(p) for p in (U4, V4, W4))


@pytest.fixture
def f11_form():
    return QForm(M5, GF(11))


@pytest.fixture
def f11_triangle(f11_form):
    return tuple(ProjPoint.parse(t, f11_form) for t in F11_POINTS)


@pytest.fixture
def hyp_form():
    return QForm.diagonal([1, 1, -1])


@pytest.fixture
def hyp_triangle(hyp_form):
    return tuple(ProjPoint.parse(t, hyp_form) for t in HYP_POINTS)
