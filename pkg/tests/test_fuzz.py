import random

from unigeo.bilinear import QForm
from unigeo.fields import GF, QQ
from unigeo.fuzz import random_form, right_affine_triangle, right_projective_triangle, run_field, run_fuzz
from unigeo.linalg import rank


def test_singular_forms_are_singular():
    rng = random.Random(0)
    for fld in (QQ, GF(11), GF(1009)):
        for n in (3, 4):
            f = random_form(rng, fld, n, singular=True)
            assert rank(f.matrix) < n if any(x != 0 for r in f.matrix for x in r) else True
            assert f.determinant() == 0


def test_constructed_right_triangles():
    rng = random.Random(2)
    f = QForm([[2, 1, 0], [1, -1, 3], [0, 3, 1]])
    U, V, W = right_affine_triangle(rng, f)
    from unigeo.linalg import vsub

    assert f.dot(vsub(V, U), vsub(W, U)) == 0
    tri = right_projective_triangle(rng, f)
    from unigeo.projective import lines_perpendicular

    assert lines_perpendicular(tri[2], tri[0], tri[1])


def test_run_fuzz_reproducible():
    a = run_fuzz(seed=4, count=10, fields=["F11", "Q"], forms=4)
    b = run_fuzz(seed=4, count=10, fields=["F11", "Q"], forms=4)
    assert a.summary() == b.summary()
    assert a.ok


def test_field_report_counts():
    r = run_field("F1009", seed=1, count=20, forms=10)
    assert r.forms == 10 and r.singular_forms == 5
    assert r.triangles > 0 and not r.failures
