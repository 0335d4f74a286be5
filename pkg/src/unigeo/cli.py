"""Command-line front end.

Every subcommand builds a :class:`Report` of ``key = value`` lines from
library calls. Boolean entries are assertions: any false one makes the
exit status 1. Invalid scenes exit with status 2 and name the offending
field.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence

from . import __version__
from .affine import (
    AffineTriangle,
    cross_law_sides,
    euler_residuals,
    law_residuals,
    triangle_centers,
    triangle_measure,
    triple_spread_sides,
)
from .bilinear import QForm
from .errors import GeometryError, SceneError
from .fields import QQ, Field, Residue, make_field
from .fuzz import DEFAULT_FIELDS, run_fuzz
from .hyperbolic import MOTIVATING_POINTS, crosscheck, sine_law_constants
from .linalg import is_zero
from .projective import (
    ProjPoint,
    cross_law_sides as proj_cross_law_sides,
    dual_cross_law_sides,
    format_line,
    format_point,
    line_coords_3d,
    proj_orthocenter,
    proj_triangle_measure,
    projective_law_residuals,
    vertex_bisectors,
)
from .scene import TASKS, Scene, blame, load_scene, parse_scalar
from .solvers import NAPIER_KEYS, lambert_solve, napier_solve, right_hexagon_check
from .spreadpoly import (
    chebyshev_relation_check,
    composition_check,
    format_poly,
    spread_cyclotomic,
    spread_poly,
)

EXIT_OK, EXIT_ASSERT, EXIT_SCENE = 0, 1, 2


class Report:
    """Ordered ``key = value`` entries; booleans double as assertions."""

    def __init__(self, field: Optional[Field] = None):
        self.field = field or QQ
        self.items: List[tuple] = []

    def add(self, key: str, value) -> None:
        self.items.append((key, value))

    def check(self, key: str, ok: bool) -> None:
        self.items.append((key, bool(ok)))

    @property
    def failures(self) -> List[str]:
        return [k for k, v in self.items if v is False]

    @property
    def ok(self) -> bool:
        return not self.failures

    def render(self, value) -> object:
        if isinstance(value, bool):
            return value
        if value is None:
            return "undefined"
        if isinstance(value, ProjPoint):
            return format_point(value)
        if isinstance(value, (Fraction, Residue)):
            return self.field.format(value)
        if isinstance(value, float):
            return f"{value:.9f}"
        if isinstance(value, tuple):
            return "(" + ", ".join(str(self.render(x)) for x in value) + ")"
        return str(value)

    def text(self) -> str:
        lines = []
        for key, value in self.items:
            v = self.render(value)
            lines.append(f"{key} = {str(v).lower() if isinstance(v, bool) else v}")
        lines.append(f"ok = {'true' if self.ok else 'false'}")
        return "\n".join(lines) + "\n"

    def json(self, command: str) -> str:
        body = {k: self.render(v) for k, v in self.items}
        doc = {"command": command, "ok": self.ok, "report": body}
        return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def _vertices(scene: Scene, count: int) -> List:
    names = scene.param("vertices")
    if names is None:
        names = list(scene.points)[:count]
    if len(scene.points) < count:
        raise SceneError("points", f"need at least {count} points")
    if not isinstance(names, list) or len(names) != count:
        raise SceneError("params.vertices", f"expected {count} point names")
    return [scene.point(n) for n in names]


def _require_form(scene: Scene) -> QForm:
    if scene.form is None:
        raise SceneError("form", "missing")
    return scene.form


# -- task handlers -----------------------------------------------------------


def task_affine_triangle(scene: Scene, report: Report) -> None:
    form = _require_form(scene)
    with blame("points"):
        T = AffineTriangle(form, *_vertices(scene, 3))
    m = triangle_measure(T)
    for k in ("Q_U", "Q_V", "Q_W"):
        report.add(k, getattr(m, k))
    if m.partial:
        report.add("spreads", "undefined (null line)")
        return
    for k in ("s_U", "s_V", "s_W"):
        report.add(k, getattr(m, k))
    report.add("spread_ratio", m.spread_ratio)
    with blame("field"):
        residuals = law_residuals(m)
    for k, v in residuals.items():
        report.check(f"law.{k}", v == 0)
    lhs, rhs = cross_law_sides(m)
    report.add("cross_law_W.lhs", lhs)
    report.add("cross_law_W.rhs", rhs)
    lhs, rhs = triple_spread_sides(m)
    report.add("triple_spread.lhs", lhs)
    report.add("triple_spread.rhs", rhs)
    try:
        c = triangle_centers(T)
    except GeometryError as exc:
        report.add("centers", f"undefined ({exc})")
        return
    for k in ("C", "K", "O", "G", "N"):
        report.add(k, getattr(c, k))
    report.check("euler_collinear", c.euler_collinear)
    for k, v in euler_residuals(T, c).items():
        report.check(f"euler.{k}", is_zero(v))


def task_projective_triangle(scene: Scene, report: Report) -> None:
    _require_form(scene)
    u, v, w = _vertices(scene, 3)
    with blame("points"):
        m = proj_triangle_measure(u, v, w)
    for k in ("q_u", "q_v", "q_w", "S_u", "S_v", "S_w"):
        report.add(k, getattr(m, k))
    report.add("quadrea", m.quadrea)
    report.add("spread_ratio", m.spread_ratio)
    with blame("field"):
        residuals = projective_law_residuals(m)
    for k, val in residuals.items():
        report.check(f"law.{k}", val == 0)
    for name, sides in (("cross_law_w", proj_cross_law_sides(m)), ("dual_cross_law_w", dual_cross_law_sides(m))):
        report.add(f"{name}.lhs", sides[0])
        report.add(f"{name}.rhs", sides[1])
    try:
        report.add("orthocenter", proj_orthocenter(u, v, w))
    except GeometryError as exc:
        report.add("orthocenter", f"undefined ({exc})")
    if scene.form.dim == 3 and scene.form.is_hyperbolic_plane_form():
        for name, (a, b) in (("line_u", (v, w)), ("line_v", (u, w)), ("line_w", (u, v))):
            report.add(name, format_line(line_coords_3d(a, b)))


def task_bisectors(scene: Scene, report: Report) -> None:
    _require_form(scene)
    u, v, w = _vertices(scene, 3)
    at = scene.param("at", ["u", "v", "w"])
    if isinstance(at, str):
        at = [at]
    method = scene.param("method", "auto")
    for x in at:
        with blame("params.at"):
            found = vertex_bisectors(u, v, w, at=x, method=method)
        if not found:
            report.add(f"bisectors_{x}", "none")
        for i, (b, s) in enumerate(found, 1):
            report.add(f"bisector_{x}.{i}", b)
            report.add(f"bisector_{x}.{i}.spread", s)


def task_hexagon(scene: Scene, report: Report) -> None:
    _require_form(scene)
    pts = _vertices(scene, 6)
    with blame("points"):
        h = right_hexagon_check(pts)
    labels = ("q12/q45", "q34/q61", "q56/q23")
    for label, r in zip(labels, h.ratios):
        report.add(f"ratio {label}", r)
    report.check("equal", h.equal)
    for label, r in zip(("q12/q45", "q23/q56", "q34/q61"), h.literal):
        report.add(f"literal {label}", r)


def task_solve_right(scene: Scene, report: Report) -> None:
    raw = scene.param("knowns", required=True)
    if not isinstance(raw, dict):
        raise SceneError("params.knowns", "expected an object such as {'q_u': '1/3'}")
    knowns = {k: parse_scalar(scene.field, v, f"params.knowns.{k}") for k, v in raw.items()}
    with blame("params.knowns"):
        sol = napier_solve(knowns, field=scene.field)
    for k in NAPIER_KEYS:
        report.add(k, getattr(sol, k))
    report.add("S_w", sol.S_w)
    if sol.degenerate_root:
        report.add("discarded_root", sol.degenerate_root)
    for name, r in zip(("pythagoras", "thales_u", "thales_v"), sol.basic_residuals()):
        report.check(f"law.{name}", r == 0)


def task_lambert(scene: Scene, report: Report) -> None:
    q = scene.scalar_param("q")
    p = scene.scalar_param("p")
    with blame("params"):
        L = lambert_solve(q, p)
    for k, v in L.as_dict().items():
        report.add(k, v)


def task_spread_poly(scene: Scene, report: Report) -> None:
    n = scene.int_param("n", 5)
    if n < 0:
        raise SceneError("params.n", "must be >= 0")
    for k in range(n + 1):
        report.add(f"S_{k}", format_poly(spread_poly(k)))
    at = scene.scalar_param("at", required=False)
    if at is not None:
        report.add(f"S_{n}({scene.field.format(at)})", spread_poly(n)(at))
    top = max(n, 1)
    report.check("composition", all(composition_check(a, b) for a in range(1, min(top, 6) + 1) for b in range(1, min(top, 6) + 1)))
    report.check("chebyshev", all(chebyshev_relation_check(k) for k in range(n + 1)))


def task_cyclotomic(scene: Scene, report: Report) -> None:
    k_max = scene.int_param("k", 8)
    if k_max < 1:
        raise SceneError("params.k", "must be >= 1")
    for k in range(1, k_max + 1):
        phi = spread_cyclotomic(k)
        report.add(f"phi_{k}", format_poly(phi))
        report.add(f"deg phi_{k}", phi.degree)
    ok = True
    for n in range(1, k_max + 1):
        prod = spread_poly(0) + 1
        for d in range(1, n + 1):
            if n % d == 0:
                prod = prod * spread_cyclotomic(d)
        ok = ok and prod == spread_poly(n)
    report.check("product", ok)


def task_hyperbolic_demo(scene: Scene, report: Report) -> None:
    if scene.field != QQ:
        raise SceneError("field", "the disk bridge starts from exact rationals (field Q)")
    if scene.points:
        pts = _vertices(scene, 3)
    else:
        form = QForm.diagonal([1, 1, -1])
        pts = [ProjPoint.parse(t, form) for t in MOTIVATING_POINTS]
    with blame("points"):
        cc = crosscheck(*pts, strict=False)
    for i, p in enumerate(pts, 1):
        report.add(f"a{i}", p)
    for name, (a, b) in (("line_1", (1, 2)), ("line_2", (0, 2)), ("line_3", (0, 1))):
        report.add(name, format_line(line_coords_3d(pts[a], pts[b])))
    for i in range(3):
        report.add(f"q{i + 1}", cc.q[i])
    for i in range(3):
        report.add(f"S{i + 1}", cc.S[i])
    for i, z in enumerate(cc.points, 1):
        report.add(f"z{i}", f"{z.re:.9f} {'-' if z.im < 0 else '+'} {abs(z.im):.9f}i")
    for i, r in enumerate(cc.rhos, 1):
        report.add(f"rho{i}", r)
    for i, t in enumerate(cc.thetas, 1):
        report.add(f"theta{i}", t)
    for i, c in enumerate(sine_law_constants(cc.rhos, cc.thetas), 1):
        report.add(f"sine_constant{i}", c)
    for k, v in cc.residuals.items():
        report.add(f"residual {k}", f"{v:.3e}")
    report.check("crosscheck", cc.ok)


HANDLERS: Dict[str, Callable[[Scene, Report], None]] = {
    "affine-triangle": task_affine_triangle,
    "projective-triangle": task_projective_triangle,
    "solve-right": task_solve_right,
    "lambert": task_lambert,
    "hexagon": task_hexagon,
    "spread-poly": task_spread_poly,
    "cyclotomic": task_cyclotomic,
    "bisectors": task_bisectors,
    "hyperbolic-demo": task_hyperbolic_demo,
}

SCENE_REQUIRED = {"affine-triangle", "projective-triangle", "hexagon", "bisectors", "verify"}


def run_scene(scene: Scene) -> Report:
    """Compute the report for a parsed scene."""
    report = Report(scene.field)
    HANDLERS[scene.task](scene, report)
    return report


def run(scene_path: str, task: Optional[str] = None) -> Report:
    return run_scene(load_scene(scene_path, task))


# -- argument handling -------------------------------------------------------


def _scene_from_args(args) -> Scene:
    cmd = args.command
    if args.scene:
        scene = load_scene(args.scene)
        if cmd != "verify" and scene.task != cmd:
            raise SceneError("task", f"scene task is {scene.task!r} but the command is {cmd!r}")
        return scene
    if cmd in SCENE_REQUIRED:
        raise SceneError("scene", f"{cmd} needs --scene <path>")
    fld = make_field(getattr(args, "field", None) or "Q")
    scene = Scene(field=fld, descriptor=None, task=cmd)
    if cmd == "solve-right":
        knowns = {}
        for item in args.known or []:
            key, sep, val = item.partition("=")
            if not sep:
                raise SceneError("known", f"expected name=value, got {item!r}")
            knowns[key.strip()] = val.strip()
        scene.params["knowns"] = knowns
    elif cmd == "lambert":
        scene.params.update(q=args.q, p=args.p)
    elif cmd == "spread-poly":
        scene.params["n"] = args.n
        if args.at is not None:
            scene.params["at"] = args.at
    elif cmd == "cyclotomic":
        scene.params["k"] = args.k
    return scene


def _emit(report: Report, args, command: str) -> int:
    if not args.quiet:
        sys.stdout.write(report.json(command) if args.json else report.text())
    if not report.ok:
        if args.quiet:
            print("failed: " + ", ".join(report.failures), file=sys.stderr)
        return EXIT_ASSERT
    return EXIT_OK


def _cmd_fuzz(args) -> int:
    seed = args.seed
    if seed is None:
        env = os.environ.get("UNIGEO_SEED")
        try:
            seed = int(env) if env is not None else 0
        except ValueError:
            raise SceneError("UNIGEO_SEED", f"expected an integer, got {env!r}") from None
    fields = args.field or list(DEFAULT_FIELDS)
    for f in fields:
        with blame("field"):
            make_field(f)
    result = run_fuzz(seed=seed, count=args.count, fields=fields, forms=args.forms)
    report = Report()
    for k, v in result.summary().items():
        if k != "ok":
            report.add(k, v if not isinstance(v, int) else str(v))
    for i, msg in enumerate(result.failures, 1):
        report.add(f"failure.{i}", msg)
    report.check("laws", result.ok)
    return _emit(report, args, "fuzz")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--scene", help="JSON scene file")
    common.add_argument("--json", action="store_true", help="machine-readable report")
    common.add_argument("--quiet", action="store_true", help="print nothing; exit status only")

    parser = argparse.ArgumentParser(prog="unigeo", description="Exact rational trigonometry over Q and F_p.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    helps = {
        "affine-triangle": "quadrances, spreads, laws and centers of an affine triangle",
        "projective-triangle": "projective quadrances, spreads, laws and orthocenter",
        "bisectors": "vertex bisectors of a projective triangle",
        "hexagon": "opposite-side ratios of a right hexagon",
        "verify": "check every law for the task in a scene",
    }
    for name, text in helps.items():
        sub.add_parser(name, parents=[common], help=text)

    p = sub.add_parser("solve-right", parents=[common], help="complete a right triangle from two quantities")
    p.add_argument("--known", action="append", metavar="NAME=VALUE", help="e.g. q_u=1/3 (give two)")
    p.add_argument("--field", default="Q")

    p = sub.add_parser("lambert", parents=[common], help="Lambert quadrilateral from q and p")
    p.add_argument("--q", default="1/2")
    p.add_argument("--p", default="1/3")
    p.add_argument("--field", default="Q")

    p = sub.add_parser("spread-poly", parents=[common], help="spread polynomials S_0..S_n")
    p.add_argument("--n", type=int, default=5)
    p.add_argument("--at", help="evaluate S_n at this scalar")
    p.add_argument("--field", default="Q")

    p = sub.add_parser("cyclotomic", parents=[common], help="factors phi_1..phi_k of the spread polynomials")
    p.add_argument("--k", type=int, default=8)

    sub.add_parser("hyperbolic-demo", parents=[common], help="projective vs Poincare disk measurements")

    p = sub.add_parser("fuzz", parents=[common], help="random configurations with exact law checks")
    p.add_argument("--seed", type=int, default=None, help="defaults to $UNIGEO_SEED, then 0")
    p.add_argument("--count", type=int, default=100, help="triangles of each kind per field")
    p.add_argument("--field", action="append", help=f"repeatable; default {', '.join(DEFAULT_FIELDS)}")
    p.add_argument("--forms", type=int, default=10, help="random forms per field")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "fuzz":
            return _cmd_fuzz(args)
        scene = _scene_from_args(args)
        if args.command == "verify":
            full = run_scene(scene)
            report = Report(scene.field)
            report.items = [(k, v) for k, v in full.items if isinstance(v, bool)]
        else:
            report = run_scene(scene)
    except SceneError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SCENE
    return _emit(report, args, args.command)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
