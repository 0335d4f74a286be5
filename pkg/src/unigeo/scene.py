"""Scene documents: one JSON object describing a field, a form, points and a task.

Scalars are always strings so nothing passes through a binary float.
Affine points are arrays of scalar strings, projective points are colon
strings such as ``"1:4:2:6:1"``::

    {
      "field": "F11",
      "dimension": 5,
      "form": [["1", "0", ...], ...],
      "points": {"u": "1:4:2:6:1", "v": "...", "w": "..."},
      "task": "projective-triangle",
      "params": {}
    }

``form`` may also be ``"identity"`` or ``{"diagonal": [...]}``.
"""

from __future__ import annotations

import json
from contextlib import contextmanager
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Iterator, List, Mapping, Optional, Union

from .bilinear import QForm
from .errors import FieldError, GeometryError, SceneError
from .fields import Field, FieldDescriptor, make_field
from .projective import ProjPoint

TASKS = (
    "affine-triangle",
    "projective-triangle",
    "solve-right",
    "lambert",
    "hexagon",
    "spread-poly",
    "cyclotomic",
    "bisectors",
    "hyperbolic-demo",
)

# tasks whose points are homogeneous colon strings
PROJECTIVE_TASKS = {"projective-triangle", "hexagon", "bisectors", "hyperbolic-demo"}


@contextmanager
def blame(name: str) -> Iterator[None]:
    """Re-raise library errors as a SceneError naming ``name``."""
    try:
        yield
    except SceneError:
        raise
    except (GeometryError, ZeroDivisionError, ValueError) as exc:
        raise SceneError(name, str(exc) or type(exc).__name__) from exc


@dataclass
class Scene:
    field: Field
    descriptor: FieldDescriptor
    task: str
    dimension: Optional[int] = None
    form: Optional[QForm] = None
    points: Dict[str, Any] = field(default_factory=dict)
    params: Dict[str, Any] = field(default_factory=dict)

    @property
    def projective(self) -> bool:
        return self.task in PROJECTIVE_TASKS

    def point(self, name: str):
        if name not in self.points:
            raise SceneError(f"points.{name}", "missing")
        return self.points[name]

    def param(self, name: str, default=None, required: bool = False):
        if name not in self.params:
            if required:
                raise SceneError(f"params.{name}", "missing")
            return default
        return self.params[name]

    def scalar_param(self, name: str, required: bool = True):
        raw = self.param(name, required=required)
        if raw is None:
            return None
        return parse_scalar(self.field, raw, f"params.{name}")

    def int_param(self, name: str, default: int) -> int:
        raw = self.param(name, default)
        try:
            value = int(raw)
        except (TypeError, ValueError):
            raise SceneError(f"params.{name}", f"expected an integer, got {raw!r}") from None
        if isinstance(raw, bool) or str(value) != str(raw).strip():
            raise SceneError(f"params.{name}", f"expected an integer, got {raw!r}")
        return value


def parse_scalar(fld: Field, raw, where: str):
    if not isinstance(raw, str):
        raise SceneError(where, f"scalars must be strings, got {type(raw).__name__}")
    with blame(where):
        return fld.parse(raw)


def _parse_form(raw, fld: Field, dim: Optional[int]) -> QForm:
    if raw == "identity":
        if dim is None:
            raise SceneError("dimension", "required when form is 'identity'")
        return QForm.identity(dim, fld)
    if isinstance(raw, Mapping):
        if set(raw) != {"diagonal"} or not isinstance(raw["diagonal"], list):
            raise SceneError("form", "expected {'diagonal': [...]} or a matrix")
        entries = [parse_scalar(fld, x, f"form.diagonal[{i}]") for i, x in enumerate(raw["diagonal"])]
        if not entries:
            raise SceneError("form", "empty diagonal")
        with blame("form"):
            return QForm.diagonal(entries, fld)
    if not isinstance(raw, list) or not raw or not all(isinstance(r, list) for r in raw):
        raise SceneError("form", "expected a square matrix of scalar strings")
    rows = [
        [parse_scalar(fld, x, f"form[{i}][{j}]") for j, x in enumerate(row)]
        for i, row in enumerate(raw)
    ]
    with blame("form"):
        return QForm(rows, fld)


def _parse_points(raw, form: QForm, projective: bool) -> Dict[str, Any]:
    if not isinstance(raw, Mapping):
        raise SceneError("points", "expected an object mapping names to coordinates")
    fld, n = form.field, form.dim
    out: Dict[str, Any] = {}
    for name, coords in raw.items():
        where = f"points.{name}"
        if projective:
            if not isinstance(coords, str):
                raise SceneError(where, "projective points are colon strings like '1:0:2'")
            parts = coords.strip().strip("[]").split(":")
            values = [parse_scalar(fld, p, where) for p in parts]
        else:
            if not isinstance(coords, list):
                raise SceneError(where, "affine points are arrays of scalar strings")
            values = [parse_scalar(fld, p, f"{where}[{i}]") for i, p in enumerate(coords)]
        if len(values) != n:
            raise SceneError(where, f"has {len(values)} coordinates, dimension is {n}")
        with blame(where):
            out[name] = ProjPoint(values, form) if projective else form.vec(values)
    return out


def parse_scene(doc: Mapping, task: Optional[str] = None) -> Scene:
    """Validate a decoded scene document; ``task`` overrides the document's task."""
    if not isinstance(doc, Mapping):
        raise SceneError("scene", "top level must be a JSON object")
    known = {"field", "dimension", "form", "points", "task", "params", "description"}
    extra = sorted(set(doc) - known)
    if extra:
        raise SceneError(extra[0], "unknown key")

    task = task or doc.get("task")
    if task is None:
        raise SceneError("task", "missing")
    if task not in TASKS:
        raise SceneError("task", f"unknown task {task!r}")

    raw_field = doc.get("field", "Q")
    if not isinstance(raw_field, str):
        raise SceneError("field", "expected a string such as 'Q' or 'F11'")
    try:
        desc = FieldDescriptor.parse(raw_field)
        fld = make_field(desc)
    except (FieldError, ValueError) as exc:
        raise SceneError("field", str(exc)) from exc

    dim = doc.get("dimension")
    if dim is not None and (isinstance(dim, bool) or not isinstance(dim, int) or dim < 1):
        raise SceneError("dimension", "expected a positive integer")

    params = doc.get("params", {})
    if not isinstance(params, Mapping):
        raise SceneError("params", "expected an object")

    scene = Scene(field=fld, descriptor=desc, task=task, dimension=dim, params=dict(params))
    if "form" in doc:
        form = _parse_form(doc["form"], fld, dim)
        if dim is not None and form.dim != dim:
            raise SceneError("form", f"is {form.dim}x{form.dim} but dimension is {dim}")
        scene.form = form
        scene.dimension = form.dim
    if "points" in doc:
        if scene.form is None:
            raise SceneError("form", "required when points are given")
        scene.points = _parse_points(doc["points"], scene.form, task in PROJECTIVE_TASKS)
    return scene


def load_scene(path: Union[str, Path], task: Optional[str] = None) -> Scene:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise SceneError("scene", f"cannot read {path}: {exc.strerror}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SceneError("scene", f"invalid JSON at line {exc.lineno}: {exc.msg}") from exc
    return parse_scene(doc, task)


def require_points(scene: Scene, names: List[str]) -> List[Any]:
    return [scene.point(n) for n in names]
