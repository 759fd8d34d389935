"""JSON interchange for fuzzy star-shaped numbers and diagnostic configs.

Document shape::

    {
      "dim": 1 | 2,
      "levels": [
        {"alpha": 0.5, "set": {"type": "interval", "a": 0.0, "b": 2.0}},
        {"alpha": 1.0, "set": {"type": "polygon", "vertices": [[x, y], ...]}}
      ]
    }

Schema problems raise :class:`DocumentError` with a path-addressed message;
semantic problems (missing full-membership level, broken nesting) propagate
from :func:`~fuzzystar.fuzzy.make_fuzzy` and name the violated condition.
Numbers are emitted with Python's shortest round-trip float formatting, so
``parse(emit(u))`` reproduces ``u`` field for field.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from .fuzzy import LevelFuzzySet, make_fuzzy
from .geometry import CompactSet, Interval, Polygon


class DocumentError(ValueError):
    """Malformed document; the message starts with the offending JSON path."""


def _number(value, path: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise DocumentError(f"{path}: expected a number, got {value!r}")
    v = float(value)
    if not math.isfinite(v):
        raise DocumentError(f"{path}: expected a finite number, got {value!r}")
    return v


def _set_from_dict(obj, dim: int, path: str) -> CompactSet:
    if not isinstance(obj, dict):
        raise DocumentError(f"{path}: expected an object, got {type(obj).__name__}")
    kind = obj.get("type")
    if kind == "interval":
        if dim != 1:
            raise DocumentError(f"{path}: interval set in a dim-{dim} document")
        try:
            return Interval(_number(obj.get("a"), f"{path}.a"), _number(obj.get("b"), f"{path}.b"))
        except ValueError as exc:
            if isinstance(exc, DocumentError):
                raise
            raise DocumentError(f"{path}: {exc}") from None
    if kind == "polygon":
        if dim != 2:
            raise DocumentError(f"{path}: polygon set in a dim-{dim} document")
        verts = obj.get("vertices")
        if not isinstance(verts, list):
            raise DocumentError(f"{path}.vertices: expected an array")
        parsed = []
        for i, v in enumerate(verts):
            if not isinstance(v, list) or len(v) != 2:
                raise DocumentError(f"{path}.vertices[{i}]: expected an [x, y] pair")
            parsed.append((_number(v[0], f"{path}.vertices[{i}][0]"), _number(v[1], f"{path}.vertices[{i}][1]")))
        try:
            return Polygon(tuple(parsed))
        except ValueError as exc:
            raise DocumentError(f"{path}: {exc}") from None
    raise DocumentError(f"{path}.type: expected 'interval' or 'polygon', got {kind!r}")


def fuzzy_from_dict(obj) -> LevelFuzzySet:
    if not isinstance(obj, dict):
        raise DocumentError(f"$: expected an object, got {type(obj).__name__}")
    dim = obj.get("dim")
    if dim not in (1, 2):
        raise DocumentError(f"$.dim: expected 1 or 2, got {dim!r}")
    levels = obj.get("levels")
    if not isinstance(levels, list) or not levels:
        raise DocumentError("$.levels: expected a nonempty array")
    pairs = []
    for i, lv in enumerate(levels):
        if not isinstance(lv, dict):
            raise DocumentError(f"$.levels[{i}]: expected an object")
        alpha = _number(lv.get("alpha"), f"$.levels[{i}].alpha")
        if not 0.0 < alpha <= 1.0:
            raise DocumentError(f"$.levels[{i}].alpha: must lie in (0, 1], got {alpha}")
        pairs.append((alpha, _set_from_dict(lv.get("set"), dim, f"$.levels[{i}].set")))
    return make_fuzzy(pairs)


def _set_to_dict(s: CompactSet) -> dict:
    if isinstance(s, Interval):
        return {"type": "interval", "a": s.a, "b": s.b}
    return {"type": "polygon", "vertices": [[x, y] for x, y in s.vertices]}


def fuzzy_to_dict(u: LevelFuzzySet) -> dict:
    return {
        "dim": u.dim,
        "levels": [{"alpha": a, "set": _set_to_dict(s)} for a, s in u.levels],
    }


def parse_fuzzy(text: str) -> LevelFuzzySet:
    """Parse a JSON document into a validated element."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"$: not valid JSON: {exc}") from None
    return fuzzy_from_dict(obj)


def emit_fuzzy(u: LevelFuzzySet) -> str:
    """Serialize an element; floats keep their shortest round-trip form."""
    return json.dumps(fuzzy_to_dict(u), indent=2)


@dataclass(frozen=True)
class DiagnoseConfig:
    """Parameters of a family diagnostic run."""

    p: float
    h_grid: tuple[float, ...]
    bound_threshold: float
    eps: float
    spacing: float = 1e-3

    def __post_init__(self):
        if not self.p >= 1.0:
            raise DocumentError(f"$.p: must satisfy p >= 1, got {self.p}")
        if not self.h_grid:
            raise DocumentError("$.h_grid: must be nonempty")
        for h in self.h_grid:
            if not 0.0 < h < 1.0:
                raise DocumentError(f"$.h_grid: values must lie in (0, 1), got {h}")
        if any(b <= a for a, b in zip(self.h_grid, self.h_grid[1:])):
            raise DocumentError("$.h_grid: must be strictly increasing")
        if not self.bound_threshold > 0.0:
            raise DocumentError(f"$.bound_threshold: must be positive, got {self.bound_threshold}")
        if not self.eps > 0.0:
            raise DocumentError(f"$.eps: must be positive, got {self.eps}")
        if not self.spacing > 0.0:
            raise DocumentError(f"$.spacing: must be positive, got {self.spacing}")


def config_from_dict(obj) -> DiagnoseConfig:
    if not isinstance(obj, dict):
        raise DocumentError(f"$: expected an object, got {type(obj).__name__}")
    required = ("p", "h_grid", "bound_threshold", "eps")
    for key in required:
        if key not in obj:
            raise DocumentError(f"$.{key}: missing required field")
    grid = obj["h_grid"]
    if not isinstance(grid, list):
        raise DocumentError("$.h_grid: expected an array")
    h_grid = tuple(_number(h, f"$.h_grid[{i}]") for i, h in enumerate(grid))
    spacing = _number(obj.get("spacing", 1e-3), "$.spacing")
    return DiagnoseConfig(
        p=_number(obj["p"], "$.p"),
        h_grid=h_grid,
        bound_threshold=_number(obj["bound_threshold"], "$.bound_threshold"),
        eps=_number(obj["eps"], "$.eps"),
        spacing=spacing,
    )


def parse_config(text: str) -> DiagnoseConfig:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"$: not valid JSON: {exc}") from None
    return config_from_dict(obj)
