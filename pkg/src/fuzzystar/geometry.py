"""Compact-set geometry in one and two dimensions.

Carriers are closed intervals on the line and simple polygons in the plane
(always understood as filled regions).  The module provides the Hausdorff
distance (exact for intervals, boundary-sampled with a certified error bound
for polygons), point-to-set distance, convexity and star-shapedness tests,
and the visibility kernel of a simple polygon.

All values are immutable after construction and every operation is a pure
function, so everything here is safe to share across threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

# One global absolute tolerance for collinearity / containment predicates.
# Coordinates are expected to be of magnitude O(1) to O(1e3).
GEOM_TOL = 1e-9


class GeometryError(ValueError):
    """Invalid geometric input."""


class DimensionMismatch(GeometryError):
    """Operands live in different ambient dimensions."""


class InvalidPolygon(GeometryError):
    """Vertex list does not describe a simple polygon."""


@dataclass(frozen=True)
class Interval:
    """Closed bounded interval [a, b]; a == b is a point."""

    a: float
    b: float

    def __post_init__(self):
        a, b = float(self.a), float(self.b)
        if not (math.isfinite(a) and math.isfinite(b)):
            raise GeometryError(f"interval endpoints must be finite, got [{a}, {b}]")
        if a > b:
            raise GeometryError(f"interval endpoints out of order: [{a}, {b}]")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def dim(self) -> int:
        return 1

    @property
    def width(self) -> float:
        return self.b - self.a

    def contains_point(self, x: float) -> bool:
        return self.a <= x <= self.b


def _cross(ox, oy, ax, ay, bx, by):
    """z-component of (a - o) x (b - o)."""
    return (ax - ox) * (by - oy) - (ay - oy) * (bx - ox)


def _signed_area(verts) -> float:
    s = 0.0
    n = len(verts)
    for i in range(n):
        x1, y1 = verts[i]
        x2, y2 = verts[(i + 1) % n]
        s += x1 * y2 - x2 * y1
    return 0.5 * s


def _point_segment_distance(px, py, ax, ay, bx, by) -> float:
    vx, vy = bx - ax, by - ay
    wx, wy = px - ax, py - ay
    vv = vx * vx + vy * vy
    if vv == 0.0:
        return math.hypot(wx, wy)
    t = (wx * vx + wy * vy) / vv
    t = 0.0 if t < 0.0 else (1.0 if t > 1.0 else t)
    return math.hypot(wx - t * vx, wy - t * vy)


def _segments_cross_properly(p1, p2, p3, p4, tol: float = 0.0) -> bool:
    """Strict crossing: the segments intersect at a point interior to both.

    Touching at an endpoint or running along each other does not count.
    """
    d1 = _cross(p3[0], p3[1], p4[0], p4[1], p1[0], p1[1])
    d2 = _cross(p3[0], p3[1], p4[0], p4[1], p2[0], p2[1])
    d3 = _cross(p1[0], p1[1], p2[0], p2[1], p3[0], p3[1])
    d4 = _cross(p1[0], p1[1], p2[0], p2[1], p4[0], p4[1])
    straddles_34 = (d1 > tol and d2 < -tol) or (d1 < -tol and d2 > tol)
    straddles_12 = (d3 > tol and d4 < -tol) or (d3 < -tol and d4 > tol)
    return straddles_34 and straddles_12


def _segment_distance(p1, p2, p3, p4) -> float:
    if _segments_cross_properly(p1, p2, p3, p4):
        return 0.0
    return min(
        _point_segment_distance(p1[0], p1[1], p3[0], p3[1], p4[0], p4[1]),
        _point_segment_distance(p2[0], p2[1], p3[0], p3[1], p4[0], p4[1]),
        _point_segment_distance(p3[0], p3[1], p1[0], p1[1], p2[0], p2[1]),
        _point_segment_distance(p4[0], p4[1], p1[0], p1[1], p2[0], p2[1]),
    )


@dataclass(frozen=True)
class Polygon:
    """Filled simple polygon, stored counterclockwise.

    Clockwise input is reversed on construction rather than rejected.
    Consecutive duplicate vertices, spikes (zero-width excursions) and
    self-intersections are invalid.
    """

    vertices: tuple[tuple[float, float], ...]

    def __post_init__(self):
        verts = [(float(x), float(y)) for x, y in self.vertices]
        if len(verts) < 3:
            raise InvalidPolygon(f"polygon needs at least 3 vertices, got {len(verts)}")
        for x, y in verts:
            if not (math.isfinite(x) and math.isfinite(y)):
                raise InvalidPolygon(f"non-finite vertex ({x}, {y})")
        n = len(verts)
        for i in range(n):
            x1, y1 = verts[i]
            x2, y2 = verts[(i + 1) % n]
            if math.hypot(x2 - x1, y2 - y1) <= GEOM_TOL:
                raise InvalidPolygon(f"consecutive vertices {i} and {(i + 1) % n} coincide")
        if _signed_area(verts) < 0.0:
            verts.reverse()
        if _signed_area(verts) <= GEOM_TOL:
            raise InvalidPolygon("polygon has (numerically) zero area")
        # spikes: consecutive edges collinear but doubling back
        for i in range(n):
            o = verts[i - 1]
            v = verts[i]
            w = verts[(i + 1) % n]
            cr = _cross(o[0], o[1], v[0], v[1], w[0], w[1])
            dot = (v[0] - o[0]) * (w[0] - v[0]) + (v[1] - o[1]) * (w[1] - v[1])
            if abs(cr) <= GEOM_TOL and dot < 0.0:
                raise InvalidPolygon(f"spike at vertex {i}")
        # simplicity: non-adjacent edges must be disjoint
        for i in range(n):
            for j in range(i + 1, n):
                if j == i + 1 or (i == 0 and j == n - 1):
                    continue
                if _segment_distance(verts[i], verts[(i + 1) % n], verts[j], verts[(j + 1) % n]) <= GEOM_TOL:
                    raise InvalidPolygon(f"edges {i} and {j} intersect (polygon not simple)")
        object.__setattr__(self, "vertices", tuple(verts))

    @property
    def dim(self) -> int:
        return 2

    def area(self) -> float:
        return _signed_area(self.vertices)

    def bounding_box(self) -> tuple[float, float, float, float]:
        xs = [v[0] for v in self.vertices]
        ys = [v[1] for v in self.vertices]
        return min(xs), min(ys), max(xs), max(ys)

    def boundary_distance(self, px: float, py: float) -> float:
        verts = self.vertices
        n = len(verts)
        best = math.inf
        for i in range(n):
            ax, ay = verts[i]
            bx, by = verts[(i + 1) % n]
            d = _point_segment_distance(px, py, ax, ay, bx, by)
            if d < best:
                best = d
        return best

    def contains_point(self, px: float, py: float, tol: float = GEOM_TOL) -> bool:
        """Even-odd test; points within ``tol`` of the boundary count as inside."""
        if self.boundary_distance(px, py) <= tol:
            return True
        inside = False
        x1, y1 = self.vertices[-1]
        for x2, y2 in self.vertices:
            if (y1 > py) != (y2 > py):
                xs = (x2 - x1) * (py - y1) / (y2 - y1) + x1
                if px < xs:
                    inside = not inside
            x1, y1 = x2, y2
        return inside


CompactSet = Union[Interval, Polygon]


def _require_same_dim(a: CompactSet, b: CompactSet) -> int:
    if a.dim != b.dim:
        raise DimensionMismatch(f"sets live in dimensions {a.dim} and {b.dim}")
    return a.dim


def point_to_set_distance(x, s: CompactSet) -> float:
    """Euclidean distance from a point to a compact set (0 inside or on it)."""
    if isinstance(s, Interval):
        try:
            v = float(x)
        except (TypeError, ValueError):
            raise DimensionMismatch(f"expected a scalar point for an interval, got {x!r}") from None
        return max(s.a - v, v - s.b, 0.0)
    try:
        px, py = x
    except (TypeError, ValueError):
        raise DimensionMismatch(f"expected an (x, y) point for a polygon, got {x!r}") from None
    px, py = float(px), float(py)
    d = s.boundary_distance(px, py)
    if d <= GEOM_TOL or s.contains_point(px, py, tol=0.0):
        return 0.0
    return d


def boundary_samples(p: Polygon, spacing: float) -> list[tuple[float, float]]:
    """Points along the polygon boundary with gaps of at most ``spacing``.

    Every vertex is included.
    """
    if not (spacing > 0.0 and math.isfinite(spacing)):
        raise GeometryError(f"spacing must be a positive real, got {spacing}")
    pts = []
    verts = p.vertices
    n = len(verts)
    for i in range(n):
        ax, ay = verts[i]
        bx, by = verts[(i + 1) % n]
        length = math.hypot(bx - ax, by - ay)
        steps = max(1, math.ceil(length / spacing))
        for k in range(steps):  # the next edge contributes this edge's endpoint
            t = k / steps
            pts.append((ax + t * (bx - ax), ay + t * (by - ay)))
    return pts


def directed_hausdorff(a: CompactSet, b: CompactSet, spacing: float = 1e-3) -> tuple[float, float]:
    """sup over points of ``a`` of the distance to ``b``, with an error bound.

    Intervals are exact (the distance function is convex, so the sup sits on
    an endpoint) and come back with error bound 0.  For polygons the boundary
    of ``a`` is sampled at pitch ``spacing``; the distance field is
    1-Lipschitz, so the returned value is within ``spacing`` of the true
    supremum whenever that supremum is attained on the boundary of ``a``
    (which fails only if ``b`` nearly encloses a cavity containing interior
    of ``a``).
    """
    dim = _require_same_dim(a, b)
    if a == b:
        return 0.0, 0.0
    if dim == 1:
        return max(point_to_set_distance(a.a, b), point_to_set_distance(a.b, b)), 0.0
    best = 0.0
    for pt in boundary_samples(a, spacing):
        d = point_to_set_distance(pt, b)
        if d > best:
            best = d
    return best, spacing


def hausdorff(a: CompactSet, b: CompactSet, spacing: float = 1e-3) -> tuple[float, float]:
    """Hausdorff distance: max of the two directed distances, with error bound."""
    dim = _require_same_dim(a, b)
    if a == b:
        return 0.0, 0.0
    if dim == 1:
        return max(abs(a.a - b.a), abs(a.b - b.b)), 0.0
    d_ab, e_ab = directed_hausdorff(a, b, spacing)
    d_ba, e_ba = directed_hausdorff(b, a, spacing)
    return max(d_ab, d_ba), max(e_ab, e_ba)


def max_norm_on_set(s: CompactSet) -> float:
    """Largest Euclidean norm over the set (its Hausdorff distance to the origin).

    The norm is convex, so over a filled polygon the maximum is attained at a
    vertex.
    """
    if isinstance(s, Interval):
        return max(abs(s.a), abs(s.b))
    return max(math.hypot(x, y) for x, y in s.vertices)


@dataclass(frozen=True)
class KernelResult:
    """Visibility kernel of a simple polygon.

    ``empty`` means no point of the polygon sees all of it.  ``degenerate``
    flags a nonempty kernel of zero area (a segment or a single point); such
    polygons still count as star-shaped.
    """

    vertices: tuple[tuple[float, float], ...]
    empty: bool
    degenerate: bool

    def polygon(self) -> Polygon | None:
        """The kernel as a Polygon, or None when empty or degenerate."""
        if self.empty or self.degenerate:
            return None
        return Polygon(self.vertices)


def _clip_halfplane(pts, ex, ey, ox, oy, tol):
    """Keep the part of convex chain ``pts`` left of the directed line through
    (ox, oy) with direction (ex, ey)."""
    out = []
    n = len(pts)
    if n == 0:
        return out
    d_prev = ex * (pts[-1][1] - oy) - ey * (pts[-1][0] - ox)
    prev = pts[-1]
    for cur in pts:
        d_cur = ex * (cur[1] - oy) - ey * (cur[0] - ox)
        cur_in = d_cur >= -tol
        prev_in = d_prev >= -tol
        if cur_in:
            if not prev_in:
                t = d_prev / (d_prev - d_cur)
                out.append((prev[0] + t * (cur[0] - prev[0]), prev[1] + t * (cur[1] - prev[1])))
            out.append(cur)
        elif prev_in:
            t = d_prev / (d_prev - d_cur)
            out.append((prev[0] + t * (cur[0] - prev[0]), prev[1] + t * (cur[1] - prev[1])))
        prev, d_prev = cur, d_cur
    return out


def polygon_kernel(p: Polygon, tol: float = GEOM_TOL) -> KernelResult:
    """Kernel of a simple polygon: all points that see the whole polygon.

    Computed by clipping the bounding box against the half-plane left of each
    directed edge (the polygon is counterclockwise, so the interior side).
    The result is convex and contained in the polygon.
    """
    minx, miny, maxx, maxy = p.bounding_box()
    pts = [(minx, miny), (maxx, miny), (maxx, maxy), (minx, maxy)]
    verts = p.vertices
    n = len(verts)
    for i in range(n):
        ox, oy = verts[i]
        qx, qy = verts[(i + 1) % n]
        pts = _clip_halfplane(pts, qx - ox, qy - oy, ox, oy, tol)
        if not pts:
            break
    # collapse vertices that the clipping left (numerically) coincident
    cleaned: list[tuple[float, float]] = []
    for pt in pts:
        if not cleaned or math.hypot(pt[0] - cleaned[-1][0], pt[1] - cleaned[-1][1]) > tol:
            cleaned.append(pt)
    while len(cleaned) > 1 and math.hypot(cleaned[0][0] - cleaned[-1][0], cleaned[0][1] - cleaned[-1][1]) <= tol:
        cleaned.pop()
    if not cleaned:
        return KernelResult(vertices=(), empty=True, degenerate=False)
    area = _signed_area(cleaned) if len(cleaned) >= 3 else 0.0
    return KernelResult(vertices=tuple(cleaned), empty=False, degenerate=area <= tol)


def is_star_shaped(s: CompactSet) -> bool:
    """Whether some point of the set sees every other point of it.

    Intervals are convex, hence always star-shaped.  A degenerate (zero-area)
    polygon kernel still counts.
    """
    if isinstance(s, Interval):
        return True
    return not polygon_kernel(s).empty


def is_convex(s: CompactSet, tol: float = GEOM_TOL) -> bool:
    """Convexity test: no reflex turn anywhere along the boundary."""
    if isinstance(s, Interval):
        return True
    verts = s.vertices
    n = len(verts)
    strict = 0
    for i in range(n):
        o = verts[i]
        v = verts[(i + 1) % n]
        w = verts[(i + 2) % n]
        cr = _cross(o[0], o[1], v[0], v[1], w[0], w[1])
        if cr < -tol:
            return False
        if cr > tol:
            strict += 1
    return strict >= 3


def interval_contains(outer: Interval, inner: Interval) -> bool:
    return outer.a <= inner.a and inner.b <= outer.b


def polygon_contains(outer: Polygon, inner: Polygon, tol: float = GEOM_TOL) -> bool:
    """Region containment test: every vertex of ``inner`` lies in ``outer``
    and no edge of ``inner`` properly crosses an edge of ``outer``.

    Touching boundaries are allowed.
    """
    for x, y in inner.vertices:
        if not outer.contains_point(x, y, tol):
            return False
    iv, ov = inner.vertices, outer.vertices
    ni, no = len(iv), len(ov)
    for i in range(ni):
        for j in range(no):
            if _segments_cross_properly(iv[i], iv[(i + 1) % ni], ov[j], ov[(j + 1) % no], tol):
                return False
    return True


def set_contains(outer: CompactSet, inner: CompactSet, tol: float = GEOM_TOL) -> bool:
    """Whether ``inner`` is a subset of ``outer`` (exact for intervals)."""
    _require_same_dim(outer, inner)
    if isinstance(outer, Interval):
        return interval_contains(outer, inner)
    return polygon_contains(outer, inner, tol)


def translate_set(s: CompactSet, t) -> CompactSet:
    """Shift by a scalar (intervals) or an (x, y) vector (polygons)."""
    if isinstance(s, Interval):
        dt = float(t)
        return Interval(s.a + dt, s.b + dt)
    tx, ty = t
    return Polygon(tuple((x + float(tx), y + float(ty)) for x, y in s.vertices))


def scale_set(s: CompactSet, factor: float) -> CompactSet:
    """Scale about the origin by a strictly positive factor."""
    f = float(factor)
    if not (f > 0.0 and math.isfinite(f)):
        raise GeometryError(f"scale factor must be a positive real, got {factor}")
    if isinstance(s, Interval):
        return Interval(f * s.a, f * s.b)
    return Polygon(tuple((f * x, f * y) for x, y in s.vertices))
