import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fuzzystar import (
    DimensionMismatch,
    Interval,
    InvalidPolygon,
    Polygon,
    directed_hausdorff,
    hausdorff,
    is_convex,
    is_star_shaped,
    max_norm_on_set,
    point_to_set_distance,
    polygon_kernel,
)
from fuzzystar.geometry import GeometryError, boundary_samples, scale_set

from oracles import (
    interval_grid_hausdorff,
    polygon_grid_directed,
    shapely_point_distance,
)

finite = st.floats(min_value=-50, max_value=50)
widths = st.floats(min_value=0, max_value=25)


@st.composite
def intervals(draw):
    a = draw(finite)
    return Interval(a, a + draw(widths))


def cyclic_vertex_match(got, expected, tol=1e-9):
    """Vertex tuples equal up to cyclic rotation."""
    if len(got) != len(expected):
        return False
    n = len(expected)
    for shift in range(n):
        if all(
            math.hypot(got[(i + shift) % n][0] - expected[i][0], got[(i + shift) % n][1] - expected[i][1]) <= tol
            for i in range(n)
        ):
            return True
    return False


class TestInterval:
    def test_degenerate_point_allowed(self):
        assert Interval(2.0, 2.0).width == 0.0

    def test_rejects_reversed_endpoints(self):
        with pytest.raises(GeometryError):
            Interval(1.0, 0.0)

    def test_rejects_non_finite(self):
        with pytest.raises(GeometryError):
            Interval(0.0, math.inf)


class TestPolygonValidation:
    def test_too_few_vertices(self):
        with pytest.raises(InvalidPolygon):
            Polygon(((0, 0), (1, 0)))

    def test_duplicate_consecutive_vertices(self):
        with pytest.raises(InvalidPolygon):
            Polygon(((0, 0), (0, 0), (1, 0), (1, 1)))

    def test_self_intersection(self):
        with pytest.raises(InvalidPolygon):
            Polygon(((0, 0), (4, 0), (4, 3), (2, -1), (0, 3)))

    def test_bowtie(self):
        with pytest.raises(InvalidPolygon):
            Polygon(((0, 0), (1, 1), (1, 0), (0, 1)))

    def test_clockwise_input_reversed(self):
        p = Polygon(((0, 0), (0, 1), (1, 1), (1, 0)))
        assert p.area() > 0

    def test_spike_rejected(self):
        with pytest.raises(InvalidPolygon):
            Polygon(((0, 0), (2, 0), (1, 0), (1, 1)))


class TestPointToSetDistance:
    def test_interior_point_of_square(self, unit_square):
        assert point_to_set_distance((0.5, 0.5), unit_square) == 0.0

    def test_outside_square(self, unit_square):
        assert point_to_set_distance((2.0, 0.0), unit_square) == pytest.approx(1.0, abs=1e-12)

    def test_interval_point(self):
        assert point_to_set_distance(0.5, Interval(2, 3)) == 1.5

    def test_dimension_mismatch(self, unit_square):
        with pytest.raises(DimensionMismatch):
            point_to_set_distance(0.5, unit_square)
        with pytest.raises(DimensionMismatch):
            point_to_set_distance((0.5, 0.5), Interval(0, 1))

    @settings(max_examples=60, deadline=None)
    @given(st.floats(-4, 4), st.floats(-4, 4))
    def test_matches_shapely_on_lshape(self, px, py):
        coords = ((0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2))
        got = point_to_set_distance((px, py), Polygon(coords))
        assert got == pytest.approx(shapely_point_distance(coords, px, py), abs=1e-9)


class TestIntervalHausdorff:
    def test_identical_sets(self):
        assert directed_hausdorff(Interval(0, 1), Interval(0, 1)) == (0.0, 0.0)

    def test_directed_is_sup_of_endpoint_distances(self):
        # farthest point of [0,1] from [2,3] is 0, at distance 2
        value, err = directed_hausdorff(Interval(0, 1), Interval(2, 3))
        assert (value, err) == (2.0, 0.0)
        h12, _, _, pitch = interval_grid_hausdorff(0, 1, 2, 3)
        assert value == pytest.approx(h12, abs=2 * pitch)

    def test_symmetric_example(self):
        value, err = hausdorff(Interval(0, 2), Interval(1, 3))
        assert (value, err) == (1.0, 0.0)

    @settings(max_examples=80, deadline=None)
    @given(intervals(), intervals())
    def test_matches_grid_oracle(self, i1, i2):
        value, err = hausdorff(i1, i2)
        assert err == 0.0
        _, _, h, pitch = interval_grid_hausdorff(i1.a, i1.b, i2.a, i2.b)
        assert value == pytest.approx(h, abs=2 * pitch)

    @settings(max_examples=80, deadline=None)
    @given(intervals(), intervals())
    def test_symmetry_and_identity(self, i1, i2):
        assert hausdorff(i1, i2)[0] == hausdorff(i2, i1)[0]
        assert hausdorff(i1, i1) == (0.0, 0.0)

    @settings(max_examples=80, deadline=None)
    @given(intervals(), intervals(), intervals())
    def test_triangle_inequality(self, i1, i2, i3):
        d13 = hausdorff(i1, i3)[0]
        assert d13 <= hausdorff(i1, i2)[0] + hausdorff(i2, i3)[0] + 1e-12

    @settings(max_examples=50, deadline=None)
    @given(intervals(), intervals(), st.floats(min_value=0.1, max_value=10))
    def test_scaling(self, i1, i2, s):
        base = hausdorff(i1, i2)[0]
        scaled = hausdorff(scale_set(i1, s), scale_set(i2, s))[0]
        assert scaled == pytest.approx(s * base, rel=1e-12, abs=1e-12)


class TestPolygonHausdorff:
    def test_nested_squares(self):
        big = Polygon(((0, 0), (2, 0), (2, 2), (0, 2)))
        small = Polygon(((0, 0), (1, 0), (1, 1), (0, 1)))
        for spacing in (0.1, 0.01):
            value, err = directed_hausdorff(big, small, spacing)
            assert err == spacing
            assert abs(value - math.sqrt(2)) <= err
        # contained polygon has directed distance 0
        assert directed_hausdorff(small, big, 0.05)[0] == 0.0

    def test_identity(self, lshape):
        assert hausdorff(lshape, lshape, 0.05) == (0.0, 0.0)

    def test_translated_squares(self, unit_square):
        moved = Polygon(tuple((x + 1.0, y) for x, y in unit_square.vertices))
        value, err = hausdorff(unit_square, moved, 0.01)
        assert value == pytest.approx(1.0, abs=err)

    def test_against_grid_oracle(self, lshape, unit_square):
        coords_l = lshape.vertices
        coords_s = unit_square.vertices
        value, err = directed_hausdorff(lshape, unit_square, 0.02)
        oracle = polygon_grid_directed(coords_l, coords_s, pitch=0.02)
        assert value == pytest.approx(oracle, abs=err + 0.03)

    def test_scaling_within_bounds(self, lshape, unit_square):
        s = 2.5
        spacing = 0.02
        base = hausdorff(lshape, unit_square, spacing)[0]
        scaled = hausdorff(scale_set(lshape, s), scale_set(unit_square, s), spacing)[0]
        assert abs(scaled - s * base) <= spacing * (1 + s)

    def test_dimension_mismatch(self, unit_square):
        with pytest.raises(DimensionMismatch):
            hausdorff(Interval(0, 1), unit_square)

    def test_boundary_samples_pitch(self, lshape):
        pts = boundary_samples(lshape, 0.25)
        for v in lshape.vertices:
            assert any(math.hypot(px - v[0], py - v[1]) < 1e-12 for px, py in pts)
        with pytest.raises(GeometryError):
            boundary_samples(lshape, -1.0)


class TestKernel:
    def test_convex_polygon_is_its_own_kernel(self, unit_square):
        result = polygon_kernel(unit_square)
        assert not result.empty and not result.degenerate
        assert cyclic_vertex_match(result.vertices, unit_square.vertices)

    def test_lshape_kernel_is_unit_square(self, lshape):
        result = polygon_kernel(lshape)
        assert not result.empty and not result.degenerate
        assert cyclic_vertex_match(result.vertices, ((1, 1), (0, 1), (0, 0), (1, 0))) or cyclic_vertex_match(
            result.vertices, ((0, 0), (1, 0), (1, 1), (0, 1))
        )

    def test_dart_kernel(self, dart):
        result = polygon_kernel(dart)
        assert not result.empty and not result.degenerate
        assert cyclic_vertex_match(result.vertices, ((1, 0), (3, 0), (2, 1)))

    def test_comb_kernel_empty(self, comb):
        result = polygon_kernel(comb)
        assert result.empty and not result.degenerate
        assert result.polygon() is None

    def test_kernel_inside_polygon_and_convex(self, lshape, dart, unit_square):
        for poly in (lshape, dart, unit_square):
            result = polygon_kernel(poly)
            for x, y in result.vertices:
                assert poly.contains_point(x, y, tol=1e-9)
            kp = result.polygon()
            assert kp is not None and is_convex(kp)

    def test_kernel_vertices_see_boundary(self, lshape, dart):
        # sampled-midpoint containment from every kernel vertex to dense boundary samples
        for poly in (lshape, dart):
            kernel = polygon_kernel(poly)
            for kx, ky in kernel.vertices:
                for bx, by in boundary_samples(poly, 0.15):
                    for t in [k / 40 for k in range(1, 40)]:
                        mx, my = kx + t * (bx - kx), ky + t * (by - ky)
                        assert poly.contains_point(mx, my, tol=1e-9)

    def test_degenerate_kernel_flagged(self):
        # rectangle with a slant-walled notch whose half-planes (x >= 2.5 + y/2,
        # x <= 2.5 - y/2, y <= 1) meet the floor y >= 0 in the single point (2.5, 0)
        pinched = Polygon(((0, 0), (5, 0), (5, 2), (3.5, 2), (3, 1), (2, 1), (1.5, 2), (0, 2)))
        result = polygon_kernel(pinched)
        assert not result.empty
        assert result.degenerate
        assert result.polygon() is None
        assert all(math.hypot(x - 2.5, y - 0.0) <= 1e-6 for x, y in result.vertices)
        assert is_star_shaped(pinched)


class TestClassPredicates:
    def test_intervals_always_convex_and_star(self):
        assert is_convex(Interval(0, 1))
        assert is_star_shaped(Interval(0, 1))

    def test_square_convex(self, unit_square):
        assert is_convex(unit_square)

    def test_lshape_not_convex_but_star(self, lshape):
        assert not is_convex(lshape)
        assert is_star_shaped(lshape)

    def test_comb_not_star(self, comb):
        assert not is_convex(comb)
        assert not is_star_shaped(comb)

    def test_convex_implies_star_on_random_convex_polygons(self):
        rng = random.Random(7)
        for _ in range(25):
            n = rng.randint(3, 9)
            angles = sorted(rng.uniform(0, 2 * math.pi) for _ in range(n))
            if min(b - a for a, b in zip(angles, angles[1:])) < 1e-3:
                continue
            r = rng.uniform(0.5, 3.0)
            cx, cy = rng.uniform(-2, 2), rng.uniform(-2, 2)
            pts = tuple((cx + r * math.cos(t), cy + r * math.sin(t)) for t in angles)
            poly = Polygon(pts)
            if is_convex(poly):
                assert is_star_shaped(poly)


class TestMaxNorm:
    def test_interval_examples(self):
        assert max_norm_on_set(Interval(-1, 3)) == 3.0
        assert max_norm_on_set(Interval(0, 0)) == 0.0

    def test_unit_square(self, unit_square):
        assert max_norm_on_set(unit_square) == pytest.approx(math.sqrt(2), abs=1e-12)
