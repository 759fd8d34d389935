import random

import pytest

from fuzzystar import Interval, Polygon, crisp, make_fuzzy, translate

# alphas on a coarse grid keep the Riemann oracle's panel-straddling error small
ALPHA_GRID = [round(0.05 * k, 2) for k in range(1, 20)]


def random_interval(rng: random.Random, span=5.0) -> Interval:
    c = rng.uniform(-span, span)
    w = rng.uniform(0.0, span / 2)
    return Interval(c - w, c + w)


def random_step_fuzzy(rng: random.Random, max_extra_levels=4, span=3.0, alpha_grid=None):
    """Random nested interval stack with alphas drawn from a coarse grid."""
    grid = ALPHA_GRID if alpha_grid is None else alpha_grid
    k = rng.randint(0, max_extra_levels)
    alphas = sorted(rng.sample(grid, k))
    c = rng.uniform(-span, span)
    w = rng.uniform(0.0, 1.0)
    lo, hi = c - w, c + w
    levels = [(1.0, Interval(lo, hi))]
    for a in reversed(alphas):
        lo -= rng.uniform(0.0, 1.5)
        hi += rng.uniform(0.0, 1.5)
        levels.append((a, Interval(lo, hi)))
    return make_fuzzy(levels)


def spike_member(n: int, p: float):
    """Tall thin outlier level: cut [0, n] below alpha = n**-p, then [0, 1]."""
    return make_fuzzy([(n**-p, Interval(0.0, float(n))), (1.0, Interval(0.0, 1.0))])


def spike_family(p: float, n_max: int = 10):
    return [spike_member(n, p) for n in range(2, n_max + 1)]


def translate_family(count: int, step: float = 1.0):
    return [translate(crisp(Interval(0.0, 1.0)), t * step) for t in range(count)]


@pytest.fixture
def lshape() -> Polygon:
    return Polygon(((0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2)))


@pytest.fixture
def comb() -> Polygon:
    # two notches above y = 1 separate three teeth
    return Polygon(((0, 0), (5, 0), (5, 3), (4, 3), (4, 1), (3, 1), (3, 3), (2, 3), (2, 1), (1, 1), (1, 3), (0, 3)))


@pytest.fixture
def dart() -> Polygon:
    # non-convex but star-shaped; kernel is the triangle (1,0), (3,0), (2,1)
    return Polygon(((0, 0), (4, 0), (4, 3), (2, 1), (0, 3)))


@pytest.fixture
def unit_square() -> Polygon:
    return Polygon(((0, 0), (1, 0), (1, 1), (0, 1)))
