"""The level-set L_p metric and its continuity diagnostics.

The distance between two elements is the L_p norm over alpha in [0, 1] of
the Hausdorff distance between corresponding cuts.  On step representations
the integrand is piecewise constant on the merged grid of stored alphas, so
the integral is a finite sum and the value is exact up to the per-cut
Hausdorff error (zero in dimension one).

An adaptive-quadrature path handles cut maps given as functions of alpha,
e.g. triangular elements with linearly interpolated interval endpoints,
which the step representation cannot express.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .fuzzy import LevelFuzzySet, alpha_cut
from .geometry import CompactSet, DimensionMismatch, Interval, hausdorff, max_norm_on_set

CutFunction = Callable[[float], CompactSet]

DEFAULT_SPACING = 1e-3
MAX_QUAD_DEPTH = 40


class QuadratureError(RuntimeError):
    """Adaptive refinement hit the depth limit before meeting the tolerance.

    ``best_estimate`` carries the value accumulated so far.
    """

    def __init__(self, message: str, best_estimate: float):
        super().__init__(message)
        self.best_estimate = best_estimate


def _check_p(p: float) -> float:
    p = float(p)
    if not (p >= 1.0 and math.isfinite(p)):
        raise ValueError(f"p must satisfy 1 <= p < inf, got {p}")
    return p


def _merged_gaps(u: LevelFuzzySet, v: LevelFuzzySet):
    """Breakpoints 0 = b0 < b1 < ... < bk = 1 of the merged alpha grids.

    Both cut maps are constant on each gap (b_{j-1}, b_j]; stored alphas are
    compared exactly, never recomputed.
    """
    points = sorted({0.0} | {a for a, _ in u.levels} | {a for a, _ in v.levels})
    return list(zip(points, points[1:]))


def dp_distance(
    u: LevelFuzzySet,
    v: LevelFuzzySet,
    p: float,
    spacing: float = DEFAULT_SPACING,
) -> tuple[float, float]:
    """Exact step evaluation of the level-set L_p distance.

    Returns ``(value, error_bound)``.  The error bound aggregates the
    per-gap Hausdorff bounds through the triangle inequality of the L_p
    norm; it is 0 for interval-valued elements.
    """
    p = _check_p(p)
    if u.dim != v.dim:
        raise DimensionMismatch(f"elements live in dimensions {u.dim} and {v.dim}")
    total = 0.0
    err_total = 0.0
    for lo, hi in _merged_gaps(u, v):
        mid = 0.5 * (lo + hi)
        cu = alpha_cut(u, mid)
        cv = alpha_cut(v, mid)
        w = hi - lo
        if cu == cv:
            continue
        h, e = hausdorff(cu, cv, spacing)
        total += w * h**p
        if e:
            err_total += w * e**p
    return total ** (1.0 / p), err_total ** (1.0 / p)


def p_mean_norm(u: LevelFuzzySet, p: float) -> float:
    """Distance to the crisp origin: the p-mean of the cutwise max norm.

    Exact for step representations, since the max norm of a cut is exact in
    both dimensions.
    """
    p = _check_p(p)
    total = 0.0
    prev = 0.0
    for a, s in u.levels:
        total += (a - prev) * max_norm_on_set(s) ** p
        prev = a
    return total ** (1.0 / p)


def left_continuity_modulus(
    u: LevelFuzzySet,
    h: float,
    p: float,
    spacing: float = DEFAULT_SPACING,
) -> float:
    """p-mean discrepancy between the cut map and its left shift by ``h``.

    Integrates H(cut(alpha), cut(alpha - h))^p over alpha in [h, 1].  On a
    step representation the integrand is piecewise constant on the grid
    formed by the stored alphas and their shifts by ``h``, clipped to
    [h, 1], so the sum is exact.
    """
    p = _check_p(p)
    h = float(h)
    if not 0.0 < h < 1.0:
        raise ValueError(f"h must lie in (0, 1), got {h}")
    points = {h, 1.0}
    for a, _ in u.levels:
        if h < a < 1.0:
            points.add(a)
        shifted = a + h
        if h < shifted < 1.0:
            points.add(shifted)
    grid = sorted(points)
    total = 0.0
    for lo, hi in zip(grid, grid[1:]):
        mid = 0.5 * (lo + hi)
        cur = alpha_cut(u, mid)
        lagged = alpha_cut(u, mid - h)
        if cur == lagged:
            continue
        hv, _ = hausdorff(cur, lagged, spacing)
        total += (hi - lo) * hv**p
    return total ** (1.0 / p)


@dataclass(frozen=True)
class ModulusCurve:
    """Sampled map h -> left-continuity modulus at a fixed exponent."""

    samples: tuple[tuple[float, float], ...]
    p: float


def modulus_curve(
    u: LevelFuzzySet,
    h_grid,
    p: float,
    spacing: float = DEFAULT_SPACING,
) -> ModulusCurve:
    p = _check_p(p)
    grid = _check_h_grid(h_grid)
    samples = tuple((h, left_continuity_modulus(u, h, p, spacing)) for h in grid)
    return ModulusCurve(samples=samples, p=p)


def _check_h_grid(h_grid) -> list[float]:
    grid = [float(h) for h in h_grid]
    if not grid:
        raise ValueError("empty h grid")
    for h in grid:
        if not 0.0 < h < 1.0:
            raise ValueError(f"grid values must lie in (0, 1), got {h}")
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise ValueError("h grid must be strictly increasing")
    return grid


def find_delta(
    u: LevelFuzzySet,
    eps: float,
    p: float,
    h_grid,
    spacing: float = DEFAULT_SPACING,
) -> float | None:
    """Largest grid shift below which every sampled modulus stays under ``eps``.

    Returns the largest grid value delta such that the modulus is < eps at
    every grid point strictly below delta, or None when already the smallest
    grid point fails.  This is evidence on the given grid, not a proof over
    all real shifts; monotonicity of the modulus in h is not assumed, so
    every grid point below the answer is checked.
    """
    p = _check_p(p)
    if not eps > 0.0:
        raise ValueError(f"eps must be positive, got {eps}")
    grid = _check_h_grid(h_grid)
    for i, h in enumerate(grid):
        if left_continuity_modulus(u, h, p, spacing) >= eps:
            return None if i == 0 else grid[i]
    return grid[-1]


# -- quadrature path -------------------------------------------------------


def constant_cuts(s: CompactSet) -> CutFunction:
    """Cut map of a crisp element."""
    return lambda alpha: s


def trapezoidal_cuts(a: float, b: float, c: float, d: float) -> CutFunction:
    """Cut map of a trapezoidal element: support [a, d], top [b, c],
    interval endpoints interpolated linearly in alpha."""
    a, b, c, d = float(a), float(b), float(c), float(d)
    if not a <= b <= c <= d:
        raise ValueError(f"need a <= b <= c <= d, got {(a, b, c, d)}")
    return lambda alpha: Interval(a + alpha * (b - a), d - alpha * (d - c))


def triangular_cuts(a: float, b: float, c: float) -> CutFunction:
    """Cut map of a triangular element with support [a, c] and peak at b."""
    return trapezoidal_cuts(a, b, b, c)


def _adaptive_simpson(f, lo: float, hi: float, tol: float, max_depth: int):
    """Adaptive Simpson with Richardson extrapolation.

    Returns ``(integral, unresolved)`` where ``unresolved`` sums the error
    estimates of panels that hit the depth limit.
    """
    flo, fhi = f(lo), f(hi)
    mid = 0.5 * (lo + hi)
    fmid = f(mid)
    whole = (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi)
    stack = [(lo, mid, hi, flo, fmid, fhi, whole, tol, 0)]
    total = 0.0
    unresolved = 0.0
    while stack:
        a, m, b, fa, fm, fb, est, t, depth = stack.pop()
        lm = 0.5 * (a + m)
        rm = 0.5 * (m + b)
        flm = f(lm)
        frm = f(rm)
        left = (m - a) / 6.0 * (fa + 4.0 * flm + fm)
        right = (b - m) / 6.0 * (fm + 4.0 * frm + fb)
        delta = left + right - est
        if abs(delta) <= 15.0 * t or depth >= max_depth:
            total += left + right + delta / 15.0
            if abs(delta) > 15.0 * t:
                unresolved += abs(delta) / 15.0
        else:
            half = 0.5 * t
            stack.append((a, lm, m, fa, flm, fm, left, half, depth + 1))
            stack.append((m, rm, b, fm, frm, fb, right, half, depth + 1))
    return total, unresolved


def _integrate_power(f, lo, hi, p, tol, spacing, max_depth, what):
    abs_tol = tol**p
    integral, unresolved = _adaptive_simpson(f, lo, hi, abs_tol, max_depth)
    integral = max(integral, 0.0)
    if unresolved > abs_tol:
        raise QuadratureError(
            f"{what}: refinement depth {max_depth} exhausted with estimated error "
            f"{unresolved:.3e} > {abs_tol:.3e} on the integral",
            best_estimate=integral ** (1.0 / p),
        )
    return integral ** (1.0 / p)


def dp_distance_quadrature(
    cut_u: CutFunction,
    cut_v: CutFunction,
    p: float,
    tol: float = 1e-9,
    spacing: float = DEFAULT_SPACING,
    max_depth: int = MAX_QUAD_DEPTH,
) -> float:
    """Level-set L_p distance of two cut maps by adaptive quadrature.

    The cut maps must be defined on all of [0, 1] and nested in alpha.  The
    integral of H(alpha)^p is refined by interval bisection with a per-panel
    Simpson estimate until the estimated absolute error drops below
    ``tol**p``, which bounds the error of the returned p-th root by ``tol``.
    """
    p = _check_p(p)
    if not tol > 0.0:
        raise ValueError(f"tol must be positive, got {tol}")

    def integrand(alpha: float) -> float:
        return hausdorff(cut_u(alpha), cut_v(alpha), spacing)[0] ** p

    return _integrate_power(integrand, 0.0, 1.0, p, tol, spacing, max_depth, "dp quadrature")


def left_continuity_modulus_quadrature(
    cut: CutFunction,
    h: float,
    p: float,
    tol: float = 1e-9,
    spacing: float = DEFAULT_SPACING,
    max_depth: int = MAX_QUAD_DEPTH,
) -> float:
    """Left-continuity modulus of a cut map by adaptive quadrature over [h, 1]."""
    p = _check_p(p)
    h = float(h)
    if not 0.0 < h < 1.0:
        raise ValueError(f"h must lie in (0, 1), got {h}")
    if not tol > 0.0:
        raise ValueError(f"tol must be positive, got {tol}")

    def integrand(alpha: float) -> float:
        return hausdorff(cut(alpha), cut(alpha - h), spacing)[0] ** p

    return _integrate_power(integrand, h, 1.0, p, tol, spacing, max_depth, "modulus quadrature")
