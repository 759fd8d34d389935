"""Level-set fuzzy numbers with finitely many cuts.

A :class:`LevelFuzzySet` stores a finite descending stack of compact cuts
indexed by membership grade alpha in (0, 1], with the grade-1 cut always
present (normality).  Between stored grades the cut map is piecewise
constant and left-closed from above: the cut at alpha is the stored set of
the smallest grade >= alpha.  This step convention makes the cut map upper
semicontinuous by construction and the level-set metric exactly integrable.

The grade-0 cut is the support, which for a finite stack is simply the
lowest stored set.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass

from .geometry import (
    CompactSet,
    Interval,
    Polygon,
    is_convex,
    is_star_shaped,
    max_norm_on_set,
    scale_set,
    set_contains,
    translate_set,
)

LABEL_FUZZY_NUMBER = "FuzzyNumber"
LABEL_FUZZY_STAR_SHAPED = "FuzzyStarShaped"
LABEL_NEITHER = "Neither"


class LevelStackError(ValueError):
    """The level list does not describe a valid fuzzy set."""


@dataclass(frozen=True)
class LevelFuzzySet:
    """Immutable stack of (alpha, cut) pairs, alphas strictly increasing to 1.

    Build through :func:`make_fuzzy` (or :func:`crisp`), which normalizes and
    validates; direct construction skips the invariant checks.
    """

    levels: tuple[tuple[float, CompactSet], ...]
    dim: int

    @property
    def alphas(self) -> tuple[float, ...]:
        return tuple(a for a, _ in self.levels)

    @property
    def support(self) -> CompactSet:
        return self.levels[0][1]

    @property
    def core(self) -> CompactSet:
        return self.levels[-1][1]


def make_fuzzy(levels) -> LevelFuzzySet:
    """Validated constructor from an iterable of (alpha, set) pairs.

    Sorts by alpha, drops exact-duplicate levels, and enforces: alphas in
    (0, 1] with the grade-1 level present (normality), a single ambient
    dimension, and nesting (each higher-grade cut contained in every
    lower-grade cut).
    """
    pairs = [(float(a), s) for a, s in levels]
    if not pairs:
        raise LevelStackError("empty level list")
    for a, s in pairs:
        if not isinstance(s, (Interval, Polygon)):
            raise LevelStackError(f"level {a}: expected an Interval or Polygon, got {type(s).__name__}")
        if not 0.0 < a <= 1.0:
            raise LevelStackError(f"alpha must lie in (0, 1], got {a}")
    pairs.sort(key=lambda p: p[0])
    deduped: list[tuple[float, CompactSet]] = []
    for a, s in pairs:
        if deduped and deduped[-1][0] == a:
            if deduped[-1][1] == s:
                continue
            raise LevelStackError(f"two different sets given for alpha = {a}")
        deduped.append((a, s))
    if deduped[-1][0] != 1.0:
        raise LevelStackError("no level with alpha = 1: normality requires a full-membership cut")
    dim = deduped[0][1].dim
    for a, s in deduped[1:]:
        if s.dim != dim:
            raise LevelStackError(f"mixed dimensions: level {a} has dim {s.dim}, expected {dim}")
    for (a_lo, s_lo), (a_hi, s_hi) in zip(deduped, deduped[1:]):
        if not set_contains(s_lo, s_hi):
            raise LevelStackError(
                f"levels not nested: the alpha = {a_hi} cut is not contained in the alpha = {a_lo} cut"
            )
    return LevelFuzzySet(levels=tuple(deduped), dim=dim)


def crisp(s: CompactSet) -> LevelFuzzySet:
    """The crisp element whose every cut is ``s``."""
    return LevelFuzzySet(levels=((1.0, s),), dim=s.dim)


def alpha_cut(u: LevelFuzzySet, alpha: float) -> CompactSet:
    """Cut at grade alpha.

    For alpha in (0, 1] this is the stored set of the smallest grade
    >= alpha; at alpha = 0 it is the support.
    """
    a = float(alpha)
    if not 0.0 <= a <= 1.0:
        raise ValueError(f"alpha must lie in [0, 1], got {alpha}")
    if a == 0.0:
        return u.levels[0][1]
    alphas = [lv[0] for lv in u.levels]
    return u.levels[bisect_left(alphas, a)][1]


def membership(u: LevelFuzzySet, x) -> float:
    """Membership grade of a point: the largest stored alpha whose cut holds x."""
    for a, s in reversed(u.levels):
        if isinstance(s, Interval):
            try:
                v = float(x)
            except (TypeError, ValueError):
                raise ValueError(f"expected a scalar point, got {x!r}") from None
            hit = s.contains_point(v)
        else:
            px, py = x
            hit = s.contains_point(float(px), float(py))
        if hit:
            return a
    return 0.0


def translate(u: LevelFuzzySet, t) -> LevelFuzzySet:
    """Shift every cut by ``t`` (scalar for dim 1, (x, y) vector for dim 2)."""
    return LevelFuzzySet(
        levels=tuple((a, translate_set(s, t)) for a, s in u.levels),
        dim=u.dim,
    )


def scale(u: LevelFuzzySet, factor: float) -> LevelFuzzySet:
    """Scale every cut about the origin by a positive factor."""
    return LevelFuzzySet(
        levels=tuple((a, scale_set(s, factor)) for a, s in u.levels),
        dim=u.dim,
    )


@dataclass(frozen=True)
class ClassificationReport:
    """Outcome of the per-condition checks behind the class label.

    ``normal``, ``upper_semicontinuous`` and ``compact_support`` hold for
    every validated stack by construction; they are reported for
    completeness.  ``p_mean_norm`` is the p-mean distance of the element to
    the crisp origin, always finite for a finite stack of compact cuts.
    """

    normal: bool
    upper_semicontinuous: bool
    convex_cuts: bool
    star_shaped_cuts: bool
    compact_support: bool
    finite_p_mean_norm: bool
    p_mean_norm: float
    p_used: float
    label: str

    def as_dict(self) -> dict:
        return {
            "label": self.label,
            "conditions": {
                "normal": self.normal,
                "upper_semicontinuous": self.upper_semicontinuous,
                "convex_cuts": self.convex_cuts,
                "star_shaped_cuts": self.star_shaped_cuts,
                "compact_support": self.compact_support,
                "finite_p_mean_norm": self.finite_p_mean_norm,
            },
            "p": self.p_used,
            "p_mean_norm": self.p_mean_norm,
        }


def _p_mean_norm_step(u: LevelFuzzySet, p: float) -> float:
    """Exact step integral of the cutwise max norm, p-mean scaled."""
    total = 0.0
    prev = 0.0
    for a, s in u.levels:
        total += (a - prev) * max_norm_on_set(s) ** p
        prev = a
    return total ** (1.0 / p)


def classify(u: LevelFuzzySet, p: float = 2.0) -> ClassificationReport:
    """Label the element as a fuzzy number, a fuzzy star-shaped number, or neither.

    A fuzzy number needs every cut convex; a fuzzy star-shaped number only
    needs every cut star-shaped.  Convex cuts are star-shaped, so the first
    class sits strictly inside the second.
    """
    p = float(p)
    if not p >= 1.0:
        raise ValueError(f"p must satisfy p >= 1, got {p}")
    convex_cuts = all(is_convex(s) for _, s in u.levels)
    star_cuts = convex_cuts or all(is_star_shaped(s) for _, s in u.levels)
    if convex_cuts:
        label = LABEL_FUZZY_NUMBER
    elif star_cuts:
        label = LABEL_FUZZY_STAR_SHAPED
    else:
        label = LABEL_NEITHER
    return ClassificationReport(
        normal=True,
        upper_semicontinuous=True,
        convex_cuts=convex_cuts,
        star_shaped_cuts=star_cuts,
        compact_support=True,
        finite_p_mean_norm=True,
        p_mean_norm=_p_mean_norm_step(u, p),
        p_used=p,
        label=label,
    )


def level_kernels(u: LevelFuzzySet):
    """Per-level kernels of a planar element, for callers that want to
    intersect them (star-shapedness is tested per cut, with no common
    kernel point required)."""
    from .geometry import polygon_kernel

    if u.dim != 2:
        raise ValueError("level kernels are only defined for planar elements")
    return tuple((a, polygon_kernel(s)) for a, s in u.levels)
