"""Finite-family diagnostics for the two precompactness criteria.

A family of fuzzy star-shaped numbers is precompact under the level-set L_p
metric exactly when it is uniformly p-mean bounded and p-mean
equi-left-continuous.  Both criteria are exactly computable on a finite
family at sampled shifts h, which is what this module does: the verdict is
numerical evidence about the sample, never a proof about an infinite family.

A greedy farthest-point epsilon-net is included as the constructive
companion: precompact families admit finite nets at every radius.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .fuzzy import LevelFuzzySet
from .metric import (
    DEFAULT_SPACING,
    _check_h_grid,
    _check_p,
    dp_distance,
    left_continuity_modulus,
    p_mean_norm,
)

VERDICT_CONSISTENT = "consistent_with_precompact"
VERDICT_BOUND_VIOLATED = "bound_violated"
VERDICT_EQUI_VIOLATED = "equi_violated"

EVIDENCE_NOTE = (
    "Verdict is numerical evidence from a finite family sample at sampled "
    "shift values; it is not a proof of precompactness."
)


def _check_family(family) -> list[LevelFuzzySet]:
    members = list(family)
    if not members:
        raise ValueError("empty family")
    dim = members[0].dim
    for i, u in enumerate(members):
        if u.dim != dim:
            raise ValueError(f"family mixes dimensions: member {i} has dim {u.dim}, expected {dim}")
    return members


def uniform_bound(family, p: float) -> float:
    """Smallest admissible uniform bound on the family's p-mean norms."""
    p = _check_p(p)
    members = _check_family(family)
    return max(p_mean_norm(u, p) for u in members)


def equi_modulus(family, h: float, p: float, spacing: float = DEFAULT_SPACING) -> float:
    """Supremum over the family of the left-continuity modulus at shift ``h``."""
    p = _check_p(p)
    members = _check_family(family)
    return max(left_continuity_modulus(u, h, p, spacing) for u in members)


@dataclass(frozen=True)
class FamilyReport:
    """Both precompactness criteria evaluated over a finite family.

    ``bound_m`` is the largest p-mean norm in the family; ``equi_table``
    pairs every sampled shift with the family-wide modulus supremum.  When
    the verdict is ``equi_violated``, ``violated_h``/``violated_value`` cite
    the offending table entry.
    """

    size: int
    p: float
    bound_m: float
    bound_threshold: float
    eps: float
    equi_table: tuple[tuple[float, float], ...]
    verdict: str
    violated_h: float | None = None
    violated_value: float | None = None
    note: str = field(default=EVIDENCE_NOTE)

    @property
    def consistent(self) -> bool:
        return self.verdict == VERDICT_CONSISTENT

    def as_dict(self) -> dict:
        return {
            "size": self.size,
            "p": self.p,
            "bound_M": self.bound_m,
            "bound_threshold": self.bound_threshold,
            "eps": self.eps,
            "equi_table": [[h, m] for h, m in self.equi_table],
            "verdict": self.verdict,
            "violated_h": self.violated_h,
            "violated_value": self.violated_value,
            "note": self.note,
        }


def precompactness_report(
    family,
    p: float,
    h_grid,
    bound_threshold: float,
    eps: float,
    spacing: float = DEFAULT_SPACING,
) -> FamilyReport:
    """Evaluate the uniform bound and the equi-left-continuity criterion.

    The bound criterion passes when the largest p-mean norm stays within
    ``bound_threshold``.  The equi criterion is judged at the smallest grid
    shift (the most demanding sampled check) against ``eps``; the full table
    is attached either way.  The bound is checked first when both fail.
    """
    p = _check_p(p)
    members = _check_family(family)
    grid = _check_h_grid(h_grid)
    if not bound_threshold > 0.0:
        raise ValueError(f"bound_threshold must be positive, got {bound_threshold}")
    if not eps > 0.0:
        raise ValueError(f"eps must be positive, got {eps}")
    bound_m = max(p_mean_norm(u, p) for u in members)
    table = tuple((h, equi_modulus(members, h, p, spacing)) for h in grid)
    if bound_m > bound_threshold:
        verdict, vh, vv = VERDICT_BOUND_VIOLATED, None, None
    elif table[0][1] >= eps:
        verdict, vh, vv = VERDICT_EQUI_VIOLATED, table[0][0], table[0][1]
    else:
        verdict, vh, vv = VERDICT_CONSISTENT, None, None
    return FamilyReport(
        size=len(members),
        p=p,
        bound_m=bound_m,
        bound_threshold=float(bound_threshold),
        eps=float(eps),
        equi_table=table,
        verdict=verdict,
        violated_h=vh,
        violated_value=vv,
    )


def pairwise_distances(family, p: float, spacing: float = DEFAULT_SPACING) -> np.ndarray:
    """Symmetric matrix of level-set L_p distances (values only)."""
    p = _check_p(p)
    members = _check_family(family)
    n = len(members)
    out = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1, n):
            d, _ = dp_distance(members[i], members[j], p, spacing)
            out[i, j] = out[j, i] = d
    return out


@dataclass(frozen=True)
class EpsNet:
    """Greedy cover of a family at radius ``eps`` under the level-set metric.

    ``representatives`` are indices into the family; ``assignment[i]`` maps
    member i to ``(representative_index, distance)``.
    """

    representatives: tuple[int, ...]
    eps: float
    assignment: tuple[tuple[int, float], ...]


def greedy_epsilon_net(family, eps: float, p: float, spacing: float = DEFAULT_SPACING) -> EpsNet:
    """Farthest-point traversal until every member sits within ``eps`` of a
    representative.

    Starts from index 0 and repeatedly promotes the member farthest from the
    current representatives (ties broken by lowest index).  Uses O(k * n)
    distance evaluations for a net of size k.
    """
    p = _check_p(p)
    if not eps > 0.0:
        raise ValueError(f"eps must be positive, got {eps}")
    members = _check_family(family)
    n = len(members)
    reps = [0]
    rows = {0: [dp_distance(u, members[0], p, spacing)[0] for u in members]}
    nearest = list(rows[0])
    while True:
        far_i = 0
        far_d = -1.0
        for i in range(n):
            if nearest[i] > far_d:
                far_d = nearest[i]
                far_i = i
        if far_d <= eps:
            break
        reps.append(far_i)
        row = [dp_distance(u, members[far_i], p, spacing)[0] for u in members]
        rows[far_i] = row
        for i in range(n):
            if row[i] < nearest[i]:
                nearest[i] = row[i]
    # nearest representative per member, ties to the lowest family index
    assignment = []
    for i in range(n):
        best = min(sorted(reps), key=lambda r: rows[r][i])
        assignment.append((best, rows[best][i]))
    return EpsNet(
        representatives=tuple(reps),
        eps=float(eps),
        assignment=tuple(assignment),
    )
