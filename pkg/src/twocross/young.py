"""Weak and strong Young scores on two-crossing profiles.

For a fixed number ``s`` of kept voters, the requirement that ``c`` beats
(or ties) every rival becomes one interval-sum constraint per rival over
the voters laid out in a two-crossing order. Writing the kept indicator
as prefix sums ``S_0..S_n`` turns the whole system into difference
constraints, whose feasibility is a negative-cycle test.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .core import (
    STRONG,
    WEAK,
    NotTwoCrossingError,
    Profile,
    VoterOrder,
    _check_variant,
    as_order,
    condorcet_winners,
    crossing_counts,
)
from .recognition import recognize_two_crossing

BRUTE_FORCE_MAX_VOTERS = 12


@dataclass(frozen=True)
class DifferenceConstraintSystem:
    """Constraints ``S_i - S_j <= bound`` over variables ``S_0..S_{num_vars-1}``."""

    num_vars: int
    constraints: tuple[tuple[int, int, int], ...]
    s: int = 0


@dataclass(frozen=True)
class YoungResult:
    """``score`` is ``math.inf`` when no voter subset works (strong variant only)."""

    candidate: int
    variant: str
    score: float
    kept_voters: tuple[int, ...] | None

    @property
    def finite(self) -> bool:
        return self.score != math.inf


def thresholds(s: int, variant: str) -> tuple[int, int]:
    """Lower bound on kept supporters / upper bound on kept opponents of ``c``."""
    if variant == WEAK:
        return (s + 1) // 2, s // 2
    return s // 2 + 1, (s + 1) // 2 - 1


def _interval(col: np.ndarray):
    """(first, last) 1-based positions of the ones if they are one plain run."""
    ones = np.flatnonzero(col)
    if len(ones) and ones[-1] - ones[0] + 1 == len(ones):
        return int(ones[0]) + 1, int(ones[-1]) + 1
    return None


def _supporter_columns(p: Profile, order: VoterOrder, c: int) -> list[tuple[int, np.ndarray]]:
    pos = p.positions[order.index_array()]
    return [(c2, (pos[:, c - 1] < pos[:, c2 - 1]).astype(np.uint8)) for c2 in p.candidates if c2 != c]


def build_difference_system(p: Profile, order, c: int, s: int, variant: str = WEAK,
                            *, check: bool = True) -> DifferenceConstraintSystem:
    _check_variant(variant)
    order = as_order(order, p.num_voters)
    n = p.num_voters
    if not 0 <= s <= n:
        raise ValueError(f"kept-voter count {s} outside [0, {n}]")
    if check and crossing_counts(p, order).maximum > 2:
        raise NotTwoCrossingError("voter order is not two-crossing for this profile")
    lo_t, hi_t = thresholds(s, variant)
    cons = []
    for i in range(1, n + 1):
        cons.append((i, i - 1, 1))
        cons.append((i - 1, i, 0))
    cons.append((n, 0, s))
    cons.append((0, n, -s))
    for _, col in _supporter_columns(p, order, c):
        run = _interval(col)
        if run is not None:
            l, r = run
            cons.append((l - 1, r, -lo_t))
        else:
            # supporters wrap around (or are absent): opponents form a plain run
            l, r = _interval(1 - col)
            cons.append((r, l - 1, hi_t))
    return DifferenceConstraintSystem(n + 1, tuple(cons), s)


def solve_difference_system(d: DifferenceConstraintSystem):
    """Integer solution ``S`` (tuple) or None if the system is infeasible."""
    nv = d.num_vars
    source = nv
    if d.constraints:
        arr = np.asarray(d.constraints, dtype=np.int64).reshape(-1, 3)
        src = np.concatenate([np.full(nv, source, dtype=np.int64), arr[:, 1]])
        dst = np.concatenate([np.arange(nv, dtype=np.int64), arr[:, 0]])
        w = np.concatenate([np.zeros(nv, dtype=np.int64), arr[:, 2]])
    else:
        src = np.full(nv, source, dtype=np.int64)
        dst = np.arange(nv, dtype=np.int64)
        w = np.zeros(nv, dtype=np.int64)
    feasible, dist = kernels.bellman_ford(nv + 1, src, dst, w, source)
    if not feasible:
        return None
    S = tuple(int(x) for x in dist[:nv])
    for i, j, bound in d.constraints:
        assert S[i] - S[j] <= bound, (i, j, bound)
    return S


def _resolve_order(p: Profile, order):
    if order is None:
        order = recognize_two_crossing(p)
        if order is None:
            raise NotTwoCrossingError("profile is not two-crossing")
        return order
    order = as_order(order, p.num_voters)
    if crossing_counts(p, order).maximum > 2:
        raise NotTwoCrossingError("voter order is not two-crossing for this profile")
    return order


def young_score(p: Profile, c: int, variant: str = WEAK, order=None) -> YoungResult:
    """Minimum voter deletions making ``c`` a weak/strong Condorcet winner."""
    _check_variant(variant)
    if c not in p.candidates:
        raise ValueError(f"unknown candidate {c}")
    order = _resolve_order(p, order)
    n = p.num_voters
    for s in range(n, -1, -1):
        S = solve_difference_system(build_difference_system(p, order, c, s, variant, check=False))
        if S is None:
            continue
        kept = tuple(sorted(order.perm[i - 1] for i in range(1, n + 1) if S[i] - S[i - 1] == 1))
        return YoungResult(c, variant, n - s, kept)
    return YoungResult(c, variant, math.inf, None)


def _wins(diff: np.ndarray, variant: str) -> np.ndarray:
    return np.all(diff > 0, axis=-1) if variant == STRONG else np.all(diff >= 0, axis=-1)


def brute_force_young(p: Profile, c: int, variant: str = WEAK,
                      max_voters: int = BRUTE_FORCE_MAX_VOTERS) -> YoungResult:
    """Exhaustive search over kept subsets, largest first; works on any profile.

    Kept voters ``x`` must satisfy ``sum_v x_v * (2*[c >_v c'] - 1) >= 0``
    (``> 0`` for strong) for every rival ``c'``.
    """
    _check_variant(variant)
    n = p.num_voters
    if n > max_voters:
        raise ValueError(f"brute force limited to {max_voters} voters, got {n}")
    rivals = [c2 for c2 in p.candidates if c2 != c]
    pos = p.positions
    sign = np.stack([np.where(pos[:, c - 1] < pos[:, c2 - 1], 1, -1) for c2 in rivals], axis=1) \
        if rivals else np.zeros((n, 0), dtype=np.int64)
    for s in range(n, -1, -1):
        if s:
            combos = np.array(list(itertools.combinations(range(n), s)), dtype=np.int64)
        else:
            combos = np.zeros((1, 0), dtype=np.int64)
        diff = sign[combos].sum(axis=1)
        hit = np.flatnonzero(_wins(diff, variant))
        if len(hit):
            return YoungResult(c, variant, n - s, tuple(int(v) + 1 for v in combos[hit[0]]))
    return YoungResult(c, variant, math.inf, None)


def young_winners(p: Profile, variant: str = WEAK, order=None, oracle: bool = False):
    """``(winners, results)`` where ``results`` maps each candidate to its YoungResult."""
    _check_variant(variant)
    if oracle:
        results = {c: brute_force_young(p, c, variant) for c in p.candidates}
    else:
        order = _resolve_order(p, order)
        results = {c: young_score(p, c, variant, order) for c in p.candidates}
    best = min(r.score for r in results.values())
    return frozenset(c for c, r in results.items() if r.score == best), results


def verify_young_witness(p: Profile, result: YoungResult) -> bool:
    """Restrict to the kept voters and re-check the Condorcet condition."""
    if not result.finite:
        return False
    if len(result.kept_voters) != p.num_voters - result.score:
        return False
    if not result.kept_voters:
        # empty electorate: every margin is zero
        return result.variant == WEAK or p.num_candidates == 1
    sub = p.restrict(result.kept_voters)
    return result.candidate in condorcet_winners(sub, result.variant)
