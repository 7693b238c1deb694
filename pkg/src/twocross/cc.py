"""Chamberlin-Courant committees on two-crossing profiles.

Voters are laid out in a two-crossing order. ``dyp[l, e, t]`` is the best
aggregated dissatisfaction of voters ``l..e-1`` (0-based, half open) with at
most ``t`` representatives; ``dyp2[l, e, t, c]`` is the same but with ``c``
as the root candidate, used at least once. For the root's first voter
``w`` and a budget ``t0`` for the voters before it::

    dyp2[l, e, t, c] = min over w, t0 of
        dyp[l, w, t0] (+) rho[w, c] (+) min(dyp[w+1, e, t-t0-1], dyp2[w+1, e, t-t0, c])

where ``(+)`` is ``+`` (utilitarian) or ``max`` (egalitarian). Traced-back
assignments may reuse a candidate in separate branches; that only
over-counts the committee size, so they stay feasible and optimal.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .core import (
    EGALITARIAN,
    UTILITARIAN,
    Assignment,
    InconsistentMisrepError,
    MisrepMatrix,
    NotTwoCrossingError,
    Profile,
    _check_mode,
    as_order,
    crossing_counts,
    evaluate_assignment,
)
from .recognition import recognize_two_crossing

EXACT_LIMIT = 2**53
BRUTE_FORCE_MAX_COMMITTEES = 200_000


@dataclass(frozen=True)
class CCInstance:
    profile: Profile
    rho: MisrepMatrix
    k: int
    mode: str = UTILITARIAN

    def __post_init__(self):
        _check_mode(self.mode)
        if self.k < 1:
            raise ValueError("committee bound k must be at least 1")
        self.rho.check(self.profile)
        worst = int(np.abs(self.rho.values).max()) * max(self.profile.num_voters, 1)
        if worst >= EXACT_LIMIT:
            raise ValueError("misrepresentation values too large for exact table arithmetic")


@dataclass(frozen=True)
class DPTables:
    """Filled tables for voters in ``order``; infeasible cells hold ``inf``."""

    order: tuple[int, ...]
    dyp: np.ndarray
    dyp2: np.ndarray
    best_c: np.ndarray
    best_w: np.ndarray
    best_t0: np.ndarray
    best_br: np.ndarray


@dataclass(frozen=True)
class CCResult:
    value: int
    assignment: Assignment
    committee: frozenset


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


def fill_tables(inst: CCInstance, order=None) -> DPTables:
    order = _resolve_order(inst.profile, order)
    k = min(inst.k, inst.profile.num_candidates)
    rho = inst.rho.values[order.index_array()].astype(np.float64)
    tables = kernels.cc_tables(np.ascontiguousarray(rho), k, inst.mode == EGALITARIAN)
    return DPTables(order.perm, *tables)


def _trace(tables: DPTables, n: int, k: int) -> list[int]:
    """0-based representative per ordered voter, following the stored argmins."""
    rep = [-1] * n
    stack = [("dyp", 0, n, k, -1)]
    while stack:
        kind, l, e, t, c = stack.pop()
        if l == e:
            continue
        if kind == "dyp":
            stack.append(("dyp2", l, e, t, int(tables.best_c[l, e, t])))
            continue
        w = int(tables.best_w[l, e, t, c])
        t0 = int(tables.best_t0[l, e, t, c])
        assert w >= 0, "traced into an infeasible cell"
        rep[w] = c
        stack.append(("dyp", l, w, t0, -1))
        if tables.best_br[l, e, t, c]:
            stack.append(("dyp2", w + 1, e, t - t0, c))
        else:
            stack.append(("dyp", w + 1, e, t - t0 - 1, -1))
    return rep


def _pad(committee: frozenset, k: int, m: int) -> frozenset:
    extra = [c for c in range(1, m + 1) if c not in committee][: max(0, min(k, m) - len(committee))]
    return committee | frozenset(extra)


def cc_solve(p: Profile, rho: MisrepMatrix, k: int, mode: str = UTILITARIAN,
             *, order=None, pad: bool = False) -> CCResult:
    """Optimal committee of size at most ``k`` and its aggregated dissatisfaction."""
    inst = CCInstance(p, rho, k, mode)
    tables = fill_tables(inst, order)
    n = p.num_voters
    kk = min(k, p.num_candidates)
    best = tables.dyp[0, n, kk]
    if not math.isfinite(best):
        raise AssertionError("no feasible assignment found")
    ordered_rep = _trace(tables, n, kk)
    rep = [0] * n
    for pos, voter in enumerate(tables.order):
        rep[voter - 1] = ordered_rep[pos] + 1
    assignment = Assignment(tuple(rep), k)
    value = evaluate_assignment(p, rho, assignment, mode)
    if value != int(best):
        raise AssertionError(f"reconstructed value {value} differs from table optimum {best}")
    committee = assignment.committee
    return CCResult(value, assignment, _pad(committee, k, p.num_candidates) if pad else committee)


def brute_force_cc(p: Profile, rho: MisrepMatrix, k: int, mode: str = UTILITARIAN,
                   max_committees: int = BRUTE_FORCE_MAX_COMMITTEES) -> CCResult:
    """Try every committee of size 1..k; each voter takes its least-dissatisfying member."""
    _check_mode(mode)
    if k < 1:
        raise ValueError("committee bound k must be at least 1")
    if rho.values.shape != (p.num_voters, p.num_candidates):
        raise InconsistentMisrepError("table shape does not match the profile")
    m = p.num_candidates
    sizes = range(1, min(k, m) + 1)
    total = sum(math.comb(m, s) for s in sizes)
    if total > max_committees:
        raise ValueError(f"{total} committees exceeds the brute-force bound {max_committees}")
    vals = rho.values
    best = None
    for size in sizes:
        for comm in itertools.combinations(range(m), size):
            sub = vals[:, comm]
            per_voter = sub.min(axis=1)
            score = int(per_voter.sum()) if mode == UTILITARIAN else int(per_voter.max())
            if best is None or score < best[0]:
                best = (score, comm, sub.argmin(axis=1))
    score, comm, pick = best
    rep = tuple(comm[i] + 1 for i in pick)
    assignment = Assignment(rep, k)
    return CCResult(score, assignment, assignment.committee)
