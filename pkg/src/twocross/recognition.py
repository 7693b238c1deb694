"""Two-crossing recognition, matrix/profile reductions and structured generators."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .c1p import BinaryMatrix, circ_c1p_witness
from .core import Profile, VoterOrder, crossing_counts, validate_profile

TWO_PI = 2.0 * math.pi
TIE_TOL = 1e-12


class HorseshoeTieError(ValueError):
    """A voter is equidistant from two candidates."""


@dataclass(frozen=True)
class PairMatrix:
    """Voter-by-pair preference bits; column ``j`` is labelled ``pairs[j] = (c, c')``, c < c'."""

    matrix: BinaryMatrix
    pairs: tuple[tuple[int, int], ...]

    def column(self, c: int, c2: int) -> np.ndarray:
        if c < c2:
            return self.matrix.bits[:, self.pairs.index((c, c2))]
        return 1 - self.matrix.bits[:, self.pairs.index((c2, c))]


def pair_matrix(p: Profile) -> PairMatrix:
    if p.num_candidates < 2:
        raise ValueError("pair matrix needs at least two candidates")
    return PairMatrix(BinaryMatrix(p.pair_bits), p.pairs)


def is_two_crossing_order(p: Profile, order) -> bool:
    return crossing_counts(p, order).maximum <= 2


def recognize_two_crossing(p: Profile) -> VoterOrder | None:
    """A voter order along which every pair crosses at most twice, or None.

    Works on unordered pairs only: complementing a column keeps circular
    intervals circular, so the (c', c) columns would add nothing.
    """
    if p.num_candidates < 2:
        return VoterOrder.identity(p.num_voters)
    witness = circ_c1p_witness(pair_matrix(p).matrix)
    return None if witness is None else VoterOrder(witness)


def profile_from_matrix(m) -> Profile:
    """Two candidates per column; voter i ranks 2j-1 above 2j iff ``m[i][j] = 1``.

    Columns are ranked block by block in column order, so only the pair
    inside a block can ever cross.
    """
    m = m if isinstance(m, BinaryMatrix) else BinaryMatrix(np.asarray(m))
    rows = []
    for bits in m.bits:
        row = []
        for j, bit in enumerate(bits):
            hi, lo = 2 * j + 1, 2 * j + 2
            row.extend((hi, lo) if bit else (lo, hi))
        rows.append(tuple(row))
    return Profile(tuple(rows))


def arc_distance(a: float, b: float) -> float:
    d = abs(a - b) % TWO_PI
    return min(d, TWO_PI - d)


def horseshoe_profile(voter_angles, candidate_angles) -> Profile:
    """Voters rank candidates by increasing arc distance on the unit circle."""
    voter_angles = [float(a) for a in voter_angles]
    candidate_angles = [float(a) for a in candidate_angles]
    if not voter_angles or not candidate_angles:
        raise ValueError("need at least one voter and one candidate")
    for a in voter_angles + candidate_angles:
        if not 0.0 <= a < TWO_PI:
            raise ValueError(f"angle {a} outside [0, 2*pi)")
    rows = []
    for v, va in enumerate(voter_angles, start=1):
        dist = np.array([arc_distance(va, ca) for ca in candidate_angles])
        order = np.argsort(dist, kind="stable")
        gaps = np.diff(dist[order])
        if np.any(gaps <= TIE_TOL):
            i = int(np.argmax(gaps <= TIE_TOL))
            raise HorseshoeTieError(
                f"voter {v} is equidistant from candidates {order[i] + 1} and {order[i + 1] + 1}"
            )
        rows.append(tuple(int(c) + 1 for c in order))
    return validate_profile(rows)


def angle_order(voter_angles) -> VoterOrder:
    """Voters sorted by angle; witnesses two-crossing for a horseshoe profile."""
    return VoterOrder(tuple(int(i) + 1 for i in np.argsort(np.asarray(voter_angles), kind="stable")))


def random_horseshoe(n: int, m: int, rng=None):
    """Random horseshoe profile with uniform angles, redrawn until tie-free.

    Returns ``(profile, voter_angles, candidate_angles)``.
    """
    rng = np.random.default_rng(rng)
    while True:
        voters = rng.uniform(0.0, TWO_PI, size=n)
        cands = rng.uniform(0.0, TWO_PI, size=m)
        try:
            return horseshoe_profile(voters, cands), voters, cands
        except HorseshoeTieError:
            continue
