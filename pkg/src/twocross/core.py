"""Profiles, majority statistics, crossing counts and misrepresentation.

Candidates and voters are 1-based ids throughout the public API; numpy
tables are indexed from 0 internally.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from . import kernels

STRONG = "strong"
WEAK = "weak"
UTILITARIAN = "utilitarian"
EGALITARIAN = "egalitarian"


class ProfileError(ValueError):
    """Raised for malformed rankings."""


class NotTwoCrossingError(ValueError):
    """Raised when a solver needs a two-crossing profile (or order) and did not get one."""


class InconsistentMisrepError(ValueError):
    """Raised when a misrepresentation table contradicts the rankings it is used with."""


def _check_variant(variant):
    if variant not in (STRONG, WEAK):
        raise ValueError(f"variant must be 'weak' or 'strong', got {variant!r}")


def _check_mode(mode):
    if mode not in (UTILITARIAN, EGALITARIAN):
        raise ValueError(f"mode must be 'utilitarian' or 'egalitarian', got {mode!r}")


@dataclass(frozen=True)
class Profile:
    """n voters, each a strict ranking of candidates 1..m (best first)."""

    rankings: tuple[tuple[int, ...], ...]

    @property
    def num_voters(self) -> int:
        return len(self.rankings)

    @property
    def num_candidates(self) -> int:
        return len(self.rankings[0])

    @property
    def candidates(self) -> range:
        return range(1, self.num_candidates + 1)

    @cached_property
    def positions(self) -> np.ndarray:
        """``positions[v, c - 1]`` is the 0-based rank of candidate ``c`` for voter ``v + 1``."""
        ranks = np.asarray(self.rankings, dtype=np.int64) - 1
        pos = np.empty_like(ranks)
        rows = np.arange(ranks.shape[0])[:, None]
        pos[rows, ranks] = np.arange(ranks.shape[1])[None, :]
        return pos

    @cached_property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        """Unordered candidate pairs ``(c, c')`` with ``c < c'``, in column order."""
        return tuple(itertools.combinations(self.candidates, 2))

    @cached_property
    def pair_bits(self) -> np.ndarray:
        """uint8 table ``[v, j] = 1`` iff voter ``v + 1`` ranks ``pairs[j][0]`` above ``pairs[j][1]``."""
        pos = self.positions
        if not self.pairs:
            return np.zeros((self.num_voters, 0), dtype=np.uint8)
        a = np.array([p[0] - 1 for p in self.pairs])
        b = np.array([p[1] - 1 for p in self.pairs])
        return (pos[:, a] < pos[:, b]).astype(np.uint8)

    def prefers(self, voter: int, c: int, c2: int) -> bool:
        pos = self.positions[voter - 1]
        return bool(pos[c - 1] < pos[c2 - 1])

    def restrict(self, voters: Iterable[int]) -> "Profile":
        """Sub-profile on the given 1-based voter ids, in the given order."""
        return Profile(tuple(self.rankings[v - 1] for v in voters))

    def reorder(self, order: "VoterOrder | Sequence[int]") -> "Profile":
        return self.restrict(as_order(order, self.num_voters).perm)

    def __repr__(self):
        return f"Profile(n={self.num_voters}, m={self.num_candidates})"


def validate_profile(raw) -> Profile:
    """Build a :class:`Profile` from a table of candidate ids.

    The candidate count is the largest id present; every row must be a
    permutation of ``1..m``.
    """
    rows = [tuple(int(c) for c in row) for row in raw]
    if not rows or not any(rows):
        raise ProfileError("empty profile")
    m = max(max(row) for row in rows if row)
    expected = set(range(1, m + 1))
    for v, row in enumerate(rows, start=1):
        seen = set()
        for c in row:
            if c < 1:
                raise ProfileError(f"voter {v}: candidate id {c} is not positive")
            if c in seen:
                raise ProfileError(f"voter {v}: duplicate candidate {c}")
            seen.add(c)
        missing = expected - seen
        if missing:
            raise ProfileError(f"voter {v}: missing candidate(s) {sorted(missing)}")
    return Profile(tuple(rows))


@dataclass(frozen=True)
class VoterOrder:
    """A permutation of voter ids 1..n."""

    perm: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.perm) != list(range(1, len(self.perm) + 1)):
            raise ValueError(f"not a permutation of 1..{len(self.perm)}: {self.perm}")

    @classmethod
    def identity(cls, n: int) -> "VoterOrder":
        return cls(tuple(range(1, n + 1)))

    def index_array(self) -> np.ndarray:
        return np.asarray(self.perm, dtype=np.int64) - 1

    def reversed(self) -> "VoterOrder":
        return VoterOrder(self.perm[::-1])

    def __len__(self):
        return len(self.perm)

    def __iter__(self):
        return iter(self.perm)


def as_order(order, n: int) -> VoterOrder:
    if not isinstance(order, VoterOrder):
        order = VoterOrder(tuple(int(v) for v in order))
    if len(order) != n:
        raise ValueError(f"order has {len(order)} voters, profile has {n}")
    return order


@dataclass(frozen=True)
class MarginMatrix:
    """Antisymmetric majority margins; ``mm[c, c2]`` uses 1-based candidate ids."""

    values: np.ndarray

    def __getitem__(self, key):
        c, c2 = key
        return int(self.values[c - 1, c2 - 1])

    @property
    def num_candidates(self) -> int:
        return self.values.shape[0]

    def __eq__(self, other):
        return isinstance(other, MarginMatrix) and np.array_equal(self.values, other.values)

    def __hash__(self):
        return hash(self.values.tobytes())


def majority_margins(p: Profile) -> MarginMatrix:
    """``m[c, c'] = #{v: c > c'} - #{v: c' > c}``."""
    m = p.num_candidates
    out = np.zeros((m, m), dtype=np.int64)
    if p.pairs:
        wins = p.pair_bits.sum(axis=0, dtype=np.int64)
        diff = 2 * wins - p.num_voters
        a = np.array([c - 1 for c, _ in p.pairs])
        b = np.array([c2 - 1 for _, c2 in p.pairs])
        out[a, b] = diff
        out[b, a] = -diff
    return MarginMatrix(out)


def condorcet_winners(p: Profile, variant: str = STRONG) -> frozenset[int]:
    _check_variant(variant)
    mm = majority_margins(p).values
    off = ~np.eye(mm.shape[0], dtype=bool)
    ok = (mm > 0) | ~off if variant == STRONG else (mm >= 0) | ~off
    return frozenset(int(c) + 1 for c in np.flatnonzero(ok.all(axis=1)))


@dataclass(frozen=True)
class CrossingReport:
    counts: dict
    maximum: int

    def is_k_crossing(self, k: int) -> bool:
        return self.maximum <= k


def crossing_counts(p: Profile, order=None) -> CrossingReport:
    """Per-pair number of adjacent disagreements along ``order`` (identity if omitted)."""
    order = VoterOrder.identity(p.num_voters) if order is None else as_order(order, p.num_voters)
    if not p.pairs:
        return CrossingReport({}, 0)
    counts = kernels.switch_counts(p.pair_bits, order.index_array())
    return CrossingReport(
        {pair: int(x) for pair, x in zip(p.pairs, counts)},
        int(counts.max()),
    )


@dataclass(frozen=True)
class MisrepMatrix:
    """Integer dissatisfaction table ``values[v - 1, c - 1]``.

    ``scale`` records the power of ten that decimal inputs were multiplied by.
    """

    values: np.ndarray
    provenance: str = "custom"
    scale: int = 1

    def __post_init__(self):
        vals = np.asarray(self.values)
        if vals.ndim != 2 or not np.issubdtype(vals.dtype, np.integer):
            raise ValueError("misrepresentation values must be a 2-D integer table")
        object.__setattr__(self, "values", vals.astype(np.int64))

    def __call__(self, voter: int, c: int) -> int:
        return int(self.values[voter - 1, c - 1])

    def is_consistent(self, p: Profile) -> bool:
        if self.values.shape != (p.num_voters, p.num_candidates):
            return False
        ranked = np.take_along_axis(self.values, np.asarray(p.rankings) - 1, axis=1)
        return bool(np.all(np.diff(ranked, axis=1) >= 0))

    def check(self, p: Profile) -> None:
        if self.values.shape != (p.num_voters, p.num_candidates):
            raise InconsistentMisrepError(
                f"table shape {self.values.shape} does not match profile ({p.num_voters}, {p.num_candidates})"
            )
        if not self.is_consistent(p):
            raise InconsistentMisrepError("misrepresentation table is not consistent with the rankings")

    def restrict(self, voters: Iterable[int]) -> "MisrepMatrix":
        idx = [v - 1 for v in voters]
        return MisrepMatrix(self.values[idx], self.provenance, self.scale)


def borda_misrep(p: Profile) -> MisrepMatrix:
    return MisrepMatrix(p.positions.copy(), "borda")


@dataclass(frozen=True)
class Assignment:
    """Voter-to-representative map; ``rep[v - 1]`` is voter v's candidate."""

    rep: tuple[int, ...]
    k: int
    committee: frozenset = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "committee", frozenset(self.rep))
        if self.k < 1:
            raise ValueError("committee bound k must be at least 1")
        if len(self.committee) > self.k:
            raise ValueError(f"assignment uses {len(self.committee)} candidates, bound is {self.k}")


def evaluate_assignment(p: Profile, rho: MisrepMatrix, a: Assignment, mode: str = UTILITARIAN) -> int:
    _check_mode(mode)
    rho.check(p)
    if len(a.rep) != p.num_voters:
        raise ValueError(f"assignment covers {len(a.rep)} voters, profile has {p.num_voters}")
    got = rho.values[np.arange(p.num_voters), np.asarray(a.rep) - 1]
    return int(got.sum()) if mode == UTILITARIAN else int(got.max())
