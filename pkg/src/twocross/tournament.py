"""Two-crossing profiles that realize a prescribed weighted majority tournament."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import MarginMatrix, Profile, majority_margins


class ParityError(ValueError):
    """Target margins do not share a single parity."""


@dataclass(frozen=True, eq=False)
class WeightedTournament:
    """Target margins, antisymmetric with zero diagonal; ``t[c, c2]`` is 1-based."""

    margins: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.margins)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ValueError("margin table must be square")
        if not np.issubdtype(arr.dtype, np.integer):
            raise ValueError("margins must be integers")
        arr = arr.astype(np.int64)
        if not np.array_equal(arr, -arr.T):
            raise ValueError("margin table must be antisymmetric with zero diagonal")
        object.__setattr__(self, "margins", arr)

    @classmethod
    def from_edges(cls, m: int, edges) -> "WeightedTournament":
        """Build from ``(c, c', w)`` triples meaning ``margin[c, c'] = w``."""
        arr = np.zeros((m, m), dtype=np.int64)
        for c, c2, w in edges:
            arr[c - 1, c2 - 1] = w
            arr[c2 - 1, c - 1] = -w
        return cls(arr)

    @classmethod
    def from_margins(cls, mm: MarginMatrix) -> "WeightedTournament":
        return cls(mm.values.copy())

    @property
    def m(self) -> int:
        return self.margins.shape[0]

    @property
    def W(self) -> int:
        return int(np.abs(self.margins).max()) if self.m else 0

    def __getitem__(self, key):
        c, c2 = key
        return int(self.margins[c - 1, c2 - 1])

    def __eq__(self, other):
        return isinstance(other, WeightedTournament) and np.array_equal(self.margins, other.margins)

    def edges(self):
        """Positive-weight edges ``(c, c', w)``."""
        return [
            (c + 1, c2 + 1, int(self.margins[c, c2]))
            for c in range(self.m)
            for c2 in range(self.m)
            if self.margins[c, c2] > 0
        ]

    def parity(self) -> int:
        """Common parity (0 or 1) of the off-diagonal weights."""
        iu = np.triu_indices(self.m, 1)
        par = set((self.margins[iu] % 2).tolist())
        if len(par) > 1:
            raise ParityError("margins mix odd and even weights (absent edges count as 0)")
        return par.pop() if par else 0


def _bubble_rankings(m: int) -> list[tuple[int, ...]]:
    cur = list(range(1, m + 1))
    out = [tuple(cur)]
    # descending sweep: the front candidate walks back to its final slot
    for i in range(m - 1):
        for j in range(m - 1 - i):
            cur[j], cur[j + 1] = cur[j + 1], cur[j]
            out.append(tuple(cur))
    # ascending sweep, scanning from the back: candidate i walks forward to slot i
    for i in range(m - 1):
        for j in range(m - 1, i, -1):
            cur[j - 1], cur[j] = cur[j], cur[j - 1]
            out.append(tuple(cur))
    return out


def double_bubblesort_profile(m: int) -> Profile:
    """The m(m-1)+1 voter base profile with every margin ``[c, c'] = 1`` for c < c'."""
    if m < 2:
        raise ValueError("need at least two candidates")
    return Profile(tuple(_bubble_rankings(m)))


def _mirror(ranking: tuple[int, ...], c: int, c2: int) -> tuple[int, ...]:
    # A c c' B  ->  rev(B) c c' rev(A)
    rev = list(ranking[::-1])
    i = rev.index(c2)
    rev[i], rev[i + 1] = rev[i + 1], rev[i]
    return tuple(rev)


def find_adjustment_pair(base: list[tuple[int, ...]], c: int, c2: int) -> tuple[int, int]:
    """Indices of base voters ``A c c' B`` and ``rev(B) c c' rev(A)``, earliest first."""
    index = {}
    for i, r in enumerate(base):
        index.setdefault(r, i)
    for i, r in enumerate(base):
        pos = r.index(c)
        if pos + 1 < len(r) and r[pos + 1] == c2:
            j = index.get(_mirror(r, c, c2))
            if j is not None:
                return i, j
    raise LookupError(f"no adjustment pair for ({c}, {c2})")


def synthesize_two_crossing(t: WeightedTournament) -> Profile:
    """A profile with margins exactly ``t``, two-crossing in the returned voter order.

    Every copy is inserted next to its original, so the construction order
    keeps the base profile's crossing counts.
    """
    m = t.m
    if m < 2:
        raise ValueError("need at least two candidates")
    parity = t.parity()
    base = _bubble_rankings(m)
    mult = [1] * len(base)
    if parity == 0:
        mult[m * (m - 1) // 2] += 1  # second copy of the reversed voter
    current = majority_margins(Profile(tuple(r for r, k in zip(base, mult) for _ in range(k)))).values
    for c in range(1, m + 1):
        for c2 in range(c + 1, m + 1):
            delta = int(t.margins[c - 1, c2 - 1] - current[c - 1, c2 - 1])
            if delta == 0:
                continue
            hi, lo = (c, c2) if delta > 0 else (c2, c)
            i, j = find_adjustment_pair(base, hi, lo)
            steps = abs(delta) // 2
            mult[i] += steps
            mult[j] += steps
    return Profile(tuple(r for r, k in zip(base, mult) for _ in range(k)))


def voter_bound(t: WeightedTournament) -> int:
    """m(m-1) + 2 + sum over pairs of |target - base margin|."""
    m = t.m
    base = 1 if t.parity() == 1 else 0
    iu = np.triu_indices(m, 1)
    return m * (m - 1) + 2 + int(np.abs(t.margins[iu] - base).sum())
