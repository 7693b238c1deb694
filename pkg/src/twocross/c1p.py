"""Consecutive-ones recognition on binary matrices.

Convention: rows are permuted so that the ones of every *column* become
consecutive (linear) or circularly consecutive (wrap-around allowed).

The linear test groups the columns into overlap components. Within a
component the row order is forced up to reversal and is built by
refining an ordered partition one column at a time; components are then
nested by containment of their row sets.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from . import kernels


@dataclass(frozen=True, eq=False)
class BinaryMatrix:
    bits: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.bits)
        if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
            raise ValueError(f"binary matrix must be 2-D and non-empty, got shape {arr.shape}")
        if not np.isin(arr, (0, 1)).all():
            raise ValueError("binary matrix entries must be 0 or 1")
        object.__setattr__(self, "bits", arr.astype(np.uint8))

    @property
    def rows(self) -> int:
        return self.bits.shape[0]

    @property
    def cols(self) -> int:
        return self.bits.shape[1]

    def permuted(self, order) -> np.ndarray:
        return self.bits[np.asarray(order, dtype=np.int64) - 1]

    def __eq__(self, other):
        return isinstance(other, BinaryMatrix) and np.array_equal(self.bits, other.bits)

    def __hash__(self):
        return hash((self.bits.shape, self.bits.tobytes()))


def _to_matrix(m) -> BinaryMatrix:
    return m if isinstance(m, BinaryMatrix) else BinaryMatrix(np.asarray(m))


def _check_row_order(order, rows: int) -> np.ndarray:
    order = tuple(int(i) for i in order)
    if sorted(order) != list(range(1, rows + 1)):
        raise ValueError(f"not a permutation of 1..{rows}: {order}")
    return np.asarray(order, dtype=np.int64) - 1


def complement_transform(m) -> BinaryMatrix:
    """Flip every column that has a one in the first row."""
    m = _to_matrix(m)
    flip = m.bits[0] == 1
    out = m.bits.copy()
    out[:, flip] ^= 1
    return BinaryMatrix(out)


@dataclass(frozen=True)
class SwitchReport:
    counts: tuple[int, ...]
    maximum: int


def switch_counts(m, order=None) -> SwitchReport:
    """Adjacent disagreements per column along a 1-based row order."""
    m = _to_matrix(m)
    idx = np.arange(m.rows) if order is None else _check_row_order(order, m.rows)
    counts = kernels.switch_counts(m.bits, idx)
    return SwitchReport(tuple(int(x) for x in counts), int(counts.max()))


def _bits_to_int(col: np.ndarray) -> int:
    return int.from_bytes(np.packbits(col, bitorder="little").tobytes(), "little")


def _members(x: int) -> list[int]:
    out = []
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return out


def _overlap(a: int, b: int) -> bool:
    return bool(a & b) and bool(a & ~b) and bool(b & ~a)


def _place(blocks: list[int], union: int, s: int) -> list[int] | None:
    """Insert set ``s`` into an ordered partition it overlaps; None if impossible."""
    touched = [i for i, blk in enumerate(blocks) if blk & s]
    lo, hi = touched[0], touched[-1]
    if hi - lo + 1 != len(touched):
        return None
    full = [not (blk & ~s) for blk in blocks]
    fresh = s & ~union
    out = list(blocks)
    if fresh:
        if hi == len(blocks) - 1 and all(full[lo + 1:hi + 1]):
            if not full[lo]:
                out[lo:lo + 1] = [blocks[lo] & ~s, blocks[lo] & s]
            out.append(fresh)
        elif lo == 0 and all(full[lo:hi]):
            if not full[hi]:
                out[hi:hi + 1] = [blocks[hi] & s, blocks[hi] & ~s]
            out.insert(0, fresh)
        else:
            return None
        return out
    if not all(full[lo + 1:hi]):
        return None
    # lo == hi would mean s sits inside one block, which an overlapping set cannot do
    assert lo < hi
    if not full[hi]:
        out[hi:hi + 1] = [blocks[hi] & s, blocks[hi] & ~s]
    if not full[lo]:
        out[lo:lo + 1] = [blocks[lo] & ~s, blocks[lo] & s]
    return out


def _component_blocks(sets: list[int], members: list[int]) -> list[int] | None:
    # breadth-first so that each newly placed set overlaps one already placed
    adj = {i: [j for j in members if j != i and _overlap(sets[i], sets[j])] for i in members}
    seen = {members[0]}
    queue = deque([members[0]])
    blocks = [sets[members[0]]]
    union = sets[members[0]]
    first = True
    while queue:
        i = queue.popleft()
        if not first:
            blocks = _place(blocks, union, sets[i])
            if blocks is None:
                return None
            union |= sets[i]
        first = False
        for j in adj[i]:
            if j not in seen:
                seen.add(j)
                queue.append(j)
    return blocks


def _order_sets(rows: int, sets: list[int]) -> list[int] | None:
    """0-based row order making every set in ``sets`` consecutive, or None."""
    full = (1 << rows) - 1
    sets = sorted({s for s in sets if s & (s - 1) and s != full})
    if not sets:
        return list(range(rows))

    # overlap components
    comp_of = [-1] * len(sets)
    comps: list[list[int]] = []
    for i in range(len(sets)):
        if comp_of[i] >= 0:
            continue
        comp_of[i] = len(comps)
        members = [i]
        stack = [i]
        while stack:
            a = stack.pop()
            for b in range(len(sets)):
                if comp_of[b] < 0 and _overlap(sets[a], sets[b]):
                    comp_of[b] = len(comps)
                    members.append(b)
                    stack.append(b)
        comps.append(sorted(members))

    comp_blocks = []
    for members in comps:
        blocks = _component_blocks(sets, members)
        if blocks is None:
            return None
        comp_blocks.append(blocks)
    unions = [0] * len(comps)
    for ci, blocks in enumerate(comp_blocks):
        for b in blocks:
            unions[ci] |= b

    # each component's rows sit inside one block of any component it nests in;
    # the smallest such block is its parent
    children: dict[tuple[int, int], list[int]] = {}
    roots = []
    for ci, u in enumerate(unions):
        best = None
        for cj, blocks in enumerate(comp_blocks):
            if cj == ci:
                continue
            for bi, b in enumerate(blocks):
                if not (u & ~b):
                    key = (b.bit_count(), unions[cj].bit_count())
                    if best is None or key < best[0]:
                        best = (key, cj, bi)
        if best is None:
            roots.append(ci)
        else:
            children.setdefault((best[1], best[2]), []).append(ci)

    def expand_comp(ci: int) -> list[int]:
        out = []
        for bi, b in enumerate(comp_blocks[ci]):
            covered = 0
            for child in children.get((ci, bi), ()):
                out.extend(expand_comp(child))
                covered |= unions[child]
            out.extend(_members(b & ~covered))
        return out

    order = []
    covered = 0
    for ci in roots:
        order.extend(expand_comp(ci))
        covered |= unions[ci]
    order.extend(_members(full & ~covered))
    return order


def _distinct_rows(bits: np.ndarray):
    uniq, first, inverse = np.unique(bits, axis=0, return_index=True, return_inverse=True)
    inverse = np.asarray(inverse).reshape(-1)
    # keep representatives in order of first appearance
    rank = np.argsort(first, kind="stable")
    relabel = np.empty_like(rank)
    relabel[rank] = np.arange(len(rank))
    return uniq[rank], relabel[inverse]


def c1p_witness(m) -> tuple[int, ...] | None:
    """A 1-based row order making each column's ones consecutive, or None.

    Identical rows are placed next to each other; they never affect the answer.
    """
    m = _to_matrix(m)
    reps, label = _distinct_rows(m.bits)
    sets = [_bits_to_int(reps[:, j]) for j in range(reps.shape[1])]
    rep_order = _order_sets(reps.shape[0], sets)
    if rep_order is None:
        return None
    groups: list[list[int]] = [[] for _ in range(reps.shape[0])]
    for row, g in enumerate(label):
        groups[g].append(row + 1)
    return tuple(r for g in rep_order for r in groups[g])


def circ_c1p_witness(m) -> tuple[int, ...] | None:
    """A 1-based row order making each column's ones circularly consecutive, or None."""
    return c1p_witness(complement_transform(m))


def is_consecutive(column) -> bool:
    ones = np.flatnonzero(np.asarray(column))
    return len(ones) == 0 or ones[-1] - ones[0] + 1 == len(ones)


def circular_runs(column) -> int:
    """Number of maximal runs of ones when the column wraps around."""
    col = np.asarray(column).astype(bool)
    if col.all():
        return 1
    return int(np.count_nonzero(col & ~np.roll(col, 1)))


def is_circularly_consecutive(column) -> bool:
    return circular_runs(column) <= 1
