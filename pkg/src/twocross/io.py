"""Text formats: SOC-style profiles, tournament edge lists, rho tables, result documents."""

from __future__ import annotations

import hashlib
import json
import re
from dataclasses import asdict, dataclass, field
from decimal import Decimal, InvalidOperation

import numpy as np

from .core import MisrepMatrix, Profile, validate_profile
from .tournament import WeightedTournament


class FormatError(ValueError):
    """Malformed input text; ``line`` is 1-based when known."""

    def __init__(self, message, line=None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass(frozen=True)
class ProfileDocument:
    source: str
    comments: tuple[str, ...]
    lines: tuple[tuple[int, tuple[int, ...]], ...]

    @property
    def num_voters(self) -> int:
        return sum(count for count, _ in self.lines)

    def to_profile(self) -> Profile:
        rows = [ranking for count, ranking in self.lines for _ in range(count)]
        return validate_profile(rows)


_SOC_LINE = re.compile(r"^\s*(\d+)\s*:\s*(.*?)\s*$")


def parse_profile_document(text: str, source: str = "<string>") -> ProfileDocument:
    comments, lines = [], []
    for no, raw in enumerate(text.splitlines(), start=1):
        if not raw.strip():
            continue
        if raw.lstrip().startswith("#"):
            comments.append(raw.lstrip()[1:].strip())
            continue
        match = _SOC_LINE.match(raw)
        if not match:
            raise FormatError(f"expected '<count>: <c1>,<c2>,...', got {raw.strip()!r}", no)
        count = int(match.group(1))
        if count == 0:
            raise FormatError("ballot count must be positive", no)
        try:
            ranking = tuple(int(tok) for tok in match.group(2).split(","))
        except ValueError:
            raise FormatError(f"ranking must be comma-separated integers, got {match.group(2)!r}", no) from None
        lines.append((no, count, ranking))
    if not lines:
        raise FormatError("no ballots found")
    m = max(max(r) for _, _, r in lines)
    for no, _, ranking in lines:
        if len(set(ranking)) != len(ranking):
            dup = next(c for c in ranking if ranking.count(c) > 1)
            raise FormatError(f"duplicate candidate {dup} (ties and repeats are not allowed)", no)
        if sorted(ranking) != list(range(1, m + 1)):
            missing = sorted(set(range(1, m + 1)) - set(ranking))
            raise FormatError(f"ranking is not a permutation of 1..{m} (missing {missing})", no)
    return ProfileDocument(source, tuple(comments), tuple((count, r) for _, count, r in lines))


def parse_profile_soc(text: str) -> Profile:
    """Expand ``<count>: <ranking>`` lines into voters, duplicates adjacent, in file order."""
    return parse_profile_document(text).to_profile()


def format_profile_soc(p: Profile, comments=()) -> str:
    out = [f"# {c}" for c in comments]
    i = 0
    rows = p.rankings
    while i < len(rows):
        j = i
        while j < len(rows) and rows[j] == rows[i]:
            j += 1
        out.append(f"{j - i}: " + ",".join(map(str, rows[i])))
        i = j
    return "\n".join(out) + "\n"


def parse_tournament(text: str) -> WeightedTournament:
    """First line ``m``; then ``c c' w`` lines with ``w > 0`` meaning margin[c, c'] = w."""
    body = [(no, raw.split("#", 1)[0].strip()) for no, raw in enumerate(text.splitlines(), start=1)]
    body = [(no, s) for no, s in body if s]
    if not body:
        raise FormatError("missing candidate count")
    no, head = body[0]
    try:
        m = int(head)
    except ValueError:
        raise FormatError(f"candidate count must be an integer, got {head!r}", no) from None
    if m < 1:
        raise FormatError("candidate count must be positive", no)
    seen, edges = set(), []
    for no, line in body[1:]:
        parts = line.split()
        if len(parts) != 3:
            raise FormatError(f"expected 'c c2 w', got {line!r}", no)
        try:
            c, c2, w = (int(x) for x in parts)
        except ValueError:
            raise FormatError(f"non-integer field in {line!r}", no) from None
        if not (1 <= c <= m and 1 <= c2 <= m) or c == c2:
            raise FormatError(f"candidate ids must be distinct and in 1..{m}", no)
        if w <= 0:
            raise FormatError("edge weight must be positive", no)
        key = frozenset((c, c2))
        if key in seen:
            raise FormatError(f"duplicate pair {{{c}, {c2}}}", no)
        seen.add(key)
        edges.append((c, c2, w))
    return WeightedTournament.from_edges(m, edges)


def format_tournament(t: WeightedTournament) -> str:
    return "\n".join([str(t.m)] + [f"{c} {c2} {w}" for c, c2, w in t.edges()]) + "\n"


def parse_rho(text: str) -> MisrepMatrix:
    """Whitespace-separated rows of integers or finite decimals.

    Decimals are scaled to integers by the smallest common power of ten;
    fractions and other rationals are rejected.
    """
    rows = []
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        row = []
        for tok in line.split():
            try:
                val = Decimal(tok)
            except InvalidOperation:
                raise FormatError(f"not an integer or decimal: {tok!r}", no) from None
            if not val.is_finite():
                raise FormatError(f"not a finite number: {tok!r}", no)
            row.append(val)
        rows.append((no, row))
    if not rows:
        raise FormatError("empty rho table")
    width = len(rows[0][1])
    for no, row in rows:
        if len(row) != width:
            raise FormatError(f"expected {width} values, got {len(row)}", no)
    places = max(max(-v.normalize().as_tuple().exponent, 0) for _, row in rows for v in row)
    scale = 10 ** places
    vals = np.array([[int(v * scale) for v in row] for _, row in rows], dtype=np.int64)
    return MisrepMatrix(vals, "custom", scale)


def format_rho(rho: MisrepMatrix) -> str:
    return "\n".join(" ".join(str(int(x)) for x in row) for row in rho.values) + "\n"


def digest(*texts: str) -> str:
    h = hashlib.sha256()
    for t in texts:
        h.update(t.encode())
        h.update(b"\0")
    return h.hexdigest()


@dataclass
class ResultDocument:
    command: str
    input_digest: str
    result: dict = field(default_factory=dict)
    status: str = "ok"

    def to_json(self, indent=2) -> str:
        return json.dumps(asdict(self), indent=indent, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "ResultDocument":
        data = json.loads(text)
        return cls(data["command"], data["input_digest"], data.get("result", {}), data.get("status", "ok"))
