import numpy as np
import pytest
from hypothesis import strategies as st

from twocross.core import validate_profile

SEVEN_VOTERS = [
    [1, 2, 3, 4],
    [2, 1, 3, 4],
    [3, 2, 1, 4],
    [3, 4, 2, 1],
    [3, 4, 1, 2],
    [3, 1, 4, 2],
    [1, 3, 4, 2],
]
PARADOX = [[1, 2, 3], [2, 3, 1], [3, 1, 2]]


@pytest.fixture
def seven():
    return validate_profile(SEVEN_VOTERS)


@pytest.fixture
def paradox():
    return validate_profile(PARADOX)


@pytest.fixture
def rng():
    return np.random.default_rng(20221014)


@st.composite
def rankings(draw, max_voters=6, max_candidates=4, min_candidates=1):
    m = draw(st.integers(min_candidates, max_candidates))
    return draw(st.lists(st.permutations(list(range(1, m + 1))), min_size=1, max_size=max_voters))


def random_consistent_rho(profile, rng, low=-5, high=10):
    vals = np.zeros((profile.num_voters, profile.num_candidates), dtype=np.int64)
    for v, r in enumerate(profile.rankings):
        vals[v, np.asarray(r) - 1] = np.sort(rng.integers(low, high, size=profile.num_candidates))
    return vals


_REPORT_KEY = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_REPORT_KEY] = []


@pytest.fixture
def criterion(request):
    """Record one PASS/FAIL line per acceptance criterion for the terminal summary."""
    lines = request.config.stash[_REPORT_KEY]

    def record(label, ok, detail=""):
        line = f"[{'PASS' if ok else 'FAIL'}] {label}" + (f" ({detail})" if detail else "")
        lines.append(line)
        print(line)
        assert ok, line

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_REPORT_KEY, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
