import numpy as np
import pytest

from twocross.cc import EXACT_LIMIT, CCInstance, brute_force_cc, cc_solve, fill_tables
from twocross.core import (
    EGALITARIAN,
    UTILITARIAN,
    InconsistentMisrepError,
    MisrepMatrix,
    NotTwoCrossingError,
    borda_misrep,
    evaluate_assignment,
    validate_profile,
)
from twocross.recognition import profile_from_matrix, random_horseshoe

from conftest import random_consistent_rho
from oracles import cc_oracle
from test_c1p import FOUR_CYCLE_PLUS

SEVEN_VOTER_CC = {
    (1, UTILITARIAN): 5, (2, UTILITARIAN): 1, (3, UTILITARIAN): 0, (4, UTILITARIAN): 0,
    (1, EGALITARIAN): 2, (2, EGALITARIAN): 1, (3, EGALITARIAN): 0, (4, EGALITARIAN): 0,
}


class TestSevenVoters:
    @pytest.mark.parametrize("k, mode", sorted(SEVEN_VOTER_CC))
    def test_values(self, seven, k, mode):
        rho = borda_misrep(seven)
        res = cc_solve(seven, rho, k, mode)
        assert res.value == SEVEN_VOTER_CC[k, mode]
        assert brute_force_cc(seven, rho, k, mode).value == res.value
        assert cc_oracle(rho.values.tolist(), k, mode == EGALITARIAN) == res.value
        assert evaluate_assignment(seven, rho, res.assignment, mode) == res.value
        assert len(res.committee) <= k

    def test_k1_committee(self, seven):
        assert cc_solve(seven, borda_misrep(seven), 1).committee == {3}

    def test_k2_committee_value_equivalent(self, seven):
        rho = borda_misrep(seven)
        res = cc_solve(seven, rho, 2)
        best_13 = rho.values[:, [0, 2]].min(axis=1).sum()
        assert res.value == best_13 == 1


class TestEdgeCases:
    def test_single_candidate(self):
        p = validate_profile([[1], [1], [1]])
        rho = MisrepMatrix(np.array([[2], [0], [5]]))
        res = cc_solve(p, rho, 2)
        assert res.value == 7 and res.committee == {1}

    def test_k_at_least_m_gives_tops(self, rng):
        for _ in range(30):
            p, _, _ = random_horseshoe(int(rng.integers(1, 8)), int(rng.integers(1, 6)), rng)
            res = cc_solve(p, borda_misrep(p), p.num_candidates + int(rng.integers(0, 3)))
            assert res.value == 0

    def test_pad(self, seven):
        res = cc_solve(seven, borda_misrep(seven), 4, pad=True)
        assert len(res.committee) == 4
        assert evaluate_assignment(seven, borda_misrep(seven), res.assignment) == 0

    def test_bad_k(self, seven):
        with pytest.raises(ValueError):
            cc_solve(seven, borda_misrep(seven), 0)

    def test_inconsistent(self, seven):
        vals = borda_misrep(seven).values.copy()
        vals[3] = vals[3][::-1]
        with pytest.raises(InconsistentMisrepError):
            cc_solve(seven, MisrepMatrix(vals), 2)

    def test_not_two_crossing(self):
        p = profile_from_matrix(FOUR_CYCLE_PLUS)
        with pytest.raises(NotTwoCrossingError):
            cc_solve(p, borda_misrep(p), 2)
        assert brute_force_cc(p, borda_misrep(p), 2).value >= 0

    def test_exactness_guard(self):
        p = validate_profile([[1, 2], [2, 1]])
        rho = MisrepMatrix(np.array([[0, EXACT_LIMIT], [EXACT_LIMIT, 0]]))
        with pytest.raises(ValueError, match="too large"):
            CCInstance(p, rho, 1)

    def test_negative_values(self):
        p = validate_profile([[1, 2], [2, 1]])
        rho = MisrepMatrix(np.array([[-3, 4], [-1, -2]]))
        assert cc_solve(p, rho, 1).value == -4
        assert cc_solve(p, rho, 1, EGALITARIAN).value == -1
        assert cc_solve(p, rho, 2).value == -5
        assert cc_solve(p, rho, 2, EGALITARIAN).value == -2

    def test_explicit_order(self, seven):
        rho = borda_misrep(seven)
        assert cc_solve(seven, rho, 2, order=range(7, 0, -1)).value == 1


class TestTables:
    def test_monotone_in_k(self, seven):
        tables = fill_tables(CCInstance(seven, borda_misrep(seven), 4))
        col = tables.dyp[0, 7]
        assert all(col[t] >= col[t + 1] for t in range(1, 4))
        assert np.isinf(col[0])

    def test_empty_interval(self, seven):
        tables = fill_tables(CCInstance(seven, borda_misrep(seven), 2))
        assert np.all(tables.dyp[np.arange(8), np.arange(8)] == 0)


def test_random_against_oracles(rng):
    for trial in range(120):
        p, _, _ = random_horseshoe(int(rng.integers(1, 9)), int(rng.integers(1, 7)), rng)
        rho = borda_misrep(p) if trial % 2 else MisrepMatrix(random_consistent_rho(p, rng))
        k = int(rng.integers(1, 4))
        for mode in (UTILITARIAN, EGALITARIAN):
            res = cc_solve(p, rho, k, mode)
            assert res.value == cc_oracle(rho.values.tolist(), k, mode == EGALITARIAN)
            assert evaluate_assignment(p, rho, res.assignment, mode) == res.value
