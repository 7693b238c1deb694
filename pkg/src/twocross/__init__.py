"""Two-crossing elections: recognition, tournament synthesis, Young scores and Chamberlin-Courant."""

__version__ = "0.1.0"

from ._accel import BACKEND
from .c1p import (
    BinaryMatrix,
    c1p_witness,
    circ_c1p_witness,
    complement_transform,
    switch_counts,
)
from .cc import CCInstance, CCResult, brute_force_cc, cc_solve
from .core import (
    Assignment,
    MarginMatrix,
    MisrepMatrix,
    NotTwoCrossingError,
    Profile,
    ProfileError,
    VoterOrder,
    borda_misrep,
    condorcet_winners,
    crossing_counts,
    evaluate_assignment,
    majority_margins,
    validate_profile,
)
from .io import parse_profile_soc, parse_rho, parse_tournament
from .recognition import (
    horseshoe_profile,
    pair_matrix,
    profile_from_matrix,
    random_horseshoe,
    recognize_two_crossing,
)
from .tournament import WeightedTournament, double_bubblesort_profile, synthesize_two_crossing
from .young import (
    YoungResult,
    brute_force_young,
    build_difference_system,
    solve_difference_system,
    young_score,
    young_winners,
)
