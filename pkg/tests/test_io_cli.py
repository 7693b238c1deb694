import json

import numpy as np
import pytest
from hypothesis import given

from twocross.cli import EXIT_FAILURE, EXIT_OK, EXIT_USAGE, main
from twocross.core import majority_margins, validate_profile
from twocross.io import (
    FormatError,
    ResultDocument,
    digest,
    format_profile_soc,
    format_rho,
    format_tournament,
    parse_profile_document,
    parse_profile_soc,
    parse_rho,
    parse_tournament,
)
from twocross.recognition import profile_from_matrix
from twocross.tournament import double_bubblesort_profile

from conftest import SEVEN_VOTERS, PARADOX, rankings
from test_c1p import FOUR_CYCLE_PLUS


class TestProfileFormat:
    def test_paradox(self):
        assert parse_profile_soc("1: 1,2,3\n1: 2,3,1\n1: 3,1,2") == validate_profile(PARADOX)

    def test_repeated(self):
        p = parse_profile_soc("2: 1,2")
        assert p.rankings == ((1, 2), (1, 2))

    def test_comment(self):
        doc = parse_profile_document("# comment\n1: 1,3,2,4")
        assert doc.comments == ("comment",) and doc.num_voters == 1
        assert doc.to_profile().num_candidates == 4

    @pytest.mark.parametrize("text, line", [
        ("1: 1,2\nbogus", 2),
        ("0: 1,2", 1),
        ("1: 1,2\n1: 1,1", 2),
        ("1: 1,3", 1),
        ("1: 1,x", 1),
    ])
    def test_errors(self, text, line):
        with pytest.raises(FormatError) as exc:
            parse_profile_soc(text)
        assert exc.value.line == line

    def test_empty(self):
        with pytest.raises(FormatError):
            parse_profile_soc("# nothing\n\n")

    @given(rankings(max_voters=8, max_candidates=5))
    def test_round_trip(self, rows):
        p = validate_profile(rows)
        assert parse_profile_soc(format_profile_soc(p, ["x"])) == p

    def test_groups_adjacent(self):
        text = format_profile_soc(validate_profile([[1, 2], [1, 2], [2, 1], [1, 2]]))
        assert text.splitlines() == ["2: 1,2", "1: 2,1", "1: 1,2"]


class TestTournamentFormat:
    def test_three_cycle(self):
        t = parse_tournament("3\n1 2 3\n2 3 1\n3 1 1")
        assert (t[1, 2], t[2, 3], t[1, 3]) == (3, 1, -1)

    def test_no_edges(self):
        t = parse_tournament("2\n")
        assert t.m == 2 and not t.margins.any()

    @pytest.mark.parametrize("text", ["3\n1 2 1\n2 1 1", "3\n1 4 1", "3\n1 2 0", "3\n1 2", "x", "", "3\n1 1 1"])
    def test_errors(self, text):
        with pytest.raises(FormatError):
            parse_tournament(text)

    def test_round_trip(self):
        t = parse_tournament("4\n1 2 3\n4 3 1 # note\n2 4 5")
        assert parse_tournament(format_tournament(t)) == t


class TestRhoFormat:
    def test_integers(self):
        rho = parse_rho("0 1\n2 0\n")
        assert rho.values.tolist() == [[0, 1], [2, 0]] and rho.scale == 1

    def test_decimals_scaled(self):
        rho = parse_rho("0 0.5\n1.25 0")
        assert rho.scale == 100 and rho.values.tolist() == [[0, 50], [125, 0]]

    @pytest.mark.parametrize("text", ["1/2 1", "nan 1", "1 2\n3", "", "inf 0"])
    def test_errors(self, text):
        with pytest.raises(FormatError):
            parse_rho(text)

    def test_round_trip(self):
        text = "0 1 2\n3 0 1\n"
        assert format_rho(parse_rho(text)) == text


class TestResultDocument:
    def test_round_trip(self):
        doc = ResultDocument("young", digest("a", "b"), {"scores": [1, "inf"], "winners": [2]}, "ok")
        assert ResultDocument.from_json(doc.to_json()) == doc

    def test_digest_separates_inputs(self):
        assert digest("ab", "c") != digest("a", "bc")


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return str(path)
    return _write


def run(capsys, argv):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


class TestCLI:
    def test_recognize_seven_voter(self, capsys, write):
        path = write("seven.soc", format_profile_soc(validate_profile(SEVEN_VOTERS)))
        code, out, _ = run(capsys, ["recognize", path])
        doc = json.loads(out)
        assert code == EXIT_OK and doc["result"]["two_crossing"] and doc["result"]["max_crossings"] <= 2

    def test_recognize_negative(self, capsys, write):
        path = write("bad.soc", format_profile_soc(profile_from_matrix(FOUR_CYCLE_PLUS)))
        code, out, _ = run(capsys, ["recognize", path])
        doc = json.loads(out)
        assert code == EXIT_OK and doc["status"] == "not-two-crossing" and doc["result"]["order"] is None

    def test_recognize_max_k(self, capsys, write):
        path = write("seven.soc", format_profile_soc(validate_profile(SEVEN_VOTERS)))
        code, out, err = run(capsys, ["recognize", path, "--order", "1,2,3,4,5,6,7", "--max-k", "1", "--table"])
        res = json.loads(out)["result"]
        assert code == EXIT_OK and res["pair_crossings"]["1,2"] == 2 and res["within_k"] is False
        assert "crossings" in err

    def test_recognize_bad_order(self, capsys, write):
        path = write("seven.soc", format_profile_soc(validate_profile(SEVEN_VOTERS)))
        assert run(capsys, ["recognize", path, "--order", "1,2"])[0] == EXIT_USAGE

    def test_margins(self, capsys, write):
        p = validate_profile(SEVEN_VOTERS)
        code, out, _ = run(capsys, ["margins", write("f.soc", format_profile_soc(p)), "--condorcet", "strong"])
        res = json.loads(out)["result"]
        assert code == EXIT_OK and res["margins"] == majority_margins(p).values.tolist()
        assert res["condorcet"]["winners"] == [3]

    def test_young_all(self, capsys, write):
        code, out, _ = run(capsys, ["young", write("f.soc", format_profile_soc(validate_profile(SEVEN_VOTERS))),
                                    "--variant", "strong"])
        res = json.loads(out)["result"]
        assert code == EXIT_OK and res["winners"] == [3]
        assert {e["candidate"]: e["score"] for e in res["scores"]}[4] == "inf"

    @pytest.mark.parametrize("extra", [[], ["--oracle"]])
    def test_young_single(self, capsys, write, extra):
        path = write("p.soc", format_profile_soc(validate_profile(PARADOX)))
        code, out, _ = run(capsys, ["young", path, "--candidate", "1"] + extra)
        assert code == EXIT_OK and json.loads(out)["result"]["score"] == 1

    def test_young_bad_candidate(self, capsys, write):
        path = write("p.soc", format_profile_soc(validate_profile(PARADOX)))
        assert run(capsys, ["young", path, "--candidate", "9"])[0] == EXIT_USAGE

    def test_young_not_two_crossing(self, capsys, write):
        path = write("bad.soc", format_profile_soc(profile_from_matrix(FOUR_CYCLE_PLUS)))
        code, _, err = run(capsys, ["young", path])
        assert code == EXIT_FAILURE and "two-crossing" in err

    @pytest.mark.parametrize("k, mode, value", [(1, "utilitarian", 5), (2, "utilitarian", 1), (1, "egalitarian", 2)])
    def test_cc(self, capsys, write, k, mode, value):
        path = write("f.soc", format_profile_soc(validate_profile(SEVEN_VOTERS)))
        for extra in ([], ["--oracle"]):
            code, out, _ = run(capsys, ["cc", path, "-k", str(k), "--mode", mode] + extra)
            assert code == EXIT_OK and json.loads(out)["result"]["value"] == value

    def test_cc_rho_file(self, capsys, write):
        p = validate_profile([[1, 2], [2, 1]])
        prof = write("p.soc", format_profile_soc(p))
        rho = write("rho.txt", "0 0.5\n1.5 0\n")
        code, out, _ = run(capsys, ["cc", prof, "-k", "1", "--rho", rho])
        res = json.loads(out)["result"]
        assert code == EXIT_OK and res["scale"] == 10 and res["value"] == 5

    def test_cc_inconsistent_rho(self, capsys, write):
        prof = write("p.soc", "1: 1,2\n")
        rho = write("rho.txt", "3 0\n")
        assert run(capsys, ["cc", prof, "-k", "1", "--rho", rho])[0] == EXIT_USAGE

    def test_synthesize(self, capsys, write):
        path = write("t.txt", "3\n1 2 3\n2 3 1\n3 1 1\n")
        code, out, _ = run(capsys, ["synthesize", "--tournament", path])
        p = parse_profile_soc(out)
        assert code == EXIT_OK and p.num_voters == 11
        assert majority_margins(p).values.tolist() == [[0, 3, -1], [-3, 0, 1], [1, -1, 0]]

    def test_synthesize_parity(self, capsys, write):
        path = write("t.txt", "3\n1 2 1\n2 3 2\n1 3 1\n")
        assert run(capsys, ["synthesize", "--tournament", path])[0] == EXIT_USAGE

    def test_gen_bubblesort(self, capsys):
        code, out, _ = run(capsys, ["gen", "bubblesort", "--candidates", "4"])
        assert code == EXIT_OK and parse_profile_soc(out) == double_bubblesort_profile(4)

    def test_gen_horseshoe_seeded(self, capsys):
        argv = ["gen", "horseshoe", "--voters", "6", "--candidates", "4", "--seed", "11"]
        _, first, _ = run(capsys, argv)
        _, second, _ = run(capsys, argv)
        assert first == second and parse_profile_soc(first).num_voters == 6

    def test_gen_horseshoe_needs_voters(self, capsys):
        assert run(capsys, ["gen", "horseshoe", "--candidates", "3"])[0] == EXIT_USAGE

    def test_missing_file(self, capsys, tmp_path):
        code, _, err = run(capsys, ["margins", str(tmp_path / "nope.soc")])
        assert code == EXIT_USAGE and "cannot read" in err

    def test_malformed_profile(self, capsys, write):
        code, _, err = run(capsys, ["margins", write("bad.soc", "1: 1,1\n")])
        assert code == EXIT_USAGE and "line 1" in err

    def test_stdin(self, capsys, monkeypatch):
        import io
        monkeypatch.setattr("sys.stdin", io.StringIO("1: 1,2,3\n1: 2,3,1\n1: 3,1,2\n"))
        code, out, _ = run(capsys, ["margins", "-"])
        assert code == EXIT_OK and np.array(json.loads(out)["result"]["margins"])[0, 1] == 1

    def test_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["cc"])
        assert exc.value.code != 0
