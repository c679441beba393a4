import io
import json
import os

import pytest

from pgq import cli


def run(argv):
    out = io.StringIO()
    code = cli.main(argv, out=out)
    return code, out.getvalue()


class TestHelpCheck:
    def test_thompson_exclusion(self):
        code, text = run(["help-check", "--table", "thompson", "--order", "35"])
        assert code == 0
        assert "INFEASIBLE: no normalized unit of order 35" in text
        assert "-8 <= e_5a <= 2" in text

    def test_onan_inconclusive(self):
        code, text = run(["help-check", "--table", "onan", "--order", "21"])
        assert code == 1
        assert "feasible point exists" in text.lower()

    def test_order_mismatch_on_rows_fixture(self):
        code, _ = run(["help-check", "--table", "onan", "--order", "35"])
        assert code == 2

    def test_json_format(self):
        code, text = run(["help-check", "--table", "thompson", "--order", "35",
                          "--format", "json"])
        assert code == 0
        doc = json.loads(text)
        assert doc["status"] == "infeasible"
        assert doc["bounds"]["5a"] == [-8, 2]

    def test_feasible_order_on_small_group(self):
        code, text = run(["help-check", "--table", "s5", "--order", "6"])
        assert code == 1
        assert "FEASIBLE" in text


class TestVerdict:
    def test_monster_open_pairs_exit_1(self):
        code, text = run(["verdict", "--profile", "profile_monster"])
        assert code == 1
        assert "5*13, 7*11, 7*13, 11*13" in text

    def test_m11_settled_exit_0(self):
        code, text = run(["verdict", "--profile", "profile_m11"])
        assert code == 0
        assert "fully settled" in text

    def test_csv_format(self):
        code, text = run(["verdict", "--profile", "profile_thompson", "--format", "csv"])
        assert code == 1
        assert text.splitlines()[0] == "p,q,verdict"
        assert "5,7,open" in text


class TestTreeCheck:
    def test_valid_tree(self):
        code, text = run(["tree-check", "--tree", "tree_c21_p7"])
        assert code == 0 and "valid" in text

    def test_invalid_tree(self, tmp_path):
        doc = {
            "prime": 3,
            "vertices": [{"name": "a", "sign": 1}, {"name": "b", "sign": 1}],
            "edges": [["a", "b", "D0"]],
        }
        path = tmp_path / "bad_tree.json"
        path.write_text(json.dumps(doc))
        code, text = run(["tree-check", "--tree", str(path)])
        assert code == 1 and "equal signs" in text


class TestSieve:
    def test_cor13_census(self):
        code, text = run(["sieve", "--bound", "1000", "--condition", "cor13"])
        assert code == 0
        assert "124 of 168" in text

    def test_json_summary_keys(self):
        code, text = run(["sieve", "--bound", "500", "--condition", "cor13",
                          "--format", "json"])
        doc = json.loads(text)
        for key in ("count", "total_primes", "ratio", "li_x", "c_truncated"):
            assert key in doc

    def test_csv_rows(self):
        code, text = run(["sieve", "--bound", "50", "--format", "csv"])
        lines = text.splitlines()
        assert lines[0] == "p,status,witness"
        assert len(lines) == 1 + 15  # 15 primes below 50

    def test_dual_check(self):
        code, _ = run(["sieve", "--bound", "300", "--condition", "thm51", "--dual"])
        assert code == 0

    def test_byte_stability_across_runs_and_threads(self):
        _, a = run(["sieve", "--bound", "400", "--format", "csv"])
        _, b = run(["sieve", "--bound", "400", "--format", "csv"])
        assert a == b
        old = os.environ.get("PGQ_THREADS")
        try:
            os.environ["PGQ_THREADS"] = "4"
            _, c = run(["sieve", "--bound", "400", "--format", "csv"])
        finally:
            if old is None:
                os.environ.pop("PGQ_THREADS", None)
            else:
                os.environ["PGQ_THREADS"] = old
        assert a == c


class TestLie:
    def test_g2_q5(self):
        code, text = run(["lie", "--family", "G2", "--q", "5"])
        assert code == 0 and "settled" in text

    def test_not_settled(self):
        code, text = run(["lie", "--family", "PSp4", "--q", "32"])
        assert code == 1 and "not-settled-by-lemma" in text

    def test_non_prime_power_rejected(self):
        code, _ = run(["lie", "--family", "G2", "--q", "6"])
        assert code == 2

    def test_json(self):
        code, text = run(["lie", "--family", "PSL4", "--q", "2", "--format", "json"])
        doc = json.loads(text)
        assert doc["order"] == "20160"


class TestTableauxVerify:
    def test_all_lemmas_at_six(self):
        code, text = run(["tableaux-verify", "--max-boxes", "6"])
        assert code == 0
        assert text.count("0 violation(s)") == 4

    def test_single_lemma_json(self):
        code, text = run(["tableaux-verify", "--max-boxes", "5", "--lemma",
                          "full-rectangle", "--format", "json"])
        doc = json.loads(text)
        assert doc["full-rectangle"]["violations"] == []


class TestErrors:
    def test_malformed_json_reports_position(self, tmp_path, capsys):
        path = tmp_path / "bad.json"
        path.write_text('{"prime": 3,\n  "vertices": [}')
        code, _ = run(["tree-check", "--tree", str(path)])
        assert code == 2
        err = capsys.readouterr().err
        assert "line 2" in err and "column" in err

    def test_missing_file(self):
        code, _ = run(["verdict", "--profile", "no_such_profile"])
        assert code == 2

    def test_unknown_subcommand(self):
        code, _ = run(["frobnicate"])
        assert code == 2
