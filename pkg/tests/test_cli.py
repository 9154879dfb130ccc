import json

from dsq.cli import analysis_report, main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestAnalyze:
    def test_json_reference_word(self, tmp_path, capsys):
        src = tmp_path / "words.txt"
        src.write_text("abaababaab\n\nab\n")
        code, out, err = run(capsys, "analyze", "--format", "json", str(src))
        assert code == 0 and err == ""
        reports = [json.loads(line) for line in out.splitlines()]
        assert len(reports) == 2  # blank line skipped
        rep = reports[0]
        assert rep["schema_version"] == 1
        assert rep["word"] == "abaababaab"
        assert rep["delta"] == 1 and rep["distinct_squares"] == 5
        [fs] = rep["fs_double_squares"]
        assert fs == {
            "start": 1, "u_len": 3, "U_len": 5, "u1": "ab", "u2": "a",
            "e1": 1, "e2": 1, "N1": 2, "N2": 7, "L1": 2, "R1": 2,
            "L2": 7, "R2": 7,
        }
        assert reports[1]["delta"] == 0 and reports[1]["family"] is None

    def test_stdin_input(self, capsys, monkeypatch):
        import io

        monkeypatch.setattr("sys.stdin", io.StringIO("abaababaab\n"))
        code, out, _ = run(capsys, "analyze", "--format", "json")
        assert code == 0
        assert json.loads(out)["delta"] == 1

    def test_text_format(self, tmp_path, capsys):
        src = tmp_path / "words.txt"
        src.write_text("abaababaab\n")
        code, out, _ = run(capsys, "analyze", str(src))
        assert code == 0
        assert "delta=1" in out and "PASS" in out

    def test_invalid_character(self, tmp_path, capsys):
        src = tmp_path / "words.txt"
        src.write_text("ab\nabC\n")
        code, out, err = run(capsys, "analyze", str(src))
        assert code == 1
        assert "line 2" in err

    def test_unreadable_input(self, capsys):
        code, _, err = run(capsys, "analyze", "/nonexistent/input.txt")
        assert code == 1 and "cannot read" in err

    def test_word_cap(self, tmp_path, capsys):
        src = tmp_path / "words.txt"
        src.write_text("a" * 50 + "\n")
        code, _, err = run(capsys, "analyze", "--max-len", "10", str(src))
        assert code == 1 and "longer than cap" in err

    def test_deterministic_output(self, tmp_path, capsys):
        src = tmp_path / "words.txt"
        src.write_text("abaababaabaababaa\n")
        _, out1, _ = run(capsys, "analyze", "--format", "json", str(src))
        _, out2, _ = run(capsys, "analyze", "--format", "json", str(src))
        assert out1 == out2

    def test_report_roundtrip(self):
        rep = analysis_report("abaababaabaababaa")
        assert json.loads(json.dumps(rep)) == rep

    def test_long_word_digest(self, monkeypatch):
        monkeypatch.setattr("dsq.cli.WORD_ECHO_CAP", 64)
        rep = analysis_report("ab" * 50)
        assert rep["word"].startswith("sha256:")
        assert rep["length"] == 100


class TestSearch:
    def test_reference_result(self, capsys):
        code, out, _ = run(capsys, "search", "--d", "2", "--n", "5")
        assert code == 0
        res = json.loads(out)
        assert res["sigma"] == 2
        assert "ababa" in res["witnesses"]
        assert res["conjecture_holds"] is True
        assert res["conjecture_bound"] == 3

    def test_unary(self, capsys):
        code, out, _ = run(capsys, "search", "--d", "1", "--n", "4")
        assert json.loads(out)["sigma"] == 1 and code == 0

    def test_bad_parameters(self, capsys):
        code, _, err = run(capsys, "search", "--d", "4", "--n", "3")
        assert code == 1 and "error" in err


class TestVerify:
    def test_clean_suite(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--max-len", "10", "--alphabet", "2",
            "--suite", "two_rightmost_max,min_fs_length",
        )
        assert code == 0
        assert "two_rightmost_max: 0 counterexamples PASS" in out

    def test_all_suite(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--max-len", "10", "--alphabet", "2",
            "--suite", "all", "--jobs", "1",
        )
        assert code == 0

    def test_unknown_suite(self, capsys):
        code, _, err = run(
            capsys, "verify", "--max-len", "10", "--alphabet", "2",
            "--suite", "bogus",
        )
        assert code == 1 and "unknown" in err


class TestFigures:
    def test_all_assertions_pass(self, capsys):
        code, out, _ = run(capsys, "figures")
        assert code == 0
        assert out.count("FAIL") == 0
        assert "alpha-beta-family" in out
