"""End-to-end command-line behavior: output shapes, exit codes, determinism."""

import json
import pathlib

import pytest

from anick.cli import main

SAMPLES = pathlib.Path(__file__).resolve().parent.parent / "samples"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--format", "json")
    assert code == 0, err
    return json.loads(out)


class TestGb:
    def test_commutative_reduced_basis(self, capsys):
        data = run_json(capsys, "gb", SAMPLES / "comm1.alg")
        assert data["kind"] == "commutative"
        assert data["complete_to_degree"] is None
        assert set(data["basis"]) == {
            "x1^2 + x2^2", "x1*x2^2 - x2^3", "x2^4"}

    def test_noncommutative_family(self, capsys):
        data = run_json(capsys, "gb", SAMPLES / "x2xy.alg",
                        "--max-degree", 8)
        assert data["complete_to_degree"] == 8
        assert data["basis"][0] == "x^2 - x*y"
        assert data["basis"][1:] == [
            f"x*y{'^%d' % i if i > 1 else ''}*x - x*y^{i + 1}"
            for i in range(1, 7)]

    def test_xzx_family(self, capsys):
        data = run_json(capsys, "gb", SAMPLES / "xyzx.alg")
        assert "x*z*x" in data["basis"]
        assert "x*z^6*x" in data["basis"]

    def test_builtin_family_echoes_relations(self, capsys):
        data = run_json(capsys, "gb", "--bn", 2, "--max-degree", 12)
        assert data["algebra"] == "B2"
        assert len(data["basis"]) == 10

    def test_text_format(self, capsys):
        code, out, err = run(capsys, "gb", SAMPLES / "comm1.alg")
        assert code == 0
        assert "reduced basis" in out


class TestNf:
    def test_generator_combination_is_member(self, capsys):
        data = run_json(capsys, "nf", SAMPLES / "comm1.alg", "x1^3 + x2^3")
        assert data["normal_form"] == "0"
        assert data["member"] is True

    def test_non_member(self, capsys):
        data = run_json(capsys, "nf", SAMPLES / "comm1.alg", "x1 + 1")
        assert data["member"] is False
        assert data["normal_form"] == "x1 + 1"

    def test_relation_against_its_own_algebra(self, capsys):
        data = run_json(capsys, "nf", SAMPLES / "x2xy.alg", "x^2 - x*y")
        assert data["member"] is True

    def test_degree_past_certificate_exits_3(self, capsys):
        code, out, err = run(capsys, "nf", SAMPLES / "x2xy.alg",
                             "x*y^7*x", "--max-degree", 8)
        assert code == 3
        assert "degree" in err

    def test_reduction_inside_certificate(self, capsys):
        data = run_json(capsys, "nf", SAMPLES / "x2xy.alg",
                        "x*y^2*x", "--max-degree", 8)
        assert data["normal_form"] == "x*y^3"
        assert data["member"] is False


class TestChains:
    def test_b1_counts(self, capsys):
        data = run_json(capsys, "chains", "--bn", 1,
                        "--max-level", 5, "--max-degree", 16)
        assert data["totals"] == {"0": 6, "1": 6, "2": 5, "3": 6,
                                  "4": 5, "5": 6}

    def test_level_one_is_leading_word_set(self, capsys):
        # per-level order is by descending term key, so degree 3 precedes 2
        data = run_json(capsys, "chains", SAMPLES / "x2y2.alg",
                        "--max-level", 2, "--max-degree", 6)
        assert data["levels"]["1"]["words"] == ["x*y^2", "x^2"]

    def test_commutative_input_rejected(self, capsys):
        code, out, err = run(capsys, "chains", SAMPLES / "comm1.alg")
        assert code == 2
        assert "noncommutative" in err


class TestHilbert:
    def test_pipelines_agree(self, capsys):
        data = run_json(capsys, "hilbert", SAMPLES / "x2y2.alg",
                        "--max-degree", 8)
        assert data["normal_words"] == list(range(1, 10))
        assert data["chain_inverse"] == list(range(1, 10))
        assert data["agree"] is True

    def test_free_algebra_powers(self, capsys):
        data = run_json(capsys, "hilbert", SAMPLES / "free3.alg",
                        "--max-degree", 6)
        assert data["normal_words"] == [3 ** n for n in range(7)]
        assert data["rational_candidate"]["denominator"] == [1, -3]

    def test_commutative_series(self, capsys):
        data = run_json(capsys, "hilbert", SAMPLES / "comm1.alg",
                        "--max-degree", 6)
        assert data["normal_words"] == [1, 2, 2, 1, 0, 0, 0]
        assert data["chain_inverse"] is None
        assert data["agree"] is None


class TestAnick:
    def test_verification_embedded(self, capsys):
        data = run_json(capsys, "anick", SAMPLES / "x2y2.alg",
                        "--max-level", 3, "--max-degree", 8)
        v = data["verification"]
        assert v["ok"] is True
        assert v["dd_zero"]["failures"] == []
        assert v["splitting"]["failure_count"] == 0
        assert v["exactness"]["degree"] == 8

    def test_differential_entries(self, capsys):
        data = run_json(capsys, "anick", SAMPLES / "x2xy.alg",
                        "--max-level", 2, "--max-degree", 6)
        d1 = data["differentials"]["1"]
        assert d1["cols"][-1] == "x^2"
        row_x = d1["rows"].index("x")
        col_xx = d1["cols"].index("x^2")
        assert [row_x, col_xx, "x - y"] in d1["entries"]

    def test_levels_past_degree_bound_are_empty(self, capsys):
        # levels whose shallowest chain exceeds the degree bound come back
        # empty rather than failing
        data = run_json(capsys, "anick", SAMPLES / "x2xy.alg",
                        "--max-level", 9, "--max-degree", 4)
        assert data["chains"]["9"] == []
        assert data["verification"]["ok"] is True

    def test_relation_heavier_than_bound_exits_3(self, capsys):
        code, out, err = run(capsys, "anick", SAMPLES / "x2xy.alg",
                             "--max-degree", 1)
        assert code == 3
        assert "degree" in err


class TestTor:
    def test_b2_witness(self, capsys):
        data = run_json(capsys, "tor", "--bn", 2,
                        "--max-level", 3, "--max-degree", 12)
        assert data["minimal"] is False
        assert data["witness"]["level"] == 3
        assert data["witness"]["row"] == "c1*a1*b1*c1*a1"
        assert data["totals"]["3"] == 10

    def test_b1_minimal(self, capsys):
        data = run_json(capsys, "tor", "--bn", 1,
                        "--max-level", 4, "--max-degree", 12)
        assert data["minimal"] is True
        assert data["witness"] is None
        assert data["totals"] == {"-1": 1, "0": 6, "1": 6, "2": 5,
                                  "3": 6, "4": 5}


class TestPlumbing:
    def test_stdin_input(self, capsys, monkeypatch):
        import io
        monkeypatch.setattr(
            "sys.stdin",
            io.StringIO("algebra t; kind noncommutative; generators x y; "
                        "order deglex x > y;"))
        data = run_json(capsys, "hilbert", "-", "--max-degree", 4)
        assert data["normal_words"] == [1, 2, 4, 8, 16]

    def test_missing_input_exits_2(self, capsys):
        code, out, err = run(capsys, "gb")
        assert code == 2

    def test_file_and_bn_conflict(self, capsys):
        code, out, err = run(capsys, "gb", SAMPLES / "x2xy.alg", "--bn", 1)
        assert code == 2

    def test_parse_error_names_position(self, capsys):
        code, out, err = run(capsys, "nf", SAMPLES / "x2xy.alg", "x + q")
        assert code == 2
        assert "column" in err

    def test_bad_flag_values(self, capsys):
        for flags in (["--max-degree", 0], ["--max-level", 0],
                      ["--threads", 0]):
            code, out, err = run(capsys, "gb", SAMPLES / "x2xy.alg", *flags)
            assert code == 2


class TestDeterminism:
    CASES = [
        ("gb", str(SAMPLES / "x2xy.alg"), "--max-degree", "8"),
        ("chains", "--bn", "1", "--max-level", "4", "--max-degree", "12"),
        ("hilbert", str(SAMPLES / "x2y2.alg"), "--max-degree", "10"),
        ("anick", str(SAMPLES / "x2y2.alg"), "--max-level", "3",
         "--max-degree", "8"),
        ("tor", "--bn", "2", "--max-level", "2", "--max-degree", "10"),
        ("nf", str(SAMPLES / "comm1.alg"), "x1^5"),
    ]

    def test_repeat_runs_byte_identical(self, capsys):
        for case in self.CASES:
            outs = []
            for _ in range(2):
                code, out, err = run(capsys, *case, "--format", "json")
                assert code == 0
                outs.append(out)
            assert outs[0] == outs[1]

    def test_thread_hint_does_not_change_output(self, capsys):
        for case in self.CASES:
            outs = []
            for threads in ("1", "4"):
                code, out, err = run(capsys, *case, "--format", "json",
                                     "--threads", threads)
                assert code == 0
                outs.append(out)
            assert outs[0] == outs[1]
