"""CLI contract: outputs, exit codes, determinism."""

import json

from qcert.cli import EXIT_FAIL, EXIT_INCONCLUSIVE, EXIT_PASS, EXIT_USAGE, main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestQtable:
    def test_single_value(self, capsys, tmp_path):
        code, out, _ = run(capsys, "--cache", str(tmp_path / "t.txt"),
                           "--n-max", "64", "qtable", "--n", "9")
        assert code == EXIT_PASS
        assert json.loads(out) == {"9": "8"}
        code, out, _ = run(capsys, "--cache", str(tmp_path / "t.txt"),
                           "--n-max", "64", "qtable", "--n", "0")
        assert code == EXIT_PASS and json.loads(out) == {"0": "1"}

    def test_range_text(self, capsys, tmp_path):
        code, out, _ = run(capsys, "--cache", str(tmp_path / "t.txt"),
                           "--n-max", "64", "qtable", "--range", "0..9",
                           "--format", "text", "--check-enumeration")
        assert code == EXIT_PASS
        assert out.strip() == "1,1,1,2,2,3,4,5,6,8"

    def test_requires_exactly_one_selector(self, capsys, tmp_path):
        code, _, err = run(capsys, "--cache", str(tmp_path / "t.txt"),
                           "--n-max", "64", "qtable")
        assert code == EXIT_USAGE and "exactly one" in err

    def test_n_max_too_small(self, capsys, tmp_path):
        code, _, err = run(capsys, "--cache", str(tmp_path / "t.txt"),
                           "--n-max", "5", "qtable", "--n", "9")
        assert code == EXIT_USAGE and "--n-max" in err


class TestCoeffs:
    def test_full_family(self, capsys):
        code, out, _ = run(capsys, "coeffs", "--family", "full", "--index", "0", "--s", "3")
        assert code == EXIT_PASS
        assert out.strip() == "full[0,3] = 1"

    def test_rational_family(self, capsys):
        code, out, _ = run(capsys, "coeffs", "--family", "binom", "--index", "2", "--s", "0")
        assert code == EXIT_PASS
        assert out.strip() == "binom[2,0] = -1/32"

    def test_ring_expression(self, capsys):
        code, out, _ = run(capsys, "coeffs", "--family", "bessel", "--index", "1", "--s", "0")
        assert code == EXIT_PASS
        assert "-3/8 pi^-1 sqrt3" in out

    def test_negative_index_usage_error(self, capsys):
        code, _, _ = run(capsys, "coeffs", "--family", "full", "--index", "-1")
        assert code == EXIT_USAGE

    def test_unknown_family_usage_error(self, capsys):
        code, _, _ = run(capsys, "coeffs", "--family", "nope", "--index", "0")
        assert code == EXIT_USAGE


class TestBounds:
    def test_row(self, capsys, table20k):
        code, out, _ = run(capsys, "bounds", "--n", "6000", "--s", "0", "--N", "14",
                           "--format", "csv")
        assert code == EXIT_PASS
        lines = out.strip().splitlines()
        assert lines[0] == "n,s,N,q_exact,lower,upper"
        n, s, order, q_exact, lower, upper = lines[1].split(",")
        assert (n, s, order) == ("6000", "0", "14")
        assert q_exact == str(table20k[6000])

    def test_below_floor(self, capsys):
        code, _, err = run(capsys, "bounds", "--n", "100", "--s", "0", "--N", "14")
        assert code == EXIT_USAGE and "floor" in err


class TestVerifyAndCertify:
    def test_certify_json(self, capsys):
        code, out, _ = run(capsys, "certify", "ineq1")
        assert code == EXIT_PASS
        blob = json.loads(out)
        assert blob["status"] == "proved"
        assert blob["n_star"] == 5019
        assert blob["theorem"] == "A"

    def test_unknown_ineq(self, capsys):
        code, _, _ = run(capsys, "certify", "ineq99")
        assert code == EXIT_USAGE

    def test_certify_inconclusive_exit(self, capsys):
        # ineq2 cannot be certified at its validity window (the exact
        # polynomial is negative there): distinct exit code 2
        code, out, _ = run(capsys, "certify", "ineq2")
        assert code == EXIT_INCONCLUSIVE
        assert json.loads(out)["status"] == "inconclusive"

    def test_verify_json_and_determinism(self, capsys, table20k):
        code1, out1, _ = run(capsys, "--no-timing", "verify", "A", "--skip-sharpness")
        code2, out2, _ = run(capsys, "--no-timing", "verify", "A", "--skip-sharpness")
        assert code1 == code2 == EXIT_PASS
        assert out1 == out2  # byte-identical without timing
        blob = json.loads(out1)
        for key in ("theorem", "threshold", "shift", "n_star", "exact_range",
                    "sharpness_witness", "status", "precision_bits",
                    "subdivisions", "certificate"):
            assert key in blob
        assert "seconds" not in blob

    def test_verify_double_turan_threshold(self, capsys, table20k):
        code, out, _ = run(capsys, "--no-timing", "verify", "double-turan",
                           "--skip-sharpness")
        assert code == EXIT_PASS
        blob = json.loads(out)
        assert blob["threshold"] == 273 and blob["shift"] == 2

    def test_verify_erratum_exit_code(self, capsys, table20k):
        code, out, _ = run(capsys, "--no-timing", "verify", "double-turan-companion",
                           "--skip-sharpness")
        assert code == EXIT_FAIL
        blob = json.loads(out)
        assert blob["exact_violations"] == [348]
        assert blob["holds_from"] == 349

    def test_unknown_theorem(self, capsys):
        code, _, _ = run(capsys, "verify", "theorem-x")
        assert code == EXIT_USAGE


class TestReproduceAll:
    def test_subset_pass(self, capsys, table20k):
        code, out, err = run(capsys, "--no-timing", "reproduce-all",
                             "--theorems", "A", "double-turan")
        assert code == EXIT_PASS
        blob = json.loads(out)
        assert blob["status"] == "pass"
        assert set(blob["theorems"]) == {"A", "double-turan"}
        assert "PASS" in err

    def test_as_stated_fails_on_erratum(self, capsys, table20k):
        code, out, _ = run(capsys, "--no-timing", "reproduce-all",
                           "--theorems", "double-turan-companion")
        assert code == EXIT_FAIL
        blob = json.loads(out)
        assert blob["theorems"]["double-turan-companion"]["exact_violations"] == [348]

    def test_with_errata_passes(self, capsys, table20k):
        code, out, _ = run(capsys, "--no-timing", "reproduce-all", "--paper-check",
                           "--theorems", "double-turan-companion", "--with-errata")
        assert code == EXIT_PASS
        blob = json.loads(out)
        assert blob["theorems"]["double-turan-companion"]["threshold"] == 349

    def test_unknown_id(self, capsys):
        code, _, _ = run(capsys, "reproduce-all", "--theorems", "bogus")
        assert code == EXIT_USAGE


def test_precision_floor(capsys):
    code, _, err = run(capsys, "--precision", "8", "qtable", "--n", "1")
    assert code == EXIT_USAGE and "precision" in err
