"""Command-line interface: schemas, values, determinism, exit codes."""

import json

import numpy as np
import pytest

from bidisk.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestNorm:
    def test_one_minus_z1z2(self, capsys):
        code, out, _ = run_cli(capsys, "norm", "--series", "builtin:one_minus_z1z2", "--alpha", "0")
        assert code == 0
        assert json.loads(out)["norm"] == pytest.approx(np.sqrt(2), rel=1e-12)

    def test_product(self, capsys):
        code, out, _ = run_cli(
            capsys, "norm", "--series", "builtin:product_one_minus", "--alpha", "1"
        )
        assert code == 0
        assert json.loads(out)["norm"] == pytest.approx(3.0, rel=1e-12)

    def test_one_minus_z1(self, capsys):
        code, out, _ = run_cli(capsys, "norm", "--series", "builtin:one_minus_z1", "--alpha", "0")
        assert code == 0
        assert json.loads(out)["norm"] == pytest.approx(np.sqrt(2), rel=1e-12)


class TestApprox:
    def test_optimal_full(self, capsys):
        code, out, _ = run_cli(
            capsys, "approx", "--series", "builtin:one_minus_z1z2",
            "--alpha", "0", "--n", "1", "--method", "optimal", "--basis", "full",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["residual_sq"] == pytest.approx(1.0 / 3.0, abs=1e-9)
        assert payload["ortho_residual"] <= 1e-8
        assert payload["cond_estimate"] > 0

    def test_riesz(self, capsys):
        code, out, _ = run_cli(
            capsys, "approx", "--series", "builtin:one_minus_z1z2",
            "--alpha", "0", "--n", "1", "--method", "riesz",
        )
        payload = json.loads(out)
        assert code == 0
        assert payload["residual_sq"] == pytest.approx(0.5, abs=1e-12)
        assert payload["cond_estimate"] is None

    def test_exact_inversion(self, capsys, tmp_path):
        series = tmp_path / "one.json"
        series.write_text(json.dumps({"deg": [0, 0], "coeffs": [[1.0, 0.0]]}))
        code, out, _ = run_cli(
            capsys, "approx", "--series", str(series), "--alpha", "0.5", "--n", "3"
        )
        assert code == 0
        assert json.loads(out)["residual_sq"] <= 1e-15

    def test_coefficients_roundtrip_as_series_json(self, capsys, tmp_path):
        code, out, _ = run_cli(
            capsys, "approx", "--series", "builtin:one_minus_z1z2",
            "--alpha", "0", "--n", "2", "--basis", "diag:1,1",
        )
        assert code == 0
        coeffs = json.loads(out)["coefficients"]
        series = tmp_path / "p.json"
        series.write_text(json.dumps(coeffs))
        code2, out2, _ = run_cli(capsys, "norm", "--series", str(series), "--alpha", "0")
        assert code2 == 0
        assert json.loads(out2)["norm"] > 0


class TestDecay:
    def test_diagonal_oracle_column(self, capsys):
        code, out, _ = run_cli(
            capsys, "decay", "--series", "builtin:one_minus_z1z2", "--alpha", "0",
            "--nmin", "1", "--nmax", "10", "--basis", "diag:1,1",
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "n,dist_sq,predicted,ratio"
        for row in lines[1:]:
            n, dist_sq, predicted, ratio = row.split(",")
            assert float(dist_sq) == pytest.approx(1.0 / (int(n) + 2), abs=1e-10)
            assert float(predicted) == pytest.approx(1.0 / (int(n) + 1), rel=1e-12)

    def test_constant_has_empty_predicted(self, capsys, tmp_path):
        series = tmp_path / "one.json"
        series.write_text(json.dumps({"deg": [0, 0], "coeffs": [[1.0, 0.0]]}))
        code, out, _ = run_cli(
            capsys, "decay", "--series", str(series), "--alpha", "0",
            "--nmin", "0", "--nmax", "6", "--basis", "full",
        )
        assert code == 0
        for row in out.strip().splitlines()[1:]:
            n, dist_sq, predicted, ratio = row.split(",")
            assert float(dist_sq) == 0.0
            assert predicted == "" and ratio == ""

    def test_plateau_ratio_flat(self, capsys):
        code, out, _ = run_cli(
            capsys, "decay", "--series", "builtin:one_minus_z1z2", "--alpha", "1",
            "--nmin", "10", "--nmax", "200", "--step", "10", "--basis", "diag:1,1",
        )
        assert code == 0
        rows = [r.split(",") for r in out.strip().splitlines()[1:]]
        ratios = [float(r[3]) for r in rows]
        assert all(float(r[2]) == 1.0 for r in rows)  # plateau prediction
        assert abs(ratios[-1] - ratios[-2]) <= 1e-3 * ratios[-1]

    def test_deterministic_output(self, capsys, tmp_path):
        args = (
            "decay", "--series", "builtin:one_minus_pow:2,3", "--alpha", "-0.5",
            "--nmin", "5", "--nmax", "40", "--step", "5", "--basis", "diag:2,3",
        )
        code1, out1, _ = run_cli(capsys, *args)
        code2, out2, _ = run_cli(capsys, *args)
        assert code1 == code2 == 0
        assert out1 == out2
        out_file = tmp_path / "scan.csv"
        code3 = main(list(args) + ["--out", str(out_file)])
        assert code3 == 0
        assert out_file.read_text() == out1

    def test_riesz_method(self, capsys):
        code, out, _ = run_cli(
            capsys, "decay", "--series", "builtin:one_minus_z1z2", "--alpha", "0",
            "--nmin", "1", "--nmax", "6", "--method", "riesz",
        )
        assert code == 0
        for row in out.strip().splitlines()[1:]:
            n, dist_sq, _, _ = row.split(",")
            assert float(dist_sq) == pytest.approx(1.0 / (int(n) + 1), abs=1e-12)


class TestEnergyAndAnnihilate:
    def test_diagonal_current_energy(self, capsys):
        code, out, _ = run_cli(
            capsys, "energy", "--measure", "builtin:diagonal_current", "--K", "1000"
        )
        assert code == 0
        payload = json.loads(out)
        assert abs(payload["partial"] - (1 + np.pi**2 / 12)) <= 1e-3

    def test_lebesgue_energy(self, capsys):
        code, out, _ = run_cli(capsys, "energy", "--measure", "builtin:lebesgue", "--K", "100")
        assert code == 0
        assert json.loads(out)["partial"] == 1.0

    def test_measure_file_with_completion(self, capsys, tmp_path):
        measure = tmp_path / "mu.json"
        measure.write_text(json.dumps({"K": 4, "coeffs": [[1, 1, 0.5, 0.25], [0, 2, 0.125, 0.0]]}))
        code, out, _ = run_cli(capsys, "energy", "--measure", str(measure), "--K", "4")
        assert code == 0
        payload = json.loads(out)
        # only (k, l) = (1, 1) has l >= 1; the 1/2 factor accounts for its mirror
        expected_interior = 0.5 * (0.5**2 + 0.25**2)
        assert payload["interior"] == pytest.approx(expected_interior)
        assert payload["axis2"] == pytest.approx(0.125**2 / 2)

    def test_annihilation_identity(self, capsys):
        code, out, _ = run_cli(
            capsys, "annihilate", "--series", "builtin:one_minus_z1z2",
            "--measure", "builtin:diagonal_current", "--maxdeg", "8",
        )
        assert code == 0
        assert json.loads(out)["max_abs_pairing"] == 0.0


class TestVerify:
    @pytest.mark.parametrize("suite", ["restriction", "separable", "polyextraction"])
    def test_suites_pass(self, capsys, suite):
        code, out, _ = run_cli(
            capsys, "verify", "--suite", suite, "--trials", "200", "--seed", "7"
        )
        assert code == 0
        assert "PASS" in out

    def test_all(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--suite", "all", "--trials", "50", "--seed", "7")
        assert code == 0
        assert out.count("PASS") == 5


class TestErrors:
    def test_missing_series_file(self, capsys):
        code, _, err = run_cli(capsys, "norm", "--series", "no/such/file.json", "--alpha", "0")
        assert code == 2
        assert "InputError" in err

    def test_bad_builtin(self, capsys):
        code, _, err = run_cli(capsys, "norm", "--series", "builtin:nope", "--alpha", "0")
        assert code == 2
        assert "InputError" in err

    def test_numerical_error_exit_code(self, capsys, tmp_path):
        series = tmp_path / "zero_const.json"
        series.write_text(json.dumps({"deg": [0, 1], "coeffs": [[0.0, 0.0], [1.0, 0.0]]}))
        code, _, err = run_cli(
            capsys, "approx", "--series", str(series), "--alpha", "0", "--n", "2",
            "--method", "riesz",
        )
        assert code == 3
        assert "SingularReciprocalError" in err

    def test_unsupported_rate_is_input_error(self, capsys):
        code, _, err = run_cli(
            capsys, "approx", "--series", "builtin:one_minus_z1z2",
            "--alpha", "1.5", "--n", "2", "--method", "riesz",
        )
        assert code == 2
        assert "UnsupportedRateError" in err

    def test_basis_cap_refusal(self, capsys):
        code, _, err = run_cli(
            capsys, "decay", "--series", "builtin:one_minus_z1z2", "--alpha", "0",
            "--nmin", "150", "--nmax", "150", "--basis", "full",
        )
        assert code == 2
        assert "BasisSizeError" in err

    def test_bad_grid_shape(self, capsys, tmp_path):
        series = tmp_path / "bad.json"
        series.write_text(json.dumps({"deg": [1, 1], "coeffs": [[1.0, 0.0]]}))
        code, _, err = run_cli(capsys, "norm", "--series", str(series), "--alpha", "0")
        assert code == 2
        assert "InputError" in err

    def test_malformed_measure(self, capsys, tmp_path):
        measure = tmp_path / "bad.json"
        measure.write_text(json.dumps({"K": 2, "coeffs": [[0, 0, 0.5, 0.0]]}))
        code, _, err = run_cli(capsys, "energy", "--measure", str(measure), "--K", "2")
        assert code == 2
        assert "CoefficientRangeError" in err

    def test_step_validation(self, capsys):
        code, _, err = run_cli(
            capsys, "decay", "--series", "builtin:one_minus_z1z2", "--alpha", "0",
            "--nmin", "1", "--nmax", "5", "--step", "0",
        )
        assert code == 2
