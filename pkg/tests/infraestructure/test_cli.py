import csv
import io
import json
import logging

import numpy as np
import pytest

from src.infraestructure.cli.commands import EXIT_INVALID, EXIT_IO, EXIT_NOT_CONVERGED, EXIT_OK, run
from src.infraestructure.cli.report_writer import format_float
from src.infraestructure.config import QuadratureSettings, Settings, get_settings
from src.infraestructure.logging_config import configure_logging
from tests.conftest import A, AB, B


def _run(argv, settings=None):
    stdout, stderr = io.StringIO(), io.StringIO()
    code = run(argv, settings=settings or Settings(), stdout=stdout, stderr=stderr)
    return code, stdout.getvalue(), stderr.getvalue()


def test_coeffs_csv(tridiagonal_file):
    code, out, _ = _run(["coeffs", tridiagonal_file, "--n-min=-2", "--n-max", "2"])
    assert code == EXIT_OK
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["n", "re", "im"]
    values = {int(n): float(re) for n, re, _ in rows[1:]}
    assert values[0] == pytest.approx(1 + AB, abs=1e-13)
    assert values[1] == pytest.approx(A, abs=1e-13)
    assert values[-1] == pytest.approx(B, abs=1e-13)
    assert abs(values[2]) < 1e-13


def test_coeffs_json_from_samples(write_symbol):
    path = write_symbol({"samples": [[2.0, 0.0]] * 16})
    code, out, _ = _run(["coeffs", path, "--n-min", "0", "--n-max", "1", "--format", "json"])
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["rows"][0]["re"] == pytest.approx(2.0)


def test_factorize(tridiagonal_file):
    code, out, _ = _run(["factorize", tridiagonal_file, "--grid", "128"])
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["grid"] == 128
    assert payload["jump_residual"] < 1e-12
    assert payload["plus_coeffs"][1][0] == pytest.approx(-A)


def test_ratio_with_overlap(tridiagonal_file):
    code, out, _ = _run(["ratio", tridiagonal_file, "--N", "20", "--h", "1", "--p", "0", "--t", "1", "--k", "0"])
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["exact_re"] == pytest.approx(1 + AB, abs=1e-12)
    assert payload["abs_err"] < 1e-9
    assert payload["method"] == "split"


def test_ratio_with_relative_indices(tridiagonal_file):
    code, out, _ = _run(["ratio", tridiagonal_file, "--N", "16", "--h", "N", "--p", "N+1", "--method", "general"])
    assert code == EXIT_OK
    assert json.loads(out)["asym_re"] == pytest.approx(A, abs=1e-9)


def test_ratio_target_inside_range_is_invalid(tridiagonal_file):
    code, _, err = _run(["ratio", tridiagonal_file, "--N", "10", "--h", "1", "--p", "5"])
    assert code == EXIT_INVALID
    assert "p" in err


def test_ratio_line_method_with_rows_is_invalid(tridiagonal_file):
    code, _, _ = _run(["ratio", tridiagonal_file, "--N", "10", "--t", "1", "--k", "0", "--method", "line"])
    assert code == EXIT_INVALID


def test_ratio_mismatched_lists_are_invalid(tridiagonal_file):
    code, _, _ = _run(["ratio", tridiagonal_file, "--N", "10", "--h", "1,2", "--p", "0"])
    assert code == EXIT_INVALID


def test_ratio_reports_missing_convergence(tridiagonal_file):
    settings = Settings(quadrature=QuadratureSettings(max_doublings=1))
    code, out, _ = _run(
        ["ratio", tridiagonal_file, "--N", "12", "--h", "1", "--p", "0", "--quad-tol", "1e-300"],
        settings=settings,
    )
    assert code == EXIT_NOT_CONVERGED
    assert json.loads(out)["converged"] is False


def test_missing_symbol_file(tmp_path):
    code, _, err = _run(["coeffs", str(tmp_path / "nope.json"), "--n-min", "0", "--n-max", "1"])
    assert code == EXIT_IO
    assert "error" in err


def test_unwritable_output(tridiagonal_file, tmp_path):
    out_path = str(tmp_path / "no-such-dir" / "out.csv")
    code, _, _ = _run(["coeffs", tridiagonal_file, "--n-min", "0", "--n-max", "1", "--out", out_path])
    assert code == EXIT_IO


def test_invalid_json_symbol(write_symbol):
    code, _, _ = _run(["coeffs", write_symbol("[1, 2"), "--n-min", "0", "--n-max", "1"])
    assert code == EXIT_INVALID


def test_non_decaying_symbol_is_invalid(white_noise_file):
    code, _, err = _run(["factorize", white_noise_file])
    assert code == EXIT_INVALID
    assert err.startswith("error:")


def test_winding_symbol_is_invalid(write_symbol):
    z = np.exp(2j * np.pi * np.arange(32) / 32)
    samples = [[v.real, v.imag] for v in z * (2 + 0.5 * z)]
    code, _, _ = _run(["coeffs", write_symbol({"samples": samples}), "--n-min", "0", "--n-max", "1"])
    assert code == EXIT_INVALID


def test_sweep_csv_to_file(tridiagonal_file, tmp_path):
    out_path = tmp_path / "sweep.csv"
    code, out, _ = _run(
        ["sweep", tridiagonal_file, "--N-list", "4,8,12", "--h", "1", "--p", "0", "--out", str(out_path)]
    )
    assert code == EXIT_OK
    assert out == ""
    rows = list(csv.reader(out_path.open(encoding="utf-8")))
    assert rows[0] == ["N", "exact_re", "exact_im", "asym_re", "asym_im", "abs_err", "nodes", "ms"]
    assert [int(row[0]) for row in rows[1:]] == [4, 8, 12]
    errors = [float(row[5]) for row in rows[1:]]
    assert errors[0] > errors[1]
    assert errors[2] < 1e-10


def test_sweep_json_metadata(tridiagonal_file):
    code, out, _ = _run(
        ["sweep", tridiagonal_file, "--N-list", "6,10", "--h", "N", "--p", "N+1", "--format", "json"]
    )
    assert code == EXIT_OK
    payload = json.loads(out)
    assert len(payload["metadata"]["symbol_sha256"]) == 64
    assert payload["metadata"]["version"] == "1.0.0"
    assert [row["N"] for row in payload["rows"]] == [6, 10]


def test_sweep_reports_missing_convergence_and_still_writes(tridiagonal_file):
    settings = Settings(quadrature=QuadratureSettings(max_doublings=1))
    code, out, _ = _run(
        ["sweep", tridiagonal_file, "--N-list", "6,10", "--h", "1", "--p", "0", "--quad-tol", "1e-300"]
        + ["--format", "json"],
        settings=settings,
    )
    assert code == EXIT_NOT_CONVERGED
    payload = json.loads(out)
    assert [row["N"] for row in payload["rows"]] == [6, 10]
    assert not all(row["converged"] for row in payload["rows"])


def test_sweep_rejects_unsorted_list(tridiagonal_file):
    code, _, _ = _run(["sweep", tridiagonal_file, "--N-list", "8,4", "--h", "1", "--p", "0"])
    assert code == EXIT_INVALID


def test_identity_symbol_ratio_is_zero(identity_file):
    code, out, _ = _run(["ratio", identity_file, "--N", "6", "--h", "2", "--p", "-1"])
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["exact_is_zero"] is True
    assert abs(payload["asym_re"]) < 1e-12


def test_format_float_keeps_full_precision():
    assert float(format_float(0.1)) == 0.1
    assert format_float(1.0) == "1"


def test_settings_from_environment(monkeypatch):
    monkeypatch.setenv("LACTOEP_QUAD_NODES", "128")
    monkeypatch.setenv("LACTOEP_THREADS", "0")
    settings = get_settings()
    assert settings.quadrature.nodes == 128
    assert settings.threads == 1


def test_settings_reject_bad_nodes(monkeypatch):
    monkeypatch.setenv("LACTOEP_QUAD_NODES", "100")
    with pytest.raises(ValueError):
        get_settings()


def test_configure_logging_sets_level():
    configure_logging("debug")
    assert logging.getLogger().level == logging.DEBUG
    configure_logging("WARNING")
