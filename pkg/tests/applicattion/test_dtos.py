import pytest
from pydantic import ValidationError

from src.applicattion.dto.report_dto import SweepMetadataDTO, SweepReportDTO, SweepRowDTO
from src.applicattion.dto.spec_template_dto import SpecTemplateDTO, resolve_index
from src.applicattion.dto.symbol_file_dto import SymbolFileDTO


@pytest.mark.parametrize("token, expected", [("3", 3), ("-2", -2), ("N", 10), ("N+1", 11), ("N-3", 7)])
def test_resolve_index(token, expected):
    assert resolve_index(token, 10) == expected


def test_template_from_csv_strings():
    template = SpecTemplateDTO(h="1, N", p="0,N+1", t="", k="")
    assert template.h == ["1", "N"]
    assert template.resolve(12) == ([(1, 0), (12, 13)], [])
    assert template.describe()["p"] == ["0", "N+1"]


@pytest.mark.parametrize(
    "kwargs",
    [
        {"h": "1,2", "p": "0"},
        {"t": "1", "k": ""},
        {"h": "x", "p": "0"},
        {"h": "N*2", "p": "0"},
    ],
)
def test_template_rejects_invalid_input(kwargs):
    with pytest.raises(ValidationError):
        SpecTemplateDTO(**kwargs)


def test_symbol_file_with_log_coefficients():
    dto = SymbolFileDTO.model_validate({"log_coeffs": {"-1": [0.25, 0.0], "1": 0.25}, "tol": 1e-12})
    record = dto.to_record()
    assert not record.from_samples
    assert record.log_coeffs.get(-1) == 0.25
    assert record.log_coeffs.get(0) == 0
    assert record.tol == 1e-12


def test_symbol_file_with_samples():
    record = SymbolFileDTO.model_validate({"samples": [[1.0, 0.0], [2.0, 1.0]]}).to_record()
    assert record.from_samples
    assert record.samples.tolist() == [1 + 0j, 2 + 1j]


@pytest.mark.parametrize(
    "payload",
    [
        {},
        {"log_coeffs": {}},
        {"log_coeffs": {"0": 0.0}, "samples": [1.0]},
        {"log_coeffs": {"0": 0.0}, "tol": -1.0},
        {"log_coeffs": {"0": 0.0}, "unknown": 1},
        {"log_coeffs": {"a": 0.0}},
    ],
)
def test_symbol_file_rejects_invalid_payload(payload):
    with pytest.raises(ValidationError):
        SymbolFileDTO.model_validate(payload)


def _row(N):
    return SweepRowDTO(N=N, exact_re=1.0, exact_im=0.0, asym_re=1.0, asym_im=0.0, abs_err=0.0, nodes=64, ms=1.0)


def test_sweep_report_requires_ascending_rows():
    metadata = SweepMetadataDTO(symbol_sha256="0" * 64, spec={}, config={}, method="auto", version="1.0.0")
    SweepReportDTO(metadata=metadata, rows=[_row(4), _row(8)])
    with pytest.raises(ValidationError):
        SweepReportDTO(metadata=metadata, rows=[_row(8), _row(4)])
