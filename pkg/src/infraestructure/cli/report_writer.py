"""
Escritura de informes en CSV o JSON.

Los reales se escriben con 17 cifras significativas en CSV; el JSON usa la
representación más corta que conserva el valor exacto del double.
"""
import csv
from typing import IO

from pydantic import BaseModel

from src.applicattion.dto.report_dto import CoefficientTableDTO, SweepReportDTO

SWEEP_COLUMNS = ["N", "exact_re", "exact_im", "asym_re", "asym_im", "abs_err", "nodes", "ms"]


def format_float(value: float) -> str:
    return "%.17g" % value


def write_json(model: BaseModel, stream: IO[str]) -> None:
    stream.write(model.model_dump_json(indent=2))
    stream.write("\n")


def write_coefficients(table: CoefficientTableDTO, fmt: str, stream: IO[str]) -> None:
    if fmt == "json":
        write_json(table, stream)
        return
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(["n", "re", "im"])
    for row in table.rows:
        writer.writerow([row.n, format_float(row.re), format_float(row.im)])


def write_sweep(report: SweepReportDTO, fmt: str, stream: IO[str]) -> None:
    if fmt == "json":
        write_json(report, stream)
        return
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(SWEEP_COLUMNS)
    for row in report.rows:
        writer.writerow(
            [
                row.N,
                format_float(row.exact_re),
                format_float(row.exact_im),
                format_float(row.asym_re),
                format_float(row.asym_im),
                format_float(row.abs_err),
                row.nodes,
                "%.3f" % row.ms,
            ]
        )
