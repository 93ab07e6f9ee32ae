"""
DTOs de salida de los comandos (coeficientes, factorización, cociente y barrido).
"""
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, Field, field_validator

from src.domain.entities.correction import CorrectionMatrix
from src.domain.entities.symbol import CoefficientTable


class CoefficientRowDTO(BaseModel):
    n: int
    re: float
    im: float


class CoefficientTableDTO(BaseModel):
    """c_n[f] para n en [n_min, n_max]."""

    n_min: int
    n_max: int
    rows: List[CoefficientRowDTO]

    @classmethod
    def from_table(cls, table: CoefficientTable) -> "CoefficientTableDTO":
        rows = [CoefficientRowDTO(n=n, re=c.real, im=c.imag) for n, c in sorted(table.as_dict().items())]
        return cls(n_min=table.n_min, n_max=table.n_max, rows=rows)


class FactorizationDTO(BaseModel):
    """Exponentes de las ramas interior y exterior de alpha y residuo del salto."""

    K: int
    annulus: Tuple[float, Optional[float]]
    plus_coeffs: List[Tuple[float, float]] = Field(..., description="Coeficientes de z^n, n >= 0")
    minus_coeffs: List[Tuple[float, float]] = Field(..., description="Coeficientes de z^-n, n >= 1")
    grid: int
    jump_residual: float


class CorrectionSummaryDTO(BaseModel):
    kind: str
    size: int
    condition: Optional[float] = None
    singular: bool
    nodes: int
    change: float
    converged: bool
    radii: List[float] = []

    @classmethod
    def from_correction(cls, correction: CorrectionMatrix) -> "CorrectionSummaryDTO":
        report = correction.quadrature_report
        return cls(
            kind=correction.kind.value,
            size=correction.size,
            condition=correction.condition,
            singular=correction.singular,
            nodes=report.nodes,
            change=report.change,
            converged=report.converged,
            radii=list(correction.radii),
        )


class RatioResultDTO(BaseModel):
    """Resultado de cmd_ratio."""

    N: int
    spec: Dict[str, Any]
    method: str
    exact_re: float
    exact_im: float
    exact_is_zero: bool
    asym_re: float
    asym_im: float
    abs_err: float = Field(..., ge=0)
    condition: Optional[float] = None
    converged: bool
    corrections: List[CorrectionSummaryDTO] = []
    plain_logdet_re: float
    plain_logdet_im: float
    szego_re: float
    szego_im: float


class SweepRowDTO(BaseModel):
    N: int
    exact_re: float
    exact_im: float
    asym_re: float
    asym_im: float
    abs_err: float = Field(..., ge=0)
    nodes: int
    ms: float
    szego_residual: Optional[float] = None
    converged: bool = True


class SweepMetadataDTO(BaseModel):
    symbol_sha256: str
    spec: Dict[str, Any]
    config: Dict[str, Any]
    method: str
    version: str


class SweepReportDTO(BaseModel):
    """Informe de convergencia: filas ordenadas por N creciente."""

    metadata: SweepMetadataDTO
    rows: List[SweepRowDTO]

    @field_validator("rows")
    @classmethod
    def validate_sorted(cls, v):
        if any(a.N >= b.N for a, b in zip(v, v[1:])):
            raise ValueError("Las filas deben estar ordenadas por N creciente")
        return v
