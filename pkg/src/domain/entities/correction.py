"""
Entidades de las matrices de corrección asintótica y de la cuadratura de contorno.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Tuple

from .matrix import ComplexMatrix


class CorrectionKind(str, Enum):
    LINE_M = "LINE_M"
    COROLLARY_PLUS = "COROLLARY_PLUS"
    COROLLARY_MINUS = "COROLLARY_MINUS"
    GENERAL_N = "GENERAL_N"
    EPSILON_PLUS = "EPSILON_PLUS"
    EPSILON_MINUS = "EPSILON_MINUS"


class RatioMethod(str, Enum):
    AUTO = "auto"
    LINE = "line"
    GENERAL = "general"
    SPLIT = "split"


@dataclass(frozen=True)
class QuadratureConfig:
    """
    Radios de contorno y parámetros de convergencia de la regla trapezoidal.

    eta_z, eta_s en None significa radios automáticos elegidos a partir de la
    corona de analiticidad; si se dan, deben cumplir 0 < eta_s < eta_z < 1.
    """

    eta_z: Optional[float] = None
    eta_s: Optional[float] = None
    nodes: int = 64
    tol: float = 1e-12
    max_doublings: int = 8

    def __post_init__(self):
        if self.nodes < 4 or self.nodes & (self.nodes - 1):
            raise ValueError(f"El número de nodos debe ser potencia de dos >= 4, recibido {self.nodes}")
        if self.tol <= 0:
            raise ValueError("La tolerancia de cuadratura debe ser positiva")
        if self.max_doublings < 0:
            raise ValueError("max_doublings no puede ser negativo")
        if (self.eta_z is None) != (self.eta_s is None):
            raise ValueError("eta_z y eta_s deben darse juntos")
        if self.eta_z is not None and not (0.0 < self.eta_s < self.eta_z < 1.0):
            raise ValueError(
                f"Radios inválidos: se requiere 0 < eta_s < eta_z < 1 "
                f"(eta_z={self.eta_z}, eta_s={self.eta_s})"
            )

    @property
    def has_explicit_radii(self) -> bool:
        return self.eta_z is not None


@dataclass(frozen=True)
class QuadratureReport:
    """Nodos usados y último cambio relativo de una cuadratura (o del peor caso de una matriz)."""

    nodes: int = 0
    change: float = 0.0
    converged: bool = True

    def merge(self, other: "QuadratureReport") -> "QuadratureReport":
        return QuadratureReport(
            nodes=max(self.nodes, other.nodes),
            change=max(self.change, other.change),
            converged=self.converged and other.converged,
        )


@dataclass(frozen=True)
class CorrectionMatrix:
    """Matriz de corrección (M, M^±, N o N^ε) con su procedencia y número de condición."""

    kind: CorrectionKind
    matrix: ComplexMatrix
    condition: float
    quadrature_report: QuadratureReport = field(default_factory=QuadratureReport)
    singular: bool = False
    radii: Tuple[float, ...] = ()

    @property
    def size(self) -> int:
        return self.matrix.rows

    def __repr__(self) -> str:
        return (
            f"CorrectionMatrix(kind={self.kind.value}, size={self.size}, "
            f"condition={self.condition:.3e}, singular={self.singular})"
        )


@dataclass(frozen=True)
class AsymptoticRatio:
    """Aproximación asintótica del cociente con las matrices que la producen."""

    value: complex
    method: RatioMethod
    matrices: Tuple[CorrectionMatrix, ...] = ()

    @property
    def condition(self) -> float:
        return max((m.condition for m in self.matrices), default=1.0)

    @property
    def singular(self) -> bool:
        return any(m.singular for m in self.matrices)

    @property
    def quadrature_report(self) -> QuadratureReport:
        report = QuadratureReport()
        for correction in self.matrices:
            report = report.merge(correction.quadrature_report)
        return report
