"""
Caso de uso: Factorización de Wiener-Hopf de un símbolo
"""
import math

import structlog

from src.applicattion.dto.report_dto import FactorizationDTO
from src.applicattion.use_cases.cargar_simbolo import CargarSimboloUseCase
from src.domain.services.wiener_hopf_service import WienerHopfService

logger = structlog.get_logger(__name__)


class FactorizarSimboloUseCase:
    """Construye alpha y verifica el salto alpha_- = f alpha_+ sobre |z| = 1."""

    def __init__(self, cargar_simbolo: CargarSimboloUseCase, service: WienerHopfService):
        self.cargar_simbolo = cargar_simbolo
        self.service = service

    def execute(self, source: str, grid: int = 256) -> FactorizationDTO:
        """
        Args:
            source: Archivo del símbolo
            grid: Puntos de la malla de verificación

        Returns:
            FactorizationDTO con los exponentes y el residuo del salto
        """
        symbol = self.cargar_simbolo.execute(source)
        fact = self.service.factorize(symbol)
        residual = self.service.verify_jump(fact, symbol, grid_size=grid)
        logger.info("factorizacion", K=symbol.K, residual=residual)

        r_minus, r_plus = symbol.annulus
        return FactorizationDTO(
            K=symbol.K,
            annulus=(r_minus, r_plus if math.isfinite(r_plus) else None),
            plus_coeffs=[(c.real, c.imag) for c in fact.plus_coeffs],
            minus_coeffs=[(c.real, c.imag) for c in fact.minus_coeffs],
            grid=grid,
            jump_residual=residual,
        )
