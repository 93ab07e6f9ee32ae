"""
Caso de uso: Calcular coeficientes de Fourier c_n[f]
"""
from src.applicattion.dto.report_dto import CoefficientTableDTO
from src.applicattion.use_cases.cargar_simbolo import CargarSimboloUseCase
from src.domain.services.symbol_service import SymbolService


class CalcularCoeficientesUseCase:
    def __init__(self, cargar_simbolo: CargarSimboloUseCase, service: SymbolService):
        self.cargar_simbolo = cargar_simbolo
        self.service = service

    def execute(self, source: str, n_min: int, n_max: int) -> CoefficientTableDTO:
        symbol = self.cargar_simbolo.execute(source)
        return CoefficientTableDTO.from_table(self.service.fourier_coefficients(symbol, n_min, n_max))
