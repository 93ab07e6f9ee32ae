"""
Caso de uso: Cargar un símbolo desde el repositorio
"""
from src.domain.entities.symbol import Symbol
from src.domain.repositories.symbol_repository import SymbolRepository
from src.domain.services.symbol_service import SymbolService


class CargarSimboloUseCase:
    """Lee un símbolo y valida las hipótesis (holomorfía, sin ceros, índice cero)."""

    def __init__(self, repository: SymbolRepository, service: SymbolService):
        self.repository = repository
        self.service = service

    def execute(self, source: str) -> Symbol:
        """
        Raises:
            SymbolRepositoryException: Si no se puede leer el archivo
            ValidationException: Si el símbolo no cumple las hipótesis
        """
        record = self.repository.load(source)
        if record.from_samples:
            return self.service.build_symbol_from_samples(record.samples, tol=record.tol)
        return self.service.build_symbol_from_log_coeffs(record.log_coeffs, tol=record.tol)
