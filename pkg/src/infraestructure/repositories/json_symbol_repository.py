"""
Implementación del repositorio de símbolos sobre archivos JSON.

Esquema:
    {"log_coeffs": {"<n>": [re, im], ...}, "tol": 1e-14}
    {"samples": [[re, im], ...], "tol": 1e-14}
"""
import hashlib
import json
from pathlib import Path

import structlog
from pydantic import ValidationError

from src.applicattion.dto.symbol_file_dto import SymbolFileDTO
from src.domain.exceptions.domain_exceptions import SymbolRepositoryException, ValidationException
from src.domain.repositories.symbol_repository import SymbolRecord, SymbolRepository

logger = structlog.get_logger(__name__)


class JsonSymbolRepository(SymbolRepository):
    """Lee símbolos desde archivos JSON locales."""

    def load(self, source: str) -> SymbolRecord:
        raw = self._read_bytes(source)
        try:
            payload = json.loads(raw)
        except (UnicodeDecodeError, json.JSONDecodeError) as e:
            raise ValidationException(f"El archivo {source} no es JSON válido: {e}")

        try:
            dto = SymbolFileDTO.model_validate(payload)
        except ValidationError as e:
            errors = "; ".join(
                f"{'.'.join(str(part) for part in err['loc']) or 'raíz'}: {err['msg']}" for err in e.errors()
            )
            raise ValidationException(f"Símbolo inválido en {source}: {errors}")

        record = dto.to_record()
        logger.debug("simbolo_leido", source=source, from_samples=record.from_samples)
        return record

    def digest(self, source: str) -> str:
        return hashlib.sha256(self._read_bytes(source)).hexdigest()

    @staticmethod
    def _read_bytes(source: str) -> bytes:
        try:
            return Path(source).read_bytes()
        except OSError as e:
            raise SymbolRepositoryException(f"No se pudo leer el símbolo {source}: {e.strerror or e}")
