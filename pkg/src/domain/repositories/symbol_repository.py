"""
Puerto (interfaz) del repositorio de símbolos.
Define el contrato que debe implementar cualquier adaptador de lectura.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..entities.symbol import CoefficientTable


@dataclass(frozen=True, eq=False)
class SymbolRecord:
    """
    Datos crudos de un símbolo: coeficientes de ln f o muestras de f sobre
    una malla uniforme de |z| = 1 (exactamente uno de los dos).
    """

    log_coeffs: Optional[CoefficientTable] = None
    samples: Optional[np.ndarray] = None
    tol: Optional[float] = None

    def __post_init__(self):
        if (self.log_coeffs is None) == (self.samples is None):
            raise ValueError("Se requiere exactamente uno de log_coeffs o samples")

    @property
    def from_samples(self) -> bool:
        return self.samples is not None


class SymbolRepository(ABC):
    """
    Repositorio abstracto de símbolos.

    Los adaptadores concretos (JSON, etc.) traducen su formato a SymbolRecord.
    """

    @abstractmethod
    def load(self, source: str) -> SymbolRecord:
        """
        Lee un símbolo.

        Args:
            source: Identificador del símbolo (ruta de archivo)

        Returns:
            SymbolRecord con los datos leídos

        Raises:
            SymbolRepositoryException: Si no se puede leer la fuente
            ValidationException: Si el contenido no respeta el esquema
        """
        pass

    @abstractmethod
    def digest(self, source: str) -> str:
        """Huella sha256 del contenido de la fuente (metadatos de informes)."""
        pass
