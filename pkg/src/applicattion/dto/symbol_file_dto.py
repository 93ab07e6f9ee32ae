"""
DTO del archivo JSON de símbolo.
"""
from typing import Dict, List, Optional, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from src.domain.entities.symbol import CoefficientTable
from src.domain.repositories.symbol_repository import SymbolRecord

# un complejo se escribe como [re, im] o como un real
ComplexValue = Union[float, Tuple[float, float]]


def _to_complex(value: ComplexValue) -> complex:
    if isinstance(value, (tuple, list)):
        return complex(value[0], value[1])
    return complex(value)


class SymbolFileDTO(BaseModel):
    """Símbolo dado por coeficientes de ln f o por muestras de f sobre |z| = 1."""

    log_coeffs: Optional[Dict[int, ComplexValue]] = None
    samples: Optional[List[ComplexValue]] = None
    tol: Optional[float] = Field(None, gt=0)
    description: Optional[str] = Field(None, max_length=500)

    model_config = ConfigDict(
        extra="forbid",
        json_schema_extra={
            "example": {
                "description": "f(z) = exp(0.25 (z + 1/z))",
                "log_coeffs": {"-1": [0.25, 0.0], "1": [0.25, 0.0]},
                "tol": 1e-14,
            }
        },
    )

    @field_validator("log_coeffs")
    @classmethod
    def validate_log_coeffs(cls, v):
        if v is not None and not v:
            raise ValueError("log_coeffs no puede estar vacío")
        return v

    @model_validator(mode="after")
    def validate_exactly_one_source(self):
        if (self.log_coeffs is None) == (self.samples is None):
            raise ValueError("Se requiere exactamente uno de 'log_coeffs' o 'samples'")
        return self

    def to_record(self) -> SymbolRecord:
        if self.log_coeffs is not None:
            table = CoefficientTable.from_mapping({n: _to_complex(c) for n, c in self.log_coeffs.items()})
            return SymbolRecord(log_coeffs=table, tol=self.tol)
        samples = np.array([_to_complex(value) for value in self.samples], dtype=complex)
        return SymbolRecord(samples=samples, tol=self.tol)
