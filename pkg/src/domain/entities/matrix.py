"""
Entidades de álgebra lineal densa compleja.
"""

import cmath
import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True, eq=False)
class ComplexMatrix:
    """Matriz compleja densa, inmutable, con entradas finitas."""

    data: np.ndarray

    def __post_init__(self):
        data = np.array(self.data, dtype=complex, copy=True)
        if data.ndim == 1 and data.size == 0:
            data = data.reshape(0, 0)
        if data.ndim != 2:
            raise ValueError(f"Se esperaba una matriz 2D, recibido ndim={data.ndim}")
        if not np.all(np.isfinite(data)):
            raise ValueError("La matriz contiene entradas no finitas (NaN/Inf)")
        data.setflags(write=False)
        object.__setattr__(self, "data", data)

    @classmethod
    def empty(cls) -> "ComplexMatrix":
        return cls(np.zeros((0, 0), dtype=complex))

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, index):
        return self.data[index]

    def __repr__(self) -> str:
        return f"ComplexMatrix({self.rows}x{self.cols})"


@dataclass(frozen=True)
class LogDet:
    """
    Logaritmo de un determinante: det = exp(log_modulus + i*phase).

    Si is_zero, log_modulus y phase no se usan.
    """

    log_modulus: float
    phase: float
    is_zero: bool = False

    @classmethod
    def zero(cls) -> "LogDet":
        return cls(log_modulus=-math.inf, phase=0.0, is_zero=True)

    @property
    def value(self) -> complex:
        """Determinante como número complejo (puede desbordar para N grande)."""
        if self.is_zero:
            return 0j
        return cmath.exp(complex(self.log_modulus, self.phase))

    def __sub__(self, other: "LogDet") -> complex:
        """log(det_a / det_b) como número complejo; requiere det_b != 0."""
        return complex(self.log_modulus - other.log_modulus, self.phase - other.phase)
