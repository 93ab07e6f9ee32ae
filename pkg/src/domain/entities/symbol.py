"""
Entidades Símbolo y Tabla de coeficientes.
Un símbolo f se guarda por los coeficientes de Laurent de ln f, de modo que
f = exp(sum c_n[ln f] z^n) no se anula y tiene índice de giro cero por construcción.
"""

import math
from dataclasses import dataclass, field
from typing import Optional, Tuple

import numpy as np


@dataclass(frozen=True, eq=False)
class CoefficientTable:
    """
    Coeficientes c_n para n en [offset, offset + len(values) - 1].

    tail_bound, si se conoce, acota |c_n| fuera de la tabla; solo entonces
    los índices ausentes pueden tratarse como cero.
    """

    offset: int
    values: np.ndarray
    tail_bound: Optional[float] = None

    def __post_init__(self):
        values = np.asarray(self.values, dtype=complex).reshape(-1)
        if not np.all(np.isfinite(values)):
            raise ValueError("Los coeficientes deben ser finitos")
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "offset", int(self.offset))

    @classmethod
    def from_mapping(cls, coeffs: dict, tail_bound: Optional[float] = None) -> "CoefficientTable":
        """Construye una tabla contigua a partir de {n: c_n}; los huecos valen 0."""
        if not coeffs:
            return cls(offset=0, values=np.zeros(0, dtype=complex), tail_bound=tail_bound)
        n_min, n_max = min(coeffs), max(coeffs)
        values = np.zeros(n_max - n_min + 1, dtype=complex)
        for n, c in coeffs.items():
            values[n - n_min] = complex(c)
        return cls(offset=n_min, values=values, tail_bound=tail_bound)

    @property
    def n_min(self) -> int:
        return self.offset

    @property
    def n_max(self) -> int:
        return self.offset + len(self.values) - 1

    def __len__(self) -> int:
        return len(self.values)

    def covers(self, n: int) -> bool:
        return self.n_min <= n <= self.n_max

    def __getitem__(self, n: int) -> complex:
        if not self.covers(n):
            raise KeyError(n)
        return complex(self.values[n - self.offset])

    def get(self, n: int, default: complex = 0.0) -> complex:
        return self[n] if self.covers(n) else default

    def lookup(self, indices: np.ndarray) -> np.ndarray:
        """Búsqueda vectorizada; los índices fuera de la tabla devuelven 0."""
        indices = np.asarray(indices, dtype=np.int64)
        out = np.zeros(indices.shape, dtype=complex)
        inside = (indices >= self.n_min) & (indices <= self.n_max)
        out[inside] = self.values[indices[inside] - self.offset]
        return out

    def as_dict(self) -> dict:
        return {self.offset + j: complex(v) for j, v in enumerate(self.values)}


@dataclass(frozen=True, eq=False)
class Symbol:
    """
    Símbolo holomorfo, sin ceros y de índice cero en un entorno de |z| = 1.

    log_coeffs contiene c_n[ln f] para n en [-K, K]; annulus es la corona
    (r_minus, r_plus) estimada por ajuste del decaimiento, ya contraída
    hacia 1 por el factor de seguridad.
    """

    log_coeffs: CoefficientTable
    K: int
    annulus: Tuple[float, float]
    tol: float = 1e-14

    # caches de la serie partida en potencias positivas / negativas
    _positive: np.ndarray = field(init=False, repr=False, compare=False)
    _negative: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.K < 0:
            raise ValueError("El orden de truncamiento K no puede ser negativo")
        r_minus, r_plus = self.annulus
        if not (0.0 <= r_minus < 1.0 < r_plus):
            raise ValueError(f"Corona inválida {self.annulus}: se requiere 0 <= r- < 1 < r+")
        if self.tol <= 0:
            raise ValueError("La tolerancia debe ser positiva")
        # c_0..c_K y c_{-1}..c_{-K}
        positive = np.array([self.log_coeffs.get(n) for n in range(0, self.K + 1)], dtype=complex)
        negative = np.array([self.log_coeffs.get(-n) for n in range(1, self.K + 1)], dtype=complex)
        object.__setattr__(self, "_positive", positive)
        object.__setattr__(self, "_negative", negative)

    @property
    def r_minus(self) -> float:
        return self.annulus[0]

    @property
    def r_plus(self) -> float:
        return self.annulus[1]

    @property
    def positive_log_coeffs(self) -> np.ndarray:
        """c_0[ln f], c_1[ln f], ..., c_K[ln f]."""
        return self._positive

    @property
    def negative_log_coeffs(self) -> np.ndarray:
        """c_{-1}[ln f], ..., c_{-K}[ln f]."""
        return self._negative

    @property
    def is_identity(self) -> bool:
        return not np.any(self._positive) and not np.any(self._negative)

    def contains(self, z) -> np.ndarray:
        modulus = np.abs(np.asarray(z))
        return (modulus > self.r_minus) & (modulus < self.r_plus)

    def evaluate_log(self, z) -> np.ndarray:
        """ln f(z) = sum_{|n|<=K} c_n[ln f] z^n, evaluada por Horner."""
        z = np.asarray(z, dtype=complex)
        value = np.polynomial.polynomial.polyval(z, self._positive)
        if self.K > 0:
            w = 1.0 / z
            value = value + w * np.polynomial.polynomial.polyval(w, self._negative)
        return value

    def evaluate(self, z) -> np.ndarray:
        """f(z) = exp(ln f(z))."""
        return np.exp(self.evaluate_log(z))

    def reflected(self) -> "Symbol":
        """Símbolo z -> f(1/z): intercambia c_n y c_{-n}."""
        mirrored = {-n: c for n, c in self.log_coeffs.as_dict().items()}
        table = CoefficientTable.from_mapping(mirrored, tail_bound=self.log_coeffs.tail_bound)
        r_minus, r_plus = self.annulus
        reflected_annulus = (1.0 / r_plus if math.isfinite(r_plus) else 0.0,
                             1.0 / r_minus if r_minus > 0 else math.inf)
        return Symbol(log_coeffs=table, K=self.K, annulus=reflected_annulus, tol=self.tol)

    def __str__(self) -> str:
        return f"Symbol(K={self.K}, annulus=({self.r_minus:.4g}, {self.r_plus:.4g}))"
