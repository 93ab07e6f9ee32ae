"""
Servicio de dominio para símbolos.
Construye símbolos a partir de coeficientes de ln f o de muestras sobre la
circunferencia unidad, extrae coeficientes de Fourier y verifica las hipótesis
(no anulación, índice de giro cero, holomorfía de ln f).
"""

import math
from typing import Callable, Optional, Sequence, Union

import numpy as np
import structlog

from ..entities.symbol import CoefficientTable, Symbol
from ..exceptions.domain_exceptions import (
    EmptyCoefficientsException,
    NoDecayException,
    NonzeroWindingException,
    ValidationException,
    VanishingSymbolException,
)

logger = structlog.get_logger(__name__)

# Razón geométrica ajustada a partir de la cual se considera que no hay decaimiento
NO_DECAY_RATIO = 0.999
# Mínimo de puntos no nulos para ajustar el decaimiento de un lado
MIN_FIT_POINTS = 3
MAX_FFT_SIZE = 2 ** 22

SampleSource = Union[Sequence[complex], np.ndarray, Callable[[np.ndarray], np.ndarray]]


def unit_circle_grid(size: int) -> np.ndarray:
    """Nodos z_j = exp(2iπ j / size), j = 0..size-1."""
    return np.exp(2j * np.pi * np.arange(size) / size)


class SymbolService:
    """
    Servicio de dominio que encapsula la construcción y el análisis de símbolos.
    """

    def __init__(self, tol: float = 1e-14, max_truncation: int = 4096, safety_shrink: float = 0.9):
        self._tol = tol
        self._max_truncation = max_truncation
        self._safety_shrink = safety_shrink

    @property
    def tol(self) -> float:
        return self._tol

    def build_symbol_from_log_coeffs(self, coeffs: CoefficientTable, tol: Optional[float] = None) -> Symbol:
        """
        Construye un símbolo a partir de la tabla de coeficientes de ln f.

        Args:
            coeffs: Coeficientes c_n[ln f]
            tol: Tolerancia de truncamiento (por defecto la del servicio)

        Returns:
            Symbol con K adaptativo y corona estimada por ajuste del decaimiento

        Raises:
            EmptyCoefficientsException: Si la tabla no tiene entradas
            NoDecayException: Si los coeficientes no decaen geométricamente
        """
        tol = self._tol if tol is None else tol
        if tol <= 0:
            raise ValidationException(f"La tolerancia debe ser positiva, recibido {tol}")
        if len(coeffs) == 0:
            raise EmptyCoefficientsException()

        positive = self._side_magnitudes(coeffs, sign=+1)
        negative = self._side_magnitudes(coeffs, sign=-1)

        k_plus = self._truncation_order(positive, tol, side="+")
        k_minus = self._truncation_order(negative, tol, side="-")
        K = max(k_plus, k_minus)

        r_plus = self._fit_radius(positive[:k_plus], side="+")
        r_minus_inverse = self._fit_radius(negative[:k_minus], side="-")
        r_minus = 0.0 if math.isinf(r_minus_inverse) else 1.0 / r_minus_inverse

        annulus = (
            r_minus ** self._safety_shrink if r_minus > 0 else 0.0,
            r_plus ** self._safety_shrink if math.isfinite(r_plus) else math.inf,
        )

        retained = {n: coeffs.get(n) for n in range(-K, K + 1)}
        table = CoefficientTable.from_mapping(retained, tail_bound=tol)
        symbol = Symbol(log_coeffs=table, K=K, annulus=annulus, tol=tol)
        logger.debug("simbolo_construido", K=K, r_minus=annulus[0], r_plus=annulus[1])
        return symbol

    def build_symbol_from_samples(self, f_values: Sequence[complex], tol: Optional[float] = None) -> Symbol:
        """
        Construye un símbolo a partir de muestras de f sobre una malla uniforme de |z|=1.

        Args:
            f_values: f(exp(2iπ j/M)), j=0..M-1, con M potencia de dos >= 8
            tol: Tolerancia

        Returns:
            Symbol equivalente

        Raises:
            VanishingSymbolException: Si min |f| <= tol
            NonzeroWindingException: Si el índice de giro no es cero
            NoDecayException: Si ln f no está resuelta por la malla
        """
        tol = self._tol if tol is None else tol
        values = np.asarray(f_values, dtype=complex).reshape(-1)
        size = values.size
        if size < 8 or size & (size - 1):
            raise ValidationException(f"La malla debe ser potencia de dos >= 8, recibido {size}")

        winding = self.winding_number(values, tol=tol)
        if winding != 0:
            raise NonzeroWindingException(winding)

        # rama continua del logaritmo: el giro es cero, así que la fase cierra
        phase = np.unwrap(np.angle(values))
        log_values = np.log(np.abs(values)) + 1j * phase
        spectrum = np.fft.fft(log_values) / size

        half = size // 2
        indices = np.fft.fftfreq(size, d=1.0 / size).astype(int)
        near_nyquist = np.abs(indices) >= (3 * size) // 8
        if np.max(np.abs(spectrum[near_nyquist])) > max(tol, 1e3 * np.finfo(float).eps):
            ratio = float(np.max(np.abs(spectrum[near_nyquist])) / np.max(np.abs(spectrum)))
            raise NoDecayException(side="malla", ratio=ratio)

        coeffs = {int(n): complex(c) for n, c in zip(indices, spectrum) if n != -half}
        return self.build_symbol_from_log_coeffs(CoefficientTable.from_mapping(coeffs), tol=tol)

    def fourier_coefficients(self, symbol: Symbol, n_min: int, n_max: int) -> CoefficientTable:
        """
        Calcula c_n[f] para n en [n_min, n_max] por FFT de exp(ln f) sobre |z|=1,
        doblando la malla hasta que dos resultados sucesivos coincidan a la tolerancia.

        Args:
            symbol: Símbolo
            n_min: Primer índice
            n_max: Último índice

        Returns:
            CoefficientTable con los coeficientes pedidos
        """
        if n_min > n_max:
            raise ValidationException(f"Rango de coeficientes vacío: [{n_min}, {n_max}]")

        reach = max(abs(n_min), abs(n_max))
        size = 16
        while size < 2 * reach + 4 * symbol.K + 16:
            size *= 2

        indices = np.arange(n_min, n_max + 1)
        previous = self._fft_coefficients(symbol, size, indices)
        while True:
            size *= 2
            current = self._fft_coefficients(symbol, size, indices)
            change = float(np.max(np.abs(current - previous))) if indices.size else 0.0
            previous = current
            if change < symbol.tol or size >= MAX_FFT_SIZE:
                if change >= symbol.tol:
                    logger.warning("coeficientes_sin_convergencia", size=size, change=change)
                break

        return CoefficientTable(offset=n_min, values=current)

    def winding_number(self, f_values: SampleSource, tol: Optional[float] = None) -> int:
        """
        Índice de giro de f sobre la circunferencia unidad (incremento del argumento / 2π).

        Args:
            f_values: Muestras sobre una malla uniforme, o una función evaluable
                      (en ese caso la malla se refina hasta pasos de fase < π/2)

        Returns:
            Índice de giro entero

        Raises:
            VanishingSymbolException: Si alguna muestra está por debajo de la tolerancia
        """
        tol = self._tol if tol is None else tol

        if callable(f_values):
            size = 64
            while True:
                values = np.asarray(f_values(unit_circle_grid(size)), dtype=complex)
                steps = self._phase_steps(values, tol)
                if np.max(np.abs(steps)) < np.pi / 2 or size >= MAX_FFT_SIZE:
                    break
                size *= 2
        else:
            values = np.asarray(f_values, dtype=complex).reshape(-1)
            steps = self._phase_steps(values, tol)
            if steps.size and np.max(np.abs(steps)) >= np.pi / 2:
                logger.warning("malla_de_giro_gruesa", max_step=float(np.max(np.abs(steps))))

        return int(round(float(np.sum(steps)) / (2 * np.pi)))

    def _phase_steps(self, values: np.ndarray, tol: float) -> np.ndarray:
        if values.size == 0:
            return values.real
        min_modulus = float(np.min(np.abs(values)))
        if min_modulus <= tol:
            raise VanishingSymbolException(min_modulus, tol)
        return np.angle(np.roll(values, -1) / values)

    def _fft_coefficients(self, symbol: Symbol, size: int, indices: np.ndarray) -> np.ndarray:
        spectrum = np.fft.fft(symbol.evaluate(unit_circle_grid(size))) / size
        return spectrum[np.mod(indices, size)]

    @staticmethod
    def _side_magnitudes(coeffs: CoefficientTable, sign: int) -> np.ndarray:
        """|c_{±1}|, |c_{±2}|, ... hasta el extremo de la tabla en ese lado."""
        end = coeffs.n_max if sign > 0 else -coeffs.n_min
        if end < 1:
            return np.zeros(0)
        return np.abs(np.array([coeffs.get(sign * n) for n in range(1, end + 1)], dtype=complex))

    def _truncation_order(self, magnitudes: np.ndarray, tol: float, side: str) -> int:
        """Menor K con max_{n>K} |c_n| < tol, acotado por max_truncation."""
        above = np.nonzero(magnitudes >= tol)[0]
        order = int(above[-1]) + 1 if above.size else 0
        if order > self._max_truncation:
            tail = float(np.max(magnitudes[self._max_truncation:]))
            raise NoDecayException(side=side, ratio=tail)
        return order

    def _fit_radius(self, magnitudes: np.ndarray, side: str) -> float:
        """
        Radio de convergencia por mínimos cuadrados de log|c_n| sobre la mitad final
        del rango retenido. Devuelve inf si no hay datos suficientes para ajustar.
        """
        start = magnitudes.size // 2
        n = np.arange(1, magnitudes.size + 1)[start:]
        tail = magnitudes[start:]
        mask = tail > 0
        if np.count_nonzero(mask) < MIN_FIT_POINTS:
            return math.inf
        slope, _ = np.polyfit(n[mask], np.log(tail[mask]), 1)
        ratio = math.exp(slope)
        if ratio >= NO_DECAY_RATIO:
            raise NoDecayException(side=side, ratio=ratio)
        return 1.0 / ratio
