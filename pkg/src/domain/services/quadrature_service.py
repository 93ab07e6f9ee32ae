"""
Servicio de cuadratura trapezoidal sobre circunferencias centradas en el origen.

Para g analítica cerca de |z| = rho,
    (1/2iπ) ∮ g(z) dz  ≈  (1/n) sum_j g(z_j) z_j,   z_j = rho exp(2iπ j/n),
con convergencia geométrica en n. El número de nodos se dobla hasta que el
cambio, relativo al módulo medio del integrando, baja de la tolerancia; si ese
módulo medio es tan grande que el redondeo domina el valor, la cuadratura se
informa sin convergencia.
"""

from typing import Callable, Optional, Tuple

import numpy as np
import structlog

from ..entities.correction import QuadratureConfig, QuadratureReport
from ..exceptions.domain_exceptions import EqualRadiiException, NoConvergenceException

logger = structlog.get_logger(__name__)

Integrand = Callable[[np.ndarray], np.ndarray]
DoubleIntegrand = Callable[[np.ndarray, np.ndarray], np.ndarray]

# nodos por eje de la malla producto (la malla ocupa MAX_TENSOR_NODES^2 complejos)
MAX_TENSOR_NODES = 2048
# precisión relativa mínima exigible cuando el integrando es mucho mayor que la integral
ROUNDOFF_FLOOR = 1e-8


def circle_nodes(radius: float, size: int) -> np.ndarray:
    return radius * np.exp(2j * np.pi * np.arange(size) / size)


class QuadratureService:
    """Integrales (1/2iπ)∮ y (1/2iπ)^2 ∮∮ por la regla trapezoidal con doblado de nodos."""

    def __init__(self, strict: bool = False):
        # strict: lanzar NoConvergenceException en lugar de solo informar
        self._strict = strict

    def circle_quadrature(self, integrand: Integrand, radius: float, config: QuadratureConfig) -> complex:
        value, _ = self.circle_quadrature_with_report(integrand, radius, config)
        return value

    def circle_quadrature_with_report(
        self,
        integrand: Integrand,
        radius: float,
        config: QuadratureConfig,
        entry: Optional[object] = None,
    ) -> Tuple[complex, QuadratureReport]:
        """
        (1/2iπ) ∮_{|z|=radius} g(z) dz.

        Returns:
            Valor y QuadratureReport (nodos usados, último cambio relativo)
        """

        def evaluate(size: int) -> Tuple[complex, float]:
            z = circle_nodes(radius, size)
            weighted = np.asarray(integrand(z), dtype=complex) * z
            return complex(np.mean(weighted)), float(np.mean(np.abs(weighted)))

        return self._refine(evaluate, config, entry)

    def double_circle_quadrature(
        self,
        integrand: DoubleIntegrand,
        radius_z: float,
        radius_s: float,
        config: QuadratureConfig,
    ) -> complex:
        value, _ = self.double_circle_quadrature_with_report(integrand, radius_z, radius_s, config)
        return value

    def double_circle_quadrature_with_report(
        self,
        integrand: DoubleIntegrand,
        radius_z: float,
        radius_s: float,
        config: QuadratureConfig,
        entry: Optional[object] = None,
    ) -> Tuple[complex, QuadratureReport]:
        """
        (1/2iπ)^2 ∮_{|z|=radius_z} ∮_{|s|=radius_s} g(z, s) ds dz por producto tensorial.

        El integrando recibe z con forma (n, 1) y s con forma (1, n).

        Raises:
            EqualRadiiException: Si radius_z == radius_s
        """
        if radius_z == radius_s:
            raise EqualRadiiException(radius_z)

        def evaluate(size: int) -> Tuple[complex, float]:
            z = circle_nodes(radius_z, size)[:, None]
            s = circle_nodes(radius_s, size)[None, :]
            weighted = np.asarray(integrand(z, s), dtype=complex) * z * s
            return complex(np.mean(weighted)), float(np.mean(np.abs(weighted)))

        return self._refine(evaluate, config, entry, limit=MAX_TENSOR_NODES)

    def _refine(
        self,
        evaluate,
        config: QuadratureConfig,
        entry,
        limit: Optional[int] = None,
    ) -> Tuple[complex, QuadratureReport]:
        size = config.nodes if limit is None else min(config.nodes, limit // 2)
        previous, _ = evaluate(size)
        change = np.inf
        for _ in range(max(config.max_doublings, 1)):
            if limit is not None and size * 2 > limit:
                break
            size *= 2
            value, scale = evaluate(size)
            change = abs(value - previous) / scale if scale > 0 else abs(value - previous)
            previous = value
            if change < config.tol:
                if self._cancels(value, scale, config):
                    break
                return value, QuadratureReport(nodes=size, change=change, converged=True)

        error = NoConvergenceException(size, change, config.tol, entry)
        if self._strict:
            raise error
        logger.warning("cuadratura_sin_convergencia", nodes=size, change=change, entry=entry)
        return previous, QuadratureReport(nodes=size, change=change, converged=False)

    @staticmethod
    def _cancels(value: complex, scale: float, config: QuadratureConfig) -> bool:
        """El redondeo eps * scale supera la tolerancia sobre max(|value|, 1)."""
        roundoff = np.finfo(float).eps * scale
        limit = max(config.tol, ROUNDOFF_FLOOR) * max(abs(value), 1.0)
        if roundoff <= limit:
            return False
        logger.warning("cuadratura_con_cancelacion", roundoff=roundoff, value=abs(value))
        return True
