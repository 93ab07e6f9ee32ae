"""
Servicio de factorización de Wiener-Hopf escalar del símbolo.
"""

import numpy as np
import structlog

from ..entities.symbol import Symbol
from ..entities.wiener_hopf import WienerHopfFactorization
from ..exceptions.domain_exceptions import OutsideDomainException, ValidationException
from .symbol_service import unit_circle_grid

logger = structlog.get_logger(__name__)


class WienerHopfService:
    """Construye y evalúa las ramas interior/exterior de alpha."""

    def factorize(self, symbol: Symbol) -> WienerHopfFactorization:
        """
        Reparte los coeficientes de ln f: c_0, c_1, ... (con signo menos) van a la
        rama interior y c_{-1}, c_{-2}, ... a la exterior, de modo que alpha(inf) = 1.
        """
        return WienerHopfFactorization(
            plus_coeffs=-symbol.positive_log_coeffs,
            minus_coeffs=symbol.negative_log_coeffs.copy(),
            annulus=symbol.annulus,
        )

    def log_alpha_interior(self, fact: WienerHopfFactorization, z) -> np.ndarray:
        z = np.asarray(z, dtype=complex)
        outside = np.abs(z) >= fact.r_plus
        if np.any(outside):
            raise OutsideDomainException(complex(z[outside].flat[0]), fact.r_plus, "interior")
        return fact.interior_exponent(z)

    def log_alpha_exterior(self, fact: WienerHopfFactorization, z) -> np.ndarray:
        z = np.asarray(z, dtype=complex)
        outside = np.abs(z) <= fact.r_minus
        if np.any(outside):
            raise OutsideDomainException(complex(z[outside].flat[0]), fact.r_minus, "exterior")
        return fact.exterior_exponent(z)

    def alpha_interior(self, fact: WienerHopfFactorization, z):
        """
        alpha_+ (rama interior) continuada hasta |z| < r_plus.

        Raises:
            OutsideDomainException: Si |z| >= r_plus
        """
        value = np.exp(self.log_alpha_interior(fact, z))
        return complex(value) if np.ndim(value) == 0 else value

    def alpha_exterior(self, fact: WienerHopfFactorization, z):
        """
        alpha_- (rama exterior) continuada hasta |z| > r_minus.

        Raises:
            OutsideDomainException: Si |z| <= r_minus
        """
        value = np.exp(self.log_alpha_exterior(fact, z))
        return complex(value) if np.ndim(value) == 0 else value

    def verify_jump(self, fact: WienerHopfFactorization, symbol: Symbol, grid_size: int = 256) -> float:
        """
        Residuo relativo del salto alpha_- = f * alpha_+ sobre una malla de |z| = 1.

        Returns:
            max_j |alpha_-(z_j) - f(z_j) alpha_+(z_j)| / |alpha_-(z_j)|
        """
        if grid_size < 8:
            raise ValidationException(f"La malla debe tener al menos 8 puntos, recibido {grid_size}")
        z = unit_circle_grid(grid_size)
        alpha_minus = np.exp(self.log_alpha_exterior(fact, z))
        alpha_plus = np.exp(self.log_alpha_interior(fact, z))
        residual = np.abs(alpha_minus - symbol.evaluate(z) * alpha_plus) / np.abs(alpha_minus)
        value = float(np.max(residual))
        logger.debug("residuo_de_salto", grid_size=grid_size, residual=value)
        return value
