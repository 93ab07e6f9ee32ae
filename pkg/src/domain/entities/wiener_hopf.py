"""
Entidad Factorización de Wiener-Hopf escalar.

alpha(z) = exp(-sum_{n>=0} c_n[ln f] z^n)   para |z| < 1 (rama interior, alpha_+)
alpha(z) = exp( sum_{n>=1} c_{-n}[ln f] z^-n) para |z| > 1 (rama exterior, alpha_-)

con salto alpha_- = f * alpha_+ sobre la circunferencia unidad y alpha(inf) = 1.
"""

from dataclasses import dataclass
from typing import Tuple

import numpy as np


@dataclass(frozen=True, eq=False)
class WienerHopfFactorization:
    """
    plus_coeffs[n] es el coeficiente de z^n del exponente interior (n >= 0);
    minus_coeffs[n-1] es el coeficiente de z^-n del exponente exterior (n >= 1).
    """

    plus_coeffs: np.ndarray
    minus_coeffs: np.ndarray
    annulus: Tuple[float, float]

    def __post_init__(self):
        plus = np.asarray(self.plus_coeffs, dtype=complex).reshape(-1)
        minus = np.asarray(self.minus_coeffs, dtype=complex).reshape(-1)
        if plus.size == 0:
            plus = np.zeros(1, dtype=complex)
        object.__setattr__(self, "plus_coeffs", plus)
        object.__setattr__(self, "minus_coeffs", minus)

    @property
    def r_minus(self) -> float:
        return self.annulus[0]

    @property
    def r_plus(self) -> float:
        return self.annulus[1]

    def interior_exponent(self, z) -> np.ndarray:
        z = np.asarray(z, dtype=complex)
        return np.polynomial.polynomial.polyval(z, self.plus_coeffs)

    def exterior_exponent(self, z) -> np.ndarray:
        z = np.asarray(z, dtype=complex)
        if self.minus_coeffs.size == 0:
            return np.zeros(z.shape, dtype=complex)
        w = 1.0 / z
        return w * np.polynomial.polynomial.polyval(w, self.minus_coeffs)

    def reflected(self) -> "WienerHopfFactorization":
        """
        Factorización de z -> f(1/z): c_0 y c_{-n} pasan a la rama interior,
        c_n (n >= 1) a la exterior.
        """
        r_minus, r_plus = self.annulus
        annulus = (1.0 / r_plus if np.isfinite(r_plus) else 0.0, 1.0 / r_minus if r_minus > 0 else np.inf)
        return WienerHopfFactorization(
            plus_coeffs=np.concatenate([self.plus_coeffs[:1], -self.minus_coeffs]),
            minus_coeffs=-self.plus_coeffs[1:],
            annulus=annulus,
        )
