"""
Fixtures compartidas: servicios y el corpus de símbolos de prueba.

    identidad:    f(z) = 1
    tridiagonal:  f(z) = (1 + 0.4 z)(1 + 0.3/z)
    bessel:       f(z) = exp(0.25 (z + 1/z))
"""
import json

import numpy as np
import pytest

from src.domain.entities.correction import QuadratureConfig
from src.domain.entities.symbol import CoefficientTable
from src.domain.services.asymptotics_service import AsymptoticsService
from src.domain.services.lacunary_service import LacunaryService
from src.domain.services.linalg_service import LinalgService
from src.domain.services.quadrature_service import QuadratureService
from src.domain.services.symbol_service import SymbolService
from src.domain.services.wiener_hopf_service import WienerHopfService

A = 0.4
B = 0.3
AB = A * B


def tridiagonal_log_coeffs(a: float = A, b: float = B, order: int = 60) -> dict:
    coeffs = {0: 0.0}
    for n in range(1, order + 1):
        coeffs[n] = -((-a) ** n) / n
        coeffs[-n] = -((-b) ** n) / n
    return coeffs


def plain_tridiagonal_det(N: int) -> float:
    """D_N = det_N[c_{a-b}] para (1 + a z)(1 + b/z): (1 - (ab)^{N+1}) / (1 - ab)."""
    return (1.0 - AB ** (N + 1)) / (1.0 - AB)


@pytest.fixture
def symbol_service():
    return SymbolService()


@pytest.fixture
def linalg_service():
    return LinalgService()


@pytest.fixture
def wiener_hopf_service():
    return WienerHopfService()


@pytest.fixture
def quadrature_service():
    return QuadratureService()


@pytest.fixture
def lacunary_service(symbol_service, linalg_service):
    return LacunaryService(symbol_service, linalg_service)


@pytest.fixture
def asymptotics_service(wiener_hopf_service, symbol_service, linalg_service, quadrature_service, lacunary_service):
    return AsymptoticsService(
        wiener_hopf_service,
        symbol_service,
        linalg_service,
        quadrature_service,
        lacunary_service,
    )


@pytest.fixture
def quad_config():
    return QuadratureConfig()


@pytest.fixture
def identity_symbol(symbol_service):
    return symbol_service.build_symbol_from_log_coeffs(CoefficientTable.from_mapping({0: 0.0}))


@pytest.fixture
def tridiagonal_symbol(symbol_service):
    return symbol_service.build_symbol_from_log_coeffs(CoefficientTable.from_mapping(tridiagonal_log_coeffs()))


@pytest.fixture
def bessel_symbol(symbol_service):
    return symbol_service.build_symbol_from_log_coeffs(CoefficientTable.from_mapping({-1: 0.25, 0: 0.0, 1: 0.25}))


@pytest.fixture
def corpus(identity_symbol, tridiagonal_symbol, bessel_symbol):
    return {"identity": identity_symbol, "tridiagonal": tridiagonal_symbol, "bessel": bessel_symbol}


@pytest.fixture
def tridiagonal_fact(wiener_hopf_service, tridiagonal_symbol):
    return wiener_hopf_service.factorize(tridiagonal_symbol)


@pytest.fixture
def identity_fact(wiener_hopf_service, identity_symbol):
    return wiener_hopf_service.factorize(identity_symbol)


@pytest.fixture
def write_symbol(tmp_path):
    """Escribe un archivo JSON de símbolo y devuelve su ruta."""

    def _write(payload, name="symbol.json"):
        path = tmp_path / name
        path.write_text(payload if isinstance(payload, str) else json.dumps(payload), encoding="utf-8")
        return str(path)

    return _write


@pytest.fixture
def tridiagonal_file(write_symbol):
    coeffs = {str(n): [c, 0.0] for n, c in tridiagonal_log_coeffs().items()}
    return write_symbol({"log_coeffs": coeffs}, "tridiagonal.json")


@pytest.fixture
def identity_file(write_symbol):
    return write_symbol({"log_coeffs": {"0": [0.0, 0.0]}}, "identity.json")


@pytest.fixture
def white_noise_file(write_symbol):
    """ln f sin decaimiento: c_n = 0.5 exp(i n^2), |n| <= 40."""
    coeffs = {str(n): [0.5 * np.cos(n * n), 0.5 * np.sin(n * n)] for n in range(-40, 41)}
    return write_symbol({"log_coeffs": coeffs}, "noise.json")
