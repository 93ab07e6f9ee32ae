import numpy as np
import pytest

from src.domain.exceptions.domain_exceptions import OutsideDomainException, ValidationException
from src.domain.services.symbol_service import unit_circle_grid
from tests.conftest import A, B


def test_factorization_splits_log_coefficients(tridiagonal_fact, tridiagonal_symbol):
    assert tridiagonal_fact.plus_coeffs[1] == pytest.approx(-A)
    assert tridiagonal_fact.minus_coeffs[0] == pytest.approx(B)
    assert tridiagonal_fact.annulus == tridiagonal_symbol.annulus


def test_alpha_branches_of_tridiagonal(wiener_hopf_service, tridiagonal_fact):
    z = 0.5 * unit_circle_grid(16)
    assert np.allclose(wiener_hopf_service.alpha_interior(tridiagonal_fact, z), 1 / (1 + A * z), atol=1e-13)
    w = 1.5 * unit_circle_grid(16)
    assert np.allclose(wiener_hopf_service.alpha_exterior(tridiagonal_fact, w), 1 + B / w, atol=1e-13)


def test_exterior_branch_tends_to_one_at_infinity(wiener_hopf_service, tridiagonal_fact):
    assert wiener_hopf_service.alpha_exterior(tridiagonal_fact, 1e8) == pytest.approx(1.0, abs=1e-8)


def test_scalar_evaluation_returns_complex(wiener_hopf_service, tridiagonal_fact):
    value = wiener_hopf_service.alpha_interior(tridiagonal_fact, 0.0)
    assert isinstance(value, complex)
    assert value == pytest.approx(1.0)


def test_branches_reject_points_outside_domain(wiener_hopf_service, tridiagonal_fact):
    with pytest.raises(OutsideDomainException):
        wiener_hopf_service.alpha_interior(tridiagonal_fact, 3.0)
    with pytest.raises(OutsideDomainException):
        wiener_hopf_service.alpha_exterior(tridiagonal_fact, 0.2)


@pytest.mark.parametrize("name", ["identity", "tridiagonal", "bessel"])
def test_jump_relation_holds_on_unit_circle(wiener_hopf_service, corpus, name):
    symbol = corpus[name]
    fact = wiener_hopf_service.factorize(symbol)
    assert wiener_hopf_service.verify_jump(fact, symbol) < 1e-12


def test_jump_grid_must_be_reasonable(wiener_hopf_service, identity_fact, identity_symbol):
    with pytest.raises(ValidationException):
        wiener_hopf_service.verify_jump(identity_fact, identity_symbol, grid_size=4)


def test_identity_branches_are_one(wiener_hopf_service, identity_fact):
    z = 0.3 * unit_circle_grid(8)
    assert np.allclose(wiener_hopf_service.alpha_interior(identity_fact, z), 1.0)
    assert np.allclose(wiener_hopf_service.alpha_exterior(identity_fact, 1 / z), 1.0)


def test_reflected_factorization_matches_reflected_symbol(wiener_hopf_service, tridiagonal_fact, tridiagonal_symbol):
    reflected = tridiagonal_fact.reflected()
    direct = wiener_hopf_service.factorize(tridiagonal_symbol.reflected())
    assert np.allclose(reflected.plus_coeffs, direct.plus_coeffs, atol=1e-15)
    assert np.allclose(reflected.minus_coeffs, direct.minus_coeffs, atol=1e-15)
    w = 0.8 * np.exp(1j * np.linspace(0, 6, 7))
    assert np.allclose(wiener_hopf_service.alpha_interior(reflected, w), 1 / (1 + B * w), atol=1e-13)
    assert np.allclose(wiener_hopf_service.alpha_exterior(reflected, w), 1 + A / w, atol=1e-13)
    assert reflected.r_minus == pytest.approx(1 / tridiagonal_fact.r_plus)
