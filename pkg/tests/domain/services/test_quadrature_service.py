import numpy as np
import pytest

from src.domain.entities.correction import QuadratureConfig
from src.domain.exceptions.domain_exceptions import EqualRadiiException, NoConvergenceException
from src.domain.services.quadrature_service import QuadratureService, circle_nodes


def test_circle_nodes_lie_on_circle():
    nodes = circle_nodes(0.7, 16)
    assert np.allclose(np.abs(nodes), 0.7)
    assert nodes[0] == pytest.approx(0.7)


def test_residue_of_simple_pole(quadrature_service, quad_config):
    value, report = quadrature_service.circle_quadrature_with_report(lambda z: 1 / z, 0.5, quad_config)
    assert value == pytest.approx(1.0, abs=1e-14)
    assert report.converged
    assert report.nodes == 2 * quad_config.nodes


def test_taylor_coefficient_from_contour(quadrature_service, quad_config):
    value = quadrature_service.circle_quadrature(lambda z: np.exp(z) / z ** 3, 1.0, quad_config)
    assert value == pytest.approx(0.5, abs=1e-13)


def test_slow_integrand_is_reported_not_converged(quadrature_service):
    config = QuadratureConfig(nodes=4, max_doublings=2)
    value, report = quadrature_service.circle_quadrature_with_report(lambda z: 1 / (z - 0.999), 1.0, config)
    assert not report.converged
    assert report.nodes == 16
    assert np.isfinite(value)


def test_strict_service_raises_on_no_convergence():
    config = QuadratureConfig(nodes=4, max_doublings=2)
    with pytest.raises(NoConvergenceException) as info:
        QuadratureService(strict=True).circle_quadrature_with_report(
            lambda z: 1 / (z - 0.999), 1.0, config, entry=(1, 2)
        )
    assert info.value.nodes == 16
    assert info.value.entry == (1, 2)


def test_double_quadrature_respects_contour_order(quadrature_service, quad_config):
    def integrand(z, s):
        return 1 / ((z - s) * s)

    # |s| < |z|: solo el residuo en s = 0
    inner, report = quadrature_service.double_circle_quadrature_with_report(integrand, 0.8, 0.4, quad_config)
    # |s| > |z|: el residuo en s = z lo cancela
    outer = quadrature_service.double_circle_quadrature(integrand, 0.4, 0.8, quad_config)
    assert inner == pytest.approx(1.0, abs=1e-12)
    assert outer == pytest.approx(0.0, abs=1e-12)
    assert report.converged


def test_double_quadrature_rejects_equal_radii(quadrature_service, quad_config):
    with pytest.raises(EqualRadiiException):
        quadrature_service.double_circle_quadrature(lambda z, s: z * s, 0.5, 0.5, quad_config)


def test_double_quadrature_caps_tensor_grid(quadrature_service):
    config = QuadratureConfig(nodes=4096, max_doublings=3)
    _, report = quadrature_service.double_circle_quadrature_with_report(
        lambda z, s: 1 / ((z - s) * s), 0.8, 0.4, config
    )
    assert report.nodes <= 2048


def test_cancelling_integrand_is_not_reported_converged(quadrature_service, quad_config):
    # el valor exacto es 1, pero z^-31 sobre |z| = 0.1 vale 1e31 en cada nodo
    value, report = quadrature_service.circle_quadrature_with_report(
        lambda z: 1 / z + z ** -31.0, 0.1, quad_config
    )
    assert not report.converged
    assert np.isfinite(value)


def test_strict_service_raises_on_cancellation(quad_config):
    with pytest.raises(NoConvergenceException):
        QuadratureService(strict=True).double_circle_quadrature_with_report(
            lambda z, s: z ** -40.0 / (z - s), 0.1, 0.05, quad_config, entry=(0, 0)
        )


def test_zero_integral_of_moderate_integrand_still_converges(quadrature_service, quad_config):
    value, report = quadrature_service.circle_quadrature_with_report(lambda z: z ** 3, 0.9, quad_config)
    assert value == pytest.approx(0.0, abs=1e-14)
    assert report.converged
