"""
Servicio de asintótica de determinantes de Toeplitz lacunarios.

Construye las matrices de corrección cuyo determinante aproxima, con error
exponencialmente pequeño en N, el cociente det_N[c_{l_a - m_b}[f]] / det_N[c_{a-b}[f]]:

- M (solo líneas), integrales dobles sobre |z| = eta_z, |s| = eta_s o sus recíprocos
- M^(+) y M^(-), versión desacoplada para líneas ancladas a los bordes
- N (líneas y columnas), a partir del resolvente aproximado R00
- N^(+) y N^(-), versión desacoplada para líneas y columnas ancladas

Todas las potencias se evalúan como exp(m ln s + q ln z) junto con los logaritmos
de alpha, y los radios se acercan a la circunferencia unidad cuando un monomio
crecería más de exp(max_log_growth) sobre el contorno.
"""

import math
from dataclasses import replace
from functools import partial
from typing import Callable, List, Optional, Tuple

import numpy as np
import structlog

from ..entities.correction import (
    AsymptoticRatio,
    CorrectionKind,
    CorrectionMatrix,
    QuadratureConfig,
    QuadratureReport,
    RatioMethod,
)
from ..entities.lacunary import EdgeSide, LacunarySpec, LacunarySplit
from ..entities.matrix import ComplexMatrix
from ..entities.perturbation import Factor, PerturbationBasis, UTerm, VTerm
from ..entities.symbol import CoefficientTable, Symbol
from ..entities.wiener_hopf import WienerHopfFactorization
from ..exceptions.domain_exceptions import (
    CoincidentPointsException,
    ExactlySingularException,
    MethodNotApplicableException,
    MixedAnchorException,
    QuadratureException,
    RadiiOutsideAnnulusException,
)
from .lacunary_service import LacunaryService
from .linalg_service import LinalgService
from .quadrature_service import MAX_TENSOR_NODES, QuadratureService
from .symbol_service import SymbolService
from .wiener_hopf_service import WienerHopfService

logger = structlog.get_logger(__name__)

ETA_MIN = 0.5
COINCIDENT_TOL = 1e-12
TWO_PI_I = 2j * math.pi


def _next_power_of_two(value: int) -> int:
    return 1 << max(int(value) - 1, 1).bit_length()


class AsymptoticsService:
    """Matrices de corrección asintótica y línea base de Szegő."""

    def __init__(
        self,
        wiener_hopf_service: WienerHopfService,
        symbol_service: SymbolService,
        linalg_service: LinalgService,
        quadrature_service: QuadratureService,
        lacunary_service: LacunaryService,
        max_log_growth: float = math.log(1e4),
        singular_condition: float = 1e12,
    ):
        self._wh = wiener_hopf_service
        self._symbols = symbol_service
        self._linalg = linalg_service
        self._quadrature = quadrature_service
        self._lacunary = lacunary_service
        self._max_log_growth = max_log_growth
        self._singular_condition = singular_condition

    # ------------------------------------------------------------------ #
    # Núcleo del resolvente aproximado
    # ------------------------------------------------------------------ #

    def resolvent_kernel_r00(
        self,
        fact: WienerHopfFactorization,
        symbol: Symbol,
        N: int,
        z,
        s,
    ):
        """
        R00(z, s) = (f(z) - 1)/(2iπ) * [ (z/s)^{N/2} a+(s)/a-(z) - (s/z)^{N/2} a+(z)/a-(s) ] / (z - s)

        z y s pueden ser escalares o arrays compatibles por broadcasting.

        Raises:
            CoincidentPointsException: Si |z - s| es despreciable en algún punto
        """
        z = np.asarray(z, dtype=complex)
        s = np.asarray(s, dtype=complex)
        coincident = np.abs(z - s) <= COINCIDENT_TOL * np.maximum(1.0, np.maximum(np.abs(z), np.abs(s)))
        if np.any(coincident):
            z_all, s_all = np.broadcast_arrays(z, s)
            raise CoincidentPointsException(complex(z_all[coincident].flat[0]), complex(s_all[coincident].flat[0]))

        half_power = 0.5 * N * (np.log(z) - np.log(s))
        value = self._paired_r00(fact, z, s, symbol.evaluate(z) - 1.0, half_power, -half_power) / TWO_PI_I
        return complex(value) if np.ndim(value) == 0 else value

    def _paired_r00(self, fact: WienerHopfFactorization, z, s, symbol_minus_one, near, far=None):
        """
        (f(z) - 1) [a+(s)/a-(z) e^near - a+(z)/a-(s) e^far] / (z - s), sin el factor 1/2iπ.

        near y far son los logaritmos de las potencias que acompañan a cada término;
        far = None omite el segundo término.
        """
        bracket = np.exp(self._wh.log_alpha_interior(fact, s) - self._wh.log_alpha_exterior(fact, z) + near)
        if far is not None:
            bracket = bracket - np.exp(
                self._wh.log_alpha_interior(fact, z) - self._wh.log_alpha_exterior(fact, s) + far
            )
        return symbol_minus_one * bracket / (z - s)

    # ------------------------------------------------------------------ #
    # Matrices de líneas
    # ------------------------------------------------------------------ #

    def line_correction_matrix(
        self,
        fact: WienerHopfFactorization,
        spec: LacunarySpec,
        config: QuadratureConfig,
    ) -> CorrectionMatrix:
        """
        Matriz M de n x n para datos solo de líneas:
            p_a >= N+1:  M_ab = -∮∮ a+(z)/a+(s) s^{N-p_a} z^{h_b-N-1} / (z-s)   (|s| < |z| < 1)
            p_a <= 0:    M_ab = +∮∮ a-(s)/a-(z) s^{-p_a} z^{h_b-1} / (z-s)      (1 < |z| < |s|)

        Raises:
            MethodNotApplicableException: Si la especificación tiene columnas
            RadiiOutsideAnnulusException: Si los radios explícitos salen de la corona
        """
        if spec.r:
            raise MethodNotApplicableException("line", "la matriz M solo admite líneas (r = 0)")
        self._check_explicit_radii(fact, config)

        N = spec.N
        entries = np.zeros((spec.n, spec.n), dtype=complex)
        report = QuadratureReport()
        for a, (_, p) in enumerate(spec.lines):
            for b, (h, _) in enumerate(spec.lines):
                if p >= N + 1:
                    value, entry_report = self._interior_entry(fact, N - p, h - N - 1, config, (a, b))
                else:
                    value, entry_report = self._exterior_entry(fact, -p, h - 1, config, (a, b))
                entries[a, b] = value
                report = report.merge(entry_report)

        return self._correction(CorrectionKind.LINE_M, entries, report, self._base_radii(fact, config))

    def corollary_matrices(
        self,
        fact: WienerHopfFactorization,
        split: LacunarySplit,
        config: QuadratureConfig,
    ) -> Tuple[CorrectionMatrix, CorrectionMatrix]:
        """
        M^(+)_ab = -∮∮ s^{-p+_a} z^{-h+_b} / (z-s) * a+(z)/a+(s)    (|s| < |z| < 1)
        M^(-)_ab = +∮∮ s^{p-_a - 1} z^{h-_b - 1} / (z-s) * a-(s)/a-(z)  (1 < |z| < |s|)

        Ambas independientes de N.

        Returns:
            (M^(+), M^(-))
        """
        if split.plus.r or split.minus.r:
            raise MethodNotApplicableException("corollary", "las matrices M^(±) solo admiten líneas")
        self._check_explicit_radii(fact, config)
        radii = self._base_radii(fact, config)

        plus = np.zeros((split.plus.n, split.plus.n), dtype=complex)
        plus_report = QuadratureReport()
        for a, (_, p) in enumerate(split.plus.lines):
            for b, (h, _) in enumerate(split.plus.lines):
                plus[a, b], entry_report = self._interior_entry(fact, -p, -h, config, ("+", a, b))
                plus_report = plus_report.merge(entry_report)

        minus = np.zeros((split.minus.n, split.minus.n), dtype=complex)
        minus_report = QuadratureReport()
        for a, (_, p) in enumerate(split.minus.lines):
            for b, (h, _) in enumerate(split.minus.lines):
                minus[a, b], entry_report = self._exterior_entry(fact, p - 1, h - 1, config, ("-", a, b))
                minus_report = minus_report.merge(entry_report)

        return (
            self._correction(CorrectionKind.COROLLARY_PLUS, plus, plus_report, radii),
            self._correction(CorrectionKind.COROLLARY_MINUS, minus, minus_report, radii),
        )

    # ------------------------------------------------------------------ #
    # Matriz general N
    # ------------------------------------------------------------------ #

    def general_correction_matrix(
        self,
        fact: WienerHopfFactorization,
        symbol: Symbol,
        spec: LacunarySpec,
        config: QuadratureConfig,
    ) -> CorrectionMatrix:
        """
        Matriz N de (n+r) x (n+r) por bloques:
            N_{A;B}[a, b] = delta + ∮ U_{A;a}(z) v_{B;b}(z) dz,   U = (I - R00)[u]

        Para cada término g s^{N/2-x}/2iπ de u y sign z^{y-N/2-1} de v, la parte
        sin resolvente es sign * c_{x-y}[g]; la parte con R00 es una integral doble
        con z en |z| = 1 y s desplazado a |s| = rho < 1 (la singularidad en s = z es evitable).
        """
        basis = PerturbationBasis.from_spec(spec)
        if basis.size == 0:
            return self._correction(CorrectionKind.GENERAL_N, np.zeros((0, 0), dtype=complex), QuadratureReport(), ())
        self._check_explicit_radii(fact, config)

        N = spec.N
        x_values, y_values = self._basis_exponents(basis)
        rho = self._inner_radius(fact, config, max(max(x_values), 0))
        entry_config = self._with_min_nodes(config, N + max(abs(v) for v in x_values + y_values))
        coeffs = self._symbols.fourier_coefficients(
            symbol, min(x_values) - max(y_values), max(x_values) - min(y_values)
        )

        entries, report = self._perturbation_entries(fact, symbol.evaluate, basis, coeffs, N, rho, entry_config)
        logger.debug("matriz_general", N=N, size=basis.size, rho=rho, nodes=report.nodes)
        return self._correction(CorrectionKind.GENERAL_N, entries, report, (1.0, rho))

    # ------------------------------------------------------------------ #
    # Matrices épsilon
    # ------------------------------------------------------------------ #

    def epsilon_block_matrices(
        self,
        fact: WienerHopfFactorization,
        split: LacunarySplit,
        config: QuadratureConfig,
    ) -> Tuple[CorrectionMatrix, CorrectionMatrix]:
        """
        N^(+) con los datos del lado más y N^(-) con los del lado menos, ambos
        independientes de N.

        N^(-) son las entradas de N para h = h^-, p = 1 - p^-, t = t^-, k = 1 - k^-
        sin el término de R00 que acopla con el borde opuesto (de orden rho^N).
        N^(+) es la misma construcción para z -> f(1/z), que lleva el borde más
        al borde menos con h = h^+, p = 1 - p^+, t = t^+, k = 1 - k^+.

        Returns:
            (N^(+), N^(-))
        """
        self._check_explicit_radii(fact, config)
        plus = self._edge_matrix(fact.reflected(), split.plus, CorrectionKind.EPSILON_PLUS, config)
        minus = self._edge_matrix(fact, split.minus, CorrectionKind.EPSILON_MINUS, config)
        return plus, minus

    # ------------------------------------------------------------------ #
    # Línea base y despacho
    # ------------------------------------------------------------------ #

    def szego_log_asymptotics(self, symbol: Symbol, N: int) -> complex:
        """N c_0[ln f] + sum_{k>=1} k c_k[ln f] c_{-k}[ln f]."""
        positive = symbol.positive_log_coeffs
        negative = symbol.negative_log_coeffs
        K = min(positive.size - 1, negative.size)
        k = np.arange(1, K + 1)
        return complex(N * positive[0] + np.sum(k * positive[1 : K + 1] * negative[:K]))

    def asymptotic_ratio(
        self,
        fact: WienerHopfFactorization,
        symbol: Symbol,
        spec: LacunarySpec,
        config: QuadratureConfig,
        method: RatioMethod = RatioMethod.AUTO,
    ) -> complex:
        return self.asymptotic_ratio_details(fact, symbol, spec, config, method).value

    def asymptotic_ratio_details(
        self,
        fact: WienerHopfFactorization,
        symbol: Symbol,
        spec: LacunarySpec,
        config: QuadratureConfig,
        method: RatioMethod = RatioMethod.AUTO,
    ) -> AsymptoticRatio:
        """
        Determinante de la matriz de corrección adecuada (producto de dos para SPLIT).
        AUTO elige SPLIT si los datos están anclados a los bordes, si no GENERAL,
        y recurre a LINE si la matriz general no puede construirse.

        Raises:
            MethodNotApplicableException: LINE con columnas o SPLIT con anclaje mixto
        """
        method = RatioMethod(method)
        if spec.is_empty:
            return AsymptoticRatio(value=1.0 + 0j, method=method)

        if method is RatioMethod.AUTO:
            return self._auto_ratio(fact, symbol, spec, config)
        if method is RatioMethod.LINE:
            matrix = self.line_correction_matrix(fact, spec, config)
            return AsymptoticRatio(self._linalg.determinant_small(matrix.matrix), method, (matrix,))
        if method is RatioMethod.GENERAL:
            matrix = self.general_correction_matrix(fact, symbol, spec, config)
            return AsymptoticRatio(self._linalg.determinant_small(matrix.matrix), method, (matrix,))

        try:
            split = self._lacunary.split_edge_anchored(spec)
        except MixedAnchorException as exc:
            raise MethodNotApplicableException("split", str(exc)) from exc
        return self._split_ratio(fact, split, config)

    def _auto_ratio(
        self,
        fact: WienerHopfFactorization,
        symbol: Symbol,
        spec: LacunarySpec,
        config: QuadratureConfig,
    ) -> AsymptoticRatio:
        try:
            split = self._lacunary.split_edge_anchored(spec)
        except MixedAnchorException:
            split = None
        if split is not None:
            return self._split_ratio(fact, split, config)

        try:
            matrix = self.general_correction_matrix(fact, symbol, spec, config)
            return AsymptoticRatio(self._linalg.determinant_small(matrix.matrix), RatioMethod.GENERAL, (matrix,))
        except QuadratureException as exc:
            if spec.r:
                raise
            logger.warning("matriz_general_fallida", error=str(exc), fallback="line")
        matrix = self.line_correction_matrix(fact, spec, config)
        return AsymptoticRatio(self._linalg.determinant_small(matrix.matrix), RatioMethod.LINE, (matrix,))

    def _split_ratio(
        self,
        fact: WienerHopfFactorization,
        split: LacunarySplit,
        config: QuadratureConfig,
    ) -> AsymptoticRatio:
        if split.plus.r == 0 and split.minus.r == 0:
            plus, minus = self.corollary_matrices(fact, split, config)
        else:
            plus, minus = self.epsilon_block_matrices(fact, split, config)
        value = self._linalg.determinant_small(plus.matrix) * self._linalg.determinant_small(minus.matrix)
        return AsymptoticRatio(value, RatioMethod.SPLIT, (plus, minus))

    # ------------------------------------------------------------------ #
    # Integrales de entradas
    # ------------------------------------------------------------------ #

    def _interior_entry(
        self,
        fact: WienerHopfFactorization,
        s_exp: int,
        z_exp: int,
        config: QuadratureConfig,
        entry,
    ) -> Tuple[complex, QuadratureReport]:
        """-∮_{eta_z}∮_{eta_s} a+(z)/a+(s) s^s_exp z^z_exp / (z-s)."""
        growth = max(-s_exp, 0) + max(-z_exp, 0)
        eta_z, eta_s = self._entry_radii(fact, config, growth)

        def integrand(z, s):
            log_value = (
                self._wh.log_alpha_interior(fact, z)
                - self._wh.log_alpha_interior(fact, s)
                + s_exp * np.log(s)
                + z_exp * np.log(z)
            )
            return np.exp(log_value) / (z - s)

        value, report = self._quadrature.double_circle_quadrature_with_report(
            integrand, eta_z, eta_s, self._with_min_nodes(config, abs(s_exp) + abs(z_exp)), entry
        )
        return -value, report

    def _exterior_entry(
        self,
        fact: WienerHopfFactorization,
        s_exp: int,
        z_exp: int,
        config: QuadratureConfig,
        entry,
    ) -> Tuple[complex, QuadratureReport]:
        """+∮_{1/eta_z}∮_{1/eta_s} a-(s)/a-(z) s^s_exp z^z_exp / (z-s)."""
        growth = max(s_exp, 0) + max(z_exp, 0)
        eta_z, eta_s = self._entry_radii(fact, config, growth)

        def integrand(z, s):
            log_value = (
                self._wh.log_alpha_exterior(fact, s)
                - self._wh.log_alpha_exterior(fact, z)
                + s_exp * np.log(s)
                + z_exp * np.log(z)
            )
            return np.exp(log_value) / (z - s)

        value, report = self._quadrature.double_circle_quadrature_with_report(
            integrand, 1.0 / eta_z, 1.0 / eta_s, self._with_min_nodes(config, abs(s_exp) + abs(z_exp)), entry
        )
        return value, report

    def _perturbation_entries(
        self,
        fact: WienerHopfFactorization,
        symbol_values: Callable[[np.ndarray], np.ndarray],
        basis: PerturbationBasis,
        coeffs: CoefficientTable,
        N: Optional[int],
        rho: float,
        config: QuadratureConfig,
    ) -> Tuple[np.ndarray, QuadratureReport]:
        """
        Entradas delta + sum_u [ sign * c_{x-y}[g] - ∮∮ R00 u v ] de la matriz por bloques.
        """
        u_terms = list(basis.u_lines) + list(basis.u_rows)
        row_labels = [("I", a) for a in range(len(basis.u_lines))] + [("II", a) for a in range(len(basis.u_rows))]
        v_terms = list(basis.v_lines) + list(basis.v_rows)
        col_labels = [("I", b) for b in range(len(basis.v_lines))] + [("II", b) for b in range(len(basis.v_rows))]

        entries = np.zeros((basis.size, basis.size), dtype=complex)
        report = QuadratureReport()
        for i, ((row_block, a), terms) in enumerate(zip(row_labels, u_terms)):
            for j, ((col_block, b), v) in enumerate(zip(col_labels, v_terms)):
                value = complex(basis.identity_term(row_block, a, col_block, b))
                for u in terms:
                    value += u.weight * v.sign * self._factor_coefficient(coeffs, u.factor, u.exponent - v.exponent)
                    correction, entry_report = self._resolvent_term(
                        fact, symbol_values, N, u, v, rho, config, (row_block, a, col_block, b)
                    )
                    value -= correction
                    report = report.merge(entry_report)
                entries[i, j] = value
        return entries, report

    def _resolvent_term(
        self,
        fact: WienerHopfFactorization,
        symbol_values: Callable[[np.ndarray], np.ndarray],
        N: Optional[int],
        u: UTerm,
        v: VTerm,
        rho: float,
        config: QuadratureConfig,
        entry,
    ) -> Tuple[complex, QuadratureReport]:
        """
        ∮_{|z|=1}∮_{|s|=rho} R00(z, s) u(s) v(z) ds dz, con las potencias semienteras
        ya emparejadas en s^{-x} z^{y-1} y s^{N-x} z^{y-N-1}. Con N = None solo queda
        el primer término.
        """
        if self._is_identity(fact):
            return 0j, QuadratureReport()
        x, y = u.exponent, v.exponent

        def integrand(z, s):
            log_z, log_s = np.log(z), np.log(s)
            near = -x * log_s + (y - 1) * log_z
            far = None if N is None else (N - x) * log_s + (y - N - 1) * log_z
            kernel = self._paired_r00(fact, z, s, symbol_values(z) - 1.0, near, far)
            return kernel * self._factor_values(symbol_values, u.factor, s)

        value, report = self._quadrature.double_circle_quadrature_with_report(integrand, 1.0, rho, config, entry)
        return u.weight * v.sign * value, report

    def _edge_matrix(
        self,
        fact: WienerHopfFactorization,
        side: EdgeSide,
        kind: CorrectionKind,
        config: QuadratureConfig,
    ) -> CorrectionMatrix:
        basis = PerturbationBasis.from_edge_side(side)
        if basis.size == 0:
            return self._correction(kind, np.zeros((0, 0), dtype=complex), QuadratureReport(), ())

        x_values, y_values = self._basis_exponents(basis)
        rho = self._inner_radius(fact, config, max(max(x_values), 0))
        entry_config = self._with_min_nodes(config, max(abs(v) for v in x_values + y_values))
        coeffs, report = self._edge_coefficients(
            fact, min(x_values) - max(y_values), max(x_values) - min(y_values), entry_config
        )

        symbol_values = partial(self._symbol_from_factors, fact)
        entries, entry_report = self._perturbation_entries(fact, symbol_values, basis, coeffs, None, rho, entry_config)
        logger.debug("matriz_de_borde", kind=kind.value, size=basis.size, rho=rho)
        return self._correction(kind, entries, report.merge(entry_report), (1.0, rho))

    def _edge_coefficients(
        self,
        fact: WienerHopfFactorization,
        low: int,
        high: int,
        config: QuadratureConfig,
    ) -> Tuple[CoefficientTable, QuadratureReport]:
        """c_n[f] para low <= n <= high, con f = a-/a+ sobre |z| = 1."""
        values = {}
        report = QuadratureReport()
        for n in range(low, high + 1):

            def integrand(z, n=n):
                return self._symbol_from_factors(fact, z) * z ** (-n - 1)

            values[n], entry_report = self._quadrature.circle_quadrature_with_report(integrand, 1.0, config, ("c", n))
            report = report.merge(entry_report)
        return CoefficientTable.from_mapping(values), report

    def _symbol_from_factors(self, fact: WienerHopfFactorization, w) -> np.ndarray:
        return np.exp(self._wh.log_alpha_exterior(fact, w) - self._wh.log_alpha_interior(fact, w))

    @staticmethod
    def _basis_exponents(basis: PerturbationBasis) -> Tuple[List[int], List[int]]:
        x_values = [u.exponent for terms in basis.u_lines + basis.u_rows for u in terms]
        y_values = [v.exponent for v in basis.v_lines + basis.v_rows]
        return x_values, y_values

    # ------------------------------------------------------------------ #
    # Radios, nodos y ensamblado
    # ------------------------------------------------------------------ #

    @staticmethod
    def _default_radii(r_minus: float) -> Tuple[float, float]:
        eta_z = max(ETA_MIN, (1.0 + 2.0 * r_minus) / 3.0)
        return eta_z, (eta_z + r_minus) / 2.0

    def _base_radii(self, fact: WienerHopfFactorization, config: QuadratureConfig) -> Tuple[float, float]:
        if config.has_explicit_radii:
            return config.eta_z, config.eta_s
        return self._default_radii(fact.r_minus)

    def _entry_radii(self, fact: WienerHopfFactorization, config: QuadratureConfig, growth: int) -> Tuple[float, float]:
        """
        Radios por entrada: s^m z^q queda acotado por exp(max_log_growth) sobre el contorno.
        Los radios explícitos actúan como cota inferior.
        """
        eta_z, eta_s = self._base_radii(fact, config)
        if growth > 0:
            eta_z = max(eta_z, math.exp(-self._max_log_growth / (2.0 * growth)))
            eta_s = max(eta_s, math.exp(-self._max_log_growth / growth))
        return eta_z, eta_s

    def _inner_radius(self, fact: WienerHopfFactorization, config: QuadratureConfig, growth: int) -> float:
        """Radio rho < 1 de la integral en s, acercado a 1 cuando s^-growth crecería demasiado."""
        floor = config.eta_z if config.has_explicit_radii else (1.0 + fact.r_minus) / 2.0
        return max(floor, 1.0 - self._max_log_growth / max(growth, 1))

    @staticmethod
    def _check_explicit_radii(fact: WienerHopfFactorization, config: QuadratureConfig) -> None:
        if not config.has_explicit_radii:
            return
        if config.eta_s <= fact.r_minus or 1.0 / config.eta_s >= fact.r_plus:
            raise RadiiOutsideAnnulusException(config.eta_s, fact.annulus)

    @staticmethod
    def _with_min_nodes(config: QuadratureConfig, frequency: int) -> QuadratureConfig:
        """Parte de al menos 2*frequency nodos para no confundir aliasing con convergencia."""
        nodes = min(max(config.nodes, _next_power_of_two(2 * frequency + 8)), MAX_TENSOR_NODES // 2)
        return config if nodes == config.nodes else replace(config, nodes=nodes)

    @staticmethod
    def _is_identity(fact: WienerHopfFactorization) -> bool:
        return not np.any(fact.plus_coeffs) and not np.any(fact.minus_coeffs)

    @staticmethod
    def _factor_coefficient(coeffs: CoefficientTable, factor: Factor, n: int) -> complex:
        if factor is Factor.ONE:
            return 1.0 + 0j if n == 0 else 0j
        value = coeffs.get(n)
        if factor is Factor.SYMBOL_MINUS_ONE and n == 0:
            value -= 1.0
        return complex(value)

    @staticmethod
    def _factor_values(symbol_values: Callable[[np.ndarray], np.ndarray], factor: Factor, s: np.ndarray) -> np.ndarray:
        if factor is Factor.ONE:
            return np.ones_like(s)
        values = symbol_values(s)
        return values - 1.0 if factor is Factor.SYMBOL_MINUS_ONE else values

    def _correction(
        self,
        kind: CorrectionKind,
        entries: np.ndarray,
        report: QuadratureReport,
        radii: Tuple[float, ...],
    ) -> CorrectionMatrix:
        matrix = ComplexMatrix(entries)
        try:
            condition = self._linalg.condition_estimate(matrix)
        except ExactlySingularException:
            condition = math.inf
        singular = not math.isfinite(condition) or condition > self._singular_condition
        if singular:
            logger.warning("matriz_de_correccion_singular", kind=kind.value, size=matrix.rows, condition=condition)
        if not report.converged:
            logger.warning("matriz_sin_convergencia", kind=kind.value, nodes=report.nodes, change=report.change)
        return CorrectionMatrix(
            kind=kind,
            matrix=matrix,
            condition=condition,
            quadrature_report=report,
            singular=singular,
            radii=tuple(radii),
        )
