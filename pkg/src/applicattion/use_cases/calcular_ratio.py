"""
Caso de uso: Cociente exacto y asintótico de un determinante de Toeplitz lacunario
"""
import math

import structlog

from src.applicattion.dto.report_dto import CorrectionSummaryDTO, RatioResultDTO
from src.applicattion.dto.spec_template_dto import SpecTemplateDTO
from src.applicattion.use_cases.cargar_simbolo import CargarSimboloUseCase
from src.domain.entities.correction import QuadratureConfig, RatioMethod
from src.domain.entities.symbol import Symbol
from src.domain.entities.wiener_hopf import WienerHopfFactorization
from src.domain.services.asymptotics_service import AsymptoticsService
from src.domain.services.lacunary_service import LacunaryService
from src.domain.services.wiener_hopf_service import WienerHopfService

logger = structlog.get_logger(__name__)


def _wrap_phase(value: complex) -> complex:
    return complex(value.real, math.remainder(value.imag, 2 * math.pi))


class CalcularRatioUseCase:
    """Compara el oráculo exacto con la aproximación por matrices de corrección."""

    def __init__(
        self,
        cargar_simbolo: CargarSimboloUseCase,
        lacunary_service: LacunaryService,
        wiener_hopf_service: WienerHopfService,
        asymptotics_service: AsymptoticsService,
    ):
        self.cargar_simbolo = cargar_simbolo
        self.lacunary_service = lacunary_service
        self.wiener_hopf_service = wiener_hopf_service
        self.asymptotics_service = asymptotics_service

    def execute(
        self,
        source: str,
        N: int,
        template: SpecTemplateDTO,
        method: RatioMethod,
        config: QuadratureConfig,
    ) -> RatioResultDTO:
        """
        Args:
            source: Archivo del símbolo
            N: Tamaño de la matriz
            template: Índices h, p, t, k
            method: Método de la aproximación asintótica
            config: Radios y parámetros de cuadratura

        Returns:
            RatioResultDTO

        Raises:
            ValidationException: Si el símbolo o la especificación son inválidos
            PlainSingularException: Si det_N[c_{a-b}] = 0
        """
        symbol = self.cargar_simbolo.execute(source)
        fact = self.wiener_hopf_service.factorize(symbol)
        return self.compute(symbol, fact, N, template, method, config)

    def compute(
        self,
        symbol: Symbol,
        fact: WienerHopfFactorization,
        N: int,
        template: SpecTemplateDTO,
        method: RatioMethod,
        config: QuadratureConfig,
    ) -> RatioResultDTO:
        lines, rows = template.resolve(N)
        spec = self.lacunary_service.validate_and_normalize(N, lines, rows)

        exact = self.lacunary_service.exact_ratio(symbol, spec)
        asymptotic = self.asymptotics_service.asymptotic_ratio_details(fact, symbol, spec, config, method)
        szego = self.asymptotics_service.szego_log_asymptotics(symbol, N)
        error = abs(exact.value - asymptotic.value)
        report = asymptotic.quadrature_report

        logger.info(
            "cociente",
            N=N,
            method=asymptotic.method.value,
            exact=exact.value,
            asymptotic=asymptotic.value,
            error=error,
        )
        return RatioResultDTO(
            N=N,
            spec=spec.describe(),
            method=asymptotic.method.value,
            exact_re=exact.value.real,
            exact_im=exact.value.imag,
            exact_is_zero=exact.is_zero,
            asym_re=asymptotic.value.real,
            asym_im=asymptotic.value.imag,
            abs_err=error,
            condition=asymptotic.condition,
            converged=report.converged,
            corrections=[CorrectionSummaryDTO.from_correction(m) for m in asymptotic.matrices],
            plain_logdet_re=exact.plain_log_modulus,
            plain_logdet_im=exact.plain_phase,
            szego_re=szego.real,
            szego_im=szego.imag,
        )

    @staticmethod
    def szego_residual(result: RatioResultDTO) -> float:
        """|log det_N[c_{a-b}] - asintótica de Szegő| con la fase reducida a (-π, π]."""
        plain = complex(result.plain_logdet_re, result.plain_logdet_im)
        szego = complex(result.szego_re, result.szego_im)
        return abs(_wrap_phase(plain - szego))
