"""
Caso de uso: Barrido de convergencia en N
"""
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict
from typing import List, Sequence

import structlog

from src.applicattion.dto.report_dto import SweepMetadataDTO, SweepReportDTO, SweepRowDTO
from src.applicattion.dto.spec_template_dto import SpecTemplateDTO
from src.applicattion.use_cases.calcular_ratio import CalcularRatioUseCase
from src.applicattion.use_cases.cargar_simbolo import CargarSimboloUseCase
from src.domain.entities.correction import QuadratureConfig, RatioMethod
from src.domain.exceptions.domain_exceptions import ValidationException
from src.domain.repositories.symbol_repository import SymbolRepository
from src.domain.services.wiener_hopf_service import WienerHopfService

logger = structlog.get_logger(__name__)


class BarridoConvergenciaUseCase:
    """
    Calcula error(N) = |exacto - asintótico| para una lista creciente de N.
    Las filas se calculan en paralelo (hasta `threads` hilos) y se devuelven en orden de N.
    """

    def __init__(
        self,
        repository: SymbolRepository,
        cargar_simbolo: CargarSimboloUseCase,
        wiener_hopf_service: WienerHopfService,
        calcular_ratio: CalcularRatioUseCase,
        threads: int = 1,
        version: str = "",
    ):
        self.repository = repository
        self.cargar_simbolo = cargar_simbolo
        self.wiener_hopf_service = wiener_hopf_service
        self.calcular_ratio = calcular_ratio
        self.threads = max(1, threads)
        self.version = version

    def execute(
        self,
        source: str,
        n_values: Sequence[int],
        template: SpecTemplateDTO,
        method: RatioMethod,
        config: QuadratureConfig,
    ) -> SweepReportDTO:
        """
        Raises:
            ValidationException: Si la lista de N no es estrictamente creciente o algún N invalida la especificación
        """
        n_values = [int(N) for N in n_values]
        if not n_values:
            raise ValidationException("La lista de N está vacía")
        if any(a >= b for a, b in zip(n_values, n_values[1:])):
            raise ValidationException(f"La lista de N debe ser estrictamente creciente: {n_values}")

        symbol = self.cargar_simbolo.execute(source)
        fact = self.wiener_hopf_service.factorize(symbol)

        def row(N: int) -> SweepRowDTO:
            start = time.perf_counter()
            result = self.calcular_ratio.compute(symbol, fact, N, template, method, config)
            elapsed = (time.perf_counter() - start) * 1e3
            nodes = max((c.nodes for c in result.corrections), default=0)
            return SweepRowDTO(
                N=N,
                exact_re=result.exact_re,
                exact_im=result.exact_im,
                asym_re=result.asym_re,
                asym_im=result.asym_im,
                abs_err=result.abs_err,
                nodes=nodes,
                ms=elapsed,
                szego_residual=self.calcular_ratio.szego_residual(result),
                converged=result.converged,
            )

        with ThreadPoolExecutor(max_workers=min(self.threads, len(n_values))) as pool:
            rows: List[SweepRowDTO] = list(pool.map(row, n_values))

        logger.info("barrido", n_values=n_values, threads=self.threads)
        metadata = SweepMetadataDTO(
            symbol_sha256=self.repository.digest(source),
            spec=template.describe(),
            config=asdict(config),
            method=RatioMethod(method).value,
            version=self.version,
        )
        return SweepReportDTO(metadata=metadata, rows=rows)
