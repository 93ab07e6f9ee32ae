"""
Construcción de servicios y casos de uso a partir de la configuración.
"""
from typing import Optional

from src.applicattion.use_cases.barrido_convergencia import BarridoConvergenciaUseCase
from src.applicattion.use_cases.calcular_coeficientes import CalcularCoeficientesUseCase
from src.applicattion.use_cases.calcular_ratio import CalcularRatioUseCase
from src.applicattion.use_cases.cargar_simbolo import CargarSimboloUseCase
from src.applicattion.use_cases.factorizar_simbolo import FactorizarSimboloUseCase
from src.domain.entities.correction import QuadratureConfig
from src.domain.repositories.symbol_repository import SymbolRepository
from src.domain.services.asymptotics_service import AsymptoticsService
from src.domain.services.lacunary_service import LacunaryService
from src.domain.services.linalg_service import LinalgService
from src.domain.services.quadrature_service import QuadratureService
from src.domain.services.symbol_service import SymbolService
from src.domain.services.wiener_hopf_service import WienerHopfService
from src.infraestructure.config import Settings
from src.infraestructure.repositories.json_symbol_repository import JsonSymbolRepository


class Container:
    """Servicios compartidos por los comandos de una ejecución."""

    def __init__(self, settings: Settings, repository: Optional[SymbolRepository] = None):
        self.settings = settings
        self.repository = repository or JsonSymbolRepository()
        self.symbol_service = SymbolService(
            tol=settings.symbol_tol,
            max_truncation=settings.max_truncation,
            safety_shrink=settings.safety_shrink,
        )
        self.linalg_service = LinalgService()
        self.wiener_hopf_service = WienerHopfService()
        self.quadrature_service = QuadratureService()
        self.lacunary_service = LacunaryService(self.symbol_service, self.linalg_service)
        self.asymptotics_service = AsymptoticsService(
            self.wiener_hopf_service,
            self.symbol_service,
            self.linalg_service,
            self.quadrature_service,
            self.lacunary_service,
            max_log_growth=settings.quadrature.max_log_growth,
            singular_condition=settings.singular_condition,
        )

    def quadrature_config(
        self,
        eta_z: Optional[float] = None,
        eta_s: Optional[float] = None,
        nodes: Optional[int] = None,
        tol: Optional[float] = None,
    ) -> QuadratureConfig:
        """Configuración de cuadratura: los flags tienen prioridad sobre el entorno."""
        defaults = self.settings.quadrature
        if eta_z is None and eta_s is None:
            eta_z, eta_s = defaults.eta_z, defaults.eta_s
        return QuadratureConfig(
            eta_z=eta_z,
            eta_s=eta_s,
            nodes=nodes if nodes is not None else defaults.nodes,
            tol=tol if tol is not None else defaults.tol,
            max_doublings=defaults.max_doublings,
        )

    def cargar_simbolo(self) -> CargarSimboloUseCase:
        return CargarSimboloUseCase(self.repository, self.symbol_service)

    def calcular_coeficientes(self) -> CalcularCoeficientesUseCase:
        return CalcularCoeficientesUseCase(self.cargar_simbolo(), self.symbol_service)

    def factorizar_simbolo(self) -> FactorizarSimboloUseCase:
        return FactorizarSimboloUseCase(self.cargar_simbolo(), self.wiener_hopf_service)

    def calcular_ratio(self) -> CalcularRatioUseCase:
        return CalcularRatioUseCase(
            self.cargar_simbolo(),
            self.lacunary_service,
            self.wiener_hopf_service,
            self.asymptotics_service,
        )

    def barrido_convergencia(self) -> BarridoConvergenciaUseCase:
        return BarridoConvergenciaUseCase(
            self.repository,
            self.cargar_simbolo(),
            self.wiener_hopf_service,
            self.calcular_ratio(),
            threads=self.settings.threads,
            version=self.settings.app_version,
        )
