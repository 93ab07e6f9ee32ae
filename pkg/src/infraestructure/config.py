import math
from typing import Optional

from pydantic import field_validator, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class QuadratureSettings(BaseSettings):
    """Configuración por defecto de las integrales de contorno."""

    nodes: int = 64
    tol: float = 1e-12
    max_doublings: int = 8

    # Radios explícitos; si no se dan se eligen a partir de la corona del símbolo
    eta_z: Optional[float] = None
    eta_s: Optional[float] = None

    # Mayor log-magnitud tolerada de un monomio sobre el contorno
    max_log_growth: float = math.log(1e4)

    model_config = SettingsConfigDict(
        env_file=".env",
        env_prefix="LACTOEP_QUAD_",
        case_sensitive=False,
        extra="ignore",
    )

    @field_validator("nodes")
    @classmethod
    def validate_nodes(cls, v):
        if v < 4 or v & (v - 1):
            raise ValueError("El número de nodos debe ser una potencia de dos >= 4")
        return v

    @model_validator(mode="after")
    def validate_radii(self):
        if (self.eta_z is None) != (self.eta_s is None):
            raise ValueError("eta_z y eta_s deben configurarse juntos")
        if self.eta_z is not None and not (0 < self.eta_s < self.eta_z < 1):
            raise ValueError("Se requiere 0 < eta_s < eta_z < 1")
        return self


class Settings(BaseSettings):
    """Configuración general de la aplicación."""

    # App settings
    app_name: str = "lactoep"
    app_version: str = "1.0.0"
    environment: str = "development"

    # Logging
    log_level: str = "WARNING"

    # Paralelismo de los barridos (LACTOEP_THREADS)
    threads: int = 1

    # Símbolos
    symbol_tol: float = 1e-14
    max_truncation: int = 4096
    safety_shrink: float = 0.9

    # Matrices de corrección
    singular_condition: float = 1e12

    quadrature: QuadratureSettings = None

    model_config = SettingsConfigDict(
        env_file=".env",
        env_prefix="LACTOEP_",
        case_sensitive=False,
        extra="ignore",
    )

    def __init__(self, **data):
        # Inicializar quadrature si no se proporciona
        if data.get("quadrature") is None:
            data["quadrature"] = QuadratureSettings()
        super().__init__(**data)

    @field_validator("threads")
    @classmethod
    def validate_threads(cls, v):
        """Al menos un hilo de trabajo."""
        return max(1, v)

    @field_validator("safety_shrink")
    @classmethod
    def validate_safety_shrink(cls, v):
        if not 0 < v <= 1:
            raise ValueError("safety_shrink debe estar en (0, 1]")
        return v


def get_settings() -> Settings:
    """Lee la configuración del entorno (no se cachea: los tests cambian variables)."""
    return Settings()
