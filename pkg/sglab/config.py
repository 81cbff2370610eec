"""
Configurações do sglab usando Pydantic Settings.
Limites das rotinas exatas, tolerâncias numéricas e paralelismo das varreduras.
"""

from typing import Literal

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Configurações da biblioteca com validação."""

    model_config = SettingsConfigDict(
        env_prefix="SGLAB_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=True,
        extra="ignore",
    )

    # Paralelismo
    JOBS: int = Field(default=1, ge=1, description="Número padrão de workers (--jobs)")
    BLOCK_SIZE: int = Field(
        default=1 << 16,
        ge=1,
        description="Padrões de sinais por tarefa nas varreduras exaustivas",
    )

    # Logging e progresso
    LOG_LEVEL: Literal["DEBUG", "INFO", "WARNING", "ERROR"] = "INFO"
    PROGRESS: bool = Field(default=True, description="Barras tqdm nas varreduras (só em TTY)")

    # Limites das rotinas exatas
    FRUSTRATION_EXACT_LIMIT: int = Field(default=26, ge=1)
    CHARPOLY_LIMIT: int = Field(default=16, ge=1)
    CLIQUE_LIMIT: int = Field(default=64, ge=1)
    BALANCED_CLIQUE_LIMIT: int = Field(default=32, ge=1)
    ENUMERATION_LIMIT: int = Field(default=8, ge=1)
    ISOMORPHISM_LIMIT: int = Field(default=12, ge=1)

    # Tolerâncias numéricas
    JACOBI_TOLERANCE: float = Field(default=1e-12, gt=0)
    JACOBI_MAX_SWEEPS: int = Field(default=100, ge=1)
    BOUND_TOLERANCE: float = Field(default=1e-8, ge=0)
    RHO_TOLERANCE: float = Field(default=1e-8, ge=0)

    # Relatórios e busca
    WITNESS_SAMPLE: int = Field(default=3, ge=1)
    SEARCH_RESTARTS: int = Field(default=20, ge=1)
    SEARCH_DOWNHILL_PROB: float = Field(default=0.02, ge=0, le=1)

    @field_validator("LOG_LEVEL", mode="before")
    @classmethod
    def normalizar_log_level(cls, v):
        """Aceita o nível em minúsculas (ex: SGLAB_LOG_LEVEL=debug)."""
        if isinstance(v, str):
            return v.strip().upper()
        return v

    @field_validator("CHARPOLY_LIMIT")
    @classmethod
    def validar_charpoly_limit(cls, v: int) -> int:
        """Acima de 16 vértices os coeficientes deixam a faixa auditada de 128 bits."""
        if v > 16:
            raise ValueError("CHARPOLY_LIMIT deve ser no máximo 16")
        return v


settings = Settings()
