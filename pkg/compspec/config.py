"""Application configuration using pydantic-settings."""

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Toolkit settings loaded from ``SPECTRA_*`` environment variables."""

    model_config = SettingsConfigDict(
        env_prefix="SPECTRA_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # Report store
    database_url: str = "sqlite+aiosqlite:///./compspec_reports.db"

    # Default worker-pool size for class scans (--jobs)
    jobs: int = Field(default=1, ge=1)

    # Graphs per batched eigenvalue call during scans
    batch_size: int = Field(default=4096, ge=1)

    log_level: str = "WARNING"


settings = Settings()
