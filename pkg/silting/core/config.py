from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    # Homological computations
    RESOLUTION_CAP: int = 64  # Syzygy steps before a resolution is reported as unknown

    # Path algebra construction
    LENGTH_CAP: int = 64  # Longest path length explored before giving up
    PATH_LIMIT: int = 20000  # Enumerated paths before giving up

    # Isomorphism search
    ISO_SEED: int = 0xA1B2
    ISO_ATTEMPTS: int = 32
    ISO_COEFFICIENT_BOUND: int = 3  # Random coefficients are drawn from [-bound, bound]
    ISO_EXHAUSTIVE_LIMIT: int = 6  # Exhaustive {-1, 0, 1} search when dim Hom is at most this

    # Logging
    LOG_LEVEL: str = "WARNING"

    # Reports
    REPORT_SCHEMA_VERSION: str = "1"
    REPORT_TIMING: bool = True

    class Config:
        env_file = ".env"
        env_prefix = "SILTING_"


settings = Settings()
