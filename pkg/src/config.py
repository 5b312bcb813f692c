from pydantic_settings import BaseSettings, SettingsConfigDict
from dotenv import load_dotenv

load_dotenv()

VERSION = "1.0.0"

# Library defaults. The CLI passes these explicitly and never reads the environment.
DEFAULT_MAX_COSETS = 100_000
DEFAULT_DEGREE_MAX = 4
DEFAULT_STRAND_COUNT = 4
DEFAULT_SEARCH_WORKERS = 1
MAX_SEARCH_DEGREE = 6

# Input bounds. Exponents are expanded before reduction, so they are capped.
MAX_EXPONENT = 10_000
MAX_EXPANDED_LETTERS = 100_000
MAX_STRAND_COUNT = 64
MAX_KLEIN_K = 64


class Settings(BaseSettings):
    """Service settings, read from CERT_* variables or a .env file."""

    MAX_COSETS: int = DEFAULT_MAX_COSETS
    DEGREE_MAX: int = DEFAULT_DEGREE_MAX
    SEARCH_WORKERS: int = DEFAULT_SEARCH_WORKERS
    LOG_LEVEL: str = "INFO"
    LOG_FORMAT: str = "%(asctime)s %(levelname)s %(name)s: %(message)s"
    VERSION: str = VERSION
    ALLOWED_ORIGINS: list[str] = ["*"]

    model_config = SettingsConfigDict(env_file=".env", env_prefix="CERT_", extra="ignore")


settings = Settings()
