from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    model_config = SettingsConfigDict(env_prefix='COHERA_', env_file='.env', extra='ignore')

    LOG_LEVEL: str = Field(default='WARNING')
    LOG_FORMAT: str = Field(default='%(levelname)-5.5s [%(name)s] %(message)s')
    DEFAULT_SEED: int = Field(default=7)
    DEFAULT_SAMPLES: int = Field(default=100, ge=1)
    DEFAULT_SIZE_LIMIT: int = Field(default=3, ge=1)
    AXIOM_MODELS: int = Field(default=3, ge=0)
    POOL_SETS: int = Field(default=6, ge=0)
    MAX_ASSERTIONS: int = Field(default=4, ge=1)


settings = Settings()
