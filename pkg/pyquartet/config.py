from dataclasses import dataclass
from functools import lru_cache
import os

from dotenv import find_dotenv, load_dotenv

from pyquartet.errors import ConfigError


@dataclass(frozen=True)
class Settings:
    seed: int = 20160700
    trials: int = 0
    bound: int = 2 ** 16
    log_level: str = "WARNING"


def _int_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise ConfigError(f"{name} must be an integer, got {raw!r}") from None


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    load_dotenv(find_dotenv(usecwd=True))
    settings = Settings(
        seed=_int_env("QUARTET_SEED", Settings.seed),
        trials=_int_env("QUARTET_TRIALS", Settings.trials),
        bound=_int_env("QUARTET_BOUND", Settings.bound),
        log_level=os.getenv("QUARTET_LOG_LEVEL", Settings.log_level).upper(),
    )
    if settings.trials < 0:
        raise ConfigError("QUARTET_TRIALS must be non-negative")
    if settings.bound < 1:
        raise ConfigError("QUARTET_BOUND must be positive")
    return settings
