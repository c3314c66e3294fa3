# config/settings.py
"""
Point process predictor configuration
"""
from typing import Optional, Tuple
from enum import Enum


class Profile(str, Enum):
    """Settings profiles"""
    LOCAL = "local"
    CI = "ci"
    PROD = "prod"


class BaseSettings:
    """Base settings shared across all profiles"""

    # Service
    SERVICE_NAME: str = "point-process-predictor"
    APP_VERSION: str = "1.0.0"
    PROFILE: str = Profile.LOCAL.value

    # Encoding
    SECONDS_PER_DAY: int = 86400
    DEFAULT_BIN_SECONDS: int = 600
    DEFAULT_WINDOW_START: int = 7 * 3600  # 07:00
    DEFAULT_WINDOW_END: int = 23 * 3600  # 23:00

    # Testing procedure
    DEFAULT_N_DAYS: int = 49
    DEFAULT_TRAIN_DAYS: int = 45
    DEFAULT_FOLDS: int = 9

    # CSSR
    CSSR_ALPHA: float = 0.001
    CSSR_TEST: str = "chi-squared"
    CSSR_MIN_COUNT: int = 5
    STATIONARY_TOLERANCE: float = 1e-12
    STATIONARY_MAX_ITER: int = 100_000

    # Echo state network
    ESN_INPUTS: int = 10
    ESN_RESERVOIR: int = 128
    ESN_SPECTRAL_RADIUS: float = 0.99
    ESN_WEIGHT_INTERVAL: Tuple[float, float] = (0.0, 1.0)
    ESN_TARGET_CLIP: float = 0.01
    ESN_WASHOUT: int = 0
    ESN_FEEDBACK: str = "observed"
    ESN_BUILD_ATTEMPTS: int = 5
    PINV_RTOL: float = 1e-10
    SPECTRAL_TOLERANCE: float = 1e-10
    SPECTRAL_MAX_ITER: int = 10_000

    # Information theory
    PLATEAU_TOLERANCE: float = 0.01

    # Experiments
    BITFLIP_STEP: float = 0.1
    TWEET_RATE_THRESHOLD: float = 0.2
    TOP_K: int = 20
    DEFAULT_SEED: int = 0

    # Workers
    MAX_WORKERS: int = 4
    LOG_LEVEL: str = "INFO"
    DEBUG: bool = False


class LocalSettings(BaseSettings):
    """Local development settings"""
    DEBUG: bool = True
    LOG_LEVEL: str = "DEBUG"
    MAX_WORKERS: int = 2


class CiSettings(BaseSettings):
    """Continuous integration settings"""
    PROFILE: str = Profile.CI.value
    LOG_LEVEL: str = "INFO"
    MAX_WORKERS: int = 2


class ProdSettings(BaseSettings):
    """Batch runs over large corpora"""
    PROFILE: str = Profile.PROD.value
    LOG_LEVEL: str = "WARNING"
    MAX_WORKERS: int = 8


def get_settings(profile: Optional[str] = None) -> BaseSettings:
    """Factory function to get settings for a profile"""
    profile = (profile or Profile.LOCAL.value).lower()

    settings_map = {
        Profile.LOCAL.value: LocalSettings,
        Profile.CI.value: CiSettings,
        Profile.PROD.value: ProdSettings,
    }

    settings_class = settings_map.get(profile, LocalSettings)
    return settings_class()


settings = get_settings()
