from pathlib import Path

from loguru import logger
"""
این کتابخانه برای مدیریت تنظیمات پروژه استفاده می‌شود.
به‌صورت خودکار مقدار متغیرهای محیطی (سطح لاگ، طول پیش‌فرض باند ضرایب، تعداد نمونه‌ها و آستانه‌ها)
را می‌خواند و آن‌ها را در قالب یک مدل داده‌ای ساخت‌یافته و قابل کنترل قرار می‌دهد.
پیکربندی هر اجرا (نقاط حذف‌شده، حلقه، پارامتر k و ...) جداگانه از فایل تامل خوانده می‌شود.
"""
from pydantic import ValidationError
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    # SettingsConfigDict is used to configure pydantic settings behavior,
    # such as specifying an environment file to load variables from.
    model_config = SettingsConfigDict(env_file=".env", env_file_encoding="utf-8", extra="ignore")

    # --- Logging and the default config. ---
    LOG_LEVEL: str = "INFO"
    DEFAULT_CONFIG_PATH: Path = Path("configs/standard.toml")

    # --- Laurent truncation. ---
    DEFAULT_BAND: int = 48                     # Coefficients kept on each side of index 0.
    DEFAULT_SAMPLE_COUNT: int = 4096           # FFT samples on the unit circle (power of two >= 4 * band).
    RESIDUE_REL_TOLERANCE: float = 1e-12       # Exactness threshold relative to the largest coefficient.

    # --- Construction. ---
    DEFAULT_MARGIN: float = 0.05               # Zero clearance of the multiplier around the annulus.
    BOUNDS_GRID_RADII: int = 64
    BOUNDS_GRID_ANGLES: int = 512
    BOUNDS_INFLATION: float = 1.01             # Safety factor applied to the scanned bound c.

    # --- Diagnostics. ---
    PROBE_SPREAD_TOLERANCE: float = 0.10       # Allowed relative spread of decade differences L(eps).
    PROBE_CONVERGENCE_FACTOR: float = 5.0      # Per-decade shrink factor that counts as convergence.
    SHOW_PROGRESS: bool = True

    @classmethod
    def load_settings(cls) -> "Settings":
        """
        Initializes the settings from the environment and the '.env' file. If the values found
        there do not validate, it falls back to the defaults.

        Returns:
            Settings: The initialized settings object.
        """

        try:
            settings = Settings()
        except ValidationError:
            logger.warning("Invalid values in the environment or '.env' file. Defaulting to built-in settings.")
            settings = Settings.model_construct()

        return settings


settings = Settings.load_settings()
