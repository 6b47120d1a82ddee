"""
Application configuration settings for the check-code toolkit.
Holds alphabet limits, search defaults and file conventions.
"""

import os


class Settings:
    """Application configuration settings"""

    # Application
    APP_NAME: str = 'checkcode'
    LOG_LEVEL: str = os.getenv('LOG_LEVEL', 'WARNING')

    # Alphabet
    DEFAULT_BASE: int = 10
    MIN_BASE: int = 4
    MAX_BASE: int = 10

    # Search defaults
    DEFAULT_SEED: int = 0
    DEFAULT_MAX_STEPS: int = 5_000_000
    DEFAULT_RESTART_INTERVAL: int = 2_000
    DEFAULT_TIME_BUDGET: float = 600.0  # 10 minutes
    DEFAULT_PHONETIC_RANGE: str = 'full'
    PHONETIC_RANGES: list = ['full', 'literal']

    # Relabeling sample size for invariance checks
    RELABEL_SAMPLE_SIZE: int = 1000

    # Files
    TABLE_SUFFIX: str = '.tbl'
    CONJUGATE_SUFFIX_FORMAT: str = '_t{index}'

    @classmethod
    def get_search_config(cls) -> dict:
        """Get default search configuration"""
        return {
            'seed': cls.DEFAULT_SEED,
            'max_steps': cls.DEFAULT_MAX_STEPS,
            'restart_interval': cls.DEFAULT_RESTART_INTERVAL,
            'time_budget': cls.DEFAULT_TIME_BUDGET,
            'phonetic_range': cls.DEFAULT_PHONETIC_RANGE,
        }

    @classmethod
    def validate_base(cls, base: int) -> bool:
        """Check if base is within the supported alphabet sizes"""
        return cls.MIN_BASE <= base <= cls.MAX_BASE

    @classmethod
    def conjugate_path(cls, prefix: str, index: int) -> str:
        """Build the file name of conjugate #index"""
        return prefix + cls.CONJUGATE_SUFFIX_FORMAT.format(index=index) + cls.TABLE_SUFFIX


# Global settings instance
settings = Settings()
