"""
Configuration management for the dual symmetric inverse monoid toolkit
"""

import os
from dotenv import load_dotenv

# Load environment variables
load_dotenv()


class Config:
    """Application configuration"""

    # Logging Configuration
    LOG_LEVEL = os.getenv("LOG_LEVEL", "WARNING").upper()
    LOG_FILE = os.getenv("LOG_FILE", "")

    # Enumeration caps
    TC_MAX_CLASSES = int(os.getenv("TC_MAX_CLASSES", 100000))
    FP_MAX_ELEMENTS = int(os.getenv("FP_MAX_ELEMENTS", 100000))
    TC_LOOKAHEAD = os.getenv("TC_LOOKAHEAD", "True").lower() == "true"

    # Sampled checks (n = 5 inverse-structure suite)
    SAMPLE_PAIRS = int(os.getenv("SAMPLE_PAIRS", 10000))
    RANDOM_SEED = int(os.getenv("RANDOM_SEED", 20090101))

    # Validate required configuration
    @classmethod
    def validate(cls):
        """Validate configuration values"""
        positive = ["TC_MAX_CLASSES", "FP_MAX_ELEMENTS", "SAMPLE_PAIRS"]
        bad = [key for key in positive if getattr(cls, key) <= 0]

        if bad:
            raise ValueError(f"Configuration values must be positive: {', '.join(bad)}")

        if cls.LOG_LEVEL not in {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}:
            raise ValueError(f"Unknown LOG_LEVEL: {cls.LOG_LEVEL}")

        return True


Config.validate()
