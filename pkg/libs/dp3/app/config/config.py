import os

from dotenv import load_dotenv

load_dotenv()


class Config:
    # Integrator defaults
    RTOL = float(os.getenv("DP3_RTOL", 1e-10))
    ATOL = float(os.getenv("DP3_ATOL", 1e-12))
    TAU0 = float(os.getenv("DP3_TAU0", 0.1))
    TAU_MAX = float(os.getenv("DP3_TAU_MAX", 40.0))
    STRIDE = float(os.getenv("DP3_STRIDE", 0.05))
    MAX_STEP = float(os.getenv("DP3_MAX_STEP", 1.0))
    POLE_GUARD = float(os.getenv("DP3_POLE_GUARD", 1e8))
    MAX_STEPS = int(os.getenv("DP3_MAX_STEPS", 2_000_000))

    # Origin series
    SERIES_TERMS = int(os.getenv("DP3_SERIES_TERMS", 12))
    HANDOFF_REL_TOL = float(os.getenv("DP3_HANDOFF_REL_TOL", 1e-13))

    # CLI
    OUTPUT_DIR = os.getenv("DP3_OUTPUT_DIR", "out")
    LOG_LEVEL = os.getenv("DP3_LOG_LEVEL", "INFO").upper()

    @classmethod
    def validate(cls):
        if cls.RTOL <= 0 or cls.ATOL <= 0:
            raise ValueError("DP3_RTOL and DP3_ATOL must be positive")
        if not 0 < cls.TAU0 < cls.TAU_MAX:
            raise ValueError("DP3_TAU0 must lie in (0, DP3_TAU_MAX)")
        if cls.SERIES_TERMS < 2:
            raise ValueError("DP3_SERIES_TERMS must be at least 2")


config = Config()
