# thetaspan/config.py
import os
from dotenv import load_dotenv

load_dotenv()


def _flag(name: str, default: str) -> bool:
    return os.getenv(name, default).strip().lower() in ("1", "true", "yes", "on")


# Geometry Configuration
THETA_K = int(os.getenv("THETA_K", 5))
RELATIVE_TOLERANCE = float(os.getenv("THETA_RELATIVE_TOLERANCE", 1e-9))
ANGLE_TOLERANCE = float(os.getenv("THETA_ANGLE_TOLERANCE", 1e-12))

# Path construction & routing
RECURSION_DEPTH_FACTOR = int(os.getenv("THETA_RECURSION_DEPTH_FACTOR", 4))
STEP_CAP_FACTOR = int(os.getenv("THETA_STEP_CAP_FACTOR", 10))

# Instance generation
DEFAULT_EPSILON = float(os.getenv("THETA_DEFAULT_EPSILON", 1e-6))
DEFAULT_CYCLES = int(os.getenv("THETA_DEFAULT_CYCLES", 3))
CHECKPOINT_VALIDATION = _flag("THETA_CHECKPOINT_VALIDATION", "true")

# Export
EXPORT_DIGITS = int(os.getenv("THETA_EXPORT_DIGITS", 12))
SVG_SIZE = int(os.getenv("THETA_SVG_SIZE", 800))
SVG_MARGIN = int(os.getenv("THETA_SVG_MARGIN", 40))

# Logging
LOG_LEVEL = os.getenv("THETA_LOG_LEVEL", "WARNING")
