# config.py
import os
from dotenv import load_dotenv

load_dotenv()

# --- Logging ---
LOG_LEVEL = os.getenv("LOG_LEVEL", "WARNING").upper()

# --- Oracle / corpus ---
# The oracle scans all 2^n vertex subsets.
ORACLE_MAX_VERTICES = int(os.getenv("ORACLE_MAX_VERTICES", "12"))
EXHAUSTIVE_MAX_VERTICES = int(os.getenv("EXHAUSTIVE_MAX_VERTICES", "7"))
GNP_SAMPLES = int(os.getenv("GNP_SAMPLES", "1000"))
GNP_MAX_VERTICES = int(os.getenv("GNP_MAX_VERTICES", "12"))
GNP_PROBABILITIES = [float(p) for p in os.getenv("GNP_PROBABILITIES", "0.2,0.4,0.6,0.8").split(",") if p.strip()]
DEFAULT_SEED = int(os.getenv("DEFAULT_SEED", "42"))

# --- Certification store ---
RESULTS_DB_PATH = os.getenv("RESULTS_DB_PATH", "raag_certification.db")
