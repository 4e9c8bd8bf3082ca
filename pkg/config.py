# GKP Kerr - runtime defaults load from .env; experiment parameters live in the experiment config file
import os
from dotenv import load_dotenv
import psutil

from src import __version__

load_dotenv()

# Runtime
GKP_JOBS = max(1, int(os.getenv("GKP_JOBS", psutil.cpu_count(logical=False) or 1)))
GKP_LOG_LEVEL = os.getenv("GKP_LOG_LEVEL", "INFO")
GKP_VERSION = os.getenv("GKP_VERSION", __version__)

# Numerics
GKP_FOCK_DIM = int(os.getenv("GKP_FOCK_DIM", 96))
GKP_QUAD_TOL = float(os.getenv("GKP_QUAD_TOL", 1e-10))
GKP_ORACLE_TOL = float(os.getenv("GKP_ORACLE_TOL", 1e-9))
GKP_FOCK_ORACLE_TOL = float(os.getenv("GKP_FOCK_ORACLE_TOL", 1e-6))
