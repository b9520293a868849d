import os
from dotenv import load_dotenv

load_dotenv()

class Config:
    # Parallélisme (0 = nombre de coeurs disponibles)
    THREADS = int(os.getenv("MATCHTOP_THREADS", "0"))

    # Logging
    LOG_LEVEL = os.getenv("MATCHTOP_LOG_LEVEL", "INFO")
    LOG_JSON = os.getenv("MATCHTOP_LOG_JSON", "0") == "1"

    # Sorties (rapports, contre-exemples)
    OUTPUT_DIR = os.getenv("MATCHTOP_OUTPUT_DIR", "output")
    DEFAULT_SEED = int(os.getenv("MATCHTOP_SEED", "42"))

    # Limites de capacité
    MAX_VERTICES = 64
    MAX_CANONICAL_VERTICES = 16
    MAX_EXHAUSTIVE_N = 7
    MAX_HOMOLOGY_FACES = 4000
    RANDOM_N_RANGE = (7, 12)
    RANDOM_DENSITIES = (0.2, 0.4, 0.6)

    # Version du schéma des rapports JSON
    SCHEMA_VERSION = "1.0"

    @property
    def threads(self) -> int:
        if self.THREADS > 0:
            return self.THREADS
        return os.cpu_count() or 1
