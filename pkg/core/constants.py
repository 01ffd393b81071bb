"""Constants for the surface walks toolkit."""

from pathlib import Path

# Data directory for settings and logs
DATA_ROOT = Path.home() / ".local/share/surface_walks"
CONFIG_FILE = DATA_ROOT / "config.json"
LOG_FILE = DATA_ROOT / "surface_walks.log"

# Application settings
MAX_LOG_ENTRIES = 200

# CLI defaults
DEFAULT_MAX_K = 8
DEFAULT_TIMEOUT_MS = 60000
DEFAULT_JOBS = 1

# Size limits of the exhaustive sweeps
NASH_WILLIAMS_MAX_N = 12
WALK_HYPOTHESIS_MAX_N = 20
TRAIL_HYPOTHESIS_MAX_N = 14
GENUS_MAX_DEGREE_SUM = 24

# How many search nodes between two deadline checks
DEADLINE_CHECK_INTERVAL = 512

# Graph formats and the file extensions that select them
FORMATS = ("graph6", "sparse6", "edge-list")
FORMAT_BY_EXTENSION = {
    ".g6": "graph6",
    ".s6": "sparse6",
    ".el": "edge-list",
}
