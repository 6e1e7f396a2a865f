"""Environment variable loading and access.

Run parameters live in the key=value run config (rackit.config.run);
the environment only locates the cache, the output tree and the log level.
"""

import os
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv


def load_env(env_path: Optional[Path] = None) -> bool:
    """
    Load environment variables from a .env file.

    Args:
        env_path: Path to .env file. If None, searches the current directory
                  and its parents.

    Returns:
        True if a .env file was found and loaded, False otherwise.
    """
    if env_path:
        return load_dotenv(env_path)
    return load_dotenv()


def get_env(key: str, default: Optional[str] = None) -> Optional[str]:
    return os.getenv(key, default)


class EnvKeys:
    """Environment variable names read by rackit."""

    # Overrides cache_path of the run config
    CACHE = "RACKIT_CACHE"
    # Base directory of the logs/, reports/, cache/ tree
    OUTPUT_DIR = "RACKIT_OUTPUT_DIR"
    LOG_LEVEL = "RACKIT_LOG_LEVEL"
