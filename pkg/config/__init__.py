"""Configuration: environment access and the run config."""

from rackit.config.env import EnvKeys, get_env, load_env
from rackit.config.run import OUTPUT_FORMATS, RunConfig, load_run_config

__all__ = [
    "EnvKeys",
    "get_env",
    "load_env",
    "OUTPUT_FORMATS",
    "RunConfig",
    "load_run_config",
]
