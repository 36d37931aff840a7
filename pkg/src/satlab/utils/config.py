"""Configuration management for satlab."""

from __future__ import annotations

from enum import Enum

from pydantic import Field
from pydantic_settings import BaseSettings


class LogLevel(str, Enum):
    """Log levels accepted by the CLI and the environment."""
    DEBUG = "DEBUG"
    INFO = "INFO"
    WARNING = "WARNING"
    ERROR = "ERROR"


class SatlabConfig(BaseSettings):
    """Main configuration for satlab.

    All settings can be overridden via environment variables with the
    SATLAB_ prefix (e.g., SATLAB_SEED=7).
    """

    model_config = {"env_prefix": "SATLAB_", "env_file": ".env", "extra": "ignore"}

    # Reproducibility
    seed: int = Field(
        default=0,
        description="Default seed for every seeded procedure (shuffles, samples)",
        ge=0,
    )
    log_level: LogLevel = Field(
        default=LogLevel.WARNING,
        description="Log level for the rich log handler on stderr",
    )

    # Orders
    strict_gaps: bool = Field(
        default=False,
        description="Exclude the endpoint partitions (empty side) from patching checks",
    )
    embed_size_bound: int = Field(
        default=4096,
        description="Enumeration bound for embedding searches into the codomain",
        ge=1,
    )
    ldim_max_exponent: int = Field(
        default=16,
        description="Largest exponent tried by the L-dimension search",
        ge=0,
    )

    # Graphs
    fast_witness: bool = Field(
        default=False,
        description="Use the constructive BIT witness instead of the minimal scan",
    )
    alt_cond3: bool = Field(
        default=False,
        description="Subtract each target's own set in redirection condition 3",
    )
    scan_sample_size: int = Field(
        default=64,
        description="Number of seeded random graphs sampled by the complement scan above 7 vertices",
        ge=1,
    )

    # Hereditarily finite sets
    hf_print_max_rank: int = Field(
        default=6,
        description="Deepest rank printed in brace notation; deeper sets print as #<code>",
        ge=0,
    )

    # Back-and-forth
    bf_steps: int = Field(
        default=200,
        description="Default number of back-and-forth steps",
        ge=0,
    )
    bf_max_bits: int = Field(
        default=4096,
        description="Largest bit length of a BIT vertex the back-and-forth extender may return",
        ge=1,
    )


def get_config() -> SatlabConfig:
    """Load and return the satlab configuration.

    Returns:
        SatlabConfig with values from env vars and defaults.
    """
    return SatlabConfig()
