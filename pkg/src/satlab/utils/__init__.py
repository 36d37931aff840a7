"""Shared utilities for satlab."""

from satlab.utils.config import SatlabConfig, get_config

__all__ = ["SatlabConfig", "get_config"]
