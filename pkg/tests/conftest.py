"""Shared fixtures for satlab tests."""

from pathlib import Path

import pytest
from click.testing import CliRunner

from satlab.utils.config import SatlabConfig

GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture
def config():
    """A default test config."""
    return SatlabConfig(seed=0, bf_steps=20, scan_sample_size=8)


@pytest.fixture
def runner():
    """Click runner with a clean satlab environment."""
    return CliRunner(env={"SATLAB_SEED": None, "SATLAB_LOG_LEVEL": None})


@pytest.fixture
def golden():
    """Path factory for files under tests/golden."""
    def _path(name: str) -> str:
        return str(GOLDEN / name)

    return _path
