"""Tests for the sequential quantum logic toolchain."""
from pathlib import Path

RESOURCES_PATH = Path(__file__).parent / "resources"
STUBS_PATH = RESOURCES_PATH / "stubs"
