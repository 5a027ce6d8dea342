"""
Pytest configuration and shared fixtures for steinbraid tests.

Provides seeded random generators and small braid helpers.
"""

import os
import random
import sys

import pytest

sys.path.insert(0, os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "src"))

from steinbraid.braid import BraidWord, parse_braid  # noqa: E402
from steinbraid.homs import random_word  # noqa: E402, F401


def pytest_configure(config):
    """Register custom markers."""
    config.addinivalue_line("markers", "slow: marks long-running verification runs")


@pytest.fixture
def rng() -> random.Random:
    """A fresh generator with a fixed seed for each test."""
    return random.Random(20240501)


# Utility functions for tests
def w(text: str, strands: int = 6) -> BraidWord:
    """Shorthand for parse_braid."""
    return parse_braid(text, strands)

