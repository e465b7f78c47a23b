"""Shared fixtures: survey reports are expensive, so cache them per session."""
from functools import lru_cache

import pytest

from killform.cli import cmd_survey


@lru_cache(maxsize=None)
def _survey(spec: str):
    return cmd_survey(spec)


@pytest.fixture(scope="session")
def survey():
    """Callable spec -> survey Report, computed at most once per session."""
    return _survey
