import os

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "repo", deadline=None, derandomize=True, max_examples=40,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "repo"))


@pytest.fixture
def tmp_cache(tmp_path, monkeypatch):
    monkeypatch.delenv("FPURE_LAB_CACHE", raising=False)
    return tmp_path / "gbcache"
