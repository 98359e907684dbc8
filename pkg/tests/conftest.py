import pytest


@pytest.fixture(autouse=True)
def _isolated_cache(tmp_path, monkeypatch):
    # keep CLI runs from writing a cache into the working tree
    monkeypatch.setenv("TROPID_CACHE_DIR", str(tmp_path / "cache"))
