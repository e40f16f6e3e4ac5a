import json

import pytest

from functions.canonical import clear_block_cache
from functions.config import DEFAULT_SETTINGS, ENV_SETTINGS, ENV_CACHE, ENV_THREADS, ENV_LOG_LEVEL
from functions.log import configure_logging


@pytest.fixture(autouse=True)
def isolated_settings(tmp_path, monkeypatch):
    """Each test gets its own settings file and matrix cache, with progress bars off."""
    settings_file = tmp_path / 'app_settings.json'
    settings_file.write_text(json.dumps({**DEFAULT_SETTINGS, 'progress': False}))
    monkeypatch.setenv(ENV_SETTINGS, str(settings_file))
    monkeypatch.setenv(ENV_CACHE, str(tmp_path / 'cache'))
    monkeypatch.delenv(ENV_THREADS, raising=False)
    monkeypatch.delenv(ENV_LOG_LEVEL, raising=False)
    configure_logging()
    yield settings_file


@pytest.fixture
def cache_dir(tmp_path):
    return str(tmp_path / 'cache')


@pytest.fixture
def fresh_blocks():
    clear_block_cache()
    yield
    clear_block_cache()
