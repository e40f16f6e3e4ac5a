from functions.IMPORT import os, json
from functions.config import (SETTINGS_PATH, DEFAULT_SETTINGS, INT_SETTINGS, BOOL_SETTINGS,
                              ENV_SETTINGS, ENV_CACHE, ENV_THREADS, ENV_LOG_LEVEL)
from functions.errors import DomainError


def settings_path():
    return os.environ.get(ENV_SETTINGS, SETTINGS_PATH)


def update_setting(key, value):
    if key not in DEFAULT_SETTINGS:
        raise DomainError(f"unknown setting '{key}'")
    settings = load_settings()
    settings[key] = coerce_setting(key, value)
    save_settings(settings)
    return settings[key]


def coerce_setting(key, value):
    """Turn a command-line string into the type the setting holds."""
    if key in INT_SETTINGS:
        try:
            return int(value)
        except (TypeError, ValueError):
            raise DomainError(f"setting '{key}' needs an integer, got {value!r}")
    if key in BOOL_SETTINGS:
        if isinstance(value, bool):
            return value
        lowered = str(value).strip().lower()
        if lowered in ('1', 'true', 'yes', 'on'):
            return True
        if lowered in ('0', 'false', 'no', 'off'):
            return False
        raise DomainError(f"setting '{key}' needs a boolean, got {value!r}")
    return value


def save_settings(settings):
    path = settings_path()
    os.makedirs(os.path.dirname(path) or '.', exist_ok=True)
    with open(path, 'w') as f:
        json.dump(settings, f, indent=2)


def load_settings():
    try:
        with open(settings_path(), 'r') as f:
            return {**DEFAULT_SETTINGS, **json.load(f)}
    except FileNotFoundError:
        return dict(DEFAULT_SETTINGS)


def get_setting(key):
    return load_settings().get(key, DEFAULT_SETTINGS.get(key))


def get_cache_dir():
    return os.environ.get(ENV_CACHE) or get_setting('cache_dir')


def get_threads():
    raw = os.environ.get(ENV_THREADS)
    if raw:
        return max(1, coerce_setting('threads', raw))
    return max(1, int(get_setting('threads')))


def get_log_level():
    return (os.environ.get(ENV_LOG_LEVEL) or get_setting('log_level')).upper()
