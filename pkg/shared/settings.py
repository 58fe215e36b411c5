#!/usr/bin/env python3

# Core
from typing import Optional
import os

DEFAULT_COUNT_BUDGET = 10_000_000
DEFAULT_CHUNK_SIZE   = 65_536
DEFAULT_LOG_LEVEL    = 'INFO'

# =========================================================================== #

class SettingsError(Exception):
    pass

# =========================================================================== #

def _int_setting(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if not raw:
        return default
    try:
        value = int(raw)
    except ValueError as err:
        raise SettingsError(f"{name} must be an integer, got '{raw}'") from err
    if value < 1:
        raise SettingsError(f"{name} must be positive, got {value}")
    return value

# --------------------------------------------------------------------------- #

def count_budget() -> int:
    """
    Largest number of projective points the point-count oracle may enumerate.
    """
    return _int_setting('HYPERARR_COUNT_BUDGET', DEFAULT_COUNT_BUDGET)

def chunk_size() -> int:
    return _int_setting('HYPERARR_CHUNK_SIZE', DEFAULT_CHUNK_SIZE)

def log_level() -> str:
    return os.environ.get('HYPERARR_LOG_LEVEL', DEFAULT_LOG_LEVEL).upper()

def broker_url() -> Optional[str]:
    """
    Celery broker for distributed point counting; unset means count locally.
    """
    return os.environ.get('CELERY_BROKER_URL') or None

# =========================================================================== #
