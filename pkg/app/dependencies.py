"""Resolution of run-wide settings from flags and environment"""

from typing import Optional

from hecke.constants import DEFAULT_SEED, DEFAULT_STORAGE, MAX_WORKERS
from hecke.storage import RecordStorage, get_record_storage

from app.middleware import json_default


def get_seed(flag: Optional[int] = None, configured: Optional[int] = None) -> int:
    """Flag, then config value, then HECKE_ENGINE_SEED"""
    if flag is not None:
        return flag
    return configured if configured is not None else DEFAULT_SEED


def get_jobs(flag: Optional[int] = None, configured: Optional[int] = None) -> int:
    """Worker cap for the witness search"""
    value = flag if flag is not None else configured if configured is not None else MAX_WORKERS
    return max(1, int(value))


def get_storage(output: Optional[str] = None) -> RecordStorage:
    """JSON-lines storage when an output file is given, otherwise HECKE_ENGINE_STORAGE"""
    if output:
        return get_record_storage("jsonl", output, json_default)
    return get_record_storage(DEFAULT_STORAGE)
