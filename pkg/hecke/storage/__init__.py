from typing import Optional

from hecke.storage.base import RecordStorage
from hecke.storage.jsonl import JsonLinesRecordStorage
from hecke.storage.memory import InMemoryRecordStorage

__all__ = ["RecordStorage", "InMemoryRecordStorage", "JsonLinesRecordStorage", "get_record_storage"]


def get_record_storage(storage_type: str = "memory", path: Optional[str] = None, default=None) -> RecordStorage:
    """
    Factory function to get a record storage implementation.

    Args:
        storage_type: "memory" or "jsonl"
        path: output file, required for "jsonl"
        default: fallback serializer for values json cannot encode

    Returns:
        An instance of RecordStorage implementation
    """
    if storage_type == "memory":
        return InMemoryRecordStorage()
    if storage_type == "jsonl":
        if not path:
            raise ValueError("jsonl storage needs an output path")
        return JsonLinesRecordStorage(path, default)
    raise ValueError(f"Unknown storage type: {storage_type}")
