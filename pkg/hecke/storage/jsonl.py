from typing import Dict
import json
import logging

from hecke.storage.memory import InMemoryRecordStorage

logger = logging.getLogger("hecke-engine")


class JsonLinesRecordStorage(InMemoryRecordStorage):
    """
    Keeps job state in memory and appends every record to a JSON-lines file.
    Records are written with sorted keys, one per line.
    """

    def __init__(self, path: str, default=None):
        super().__init__()
        self.path = path
        self.default = default
        # Truncate so a run produces exactly its own records
        with open(self.path, "w", encoding="utf-8"):
            pass

    def add_record(self, job_id: str, record: Dict) -> None:
        super().add_record(job_id, record)
        with open(self.path, "a", encoding="utf-8") as fh:
            fh.write(json.dumps(record, sort_keys=True, default=self.default) + "\n")

    def set_job_error(self, job_id: str, error: Dict) -> None:
        super().set_job_error(job_id, error)
        with open(self.path, "a", encoding="utf-8") as fh:
            fh.write(json.dumps(error, sort_keys=True, default=self.default) + "\n")
        logger.info(f"Error record for job {job_id} written to {self.path}")
