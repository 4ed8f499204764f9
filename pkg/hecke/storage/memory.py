from typing import Dict, Optional
from datetime import datetime, timezone
import logging

from hecke.storage.base import RecordStorage

UTC = timezone.utc

logger = logging.getLogger("hecke-engine")


class InMemoryRecordStorage(RecordStorage):
    """
    In-memory implementation of RecordStorage.
    Jobs live for the lifetime of the process.
    """

    def __init__(self):
        self._jobs: Dict[str, Dict] = {}

    def create_job(self, job_id: str, job_data: Dict) -> None:
        """Create a new job with the specified ID and data"""
        data = dict(job_data)
        data.setdefault("records", [])
        data.setdefault("created_at", datetime.now(UTC).isoformat())
        self._jobs[job_id] = data

    def get_job(self, job_id: str) -> Optional[Dict]:
        """Get a job by ID"""
        if job_id not in self._jobs:
            return None
        # Copy so callers cannot mutate stored state
        job = dict(self._jobs[job_id])
        job["records"] = list(job["records"])
        return job

    def _require(self, job_id: str) -> Dict:
        if job_id not in self._jobs:
            raise KeyError(f"Job {job_id} not found")
        return self._jobs[job_id]

    def update_job_status(self, job_id: str, status: str) -> None:
        """Update a job's status"""
        self._require(job_id)["status"] = status

    def add_record(self, job_id: str, record: Dict) -> None:
        """Append an emitted record to a job"""
        self._require(job_id)["records"].append(record)

    def set_job_error(self, job_id: str, error: Dict) -> None:
        """Set the error record for a job"""
        self._require(job_id)["error"] = error

    def mark_job_finished(self, job_id: str, status: str = "finished") -> None:
        """Mark a job as finished with timestamp"""
        job = self._require(job_id)
        job["status"] = status
        job["finished_at"] = datetime.now(UTC).isoformat()
        logger.debug(f"Job {job_id} marked {status}")
