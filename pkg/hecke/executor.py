"""Job execution orchestration"""

import asyncio
import time
import uuid
from datetime import datetime, timezone
from typing import Callable, Dict, List, Optional

from hecke.constants import JobStatus, logger
from hecke.errors import HeckeError, MathDomainError, ValidationError
from hecke.storage.base import RecordStorage

UTC = timezone.utc


def default_error_record(error: Exception) -> Dict:
    if isinstance(error, HeckeError):
        return error.to_record()
    return {"code": "internal_error", "message": str(error)}


def create_job(command: str, config: Dict, storage: RecordStorage) -> str:
    """Record a new job and return its id"""
    job_id = str(uuid.uuid4())
    storage.create_job(
        job_id,
        {
            "id": job_id,
            "command": command,
            "config": config,
            "status": JobStatus.CREATED,
            "created_at": datetime.now(UTC).isoformat(),
            "finished_at": None,
            "error": None,
        },
    )
    return job_id


async def execute_job(
    job_id: str,
    runner: Callable[[], List[Dict]],
    storage: RecordStorage,
    error_to_record: Optional[Callable[[Exception], Dict]] = None,
) -> Dict:
    """Run a job in a worker thread and store its records.

    Failures are logged and kept on the job as an error record; the final
    job state is returned either way.
    """
    error_to_record = error_to_record or default_error_record
    start = time.perf_counter()
    try:
        storage.update_job_status(job_id, JobStatus.RUNNING)
        job = storage.get_job(job_id)
        logger.info(f"Job {job_id}: running {job.get('command') if job else '?'}")

        records = await asyncio.to_thread(runner)
        for record in records:
            storage.add_record(job_id, record)

        storage.mark_job_finished(job_id, JobStatus.FINISHED)
    except Exception as e:
        if isinstance(e, (ValidationError, MathDomainError)):
            logger.warning(f"Job {job_id} rejected: {e.code}: {e.message}")
        else:
            logger.exception(f"Error executing job {job_id}")
        storage.update_job_status(job_id, JobStatus.FAILED)
        storage.set_job_error(job_id, error_to_record(e))
        storage.mark_job_finished(job_id, JobStatus.FAILED)
    finally:
        logger.info(f"Job {job_id}: finished in {time.perf_counter() - start:.2f}s")
    return storage.get_job(job_id)
