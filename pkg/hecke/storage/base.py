from abc import ABC, abstractmethod
from typing import Dict, Optional


class RecordStorage(ABC):
    """
    Abstract base class for job storage implementations.
    Holds job state and the records each job emits.
    """

    @abstractmethod
    def create_job(self, job_id: str, job_data: Dict) -> None:
        """Create a new job with the specified ID and data"""
        pass

    @abstractmethod
    def get_job(self, job_id: str) -> Optional[Dict]:
        """Get a job by ID"""
        pass

    @abstractmethod
    def update_job_status(self, job_id: str, status: str) -> None:
        """Update a job's status"""
        pass

    @abstractmethod
    def add_record(self, job_id: str, record: Dict) -> None:
        """Append an emitted record to a job"""
        pass

    @abstractmethod
    def set_job_error(self, job_id: str, error: Dict) -> None:
        """Set the error record for a job"""
        pass

    @abstractmethod
    def mark_job_finished(self, job_id: str, status: str = "finished") -> None:
        """Mark a job as finished with timestamp"""
        pass
