# src/algebraicgalois/core/jobs.py
"""
This module defines the data structures and manager for the verification jobs
run by the ``check`` driver. Job ids are ``<suite>/<name>`` so that reports are
reproducible.
"""
import threading
from dataclasses import dataclass, field
from datetime import datetime
from enum import Enum
from typing import Any, Dict, List, Optional


class JobStatus(Enum):
    """Enumeration for the possible statuses of a verification job."""
    PENDING = "pending"
    RUNNING = "running"
    COMPLETED = "completed"
    FAILED = "failed"


@dataclass
class JobInfo:
    """
    A data class to hold all information about a single verification job.
    ``blocking`` jobs fail the suite; the others only contribute warnings.
    """
    job_id: str
    name: str
    suite: str
    status: JobStatus
    start_time: datetime
    blocking: bool = True
    end_time: Optional[datetime] = None
    details: Dict[str, Any] = field(default_factory=dict)
    errors: List[str] = field(default_factory=list)

    @property
    def duration_ms(self) -> Optional[float]:
        if self.end_time is None:
            return None
        return (self.end_time - self.start_time).total_seconds() * 1000.0

    @property
    def passed(self) -> bool:
        return self.status == JobStatus.COMPLETED and not self.errors

    def to_json(self) -> Dict[str, Any]:
        """Everything except wall-clock times."""
        return {
            "id": self.job_id,
            "name": self.name,
            "suite": self.suite,
            "status": self.status.value,
            "blocking": self.blocking,
            "passed": self.passed,
            "details": self.details,
            "errors": list(self.errors),
        }


class JobManager:
    """
    A thread-safe manager for creating, updating, and retrieving information
    about verification jobs. It stores job information in memory.
    """
    def __init__(self):
        self.jobs: Dict[str, JobInfo] = {}
        self.lock = threading.Lock()

    def create_job(self, suite: str, name: str, blocking: bool = True) -> str:
        job_id = f"{suite}/{name}"
        with self.lock:
            self.jobs[job_id] = JobInfo(
                job_id=job_id,
                name=name,
                suite=suite,
                status=JobStatus.PENDING,
                start_time=datetime.now(),
                blocking=blocking,
            )
        return job_id

    def update_job(self, job_id: str, **kwargs):
        """Updates the information for a specific job in a thread-safe manner."""
        with self.lock:
            if job_id in self.jobs:
                job = self.jobs[job_id]
                for key, value in kwargs.items():
                    if hasattr(job, key):
                        setattr(job, key, value)

    def get_job(self, job_id: str) -> Optional[JobInfo]:
        with self.lock:
            return self.jobs.get(job_id)

    def list_jobs(self) -> List[JobInfo]:
        """All jobs sorted by suite and name."""
        with self.lock:
            return sorted(self.jobs.values(), key=lambda j: (j.suite, j.name))

    def failed_blocking(self) -> List[JobInfo]:
        return [j for j in self.list_jobs() if j.blocking and not j.passed]

    def warnings(self) -> List[JobInfo]:
        return [j for j in self.list_jobs() if not j.blocking and not j.passed]
