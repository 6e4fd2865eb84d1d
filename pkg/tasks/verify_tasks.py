# tasks/verify_tasks.py
import logging
from typing import List

from celery import group, shared_task

from algorithms.corpus import verify_entry

logger = logging.getLogger(__name__)


@shared_task(name="verify_corpus_entry", bind=True)
def verify_corpus_entry(self, entry: dict, tolerance: float = None, timings: bool = False) -> List[dict]:
    """Rows of one corpus entry; the work is deterministic, so failures are not retried."""
    logger.info("Task %s verifying %s", self.request.id, entry.get("graph_id"))
    return verify_entry(entry, tolerance, timings)


def verify_in_parallel(entries: List[dict], tolerance: float = None, timings: bool = False) -> List[dict]:
    """One task per entry as a Celery group; rows come back in input order."""
    job = group(verify_corpus_entry.s(entry, tolerance, timings) for entry in entries)
    result = job.apply_async()
    rows: List[dict] = []
    for child in result.results:
        rows.extend(child.get(disable_sync_subtasks=False))
    return rows
