# workers/evaluation_worker.py
"""
Bounded worker pool fanning per-series jobs out to threads
"""
import asyncio
import logging
from typing import Callable, Generic, List, Sequence, Tuple, TypeVar

from config import settings
from utils import track_metric, log_event

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


class EvaluationWorker(Generic[T, R]):
    """Runs `job` on every item with at most `max_workers` jobs in flight"""

    def __init__(
        self,
        job: Callable[[T], R],
        name: Callable[[T], str],
        max_workers: int = settings.MAX_WORKERS,
    ):
        self.job = job
        self.name = name
        self.max_workers = max(1, max_workers)
        self.failures: List[Tuple[str, str]] = []

    async def start(self, items: Sequence[T]) -> List[Tuple[str, R]]:
        """Process every item; results sorted by item name, failures kept in self.failures"""
        queue: asyncio.Queue = asyncio.Queue()
        for item in items:
            queue.put_nowait(item)

        results: List[Tuple[str, R]] = []
        n_workers = min(self.max_workers, len(items))
        logger.info(f"Starting {n_workers} workers for {len(items)} series")

        tasks = [asyncio.create_task(self._worker(i, queue, results)) for i in range(n_workers)]
        await asyncio.gather(*tasks)

        log_event(
            "batch_completed",
            {"processed": len(results), "failed": len(self.failures), "workers": n_workers},
        )
        return sorted(results, key=lambda pair: pair[0])

    def run(self, items: Sequence[T]) -> List[Tuple[str, R]]:
        return asyncio.run(self.start(items))

    async def _worker(self, worker_id: int, queue: asyncio.Queue, results: List[Tuple[str, R]]):
        """Individual worker process"""
        logger.debug(f"Worker {worker_id} started")

        while True:
            try:
                item = queue.get_nowait()
            except asyncio.QueueEmpty:
                break

            name = self.name(item)
            try:
                result = await asyncio.to_thread(self.job, item)
                results.append((name, result))
                track_metric("series_processed", 1, {"worker": str(worker_id)})
                logger.debug(f"Worker {worker_id} processed {name}")
            except Exception as e:
                logger.error(f"Worker {worker_id} failed on {name}: {e}")
                track_metric("processing_errors", 1, {"worker": str(worker_id)})
                self.failures.append((name, str(e)))
            finally:
                queue.task_done()
