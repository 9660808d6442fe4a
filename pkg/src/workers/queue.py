# src\workers\queue.py
# Worker queue management

PRINT_PREFIX = "WORKER QUEUE"

# Standard library imports
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .worker import Worker


class WorkerQueue:
    def __init__(self):
        self._workers: list["Worker"] = []
        self._worker_index = 0

    def __len__(self) -> int:
        return len(self._workers)

    def _get_nearest_running_worker(self) -> "Worker | None":
        """Returns the nearest running worker in the queue."""
        for _ in range(len(self._workers)):
            worker = self.get_worker(search=False) # Avoid infinite recursion by disabling search
            if worker is not None and worker.running:
                return worker
        print(f"[ERROR] [{PRINT_PREFIX}] No running workers available.")
        return None

    def get_worker(self, search: bool = True) -> "Worker | None":
        """Returns the next worker in the queue using round-robin scheduling."""
        if not self._workers:
            return None
        if self._worker_index >= len(self._workers):
            self._worker_index = 0
        worker = self._workers[self._worker_index]
        self._worker_index += 1
        if not worker.running and search:
            print(f"[WARNING] [{PRINT_PREFIX}] Worker {worker.index} is not running.")
            return self._get_nearest_running_worker()
        print(f"[DEBUG] [{PRINT_PREFIX}] Assigned Worker {worker.index} to task.")
        return worker

    def add_worker(self, worker: "Worker") -> int:
        """Adds a worker to the worker queue.
        Returns the index of the added worker.
        """
        self._workers.append(worker)
        print(f"[DEBUG] [{PRINT_PREFIX}] Added Worker {len(self._workers) - 1} to the queue.")
        return len(self._workers) - 1

    def remove_all(self) -> list["Worker"]:
        """Empties the queue and returns the workers that were in it."""
        workers, self._workers = self._workers, []
        self._worker_index = 0
        return workers
