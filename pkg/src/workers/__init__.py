# src\workers\__init__.py
# Worker processes for fanning verification trials out of the main process.

from .queue import WorkerQueue

WORKER_QUEUE = WorkerQueue() # Global worker queue instance
