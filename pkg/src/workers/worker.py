# src\workers\worker.py
# Worker object: one child process that runs verification trials off the main process

PRINT_PREFIX = "WORKER"

# Standard library imports
import concurrent.futures
from concurrent.futures import Future, ProcessPoolExecutor
from typing import Any, Callable, Sequence

from . import WORKER_QUEUE


class Worker:
    def __init__(self):
        self.executor: ProcessPoolExecutor | None = None
        self.index = None # Will be set when added to WORKER_QUEUE
        self.running = False

        self.tasks_performed = 0

    def __str__(self):
        return f"Worker#{self.index}: running={self.running}, tasks={self.tasks_performed}"

    def start(self) -> None:
        """Starts the worker process pool."""
        self.index = WORKER_QUEUE.add_worker(self)
        if self.executor is None:
            self.executor = ProcessPoolExecutor(max_workers=1)
            self.running = True
            print(f"[DEBUG] [{PRINT_PREFIX}] Worker {self.index} started.")

    def stop(self) -> None:
        if self.executor is not None:
            self.executor.shutdown(wait=True, cancel_futures=True)
            self.executor = None
        self.running = False
        print(f"[DEBUG] [{PRINT_PREFIX}] Worker {self.index} stopped after {self.tasks_performed} task(s).")

    def submit_task(self, task_function: Callable, *args: Any) -> Future | None:
        """
        Queues a task on this worker without waiting for it.
        task_function must be a module-level function so it can be sent to the child process.

        Returns:
            Future | None: the pending result, None if the worker is not running
        """
        if not self.running or self.executor is None:
            print(f"[ERROR] [{PRINT_PREFIX}] Worker {self.index} is not running. Cannot execute task.")
            return None
        print(f"[DEBUG] [{PRINT_PREFIX}] Worker {self.index} queued task {task_function.__name__}.")
        return self.executor.submit(task_function, *args)

    def collect(self, future: Future, task_name: str, task_timeout: float | None) -> Any:
        """
        Waits for a submitted task.

        Args:
            future: value returned by submit_task
            task_name: name used in log lines
            task_timeout (float | None):
                None: Wait indefinitely for task completion.
                >0: Wait up to N seconds for task completion.

        Returns:
            any: The task's result, None if it timed out or raised an exception.
        """
        try:
            result = future.result(timeout=task_timeout)
            self.tasks_performed += 1
            return result
        except concurrent.futures.TimeoutError:
            print(f"[ERROR] [{PRINT_PREFIX}] Worker {self.index} task {task_name} timed out.")
            return None
        except Exception as e:
            print(f"[ERROR] [{PRINT_PREFIX}] Worker {self.index} task {task_name} raised an exception: {e}")
            return None


def start_workers(count: int) -> None:
    """Starts `count` workers in the global WORKER_QUEUE."""
    for _ in range(count):
        Worker().start()
    print(f"[INFO] [{PRINT_PREFIX}] {count} worker(s) started.")


def stop_workers() -> None:
    for worker in WORKER_QUEUE.remove_all():
        worker.stop()


def map_with_fallback(task_function: Callable, task_args: Sequence[tuple], task_timeout: float | None) -> list[Any]:
    """
    Runs task_function over task_args, offloading to queued workers round-robin.
    Results come back in argument order. A task whose worker is missing, times out or fails is
    run again in the main process.
    """
    pending: list[tuple[Worker | None, Future | None]] = []
    for args in task_args:
        worker = WORKER_QUEUE.get_worker()
        future = worker.submit_task(task_function, *args) if worker is not None else None
        pending.append((worker, future))

    results = []
    for args, (worker, future) in zip(task_args, pending):
        result = worker.collect(future, task_function.__name__, task_timeout) if future is not None else None
        if result is None:
            if worker is not None:
                print(f"[WARNING] [{PRINT_PREFIX}] Offloading {task_function.__name__} failed. Falling back to main process.")
            result = task_function(*args)
        results.append(result)
    return results
