# src\logging.py
# Overrides the built-in print function to route tagged diagnostics to stderr and a log file with timestamps.
# Untagged prints (reports, CSV, instance text) still go to stdout untouched.
# The previous log is rotated on startup, keeping rotated logs for 7 days.

import builtins
import os
import sys
import shutil
import datetime
import threading
from typing import Any
from config.env_vars import DEBUG_ENABLED, CONSOLE_LOG_LEVEL, LOG_TO_FILE, LOG_DIR, LOG_LEVELS, load_log

PRINT_PREFIX = "LOG MANAGER"

LOG_FILE_NAME = "solver_logs.log"
ROTATED_DIR_NAME = "rotated_logs"
KEEP_DAYS = 7

# Reference to the original print function
original_print = builtins.print

log_lock = threading.Lock()

solver_logs = None # Opened by _open_log when LOG_TO_FILE is set

def _level_of(text: str) -> str | None:
    """Return the level tag a diagnostic line starts with, or None for plain output."""
    if not text.startswith("["):
        return None
    tag = text[1:text.find("]")] if "]" in text else ""
    if tag == "WARN":
        return "WARNING"
    return tag if tag in LOG_LEVELS else None

def logging_print(*args: Any, **kwargs: Any) -> None:
    """Custom print function for logging purposes."""
    text_output = " ".join(str(arg) for arg in args)
    level = _level_of(text_output)

    # Untagged output and prints aimed at other files are not diagnostics
    if level is None or kwargs.get("file", sys.stderr) is not sys.stderr:
        original_print(*args, **kwargs)
        return
    kwargs.pop("file", None)

    if level == "DEBUG" and not DEBUG_ENABLED:
        return

    if LOG_LEVELS.index(level) >= LOG_LEVELS.index(CONSOLE_LOG_LEVEL):
        original_print(*args, file=sys.stderr, **kwargs)

    if solver_logs is not None:
        log_line = f"[{datetime.datetime.now().strftime('%Y-%m-%d %H:%M:%S')}] {text_output}\n"
        with log_lock:
            solver_logs.write(log_line)
            solver_logs.flush() # Force write to file

def _open_log() -> None:
    """Open the active log file in append mode."""
    global solver_logs
    solver_logs = open(os.path.join(LOG_DIR, LOG_FILE_NAME), "a")

def rotate_log_on_startup() -> None:
    """
    Rotate the previous run's log file before the new run starts writing.

    1. solver_logs.log -> rotated_logs/YYYY-MM-DD/solver_logs_<i>.log (first free i)
    2. rotated day directories older than 7 days are deleted
    3. a fresh solver_logs.log is opened
    """
    now = datetime.datetime.now()
    active_log_path = os.path.join(LOG_DIR, LOG_FILE_NAME)
    notes: list[str] = [] # Held until the new log is open

    with log_lock:
        today_log_dir = os.path.join(LOG_DIR, ROTATED_DIR_NAME, now.strftime("%Y-%m-%d"))
        if os.path.exists(active_log_path) and os.path.getsize(active_log_path) > 0:
            os.makedirs(today_log_dir, exist_ok=True)
            file_number = 1
            rotated_log_path = os.path.join(today_log_dir, f"solver_logs_{file_number}.log")
            while os.path.exists(rotated_log_path):
                file_number += 1
                rotated_log_path = os.path.join(today_log_dir, f"solver_logs_{file_number}.log")
            os.rename(active_log_path, rotated_log_path)
            notes.append(f"[DEBUG] [{PRINT_PREFIX}] Previous log rotated to {rotated_log_path}")

        for i in range(KEEP_DAYS + 1, 30):
            old_date_suffix = (now - datetime.timedelta(days=i)).strftime("%Y-%m-%d")
            old_log_dir = os.path.join(LOG_DIR, ROTATED_DIR_NAME, old_date_suffix)
            if os.path.exists(old_log_dir):
                try:
                    shutil.rmtree(old_log_dir)
                    notes.append(f"[DEBUG] [{PRINT_PREFIX}] Deleted old log directory: {old_log_dir}")
                except OSError as e:
                    notes.append(f"[ERROR] [{PRINT_PREFIX}] Failed to delete old log directory {old_log_dir}: {e}")

        _open_log()

    for note in notes:
        print(note)


# Override the built-in print function
builtins.print = logging_print

if LOG_TO_FILE:
    os.makedirs(os.path.join(LOG_DIR, ROTATED_DIR_NAME), exist_ok=True)
    rotate_log_on_startup()

# Replay config messages queued before the override existed
for queued_msg in load_log:
    print(queued_msg)
load_log.clear()
