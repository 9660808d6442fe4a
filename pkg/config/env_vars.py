# config\env_vars.py
# Load environment variables from .env file

PRINT_PREFIX = "ENV VARS"

import os
from dotenv import load_dotenv
from typing import Optional

load_dotenv(dotenv_path=os.path.join(os.path.dirname(__file__), '.env'))

LOG_LEVELS: tuple[str, ...] = ("DEBUG", "INFO", "WARNING", "ERROR")

load_log: list[str] = [] # Held until src.logging installs the print override

def _get_env_int(key: str, default: Optional[int | str] = None) -> int:
    """Helper function to get integer from environment with error handling"""
    value = os.getenv(key, default)
    if value is None:
        raise ValueError(f"Required environment variable {key} not found")
    try:
        load_log.append(f"[DEBUG] [{PRINT_PREFIX}] Loaded integer env var {key}={value}")
        return int(value)
    except ValueError:
        raise ValueError(f"Environment variable {key} must be a valid integer, got: {value}")

def _get_env_bool(key: str, default: Optional[bool | str] = None) -> bool:
    """Helper function to get boolean from environment"""
    value = os.getenv(key)
    if value is None:
        if default is None:
            raise ValueError(f"Required environment variable {key} not found")
        value = str(default)
        load_log.append(f"[DEBUG] [{PRINT_PREFIX}] Using default boolean env var {key}={value}")
    else:
        load_log.append(f"[DEBUG] [{PRINT_PREFIX}] Loaded boolean env var {key}={value}")
    return value.lower() in ('true', '1', 'yes')

def _get_env_str(key: str, default: Optional[str] = None, choices: Optional[tuple[str, ...]] = None) -> str:
    """Helper function to get a string from environment, optionally restricted to a set of choices"""
    value = os.getenv(key, default)
    if value is None:
        raise ValueError(f"Required environment variable {key} not found")
    if choices is not None and value.upper() not in choices:
        raise ValueError(f"Environment variable {key} must be one of {', '.join(choices)}, got: {value}")
    load_log.append(f"[DEBUG] [{PRINT_PREFIX}] Loaded string env var {key}={value}")
    return value.upper() if choices is not None else value

# LOGGING
DEBUG_ENABLED: bool = _get_env_bool("DEBUG_ENABLED", "False")
CONSOLE_LOG_LEVEL: str = _get_env_str("CONSOLE_LOG_LEVEL", "WARNING", choices=LOG_LEVELS) # Diagnostics below this level only reach the log file
LOG_TO_FILE: bool = _get_env_bool("LOG_TO_FILE", "True")
LOG_DIR: str = _get_env_str("LOG_DIR", "logs")

# VERIFICATION WORKERS
VERIFY_WORKERS: int = _get_env_int("VERIFY_WORKERS", 0) # 0 runs every trial in the main process
TASK_TIMEOUT_SECONDS: int = _get_env_int("TASK_TIMEOUT_SECONDS", 120)

# BENCHMARKS
BENCH_DEFAULT_REPEATS: int = _get_env_int("BENCH_DEFAULT_REPEATS", 3)
