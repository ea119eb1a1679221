"""Provide a logging facility shared by the drivers and the runner."""

import logging
import threading
from typing import Any, List, Tuple


class NornirLogger:
    """Wrap a Python logger and keep the failures and warnings raised while trials run.

    Drivers run on worker threads, so the kept messages are guarded by a lock.
    """

    def __init__(self, name: str, debug: bool = False):
        """Initialize the object."""
        self.logger = logging.getLogger(name)
        self.debug = debug
        self.messages: List[Tuple[str, str, str]] = []
        self._lock = threading.Lock()

    def _keep(self, level: str, obj: Any, message: str):
        with self._lock:
            self.messages.append((level, str(obj), message))

    def log_debug(self, message: str):
        """Debug, does not take obj, and is only emitted when running in debug mode."""
        if self.debug:
            self.logger.debug(message)

    def log_info(self, obj: Any, message: str):
        """Log to the Python logger for info messages."""
        self.logger.info("%s | %s", str(obj), message)

    def log_success(self, obj: Any, message: str):
        """Log to the Python logger for success messages."""
        self.logger.info("%s | %s", str(obj), message)

    def log_warning(self, obj: Any, message: str):
        """Log to the Python logger and keep the warning."""
        self._keep("warning", obj, message)
        self.logger.warning("%s | %s", str(obj), message)

    def log_failure(self, obj: Any, message: str):
        """Log to the Python logger and keep the failure."""
        self._keep("failure", obj, message)
        self.logger.error("%s | %s", str(obj), message)

    def failures(self) -> List[Tuple[str, str]]:
        """(obj, message) pairs of every failure seen so far."""
        with self._lock:
            return [(obj, message) for level, obj, message in self.messages if level == "failure"]
