"""
Thread pool helper for partitioned support counting.
"""

from concurrent.futures import ThreadPoolExecutor
from typing import Any, Callable, List, Optional, Sequence
import logging

logger = logging.getLogger(__name__)


class ThreadPoolManager:
    """Runs a function over work items, in order, on a bounded thread pool."""

    def __init__(self, max_workers: int = 1):
        self.max_workers = max(1, int(max_workers))
        self._executor: Optional[ThreadPoolExecutor] = None

    def __enter__(self) -> "ThreadPoolManager":
        self.start()
        return self

    def __exit__(self, *exc: Any) -> None:
        self.stop()

    def start(self):
        """Initialize thread pool."""
        if self.max_workers > 1 and self._executor is None:
            self._executor = ThreadPoolExecutor(max_workers=self.max_workers, thread_name_prefix="scr-count")

    def stop(self):
        """Shutdown thread pool."""
        if self._executor:
            self._executor.shutdown(wait=True)
            self._executor = None

    def map(self, func: Callable, items: Sequence[Any]) -> List[Any]:
        """Execute func over items; results keep the input order."""
        if self.max_workers == 1 or len(items) <= 1:
            return [func(item) for item in items]
        if not self._executor:
            self.start()
        logger.debug("dispatching %d work items to %d threads", len(items), self.max_workers)
        return list(self._executor.map(func, items))
