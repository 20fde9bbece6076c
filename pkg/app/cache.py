# app/cache.py
import os
from collections import OrderedDict
from typing import Any, Hashable, Optional


class ReportCache:
    """Least-recently-used store for verification reports.

    Reports are deterministic for a given request, so nothing expires;
    the bound only caps memory.
    """

    def __init__(self, maxsize: Optional[int] = None):
        self.maxsize = max(1, int(maxsize if maxsize is not None else os.getenv("ALLIANCE_REPORT_CACHE_SIZE", 32)))
        self.store: "OrderedDict[Hashable, Any]" = OrderedDict()

    def get(self, key: Hashable) -> Any:
        if key not in self.store:
            return None
        self.store.move_to_end(key)
        return self.store[key]

    def set(self, key: Hashable, value: Any) -> None:
        self.store[key] = value
        self.store.move_to_end(key)
        while len(self.store) > self.maxsize:
            self.store.popitem(last=False)

    def clear(self) -> None:
        self.store.clear()
