"""Order-preserving parallel map for independent numeric tasks.

numpy and scipy release the GIL inside matrix products and eigensolvers, so
a thread pool is enough. Results come back in input order, which keeps every
reduction over them deterministic.
"""

from __future__ import annotations

import os
from collections.abc import Callable, Iterable
from concurrent.futures import ThreadPoolExecutor
from typing import TypeVar

T = TypeVar("T")
R = TypeVar("R")

#: Upper bound on worker threads; each oracle chunk holds a dense bit matrix.
MAX_WORKERS = 4


def worker_count(tasks: int) -> int:
    return max(1, min(tasks, MAX_WORKERS, os.cpu_count() or 1))


def parallel_map(fn: Callable[[T], R], items: Iterable[T]) -> list[R]:
    """``[fn(item) for item in items]``, computed on a thread pool when it pays."""
    work = list(items)
    workers = worker_count(len(work))
    if workers == 1:
        return [fn(item) for item in work]
    with ThreadPoolExecutor(max_workers=workers, thread_name_prefix="hsx") as pool:
        return list(pool.map(fn, work))
