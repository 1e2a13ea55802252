import typing as t
from concurrent.futures import ThreadPoolExecutor

from vertexlab.base.env import ENV_VERTEXLAB_THREADS, get_int_setting

_T = t.TypeVar("_T")
_R = t.TypeVar("_R")


def worker_count() -> int:
    """Return the configured size of the worker pool."""
    return get_int_setting(ENV_VERTEXLAB_THREADS, minimum=1)


def parallel_map(
    fn: t.Callable[[_T], _R],
    items: t.Iterable[_T],
    max_workers: int | None = None,
) -> list[_R]:
    """Apply `fn` to every item on a thread pool, preserving input order.

    A pool of one worker (or a single item) runs inline.
    """
    work = list(items)
    workers = min(max_workers or worker_count(), len(work))
    if workers <= 1:
        return [fn(item) for item in work]

    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, work))
