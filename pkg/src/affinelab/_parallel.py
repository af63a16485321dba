"""Deterministic replicate-parallel driver.

Tasks receive disjoint index ranges and write into preallocated,
index-keyed storage, so results are identical for any thread count or
completion order.  Threading is a throughput knob only.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

_CHUNK = 512


def parallel_ranges(n: int, threads: int, task) -> None:
    """Run ``task(lo, hi)`` over a fixed partition of range(n)."""
    n = int(n)
    threads = max(1, int(threads))
    ranges = [(lo, min(lo + _CHUNK, n)) for lo in range(0, n, _CHUNK)]
    if threads == 1 or len(ranges) == 1:
        for lo, hi in ranges:
            task(lo, hi)
        return
    with ThreadPoolExecutor(max_workers=threads) as pool:
        futures = [pool.submit(task, lo, hi) for lo, hi in ranges]
        for fut in futures:
            fut.result()


__all__ = ["parallel_ranges"]
