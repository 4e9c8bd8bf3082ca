import asyncio
from typing import Callable, Iterable


async def run_sweep(fn: Callable, items: Iterable, jobs: int = 1) -> list:
    """
    fn(item) for every item on worker threads, at most `jobs` at a time.
    Results come back in item order whatever the completion order.
    """
    gate = asyncio.Semaphore(max(1, jobs))

    async def one(item):
        async with gate:
            return await asyncio.to_thread(fn, item)

    return await asyncio.gather(*(one(item) for item in items))
