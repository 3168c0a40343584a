"""Order-preserving parallel map for embarrassingly parallel sweeps.

Results are reassembled in input order, so sweep outputs are identical for any
worker count. Functions passed here must be module-level (picklable).
"""

from __future__ import annotations

import multiprocessing


def pmap(fn, items, jobs: int = 1, chunksize: int | None = None) -> list:
    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    jobs = min(jobs, len(items))
    if chunksize is None:
        chunksize = max(1, len(items) // (jobs * 8))
    with multiprocessing.Pool(jobs) as pool:
        return pool.map(fn, items, chunksize=chunksize)
