"""Deterministic decomposition of index ranges into contiguous blocks.

Scans and censuses process each block independently and merge tallies by
addition (and defect indices by minimum), so results never depend on the
block count.
"""

from __future__ import annotations


def index_blocks(lo: int, hi: int, shards: int) -> list[tuple[int, int]]:
    """Split the inclusive range [lo, hi] into at most `shards` blocks."""
    if shards < 1:
        raise ValueError(f"shards must be positive, got {shards}")
    total = hi - lo + 1
    if total <= 0:
        return []
    shards = min(shards, total)
    base, extra = divmod(total, shards)
    blocks = []
    start = lo
    for i in range(shards):
        size = base + (1 if i < extra else 0)
        blocks.append((start, start + size - 1))
        start += size
    return blocks
