"""
Batched search for subsets with many distinct word images.

Spaces stream out of the backtracking generator in a fixed order and
are scanned in fixed-size batches with numpy: one closure table per
space, one image table per canonical word, then a sort over the
fourteen images counts the distinct ones for every (space, subset)
pair at once.  Work splits across processes by the first neighborhood
row, and chunk results merge in row order, so the reported witnesses
do not depend on the worker count.
"""

import os
from multiprocessing import get_context

import numpy as np

from .monoid import WORDS
from .spaces import MAX_ENUM_POINTS, _preorder_rows

BATCH = 2048
FULL_ORBIT = 14


def _scan_chunk(args):
    """Scan every space whose first row is fixed; return
    (spaces scanned, best orbit, witness rows, witness mask)."""
    n, first_row = args
    full = (1 << n) - 1
    masks = np.arange(full + 1, dtype=np.int32)
    weights = 1 << np.arange(n, dtype=np.int32)
    state = [0, 0, None, 0]   # count, best size, best rows, best mask
    buf = []

    def flush():
        if not buf:
            return
        u = np.array(buf, dtype=np.int32)
        hits = (u[:, :, None] & masks[None, None, :]) != 0
        cl = (hits * weights[None, :, None]).sum(axis=1, dtype=np.int32)
        imgs = {"": np.broadcast_to(masks, cl.shape)}
        for w in WORDS[1:]:
            prev = imgs[w[:-1]]
            imgs[w] = full - prev if w[-1] == "C" \
                else np.take_along_axis(cl, prev, axis=1)
        stack = np.sort(np.stack([imgs[w] for w in WORDS]), axis=0)
        distinct = (np.diff(stack, axis=0) != 0).sum(axis=0) + 1
        sizes = distinct.max(axis=1)
        top = int(sizes.max())
        if top > state[1]:
            s = int(np.argmax(sizes))
            state[1] = top
            state[2] = buf[s]
            state[3] = int(np.argmax(distinct[s] == top))
        state[0] += len(buf)
        buf.clear()

    for rows in _preorder_rows(n, first_row):
        buf.append(rows)
        if len(buf) >= BATCH:
            flush()
            if state[1] >= FULL_ORBIT:
                break
    flush()
    return tuple(state)


def run_search(max_n, threads=None):
    """Largest orbit for each point count up to max_n.

    The witness is the first space in generation order reaching the
    maximum, with the least subset mask; both are independent of the
    thread count.  Stops early once some orbit hits all fourteen.
    """
    if not 1 <= max_n <= MAX_ENUM_POINTS:
        raise ValueError("search capped at %d points" % MAX_ENUM_POINTS)
    if threads is None:
        threads = min(8, os.cpu_count() or 1)
    out = []
    for n in range(1, max_n + 1):
        args = [(n, f) for f in range(1, 1 << n, 2)]
        if threads > 1 and len(args) > 1:
            with get_context("fork").Pool(min(threads, len(args))) as pool:
                parts = pool.map(_scan_chunk, args)
        else:
            parts = [_scan_chunk(a) for a in args]
        best = max(p[1] for p in parts)
        rows, mask = next((p[2], p[3]) for p in parts if p[1] == best)
        out.append({
            "n": n,
            "spaces_scanned": sum(p[0] for p in parts),
            "max_orbit": best,
            "witness_space": list(rows),
            "witness_set": mask,
        })
        if best >= FULL_ORBIT:
            break
    return out
