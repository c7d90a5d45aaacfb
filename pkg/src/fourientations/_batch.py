"""Vectorised evaluation of many fourientations of one graph at once.

A batch is a ``uint8`` array of shape ``(N, m)`` holding edge configs (the
``EdgeConfig`` integer values). Everything here is bookkeeping around
:func:`fourientations.graph.closure_masks`.
"""

from __future__ import annotations

from typing import Iterator, Sequence

import numpy as np

from .graph import Multigraph, closure_masks

CHUNK_BITS = 16


def adjacency_masks(g: Multigraph, configs: np.ndarray, extra_arcs: Sequence[tuple[int, int]] = ()) -> np.ndarray:
    n = g.n_vertices
    adj = np.zeros((configs.shape[0], n), dtype=np.int64)
    for i, (t, h) in enumerate(g.edges):
        col = configs[:, i].astype(np.int64)
        adj[:, t] |= (col & 1) << h
        adj[:, h] |= ((col >> 1) & 1) << t
    for u, v in extra_arcs:
        adj[:, u] |= np.int64(1) << v
    return adj


def reach_masks(g: Multigraph, configs: np.ndarray, extra_arcs: Sequence[tuple[int, int]] = ()) -> np.ndarray:
    return closure_masks(adjacency_masks(g, configs, extra_arcs))


def valid_mask(g: Multigraph, configs: np.ndarray, A: Sequence[tuple[int, int]], B: Sequence[tuple[int, int]]) -> np.ndarray:
    """Boolean validity for each row: ``v`` cannot reach ``u`` for A-pairs, can for B-pairs."""
    reach = reach_masks(g, configs, list(A) + list(B))
    ok = np.ones(configs.shape[0], dtype=bool)
    for u, v in A:
        ok &= ((reach[:, v] >> u) & 1) == 0
    for u, v in B:
        ok &= ((reach[:, v] >> u) & 1) == 1
    return ok


def one_way_cyclic(g: Multigraph, configs: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Per row and edge: is the edge 1-way, and if so is its arc cyclic (no constraint arcs)."""
    reach = reach_masks(g, configs)
    one_way = (configs == 1) | (configs == 2)
    cyclic = np.zeros(configs.shape, dtype=bool)
    for i, (t, h) in enumerate(g.edges):
        fwd = ((reach[:, h] >> t) & 1) == 1
        bwd = ((reach[:, t] >> h) & 1) == 1
        cyclic[:, i] = np.where(configs[:, i] == 1, fwd, bwd) & one_way[:, i]
    return one_way, cyclic


def configs_for_solid(m: int, solid_mask: int, start: int = 0, stop: int | None = None) -> np.ndarray:
    """Rows ``start:stop`` of the lexicographic list of fourientations with solid set ``solid_mask``.

    Solid edges take 0-way/2-way, the others forward/backward; edge 0 varies slowest.
    """
    total = 1 << m
    stop = total if stop is None else min(stop, total)
    idx = np.arange(start, stop, dtype=np.int64)
    out = np.empty((idx.size, m), dtype=np.uint8)
    for i in range(m):
        bit = ((idx >> (m - 1 - i)) & 1).astype(np.uint8)
        if solid_mask >> i & 1:
            out[:, i] = bit * 3
        else:
            out[:, i] = bit + 1
    return out


def all_configs(m: int, start: int = 0, stop: int | None = None) -> np.ndarray:
    """Rows ``start:stop`` of all ``4**m`` configs in lexicographic order."""
    total = 1 << (2 * m)
    stop = total if stop is None else min(stop, total)
    idx = np.arange(start, stop, dtype=np.int64)
    out = np.empty((idx.size, m), dtype=np.uint8)
    for i in range(m):
        out[:, i] = ((idx >> (2 * (m - 1 - i))) & 3).astype(np.uint8)
    return out


def solid_masks(configs: np.ndarray) -> np.ndarray:
    solid = (configs == 0) | (configs == 3)
    weights = np.int64(1) << np.arange(configs.shape[1], dtype=np.int64)
    return (solid.astype(np.int64) * weights).sum(axis=1)


def chunk_ranges(total: int, chunk: int = 1 << CHUNK_BITS) -> Iterator[tuple[int, int]]:
    for start in range(0, total, chunk):
        yield start, min(start + chunk, total)
