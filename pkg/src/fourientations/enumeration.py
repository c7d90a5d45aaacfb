"""Exhaustive counting of valid fourientations and of constrained subgraphs."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator

import numpy as np

from . import _batch
from .errors import SizeGuardError
from .fourientation import EMPTY, ConstraintSystem, EdgeConfig, Fourientation, is_valid
from .graph import DisjointSet, Multigraph, connected_components, set_to_mask

__all__ = [
    "CountReport",
    "MAX_EDGES_ALL_S",
    "MAX_EDGES_SINGLE_S",
    "SUBGRAPH_FAMILIES",
    "iterate_fourientations",
    "count_valid",
    "count_valid_bruteforce",
    "verify_theorem_main",
    "is_forest",
    "is_ab_connected",
    "count_subgraph_family",
]

MAX_EDGES_ALL_S = 14
MAX_EDGES_SINGLE_S = 24

_SOLID_STATES = (EdgeConfig.ZERO_WAY, EdgeConfig.TWO_WAY)
_ONE_WAY_STATES = (EdgeConfig.FORWARD, EdgeConfig.BACKWARD)


@dataclass(frozen=True)
class CountReport:
    """Counts keyed by solid-set bitmask, in increasing bitmask order."""

    counts: dict[int, int]

    @property
    def verdict(self) -> bool:
        return len(set(self.counts.values())) <= 1

    @property
    def value(self) -> int | None:
        """The common count when the verdict holds."""
        return next(iter(self.counts.values())) if self.verdict and self.counts else None

    def orientations_vs_subgraphs(self) -> tuple[int, int]:
        full = max(self.counts)
        return self.counts[0], self.counts[full]


def _as_mask(s) -> int:
    return s if isinstance(s, int) else set_to_mask(s)


def iterate_fourientations(g: Multigraph, s=0, start: int = 0, stop: int | None = None) -> Iterator[Fourientation]:
    """The ``2**|E|`` fourientations with solid set ``s``, in lexicographic config order.

    ``s`` is an edge bitmask or an edge collection. ``start``/``stop`` select a
    contiguous slice of that order so independent workers can split the stream.
    """
    s = _as_mask(s)
    choices = [_SOLID_STATES if s >> i & 1 else _ONE_WAY_STATES for i in range(g.n_edges)]
    total = 1 << g.n_edges
    stop = total if stop is None else min(stop, total)
    for k, config in enumerate(product(*choices)):
        if k >= stop:
            break
        if k >= start:
            yield Fourientation(g, config)


def _count_chunk(args) -> int:
    g, c, s, start, stop = args
    configs = _batch.configs_for_solid(g.n_edges, s, start, stop)
    return int(np.count_nonzero(_batch.valid_mask(g, configs, c.A, c.B)))


def count_valid(
    g: Multigraph,
    c: ConstraintSystem = EMPTY,
    s=0,
    *,
    workers: int = 1,
    max_edges: int = MAX_EDGES_SINGLE_S,
) -> int:
    """Number of valid fourientations with solid set ``s``.

    Runs on bit-packed batches; with ``workers > 1`` the chunks go to a process pool.
    """
    if g.n_edges > max_edges:
        raise SizeGuardError("|E|", g.n_edges, max_edges)
    c.check(g.n_vertices)
    s = _as_mask(s)
    jobs = [(g, c, s, a, b) for a, b in _batch.chunk_ranges(1 << g.n_edges)]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return sum(pool.map(_count_chunk, jobs))
    return sum(map(_count_chunk, jobs))


def count_valid_bruteforce(g: Multigraph, c: ConstraintSystem = EMPTY, s=0) -> int:
    """Reference count: one strong-component computation per fourientation."""
    return sum(is_valid(phi, c) for phi in iterate_fourientations(g, s))


def verify_theorem_main(g: Multigraph, c: ConstraintSystem = EMPTY, *, max_edges: int = MAX_EDGES_ALL_S) -> CountReport:
    """Count valid fourientations for every solid set at once.

    All ``4**|E|`` fourientations are evaluated once and binned by solid set.
    The orientation count is the entry for ``0`` and the subgraph count the
    entry for the full mask.
    """
    m = g.n_edges
    if m > max_edges:
        raise SizeGuardError("|E|", m, max_edges)
    c.check(g.n_vertices)
    counts = np.zeros(1 << m, dtype=np.int64)
    for start, stop in _batch.chunk_ranges(1 << (2 * m)):
        configs = _batch.all_configs(m, start, stop)
        ok = _batch.valid_mask(g, configs, c.A, c.B)
        counts += np.bincount(_batch.solid_masks(configs[ok]), minlength=1 << m)
    return CountReport({s: int(k) for s, k in enumerate(counts)})


def is_forest(g: Multigraph, sub: Iterable[int]) -> bool:
    """No cycle among the chosen edges; a loop or a parallel pair is a cycle."""
    ds = DisjointSet(g.n_vertices)
    for i in sub:
        t, h = g.edges[i]
        if not ds.union(t, h):
            return False
    return True


def is_ab_connected(g: Multigraph, sub: Iterable[int], c: ConstraintSystem = EMPTY) -> bool:
    """Adding the constraint pairs as undirected edges, ``sub`` has the same components as ``g``."""
    sub_graph = Multigraph(g.n_vertices, tuple(g.edges[i] for i in sub))
    return connected_components(sub_graph, c.pairs) == connected_components(g, c.pairs)


SUBGRAPH_FAMILIES = ("all", "forests", "ab_connected", "ab_connected_forests")


def count_subgraph_family(g: Multigraph, c: ConstraintSystem = EMPTY, family: str = "all", require_valid: bool = True) -> int:
    if family not in SUBGRAPH_FAMILIES:
        raise ValueError(f"unknown subgraph family {family!r}; expected one of {SUBGRAPH_FAMILIES}")
    want_forest = family in ("forests", "ab_connected_forests")
    want_connected = family in ("ab_connected", "ab_connected_forests")
    total = 0
    for bits in range(1 << g.n_edges):
        sub = [i for i in range(g.n_edges) if bits >> i & 1]
        if want_forest and not is_forest(g, sub):
            continue
        if want_connected and not is_ab_connected(g, sub, c):
            continue
        if require_valid and not is_valid(Fourientation.subgraph(g, sub), c):
            continue
        total += 1
    return total
