"""Multigraphs, labeled digraphs, and the reachability machinery built on them.

Vertices are the integers ``0 .. n-1``. Arc labels record where an arc came
from: ``("E", i, +1)`` / ``("E", i, -1)`` for the forward / backward arc of
graph edge ``i``, and ``("A", j)`` / ``("B", j)`` for the ``j``-th constraint
arc. Vertex sets are often passed around as integer bitmasks, which keeps the
exhaustive searches cheap at the sizes this package targets.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

import numpy as np

__all__ = [
    "Multigraph",
    "Arc",
    "Digraph",
    "SccDecomposition",
    "Cocycle",
    "DisjointSet",
    "scc",
    "reachable_from",
    "reaches",
    "classify_arc",
    "enumerate_directed_cycles",
    "enumerate_directed_cocycles",
    "connected_components",
    "closure_masks",
    "mask_to_set",
    "set_to_mask",
]


def mask_to_set(mask: int) -> frozenset[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return frozenset(out)


def set_to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Multigraph:
    """Undirected multigraph; the pair order of each edge fixes its reference orientation.

    Loops and parallel edges are allowed. The edge index is the identity of an
    edge everywhere else in the package.
    """

    n_vertices: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.n_vertices < 0:
            raise ValueError("n_vertices must be nonnegative")
        edges = tuple((int(t), int(h)) for t, h in self.edges)
        for i, (t, h) in enumerate(edges):
            if not (0 <= t < self.n_vertices and 0 <= h < self.n_vertices):
                raise ValueError(f"edge {i} = {(t, h)} has an endpoint outside [0, {self.n_vertices})")
        object.__setattr__(self, "edges", edges)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(self.n_vertices)

    def relabel(self, perm: Sequence[int]) -> "Multigraph":
        """Apply the vertex permutation ``v -> perm[v]``."""
        return Multigraph(self.n_vertices, tuple((perm[t], perm[h]) for t, h in self.edges))


class Arc(NamedTuple):
    tail: int
    head: int
    label: tuple


@dataclass(frozen=True)
class Digraph:
    n_vertices: int
    arcs: tuple[Arc, ...] = ()

    def __post_init__(self):
        arcs = tuple(a if isinstance(a, Arc) else Arc(*a) for a in self.arcs)
        seen = set()
        for a in arcs:
            if not (0 <= a.tail < self.n_vertices and 0 <= a.head < self.n_vertices):
                raise ValueError(f"arc {a} has an endpoint outside [0, {self.n_vertices})")
            if a.label in seen:
                raise ValueError(f"duplicate arc label {a.label!r}")
            seen.add(a.label)
        object.__setattr__(self, "arcs", arcs)

    @cached_property
    def out_arcs(self) -> tuple[tuple[Arc, ...], ...]:
        out: list[list[Arc]] = [[] for _ in range(self.n_vertices)]
        for a in self.arcs:
            out[a.tail].append(a)
        return tuple(tuple(x) for x in out)

    @cached_property
    def successor_masks(self) -> tuple[int, ...]:
        masks = [0] * self.n_vertices
        for a in self.arcs:
            masks[a.tail] |= 1 << a.head
        return tuple(masks)

    @cached_property
    def _label_index(self) -> dict:
        return {a.label: a for a in self.arcs}

    def arc(self, label) -> Arc:
        try:
            return self._label_index[label]
        except KeyError:
            raise KeyError(f"unknown arc label {label!r}") from None

    def __contains__(self, a) -> bool:
        return self._label_index.get(a.label) == a


@dataclass(frozen=True)
class SccDecomposition:
    """Strong components numbered in a topological order of the condensation."""

    component_id: tuple[int, ...]
    component_count: int

    @property
    def components(self) -> list[frozenset[int]]:
        comps: list[set[int]] = [set() for _ in range(self.component_count)]
        for v, c in enumerate(self.component_id):
            comps[c].add(v)
        return [frozenset(c) for c in comps]

    @property
    def order(self) -> tuple[int, ...]:
        return tuple(range(self.component_count))


def scc(d: Digraph) -> SccDecomposition:
    """Tarjan's algorithm, iterative so deep graphs do not hit the recursion limit.

    Arcs of ``d`` go from a lower to a higher component id, or stay inside one.
    """
    n = d.n_vertices
    succ = [[a.head for a in arcs] for arcs in d.out_arcs]
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    emitted: list[list[int]] = []
    counter = 0

    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, i = work[-1]
            if i < len(succ[v]):
                work[-1] = (v, i + 1)
                w = succ[v][i]
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, 0))
                elif on_stack[w]:
                    low[v] = min(low[v], index[w])
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                emitted.append(comp)

    # Tarjan emits sinks first.
    count = len(emitted)
    comp_id = [0] * n
    for k, comp in enumerate(emitted):
        for v in comp:
            comp_id[v] = count - 1 - k
    return SccDecomposition(tuple(comp_id), count)


def reachable_from(d: Digraph, source: int) -> int:
    """Bitmask of the vertices reachable from ``source`` (``source`` included)."""
    succ = d.successor_masks
    seen = 1 << source
    frontier = seen
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= succ[low.bit_length() - 1]
            f ^= low
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def reaches(d: Digraph, source: int, target: int) -> bool:
    return bool(reachable_from(d, source) >> target & 1)


def classify_arc(d: Digraph, a: Arc) -> str:
    """Return ``"cyclic"`` if ``a`` lies on a directed cycle of ``d``, else ``"acyclic"``."""
    if a not in d:
        raise ValueError(f"unknown arc {a!r}")
    comp = scc(d).component_id
    return "cyclic" if comp[a.head] == comp[a.tail] else "acyclic"


def _underlying_edge(label) -> tuple:
    # The two arcs of one graph edge share an underlying edge; constraint arcs are their own.
    return label[:2]


def enumerate_directed_cycles(d: Digraph) -> list[tuple[Arc, ...]]:
    """All directed cycles of ``d``, each reported once up to rotation.

    A cycle visits each vertex at most once and uses each underlying edge at
    most once, so the two arcs of a single 2-way edge do not form a cycle while
    two parallel edges do. Loops are cycles of length one. Each cycle starts at
    its smallest vertex; output is sorted by (length, arc list).
    """
    out_arcs = d.out_arcs
    cycles: list[tuple[Arc, ...]] = []
    for start in range(d.n_vertices):
        for a in out_arcs[start]:
            if a.head == start:
                cycles.append((a,))
        path: list[Arc] = []
        visited = 1 << start

        def extend(v: int) -> None:
            nonlocal visited
            for a in out_arcs[v]:
                w = a.head
                if w == start:
                    if path and (len(path) > 1 or _underlying_edge(path[0].label) != _underlying_edge(a.label)):
                        cycles.append(tuple(path) + (a,))
                    continue
                if w < start or visited >> w & 1:
                    continue
                path.append(a)
                visited |= 1 << w
                extend(w)
                visited &= ~(1 << w)
                path.pop()

        extend(start)
    cycles.sort(key=lambda c: (len(c), c))
    return cycles


class Cocycle(NamedTuple):
    side1: frozenset[int]
    side2: frozenset[int]
    arcs: tuple[Arc, ...]

    @property
    def mask(self) -> int:
        return set_to_mask(self.side1)


def enumerate_directed_cocycles(d: Digraph, forbidden: Iterable = ()) -> list[Cocycle]:
    """Every bipartition ``V1 | V2`` cut only by arcs going ``V1 -> V2``.

    The crossing arc set must be nonempty, and no arc whose label is in
    ``forbidden`` may cross in either direction. Bipartitions are scanned by
    the bitmask of ``V1`` in increasing order.
    """
    forbidden = set(forbidden)
    n = d.n_vertices
    full = (1 << n) - 1
    arcs = [(a, 1 << a.tail, 1 << a.head, a.label in forbidden) for a in d.arcs if a.tail != a.head]
    out = []
    for side1 in range(1, full):
        crossing = []
        ok = True
        for a, t, h, bad in arcs:
            t_in, h_in = bool(side1 & t), bool(side1 & h)
            if t_in == h_in:
                continue
            if bad or h_in:
                ok = False
                break
            crossing.append(a)
        if ok and crossing:
            out.append(Cocycle(mask_to_set(side1), mask_to_set(full & ~side1), tuple(crossing)))
    return out


class DisjointSet:
    """Union-find over ``0 .. n-1`` with path halving and union by size."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x: int, y: int) -> bool:
        """Merge the sets of ``x`` and ``y``; False if they were already merged."""
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if self.size[rx] < self.size[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        self.size[rx] += self.size[ry]
        return True

    def groups(self) -> list[list[int]]:
        by_root: dict[int, list[int]] = {}
        for x in range(len(self.parent)):
            by_root.setdefault(self.find(x), []).append(x)
        return sorted(by_root.values())


def connected_components(g: Multigraph, extra_edges: Iterable[tuple[int, int]] = ()) -> list[frozenset[int]]:
    """Components of ``g`` plus ``extra_edges`` read as undirected edges, sorted by least vertex."""
    ds = DisjointSet(g.n_vertices)
    for t, h in g.edges:
        ds.union(t, h)
    for t, h in extra_edges:
        ds.union(t, h)
    return [frozenset(c) for c in ds.groups()]


def closure_masks(adj: np.ndarray) -> np.ndarray:
    """Batched reflexive-transitive closure of bit-packed adjacency rows.

    ``adj`` has shape ``(N, n)``; bit ``w`` of ``adj[k, v]`` says that digraph
    ``k`` has an arc ``v -> w``. The result has the same layout with bit ``w``
    of row ``v`` set iff ``v`` reaches ``w``. Warshall's elimination order,
    vectorised over the batch.
    """
    n = adj.shape[1]
    if n > 63:
        raise ValueError("bit-packed closure supports at most 63 vertices")
    reach = adj.astype(np.int64, copy=True)
    reach |= (np.int64(1) << np.arange(n, dtype=np.int64))[None, :]
    for k in range(n):
        through_k = (reach >> k) & 1
        reach |= through_k * reach[:, k : k + 1]
    return reach
