"""Fourientations, their digraphs, constraint systems, and reversal moves."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import (
    Arc,
    Cocycle,
    Digraph,
    Multigraph,
    classify_arc,
    enumerate_directed_cycles,
    mask_to_set,
    reaches,
    set_to_mask,
)

__all__ = [
    "EdgeConfig",
    "Fourientation",
    "ConstraintSystem",
    "realize",
    "augment",
    "is_valid",
    "satisfies_conditions",
    "is_valid_simple",
    "reverse_cycle",
    "reverse_cocycle",
    "is_ab_cocycle",
    "has_two_way_cycle",
    "has_zero_way_cocycle",
    "constraints_root_component",
    "constraints_cover",
]


class EdgeConfig(enum.IntEnum):
    """State of one edge relative to its reference orientation.

    Bit 0 marks the forward arc as present and bit 1 the backward arc, so the
    integer value doubles as a two-bit arc mask.
    """

    ZERO_WAY = 0
    FORWARD = 1
    BACKWARD = 2
    TWO_WAY = 3

    @property
    def solid(self) -> bool:
        return self in (EdgeConfig.ZERO_WAY, EdgeConfig.TWO_WAY)

    @property
    def one_way(self) -> bool:
        return not self.solid

    def reversed(self) -> "EdgeConfig":
        if self is EdgeConfig.FORWARD:
            return EdgeConfig.BACKWARD
        if self is EdgeConfig.BACKWARD:
            return EdgeConfig.FORWARD
        return self


_SYMBOLS = {0: ".", 1: ">", 2: "<", 3: "="}


@dataclass(frozen=True)
class Fourientation:
    graph: Multigraph
    config: tuple[EdgeConfig, ...]

    def __post_init__(self):
        config = tuple(EdgeConfig(c) for c in self.config)
        if len(config) != self.graph.n_edges:
            raise ValueError(f"expected {self.graph.n_edges} edge configs, got {len(config)}")
        object.__setattr__(self, "config", config)

    @classmethod
    def orientation(cls, graph: Multigraph, backward: Iterable[int] = ()) -> "Fourientation":
        """Orientation with every edge forward except those listed."""
        back = set(backward)
        return cls(graph, tuple(EdgeConfig.BACKWARD if i in back else EdgeConfig.FORWARD for i in range(graph.n_edges)))

    @classmethod
    def subgraph(cls, graph: Multigraph, present: Iterable[int]) -> "Fourientation":
        """All-solid fourientation: listed edges 2-way, the rest 0-way."""
        keep = set(present)
        return cls(graph, tuple(EdgeConfig.TWO_WAY if i in keep else EdgeConfig.ZERO_WAY for i in range(graph.n_edges)))

    def edges_in(self, *states: EdgeConfig) -> frozenset[int]:
        return frozenset(i for i, c in enumerate(self.config) if c in states)

    @property
    def solid_edges(self) -> frozenset[int]:
        return self.edges_in(EdgeConfig.ZERO_WAY, EdgeConfig.TWO_WAY)

    @property
    def solid_mask(self) -> int:
        return set_to_mask(self.solid_edges)

    @property
    def two_way_edges(self) -> frozenset[int]:
        return self.edges_in(EdgeConfig.TWO_WAY)

    @property
    def zero_way_edges(self) -> frozenset[int]:
        return self.edges_in(EdgeConfig.ZERO_WAY)

    def replace(self, edge: int, state: EdgeConfig) -> "Fourientation":
        config = list(self.config)
        config[edge] = EdgeConfig(state)
        return Fourientation(self.graph, tuple(config))

    def __str__(self) -> str:
        return "".join(_SYMBOLS[int(c)] for c in self.config)


def _dedupe(pairs: Iterable[Sequence[int]]) -> tuple[tuple[int, int], ...]:
    out = []
    seen = set()
    for p in pairs:
        u, v = (int(x) for x in p)
        if u < 0 or v < 0:
            raise ValueError(f"negative vertex id in constraint pair {(u, v)}")
        if (u, v) not in seen:
            seen.add((u, v))
            out.append((u, v))
    return tuple(out)


@dataclass(frozen=True)
class ConstraintSystem:
    """Ordered pairs ``A`` (must stay acyclic) and ``B`` (must become cyclic).

    A pair ``(u, v)`` is added to the digraph as the arc ``u -> v``, so the
    constraint is about whether ``v`` can reach ``u``. Repeated pairs are
    dropped; the same pair may appear in both lists.
    """

    A: tuple[tuple[int, int], ...] = ()
    B: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "A", _dedupe(self.A))
        object.__setattr__(self, "B", _dedupe(self.B))

    @property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        return self.A + self.B

    @property
    def is_empty(self) -> bool:
        return not self.A and not self.B

    def check(self, n_vertices: int) -> None:
        for name, pairs in (("A", self.A), ("B", self.B)):
            for u, v in pairs:
                if u >= n_vertices or v >= n_vertices:
                    raise ValueError(f"constraint {name} pair {(u, v)} is outside [0, {n_vertices})")

    def relabel(self, perm: Sequence[int]) -> "ConstraintSystem":
        return ConstraintSystem(
            tuple((perm[u], perm[v]) for u, v in self.A),
            tuple((perm[u], perm[v]) for u, v in self.B),
        )

    def constraint_arcs(self) -> list[Arc]:
        return [Arc(u, v, ("A", j)) for j, (u, v) in enumerate(self.A)] + [
            Arc(u, v, ("B", j)) for j, (u, v) in enumerate(self.B)
        ]


EMPTY = ConstraintSystem()


def _edge_arcs(phi: Fourientation) -> list[Arc]:
    arcs = []
    for i, ((t, h), c) in enumerate(zip(phi.graph.edges, phi.config)):
        if c & 1:
            arcs.append(Arc(t, h, ("E", i, 1)))
        if c & 2:
            arcs.append(Arc(h, t, ("E", i, -1)))
    return arcs


def realize(phi: Fourientation) -> Digraph:
    return Digraph(phi.graph.n_vertices, tuple(_edge_arcs(phi)))


def augment(phi: Fourientation, c: ConstraintSystem) -> Digraph:
    """The digraph of ``phi`` with the constraint pairs added as labeled arcs."""
    c.check(phi.graph.n_vertices)
    return Digraph(phi.graph.n_vertices, tuple(_edge_arcs(phi) + c.constraint_arcs()))


def is_valid(phi: Fourientation, c: ConstraintSystem) -> bool:
    """Every A-arc acyclic and every B-arc cyclic in the augmented digraph."""
    d = augment(phi, c)
    for j in range(len(c.A)):
        if classify_arc(d, d.arc(("A", j))) != "acyclic":
            return False
    for j in range(len(c.B)):
        if classify_arc(d, d.arc(("B", j))) != "cyclic":
            return False
    return True


def satisfies_conditions(phi: Fourientation, c: ConstraintSystem) -> bool:
    """Validity phrased through reachability: for ``(u, v)`` in A, ``v`` cannot
    reach ``u``; for ``(u, v)`` in B it can. Reachability is in the augmented digraph."""
    d = augment(phi, c)
    return all(not reaches(d, v, u) for u, v in c.A) and all(reaches(d, v, u) for u, v in c.B)


def is_valid_simple(phi: Fourientation, c: ConstraintSystem) -> bool:
    """The naive reading of the constraints, without adding the pairs as arcs.

    Kept as a negative control: it does not give equal orientation and
    subgraph counts in general.
    """
    c.check(phi.graph.n_vertices)
    d = realize(phi)
    return all(not reaches(d, v, u) for u, v in c.A) and all(reaches(d, v, u) for u, v in c.B)


def reverse_cycle(phi: Fourientation, cycle: Sequence[Arc]) -> Fourientation:
    """Flip the 1-way edges along a directed cycle of ``phi``; 2-way edges stay."""
    d = realize(phi)
    cycle = [a if isinstance(a, Arc) else Arc(*a) for a in cycle]
    if not cycle:
        raise ValueError("not a directed cycle: empty arc list")
    for a in cycle:
        if a not in d:
            raise ValueError(f"not a directed cycle: {a!r} is not an arc of the fourientation")
    for a, b in zip(cycle, cycle[1:] + cycle[:1]):
        if a.head != b.tail:
            raise ValueError("not a directed cycle: consecutive arcs do not connect")
    if len({a.tail for a in cycle}) != len(cycle) or len({a.label[:2] for a in cycle}) != len(cycle):
        raise ValueError("not a directed cycle: a vertex or an edge is repeated")
    config = list(phi.config)
    for a in cycle:
        i = a.label[1]
        config[i] = config[i].reversed()
    return Fourientation(phi.graph, tuple(config))


def _cut_mask(cut) -> int:
    if isinstance(cut, Cocycle):
        return cut.mask
    if isinstance(cut, int):
        return cut
    return set_to_mask(cut)


def is_ab_cocycle(phi: Fourientation, c: ConstraintSystem, cut) -> bool:
    """Whether ``cut`` (the side ``V1``) defines a directed cocycle of the
    augmented digraph that avoids every constraint arc."""
    d = augment(phi, c)
    side1 = _cut_mask(cut)
    if side1 <= 0 or side1 >= (1 << d.n_vertices) - 1:
        return False
    crossing = False
    for a in d.arcs:
        t_in, h_in = bool(side1 >> a.tail & 1), bool(side1 >> a.head & 1)
        if t_in == h_in:
            continue
        if h_in or a.label[0] != "E":
            return False
        crossing = True
    return crossing


def reverse_cocycle(phi: Fourientation, c: ConstraintSystem, cut) -> Fourientation:
    """Flip the 1-way edges across an (A,B)-cocycle; 0-way edges stay.

    ``cut`` is the source side ``V1``, given as a vertex set, a bitmask, or a
    :class:`Cocycle`.
    """
    side1 = _cut_mask(cut)
    if not is_ab_cocycle(phi, c, side1):
        raise ValueError(f"not an (A,B)-cocycle: side {sorted(mask_to_set(max(side1, 0)))}")
    config = list(phi.config)
    for i, (t, h) in enumerate(phi.graph.edges):
        if bool(side1 >> t & 1) != bool(side1 >> h & 1):
            config[i] = config[i].reversed()
    return Fourientation(phi.graph, tuple(config))


def has_two_way_cycle(phi: Fourientation) -> bool:
    two_way = Fourientation(phi.graph, tuple(c if c == EdgeConfig.TWO_WAY else EdgeConfig.ZERO_WAY for c in phi.config))
    return bool(enumerate_directed_cycles(realize(two_way)))


def has_zero_way_cocycle(phi: Fourientation, c: ConstraintSystem = EMPTY) -> bool:
    """Some cut has only 0-way graph edges crossing it (at least one) and no constraint pair across it."""
    g = phi.graph
    c.check(g.n_vertices)
    full = (1 << g.n_vertices) - 1
    edges = [(1 << t, 1 << h, cfg == EdgeConfig.ZERO_WAY) for (t, h), cfg in zip(g.edges, phi.config) if t != h]
    pairs = [(1 << u, 1 << v) for u, v in c.pairs if u != v]
    for side1 in range(1, full):
        if any(bool(side1 & u) != bool(side1 & v) for u, v in pairs):
            continue
        crossing = [zero for t, h, zero in edges if bool(side1 & t) != bool(side1 & h)]
        if crossing and all(crossing):
            return True
    return False


def constraints_root_component(n_vertices: int, u: int, U: Iterable[int]) -> ConstraintSystem:
    """Constraints whose valid subgraphs are those where the component of ``u`` is exactly ``U``."""
    U = set(U)
    if not U <= set(range(n_vertices)):
        raise ValueError("U must be a subset of the vertex set")
    if u not in U:
        raise ValueError(f"root {u} must belong to U")
    A = tuple((u, v) for v in range(n_vertices) if v not in U)
    B = tuple((u, v) for v in sorted(U))
    return ConstraintSystem(A, B)


def constraints_cover(n_vertices: int, X: Iterable[int], Y: Iterable[int]) -> ConstraintSystem:
    """Constraints whose valid subgraphs have every component meeting both ``X`` and ``Y``."""
    X, Y = sorted(set(X)), sorted(set(Y))
    V = set(range(n_vertices))
    if not (set(X) | set(Y) <= V):
        raise ValueError("X and Y must be subsets of the vertex set")
    if set(X) | set(Y) != V:
        raise ValueError("X and Y must cover the vertex set")
    return ConstraintSystem((), tuple((x, y) for x in X for y in Y))
