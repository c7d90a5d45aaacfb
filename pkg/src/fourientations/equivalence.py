"""Cycle, cocycle and cycle-cocycle reversal classes of valid fourientations.

Classes are the connected components of the move graph whose edges are single
reversals, computed with union-find over the explicitly enumerated members.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from . import _batch
from .enumeration import MAX_EDGES_ALL_S, CountReport, _as_mask
from .errors import SizeGuardError
from .fourientation import (
    EMPTY,
    ConstraintSystem,
    EdgeConfig,
    Fourientation,
    augment,
    has_two_way_cycle,
    has_zero_way_cocycle,
    realize,
)
from .graph import Arc, DisjointSet, Multigraph, enumerate_directed_cocycles, enumerate_directed_cycles

__all__ = [
    "ReversalMode",
    "ClassInfo",
    "ClassPartition",
    "cycle_moves",
    "cocycle_moves",
    "equivalence_classes",
    "filter_valid_classes",
    "verify_theorem_eqclass",
    "verify_theorem_eqclass_all",
    "outdegree_signature",
    "c_flow",
]


class ReversalMode(str, enum.Enum):
    CYC = "cyc"
    COC = "coc"
    CC = "cc"

    @property
    def uses_cycles(self) -> bool:
        return self is not ReversalMode.COC

    @property
    def uses_cocycles(self) -> bool:
        return self is not ReversalMode.CYC


@dataclass(frozen=True)
class ClassInfo:
    representative: Fourientation
    two_way_mask: int
    zero_way_mask: int
    size: int


@dataclass(frozen=True)
class ClassPartition:
    mode: ReversalMode
    solid_mask: int
    members: tuple[Fourientation, ...]
    member_class: tuple[int, ...]
    classes: tuple[ClassInfo, ...]

    def __len__(self) -> int:
        return len(self.classes)

    @property
    def representatives(self) -> list[Fourientation]:
        return [k.representative for k in self.classes]

    def class_members(self, k: int) -> list[Fourientation]:
        return [phi for phi, j in zip(self.members, self.member_class) if j == k]


def _flip(config: tuple[int, ...], edges) -> tuple[int, ...]:
    out = list(config)
    for i in edges:
        if out[i] == 1 or out[i] == 2:
            out[i] = 3 - out[i]
    return tuple(out)


def cycle_moves(phi: Fourientation) -> Iterator[tuple[tuple[Arc, ...], Fourientation]]:
    """Each directed cycle of ``phi`` that contains a 1-way edge, with the result of reversing it."""
    config = tuple(int(x) for x in phi.config)
    for cycle in enumerate_directed_cycles(realize(phi)):
        target = _flip(config, (a.label[1] for a in cycle))
        if target != config:
            yield cycle, Fourientation(phi.graph, target)


def cocycle_moves(phi: Fourientation, c: ConstraintSystem = EMPTY):
    """Each (A,B)-cocycle of ``phi`` with the result of reversing it."""
    config = tuple(int(x) for x in phi.config)
    d = augment(phi, c)
    forbidden = [a.label for a in d.arcs if a.label[0] != "E"]
    for cut in enumerate_directed_cocycles(d, forbidden):
        yield cut, Fourientation(phi.graph, _flip(config, (a.label[1] for a in cut.arcs)))


def _neighbours(phi: Fourientation, c: ConstraintSystem, mode: ReversalMode) -> list[tuple[int, ...]]:
    out = []
    if mode.uses_cycles:
        out.extend(tuple(int(x) for x in psi.config) for _, psi in cycle_moves(phi))
    if mode.uses_cocycles:
        out.extend(tuple(int(x) for x in psi.config) for _, psi in cocycle_moves(phi, c))
    return out


def _edge_mask(config: Sequence[int], state: int) -> int:
    return sum(1 << i for i, x in enumerate(config) if x == state)


def _partition(g: Multigraph, mode: ReversalMode, solid_mask: int, configs: list[tuple[int, ...]], edges_of) -> ClassPartition:
    configs = sorted(configs)
    index = {cfg: k for k, cfg in enumerate(configs)}
    ds = DisjointSet(len(configs))
    for k, cfg in enumerate(configs):
        for target in edges_of(cfg):
            j = index.get(target)
            if j is None:
                raise RuntimeError(f"reversal move left the valid set: {cfg} -> {target}")
            ds.union(k, j)
    groups = ds.groups()  # sorted by least member, i.e. by representative
    member_class = [0] * len(configs)
    classes = []
    for k, group in enumerate(groups):
        for j in group:
            member_class[j] = k
        rep = configs[group[0]]
        classes.append(
            ClassInfo(Fourientation(g, rep), _edge_mask(rep, 3), _edge_mask(rep, 0), len(group))
        )
    members = tuple(Fourientation(g, cfg) for cfg in configs)
    return ClassPartition(mode, solid_mask, members, tuple(member_class), tuple(classes))


def _valid_configs(g: Multigraph, c: ConstraintSystem, solid_mask: int) -> list[tuple[int, ...]]:
    configs = _batch.configs_for_solid(g.n_edges, solid_mask)
    ok = _batch.valid_mask(g, configs, c.A, c.B)
    return [tuple(int(x) for x in row) for row in configs[ok]]


def equivalence_classes(
    g: Multigraph,
    c: ConstraintSystem = EMPTY,
    s=0,
    mode: ReversalMode | str = ReversalMode.CYC,
    *,
    max_edges: int = MAX_EDGES_ALL_S,
) -> ClassPartition:
    """Reversal classes of the valid fourientations with solid set ``s``."""
    if g.n_edges > max_edges:
        raise SizeGuardError("|E|", g.n_edges, max_edges)
    c.check(g.n_vertices)
    mode = ReversalMode(mode)
    s = _as_mask(s)
    configs = _valid_configs(g, c, s)
    return _partition(g, mode, s, configs, lambda cfg: _neighbours(Fourientation(g, cfg), c, mode))


def _class_is_valid(info: ClassInfo, c: ConstraintSystem, mode: ReversalMode) -> bool:
    rep = info.representative
    if mode.uses_cycles and has_two_way_cycle(rep):
        return False
    if mode.uses_cocycles and has_zero_way_cocycle(rep, c):
        return False
    return True


def filter_valid_classes(p: ClassPartition, g: Multigraph, c: ConstraintSystem = EMPTY, mode: ReversalMode | str | None = None) -> ClassPartition:
    """Drop classes with an all-2-way cycle (cyc, cc) or an all-0-way (A,B)-cut (coc, cc)."""
    mode = p.mode if mode is None else ReversalMode(mode)
    if mode is not p.mode:
        raise ValueError(f"partition was built for mode {p.mode.value!r}, not {mode.value!r}")
    if p.members and p.members[0].graph != g:
        raise ValueError("partition belongs to a different graph")
    keep = [k for k, info in enumerate(p.classes) if _class_is_valid(info, c, mode)]
    renumber = {k: j for j, k in enumerate(keep)}
    members, member_class = [], []
    for phi, k in zip(p.members, p.member_class):
        if k in renumber:
            members.append(phi)
            member_class.append(renumber[k])
    return ClassPartition(mode, p.solid_mask, tuple(members), tuple(member_class), tuple(p.classes[k] for k in keep))


def verify_theorem_eqclass(
    g: Multigraph, c: ConstraintSystem = EMPTY, mode: ReversalMode | str = ReversalMode.CYC, *, max_edges: int = MAX_EDGES_ALL_S
) -> CountReport:
    """Number of valid classes for every solid set, in increasing bitmask order."""
    return verify_theorem_eqclass_all(g, c, (mode,), max_edges=max_edges)[ReversalMode(mode)]


def verify_theorem_eqclass_all(
    g: Multigraph,
    c: ConstraintSystem = EMPTY,
    modes: Sequence[ReversalMode | str] = tuple(ReversalMode),
    *,
    max_edges: int = MAX_EDGES_ALL_S,
) -> dict[ReversalMode, CountReport]:
    """Class counts for several modes, sharing one pass of move generation.

    Moves never change the solid set, so one union-find per mode over all
    ``4**|E|`` valid fourientations yields the classes of every solid set.
    """
    m = g.n_edges
    if m > max_edges:
        raise SizeGuardError("|E|", m, max_edges)
    c.check(g.n_vertices)
    modes = [ReversalMode(x) for x in modes]

    configs = _batch.all_configs(m)
    ok = _batch.valid_mask(g, configs, c.A, c.B)
    valid = [tuple(int(x) for x in row) for row in configs[ok]]
    index = {cfg: k for k, cfg in enumerate(valid)}

    need_cyc = any(x.uses_cycles for x in modes)
    need_coc = any(x.uses_cocycles for x in modes)
    cyc_edges, coc_edges = [], []
    for cfg in valid:
        phi = Fourientation(g, cfg)
        cyc_edges.append([index[tuple(int(x) for x in psi.config)] for _, psi in cycle_moves(phi)] if need_cyc else [])
        coc_edges.append([index[tuple(int(x) for x in psi.config)] for _, psi in cocycle_moves(phi, c)] if need_coc else [])

    solid_of = [_edge_mask(cfg, 0) | _edge_mask(cfg, 3) for cfg in valid]
    reports = {}
    for mode in modes:
        ds = DisjointSet(len(valid))
        for k in range(len(valid)):
            if mode.uses_cycles:
                for j in cyc_edges[k]:
                    ds.union(k, j)
            if mode.uses_cocycles:
                for j in coc_edges[k]:
                    ds.union(k, j)
        counts = np.zeros(1 << m, dtype=np.int64)
        for group in ds.groups():
            cfg = valid[group[0]]
            info = ClassInfo(Fourientation(g, cfg), _edge_mask(cfg, 3), _edge_mask(cfg, 0), len(group))
            if _class_is_valid(info, c, mode):
                counts[solid_of[group[0]]] += 1
        reports[mode] = CountReport({s: int(k) for s, k in enumerate(counts)})
    return reports


def outdegree_signature(phi: Fourientation, contract_two_way: bool = False) -> tuple[int, ...]:
    """Per-vertex number of outgoing 1-way arcs.

    Cycle reversal preserves this vector when ``phi`` has no 2-way edges. With
    2-way edges only the contracted version is preserved: pass
    ``contract_two_way=True`` to give each vertex the total over the component
    of the 2-way subgraph containing it.
    """
    g = phi.graph
    out = [0] * g.n_vertices
    for (t, h), cfg in zip(g.edges, phi.config):
        if cfg == EdgeConfig.FORWARD:
            out[t] += 1
        elif cfg == EdgeConfig.BACKWARD:
            out[h] += 1
    if not contract_two_way:
        return tuple(out)
    ds = DisjointSet(g.n_vertices)
    for i in phi.two_way_edges:
        ds.union(*g.edges[i])
    totals: dict[int, int] = {}
    for v, k in enumerate(out):
        totals[ds.find(v)] = totals.get(ds.find(v), 0) + k
    return tuple(totals[ds.find(v)] for v in range(g.n_vertices))


def c_flow(phi: Fourientation, traversal: Sequence[Arc]) -> int:
    """Number of 1-way edges of ``phi`` oriented along a traversal of a cycle.

    ``traversal`` is a closed walk given by arcs labeled like those of the
    doubled graph; constraint arcs in it are skipped.
    """
    flow = 0
    for a in traversal:
        if a.label[0] != "E":
            continue
        i, direction = a.label[1], a.label[2]
        want = EdgeConfig.FORWARD if direction == 1 else EdgeConfig.BACKWARD
        flow += phi.config[i] == want
    return flow
