"""Randomised property checks shared by the unit tests and the acceptance suite.

Each ``check_*`` function draws one case from ``rng``, asserts the property,
and returns the number of elementary facts it verified (0 when the drawn case
was vacuous every time it was retried).
"""

from __future__ import annotations

import random

from fourientations import (
    Arc,
    Digraph,
    Fourientation,
    augment,
    enumerate_directed_cocycles,
    enumerate_directed_cycles,
    equivalence_classes,
    is_valid,
    iterate_fourientations,
    outdegree_signature,
    realize,
    reverse_cocycle,
    reverse_cycle,
)
from fourientations.equivalence import c_flow

from helpers import random_constraints, random_graph


def _retry(check):
    def run(rng: random.Random, tries: int = 50) -> int:
        for _ in range(tries):
            checked = check(rng)
            if checked:
                return checked
        return 0

    run.__name__ = check.__name__.lstrip("_")
    run.__doc__ = check.__doc__
    return run


def _random_valid(rng, max_vertices=5, max_edges=6, tries=50):
    for _ in range(tries):
        g = random_graph(rng, max_vertices, max_edges, min_edges=1)
        c = random_constraints(rng, g.n_vertices)
        s = rng.randrange(1 << g.n_edges)
        valid = [phi for phi in iterate_fourientations(g, s) if is_valid(phi, c)]
        if valid:
            return g, c, s, rng.choice(valid)
    return None


@_retry
def check_reversal_closure(rng: random.Random) -> int:
    """Every single cycle / (A,B)-cocycle reversal keeps validity and the solid set, and can be undone."""
    drawn = _random_valid(rng)
    if drawn is None:
        return 0
    g, c, s, phi = drawn
    checked = 0
    for cycle in enumerate_directed_cycles(realize(phi)):
        psi = reverse_cycle(phi, cycle)
        assert is_valid(psi, c)
        assert psi.solid_edges == phi.solid_edges
        assert psi.two_way_edges == phi.two_way_edges
        back = [Arc(a.head, a.tail, a.label[:2] + (-a.label[2],)) for a in reversed(cycle)]
        assert reverse_cycle(psi, back) == phi
        checked += 1
    d = augment(phi, c)
    forbidden = [a.label for a in d.arcs if a.label[0] != "E"]
    full = (1 << g.n_vertices) - 1
    for cut in enumerate_directed_cocycles(d, forbidden):
        psi = reverse_cocycle(phi, c, cut)
        assert is_valid(psi, c)
        assert psi.solid_edges == phi.solid_edges
        assert psi.zero_way_edges == phi.zero_way_edges
        assert reverse_cocycle(psi, c, full & ~cut.mask) == phi
        checked += 1
    return checked


@_retry
def check_outdegree_constancy(rng: random.Random) -> int:
    """1-way outdegrees (contracted along 2-way edges) are constant on cycle classes."""
    g = random_graph(rng, 5, 6, min_edges=1)
    c = random_constraints(rng, g.n_vertices)
    s = 0 if rng.random() < 0.5 else rng.randrange(1 << g.n_edges)
    p = equivalence_classes(g, c, s, "cyc")
    checked = 0
    for k in range(len(p)):
        members = p.class_members(k)
        assert len({outdegree_signature(phi, contract_two_way=True) for phi in members}) == 1
        if s == 0:
            assert len({outdegree_signature(phi) for phi in members}) == 1
        checked += 1
    return checked


def _cycle_space_digraph(g, c, removed):
    arcs = []
    for i, (t, h) in enumerate(g.edges):
        if i not in removed:
            arcs += [Arc(t, h, ("E", i, 1)), Arc(h, t, ("E", i, -1))]
    for j, (u, v) in enumerate(c.pairs):
        arcs += [Arc(u, v, ("P", j, 1)), Arc(v, u, ("P", j, -1))]
    return Digraph(g.n_vertices, tuple(arcs))


@_retry
def check_c_flow_constancy(rng: random.Random) -> int:
    """For a cycle C of (G minus 0-way edges) plus the constraint pairs, the C-flow is constant on cocycle classes."""
    g = random_graph(rng, 5, 6, min_edges=1)
    c = random_constraints(rng, g.n_vertices)
    s = rng.randrange(1 << g.n_edges)
    p = equivalence_classes(g, c, s, "coc")
    checked = 0
    for k, info in enumerate(p.classes):
        removed = {i for i in range(g.n_edges) if info.zero_way_mask >> i & 1}
        members = p.class_members(k)
        for cycle in enumerate_directed_cycles(_cycle_space_digraph(g, c, removed)):
            assert len({c_flow(phi, cycle) for phi in members}) == 1
            checked += 1
    return checked


def _signed(arcs):
    return {(a.label[1], a.label[2]) for a in arcs}


def _symmetric_part(C, C2):
    return {a for a in C if (a[0], -a[1]) not in C2} | {a for a in C2 if (a[0], -a[1]) not in C}


def _decompose_cycles(g, arcs: set) -> bool:
    if not arcs:
        return True
    d = Digraph(
        g.n_vertices,
        tuple(Arc(*(g.edges[i] if sgn == 1 else g.edges[i][::-1]), ("E", i, sgn)) for i, sgn in sorted(arcs)),
    )
    first = min(arcs)
    for cycle in enumerate_directed_cycles(d):
        part = _signed(cycle)
        if first in part and _decompose_cycles(g, arcs - part):
            return True
    return False


def _signed_cut(g, c, side1):
    inside = lambda v: bool(side1 >> v & 1)
    if any(inside(u) != inside(v) for u, v in c.pairs):
        return None
    part = set()
    for i, (t, h) in enumerate(g.edges):
        if inside(t) != inside(h):
            part.add((i, 1 if inside(t) else -1))
    return part or None


def _decompose_cocycles(g, c, arcs: set) -> bool:
    if not arcs:
        return True
    first = min(arcs)
    for side1 in range(1, (1 << g.n_vertices) - 1):
        part = _signed_cut(g, c, side1)
        if part and first in part and part <= arcs and _decompose_cocycles(g, c, arcs - part):
            return True
    return False


@_retry
def check_disjoint_decomposition(rng: random.Random) -> int:
    """Two directed cycles (cocycles) with no common arc leave a symmetric part that splits into disjoint ones."""
    g = random_graph(rng, 5, 7, min_edges=1)
    alpha = Fourientation(g, tuple(rng.choice((1, 2)) for _ in range(g.n_edges)))
    if rng.random() < 0.5:
        cycles = enumerate_directed_cycles(realize(alpha))
        if not cycles:
            return 0
        C = rng.choice(cycles)
        if rng.random() < 0.5:
            beta = reverse_cycle(alpha, C)
            others = enumerate_directed_cycles(realize(beta))
        else:
            others = [x for x in cycles if not _signed(x) & _signed(C)]
        if not others:
            return 0
        C2 = rng.choice(others)
        S1, S2 = _signed(C), _signed(C2)
        assert not S1 & S2
        assert _decompose_cycles(g, _symmetric_part(S1, S2))
        return 1
    c = random_constraints(rng, g.n_vertices, max_a=1, max_b=1)
    cuts = enumerate_directed_cocycles(augment(alpha, c), [a.label for a in c.constraint_arcs()])
    if not cuts:
        return 0
    C = rng.choice(cuts)
    if rng.random() < 0.5:
        beta = reverse_cocycle(alpha, c, C)
        others = enumerate_directed_cocycles(augment(beta, c), [a.label for a in c.constraint_arcs()])
    else:
        others = [x for x in cuts if not _signed(x.arcs) & _signed(C.arcs)]
    if not others:
        return 0
    C2 = rng.choice(others)
    S1, S2 = _signed(C.arcs), _signed(C2.arcs)
    assert not S1 & S2
    assert _decompose_cocycles(g, c, _symmetric_part(S1, S2))
    return 1


PROPERTY_SUITES = {
    "reversal closure": check_reversal_closure,
    "outdegree constancy on cyc classes": check_outdegree_constancy,
    "C-flow constancy on coc classes": check_c_flow_constancy,
    "disjoint cycle/cocycle decomposition": check_disjoint_decomposition,
}
