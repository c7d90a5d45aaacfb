"""Random instances and independent brute-force oracles for the test suite.

Nothing here calls the package's search code; the oracles work from edge
lists and plain Python sets so they can be checked against the library.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from hypothesis import strategies as st

from fourientations import ConstraintSystem, Multigraph

# Triangle u=0, v=1, w=2 with the edge v-w doubled, B = {(u, v)}.
DOUBLED_TRIANGLE = Multigraph(3, ((0, 1), (0, 2), (1, 2), (1, 2)))
DOUBLED_TRIANGLE_CONSTRAINTS = ConstraintSystem((), ((0, 1),))

K3 = Multigraph(3, ((0, 1), (1, 2), (0, 2)))
K4 = Multigraph(4, tuple(itertools.combinations(range(4), 2)))


def random_graph(rng: random.Random, max_vertices=5, max_edges=8, connected=False, loops=True, min_edges=0):
    while True:
        n = rng.randint(1, max_vertices)
        m = rng.randint(min_edges, max_edges)
        edges = []
        for _ in range(m):
            t, h = rng.randrange(n), rng.randrange(n)
            if t == h and not loops:
                continue
            edges.append((t, h))
        g = Multigraph(n, tuple(edges))
        if not connected or len(components(n, edges)) == 1:
            return g


def random_constraints(rng: random.Random, n: int, max_a=2, max_b=2) -> ConstraintSystem:
    def pairs(k):
        return tuple((rng.randrange(n), rng.randrange(n)) for _ in range(k))

    return ConstraintSystem(pairs(rng.randint(0, max_a)), pairs(rng.randint(0, max_b)))


@st.composite
def graphs(draw, max_vertices=5, max_edges=6, min_edges=0):
    n = draw(st.integers(1, max_vertices))
    edges = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), min_size=min_edges, max_size=max_edges))
    return Multigraph(n, tuple(edges))


@st.composite
def instances(draw, max_vertices=5, max_edges=6, max_pairs=2):
    g = draw(graphs(max_vertices, max_edges))
    pair = st.tuples(st.integers(0, g.n_vertices - 1), st.integers(0, g.n_vertices - 1))
    A = draw(st.lists(pair, max_size=max_pairs))
    B = draw(st.lists(pair, max_size=max_pairs))
    return g, ConstraintSystem(tuple(A), tuple(B))


# --- oracles -----------------------------------------------------------------


def components(n, edges):
    """Connected components by repeated relaxation of a label array."""
    label = list(range(n))
    changed = True
    while changed:
        changed = False
        for t, h in edges:
            lo = min(label[t], label[h])
            if label[t] != lo or label[h] != lo:
                label[t] = label[h] = lo
                changed = True
    groups = {}
    for v in range(n):
        groups.setdefault(label[v], set()).add(v)
    return sorted(frozenset(x) for x in groups.values())


def reach_matrix(n, arcs):
    """Floyd-Warshall over a boolean matrix; reflexive."""
    R = [[i == j for j in range(n)] for i in range(n)]
    for t, h in arcs:
        R[t][h] = True
    for k in range(n):
        for i in range(n):
            if R[i][k]:
                for j in range(n):
                    if R[k][j]:
                        R[i][j] = True
    return R


def config_arcs(g, config):
    arcs = []
    for (t, h), c in zip(g.edges, config):
        if c in (1, 3):
            arcs.append((t, h))
        if c in (2, 3):
            arcs.append((h, t))
    return arcs


def oracle_valid(g, c, config):
    R = reach_matrix(g.n_vertices, config_arcs(g, config) + list(c.A) + list(c.B))
    return all(not R[v][u] for u, v in c.A) and all(R[v][u] for u, v in c.B)


def oracle_count(g, c, solid_mask):
    choices = [(0, 3) if solid_mask >> i & 1 else (1, 2) for i in range(g.n_edges)]
    return sum(oracle_valid(g, c, cfg) for cfg in itertools.product(*choices))


def subsets(m):
    for bits in range(1 << m):
        yield [i for i in range(m) if bits >> i & 1]


def oracle_is_forest(g, sub):
    # A subgraph is a forest iff |F| = |V| - #components.
    edges = [g.edges[i] for i in sub]
    return len(edges) == g.n_vertices - len(components(g.n_vertices, edges))


def oracle_count_forests(g):
    return sum(oracle_is_forest(g, s) for s in subsets(g.n_edges))


def oracle_count_connected(g):
    target = components(g.n_vertices, g.edges)
    return sum(components(g.n_vertices, [g.edges[i] for i in s]) == target for s in subsets(g.n_edges))


def oracle_count_spanning_trees(g):
    target = components(g.n_vertices, g.edges)
    return sum(
        oracle_is_forest(g, s) and components(g.n_vertices, [g.edges[i] for i in s]) == target
        for s in subsets(g.n_edges)
    )


def kirchhoff_spanning_trees(g):
    """Matrix-tree theorem with exact Gaussian elimination; needs a connected graph."""
    n = g.n_vertices
    L = [[Fraction(0)] * n for _ in range(n)]
    for t, h in g.edges:
        if t == h:
            continue
        L[t][t] += 1
        L[h][h] += 1
        L[t][h] -= 1
        L[h][t] -= 1
    M = [row[1:] for row in L[1:]]
    det = Fraction(1)
    size = n - 1
    for col in range(size):
        pivot = next((r for r in range(col, size) if M[r][col] != 0), None)
        if pivot is None:
            return 0
        if pivot != col:
            M[col], M[pivot] = M[pivot], M[col]
            det = -det
        det *= M[col][col]
        for r in range(col + 1, size):
            f = M[r][col] / M[col][col]
            for k in range(col, size):
                M[r][k] -= f * M[col][k]
    return int(det)


def oracle_cycles(n, arcs):
    """Directed cycles of an arc list ``[(tail, head, edge_id), ...]`` by brute force.

    Tries every cyclic sequence of distinct vertices and every choice of arcs
    between consecutive ones, rejecting repeated edge ids. A cycle is a
    frozenset of arc indices, so rotations coincide.
    """
    found = set()
    for i, (t, h, _) in enumerate(arcs):
        if t == h:
            found.add(frozenset([i]))
    for k in range(2, n + 1):
        for seq in itertools.permutations(range(n), k):
            if seq[0] != min(seq):
                continue
            options = []
            for a, b in zip(seq, seq[1:] + seq[:1]):
                options.append([i for i, (t, h, _) in enumerate(arcs) if t == a and h == b])
            for pick in itertools.product(*options):
                if len({arcs[i][2] for i in pick}) == len(pick):
                    found.add(frozenset(pick))
    return found


def oracle_classes(g, c, solid_mask, mode):
    """Reversal classes by breadth-first closure, using only the oracles above."""
    choices = [(0, 3) if solid_mask >> i & 1 else (1, 2) for i in range(g.n_edges)]
    members = [cfg for cfg in itertools.product(*choices) if oracle_valid(g, c, cfg)]
    member_set = set(members)

    def flip(cfg, edges):
        out = list(cfg)
        for i in edges:
            if out[i] in (1, 2):
                out[i] = 3 - out[i]
        return tuple(out)

    def moves(cfg):
        if mode in ("cyc", "cc"):
            arcs = []
            for i, ((t, h), x) in enumerate(zip(g.edges, cfg)):
                if x in (1, 3):
                    arcs.append((t, h, i))
                if x in (2, 3):
                    arcs.append((h, t, i))
            for cyc in oracle_cycles(g.n_vertices, arcs):
                yield flip(cfg, [arcs[j][2] for j in cyc])
        if mode in ("coc", "cc"):
            full = (1 << g.n_vertices) - 1
            for side in range(1, full):
                inside = lambda v: bool(side >> v & 1)
                if any(inside(u) != inside(v) for u, v in c.pairs):
                    continue
                crossing, ok = [], True
                for i, ((t, h), x) in enumerate(zip(g.edges, cfg)):
                    if inside(t) == inside(h) or x == 0:
                        continue
                    forward_out = inside(t)  # reference arc t->h leaves side1
                    if x == 3 or (x == 1) != forward_out:
                        ok = False
                        break
                    crossing.append(i)
                if ok and crossing:
                    yield flip(cfg, crossing)

    seen = {}
    classes = []
    for cfg in members:
        if cfg in seen:
            continue
        k = len(classes)
        queue = [cfg]
        seen[cfg] = k
        group = []
        while queue:
            x = queue.pop()
            group.append(x)
            for y in moves(x):
                assert y in member_set, "move left the valid set"
                if y not in seen:
                    seen[y] = k
                    queue.append(y)
        classes.append(sorted(group))
    return sorted(classes)


def _strong(n, arcs):
    R = reach_matrix(n, arcs)
    return all(all(row) for row in R)


def oracle_scc_tournaments(n):
    pairs = list(itertools.combinations(range(n), 2))
    return sum(
        _strong(n, [(i, j) if d else (j, i) for (i, j), d in zip(pairs, dirs)])
        for dirs in itertools.product((0, 1), repeat=len(pairs))
    )


def oracle_scc_digraphs(n):
    ordered = [(i, j) for i in range(n) for j in range(n) if i != j]
    return sum(
        _strong(n, [a for a, keep in zip(ordered, bits) if keep])
        for bits in itertools.product((0, 1), repeat=len(ordered))
    )


def oracle_identity(g, y, z):
    """Both sides of the weight identity, one reachability matrix per configuration."""

    def weight(cfg, shift):
        R = reach_matrix(g.n_vertices, config_arcs(g, cfg))
        prod = 1
        for i, ((t, h), x) in enumerate(zip(g.edges, cfg)):
            if x not in (1, 2):
                continue
            tail, head, d = (t, h, 1) if x == 1 else (h, t, -1)
            prod *= shift + (z[(i, d)] if R[head][tail] else y[(i, d)])
        return prod

    lhs = sum(weight(cfg, 1) for cfg in itertools.product((1, 2), repeat=g.n_edges))
    rhs = sum(weight(cfg, 0) for cfg in itertools.product(range(4), repeat=g.n_edges))
    return lhs, rhs
