"""Exact generating functions and the orientation/fourientation weight identity.

Series use the exponential convention: coefficient ``c[n]`` stands for the
term ``c[n] * x**n / n!``. All arithmetic is on :class:`fractions.Fraction`.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Mapping, Sequence

import numpy as np

from . import _batch
from .errors import SizeGuardError
from .fourientation import EdgeConfig, Fourientation, realize
from .graph import Multigraph, scc

__all__ = [
    "ExactSeries",
    "ArcWeights",
    "acy_cyc",
    "eval_identity",
    "random_weights",
    "count_scc_tournaments",
    "count_scc_digraphs",
    "count_totally_cyclic_fourientations",
    "tournament_cyclic_weight",
    "series_reciprocal",
    "series_exp",
    "series_log",
    "ira_series",
    "verify_ira",
]


@dataclass(frozen=True)
class ExactSeries:
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a series needs at least the constant coefficient")
        if any(isinstance(x, float) for x in self.coeffs):
            raise TypeError("series coefficients must be exact (int or Fraction)")
        object.__setattr__(self, "coeffs", tuple(Fraction(x) for x in self.coeffs))

    @classmethod
    def from_ordinary(cls, ordinary: Sequence) -> "ExactSeries":
        """Build from ordinary coefficients ``a[n]`` of ``x**n``."""
        return cls(tuple(Fraction(a) * factorial(n) for n, a in enumerate(ordinary)))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def ordinary(self) -> list[Fraction]:
        return [c / factorial(n) for n, c in enumerate(self.coeffs)]

    def truncate(self, order: int) -> "ExactSeries":
        return ExactSeries(self.coeffs[: order + 1])

    def _pair(self, other):
        if not isinstance(other, ExactSeries):
            other = ExactSeries((other,))
            return self.coeffs, other.coeffs + (Fraction(0),) * self.order
        n = min(self.order, other.order)
        return self.coeffs[: n + 1], other.coeffs[: n + 1]

    def __add__(self, other):
        a, b = self._pair(other)
        return ExactSeries(tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __neg__(self):
        return ExactSeries(tuple(-x for x in self.coeffs))

    def __sub__(self, other):
        return self + (-other if isinstance(other, ExactSeries) else -Fraction(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, ExactSeries):
            return ExactSeries(tuple(x * Fraction(other) for x in self.coeffs))
        a, b = self._pair(other)
        return ExactSeries(tuple(sum(comb(n, k) * a[k] * b[n - k] for k in range(n + 1)) for n in range(len(a))))

    __rmul__ = __mul__


def series_reciprocal(a: ExactSeries) -> ExactSeries:
    """``1 / a`` to the order of ``a``; needs a nonzero constant term."""
    if a.coeffs[0] == 0:
        raise ValueError("reciprocal needs a nonzero constant coefficient")
    p = a.ordinary
    q = [Fraction(1) / p[0]]
    for n in range(1, len(p)):
        q.append(-sum((p[k] * q[n - k] for k in range(1, n + 1)), Fraction(0)) / p[0])
    return ExactSeries.from_ordinary(q)


def series_exp(a: ExactSeries) -> ExactSeries:
    """``exp(a)`` via ``n b_n = sum_k k a_k b_{n-k}``; needs a zero constant term."""
    if a.coeffs[0] != 0:
        raise ValueError("exp needs a zero constant coefficient")
    p = a.ordinary
    q = [Fraction(1)]
    for n in range(1, len(p)):
        q.append(sum((k * p[k] * q[n - k] for k in range(1, n + 1)), Fraction(0)) / n)
    return ExactSeries.from_ordinary(q)


def series_log(a: ExactSeries) -> ExactSeries:
    """``log(a)``; needs constant term 1."""
    if a.coeffs[0] != 1:
        raise ValueError("log needs constant coefficient 1")
    p = a.ordinary
    q = [Fraction(0)]
    for n in range(1, len(p)):
        q.append(p[n] - sum((k * q[k] * p[n - k] for k in range(1, n)), Fraction(0)) / n)
    return ExactSeries.from_ordinary(q)


# --- acyclic / cyclic 1-way arcs and the weight identity ---------------------

ArcKey = tuple[int, int]  # (edge index, +1 forward / -1 backward)


@dataclass(frozen=True)
class ArcWeights:
    """Integer weights ``y`` and ``z`` on every arc of the doubled graph."""

    y: Mapping[ArcKey, int]
    z: Mapping[ArcKey, int]

    def check(self, g: Multigraph) -> None:
        for i in range(g.n_edges):
            for d in (1, -1):
                if (i, d) not in self.y or (i, d) not in self.z:
                    raise ValueError(f"missing weight for arc {(i, d)}")

    @classmethod
    def constant(cls, g: Multigraph, y: int, z: int) -> "ArcWeights":
        keys = [(i, d) for i in range(g.n_edges) for d in (1, -1)]
        return cls({k: y for k in keys}, {k: z for k in keys})


def random_weights(g: Multigraph, seed: int, low: int = -3, high: int = 3) -> ArcWeights:
    rng = random.Random(seed)
    keys = [(i, d) for i in range(g.n_edges) for d in (1, -1)]
    y = {k: rng.randint(low, high) for k in keys}
    z = {k: rng.randint(low, high) for k in keys}
    return ArcWeights(y, z)


def acy_cyc(phi: Fourientation) -> tuple[frozenset[ArcKey], frozenset[ArcKey]]:
    """Split the 1-way arcs of ``phi`` into acyclic and cyclic ones (no constraint arcs)."""
    d = realize(phi)
    comp = scc(d).component_id
    acy, cyc = set(), set()
    for a in d.arcs:
        i, direction = a.label[1], a.label[2]
        if phi.config[i] == EdgeConfig.TWO_WAY:
            continue
        (cyc if comp[a.tail] == comp[a.head] else acy).add((i, direction))
    return frozenset(acy), frozenset(cyc)


def _weighted_sum(g: Multigraph, configs: np.ndarray, w: ArcWeights, shift: int) -> int:
    one_way, cyclic = _batch.one_way_cyclic(g, configs)
    total = 0
    for start, stop in _batch.chunk_ranges(configs.shape[0]):
        factors = np.ones((stop - start, g.n_edges), dtype=object)
        for i in range(g.n_edges):
            col = configs[start:stop, i]
            for state, d in ((1, 1), (2, -1)):
                rows = col == state
                if not rows.any():
                    continue
                cyc_rows = rows & cyclic[start:stop, i]
                acy_rows = rows & ~cyclic[start:stop, i]
                factors[acy_rows, i] = shift + w.y[(i, d)]
                factors[cyc_rows, i] = shift + w.z[(i, d)]
            factors[~one_way[start:stop, i], i] = 1
        total += int(np.prod(factors, axis=1).sum())
    return total


MAX_EDGES_IDENTITY = 10


def eval_identity(g: Multigraph, w: ArcWeights, *, max_edges: int = MAX_EDGES_IDENTITY) -> tuple[int, int]:
    """Both sides of the orientation/fourientation weight identity, exactly.

    The left side sums over orientations the product of ``1 + y`` over acyclic
    arcs and ``1 + z`` over cyclic arcs; the right side sums over all
    fourientations the product of ``y`` over acyclic and ``z`` over cyclic
    1-way arcs.
    """
    if g.n_edges > max_edges:
        raise SizeGuardError("|E|", g.n_edges, max_edges)
    w.check(g)
    lhs = _weighted_sum(g, _batch.configs_for_solid(g.n_edges, 0), w, shift=1)
    rhs = 0
    for start, stop in _batch.chunk_ranges(1 << (2 * g.n_edges)):
        rhs += _weighted_sum(g, _batch.all_configs(g.n_edges, start, stop), w, shift=0)
    return lhs, rhs


# --- strongly connected tournaments and digraphs -----------------------------


def complete_graph(n: int) -> Multigraph:
    return Multigraph(n, tuple((i, j) for i in range(n) for j in range(i + 1, n)))


def _strong_rows(reach: np.ndarray) -> np.ndarray:
    n = reach.shape[1]
    return (reach == (1 << n) - 1).all(axis=1)


MAX_N_TOURNAMENTS = 6
MAX_N_DIGRAPHS = 5


def count_scc_tournaments(n: int) -> int:
    """Labeled strongly connected tournaments on ``n`` vertices, by exhaustion."""
    if n > MAX_N_TOURNAMENTS:
        raise SizeGuardError("n", n, MAX_N_TOURNAMENTS)
    if n < 1:
        raise ValueError("n must be positive")
    g = complete_graph(n)
    return int(_strong_rows(_batch.reach_masks(g, _batch.configs_for_solid(g.n_edges, 0))).sum())


def count_scc_digraphs(n: int) -> int:
    """Labeled strongly connected simple digraphs on ``n`` vertices, by exhaustion.

    A simple digraph on ``n`` vertices is a fourientation of ``K_n``.
    """
    if n > MAX_N_DIGRAPHS:
        raise SizeGuardError("n", n, MAX_N_DIGRAPHS)
    if n < 1:
        raise ValueError("n must be positive")
    g = complete_graph(n)
    total = 0
    for start, stop in _batch.chunk_ranges(1 << (2 * g.n_edges)):
        total += int(_strong_rows(_batch.reach_masks(g, _batch.all_configs(g.n_edges, start, stop))).sum())
    return total


def tournament_cyclic_weight(n: int) -> int:
    """Sum over labeled tournaments on ``n`` vertices of ``2**(number of cyclic arcs)``."""
    if n > MAX_N_TOURNAMENTS:
        raise SizeGuardError("n", n, MAX_N_TOURNAMENTS)
    if n == 0:
        return 1
    g = complete_graph(n)
    _, cyclic = _batch.one_way_cyclic(g, _batch.configs_for_solid(g.n_edges, 0))
    return int((np.int64(1) << cyclic.sum(axis=1).astype(np.int64)).sum())


def count_totally_cyclic_fourientations(g: Multigraph) -> int:
    """Fourientations whose 1-way arcs are all cyclic."""
    total = 0
    for start, stop in _batch.chunk_ranges(1 << (2 * g.n_edges)):
        configs = _batch.all_configs(g.n_edges, start, stop)
        one_way, cyclic = _batch.one_way_cyclic(g, configs)
        total += int((~one_way | cyclic).all(axis=1).sum())
    return total


@dataclass(frozen=True)
class IraSeries:
    t: tuple[int, ...]  # t[0] is t_1
    s: tuple[int, ...]
    lhs: ExactSeries
    rhs: ExactSeries


def ira_series(n_max: int, t: Iterable[int] | None = None, s: Iterable[int] | None = None) -> IraSeries:
    """Both sides of the tournament/digraph EGF identity, truncated at ``x**n_max``.

    Left: ``1 / (1 - sum 2**C(n,2) t_n x**n/n!)``. Right: ``exp(sum s_n x**n/n!)``.
    ``t`` and ``s`` default to the brute-force counts.
    """
    if n_max > MAX_N_DIGRAPHS:
        raise SizeGuardError("n_max", n_max, MAX_N_DIGRAPHS)
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    t = tuple(t) if t is not None else tuple(count_scc_tournaments(n) for n in range(1, n_max + 1))
    s = tuple(s) if s is not None else tuple(count_scc_digraphs(n) for n in range(1, n_max + 1))
    inner = ExactSeries((1,) + tuple(-(2 ** comb(n, 2)) * t[n - 1] for n in range(1, n_max + 1)))
    lhs = series_reciprocal(inner)
    rhs = series_exp(ExactSeries((0,) + s[:n_max]))
    return IraSeries(t[:n_max], s[:n_max], lhs, rhs)


def verify_ira(n_max: int) -> bool:
    """Check the EGF identity coefficientwise, and independently check each
    left coefficient against the weighted tournament sum."""
    result = ira_series(n_max)
    if result.lhs != result.rhs:
        return False
    return all(result.lhs.coeffs[n] == tournament_cyclic_weight(n) for n in range(n_max + 1))
