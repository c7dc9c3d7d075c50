"""Perfect matchings and the cycles they leave behind.

Removing a perfect matching's edges from a cubic graph leaves every node
with degree 2, so the remainder splits into edge-disjoint cycles. A loop of
the graph survives as a cycle of length 1 and a parallel pair as a cycle of
length 2. A matching is even when every such cycle has even length; those
are exactly the matchings that extend to proper colorings with the matched
edges all purple.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .coloring import BLUE, PURPLE, RED, EdgeColoring, is_proper
from .errors import ImproperColoring, NotAMatching, OddCycle
from .graph_core import CubicGraph

PerfectMatching = frozenset[int]


@dataclass(frozen=True)
class ComplementCycles:
    """Cycles of the graph minus a perfect matching.

    cycles: edge ids in traversal order, one tuple per cycle. Tracing starts
    at the lowest unused non-matched edge and walks it from endpoint 0 to
    endpoint 1, so the decomposition is deterministic.
    passages: node -> (arriving half-edge, departing half-edge) on its cycle.
    """

    cycles: tuple[tuple[int, ...], ...]
    passages: dict[int, tuple[int, int]]

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.cycles)

    def all_even(self) -> bool:
        return all(len(c) % 2 == 0 for c in self.cycles)


def validate_matching(g: CubicGraph, edge_ids: Iterable[int]) -> PerfectMatching:
    m = frozenset(int(e) for e in edge_ids)
    cover = [0] * g.node_count
    for e in m:
        if not 0 <= e < g.edge_count:
            raise NotAMatching(f"edge id {e} out of range")
        u, v = g.edges[e]
        if u == v:
            raise NotAMatching(f"edge {e} is a loop")
        cover[u] += 1
        cover[v] += 1
    for n, k in enumerate(cover):
        if k != 1:
            raise NotAMatching(f"node {n} is covered {k} times")
    return m


def enumerate_perfect_matchings(g: CubicGraph) -> list[PerfectMatching]:
    """All perfect matchings, by backtracking on the lowest uncovered node."""
    covered = [False] * g.node_count
    chosen: list[int] = []
    out: list[PerfectMatching] = []

    def rec() -> None:
        n = next((i for i, c in enumerate(covered) if not c), -1)
        if n < 0:
            out.append(frozenset(chosen))
            return
        for h in g.incidence[n]:
            e = h // 2
            u, v = g.edges[e]
            if u == v:
                continue
            other = u + v - n
            if covered[other]:
                continue
            covered[n] = covered[other] = True
            chosen.append(e)
            rec()
            chosen.pop()
            covered[n] = covered[other] = False

    rec()
    out.sort(key=lambda m: tuple(sorted(m)))
    return out


def complement_cycles(g: CubicGraph, matching: Iterable[int]) -> ComplementCycles:
    m = validate_matching(g, matching)
    comp_at: list[list[int]] = [[] for _ in range(g.node_count)]
    for e in range(g.edge_count):
        if e in m:
            continue
        comp_at[g.edges[e][0]].append(2 * e)
        comp_at[g.edges[e][1]].append(2 * e + 1)
    # A perfect matching uses one half-edge per node, leaving exactly two.
    used = [False] * g.edge_count
    cycles: list[tuple[int, ...]] = []
    passages: dict[int, tuple[int, int]] = {}
    for e0 in range(g.edge_count):
        if e0 in m or used[e0]:
            continue
        cycle: list[int] = []
        start = 2 * e0
        depart = start
        while True:
            used[depart // 2] = True
            cycle.append(depart // 2)
            arrive = depart ^ 1
            n = g.half_edge_node(arrive)
            a, b = comp_at[n]
            depart = b if arrive == a else a
            passages[n] = (arrive, depart)
            if depart == start:
                break
        cycles.append(tuple(cycle))
    return ComplementCycles(tuple(cycles), passages)


def is_even_matching(g: CubicGraph, matching: Iterable[int]) -> bool:
    return complement_cycles(g, matching).all_even()


def colorings_from_even_matching(g: CubicGraph, matching: Iterable[int]) -> list[EdgeColoring]:
    """All proper colorings whose purple class is the given even matching.

    Matched edges get purple; each complement cycle alternates red/blue and
    contributes an independent factor of 2, so 2^(#cycles) colorings come back.
    """
    cc = complement_cycles(g, matching)
    for cyc in cc.cycles:
        if len(cyc) % 2:
            raise OddCycle(f"complement cycle of length {len(cyc)}")
    template = [PURPLE] * g.edge_count
    out: list[EdgeColoring] = []
    for firsts in itertools.product((RED, BLUE), repeat=len(cc.cycles)):
        colors = list(template)
        for cyc, first in zip(cc.cycles, firsts):
            second = BLUE if first == RED else RED
            for i, e in enumerate(cyc):
                colors[e] = first if i % 2 == 0 else second
        out.append(tuple(colors))
    return out


def matching_from_coloring(g: CubicGraph, coloring: Sequence[int], color: int) -> PerfectMatching:
    """The edges carrying one color of a proper coloring; always a perfect matching."""
    if not is_proper(g, coloring):
        raise ImproperColoring("matching extraction needs a proper coloring")
    return validate_matching(g, (e for e, c in enumerate(coloring) if c == color))


def count_from_even_matchings(g: CubicGraph) -> int:
    """Coloring count as a sum of 2^(#cycles) over the even perfect matchings.

    Each proper coloring has exactly one purple class, so the classes
    partition the colorings and the sum is exact.
    """
    total = 0
    for m in enumerate_perfect_matchings(g):
        cc = complement_cycles(g, m)
        if cc.all_even():
            total += 2 ** len(cc.cycles)
    return total
