"""States of a graph with a perfect matching: sites, loops, and the expansion.

Every matched edge becomes a site. Removing the edge and its two endpoints
leaves four loose complement half-edges; the site links them in one of two
ways. Loops are the closed curves obtained by alternating complement edges
with site links, and a state coloring assigns one of three colors per loop
so that the two loops meeting at every site differ.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph_core import CubicGraph, bridges_per_component, build_graph
from .matching import PerfectMatching, complement_cycles, validate_matching

PARALLEL = "parallel"
CROSSED = "crossed"
SWITCH_SETTINGS = (PARALLEL, CROSSED)


@dataclass(frozen=True)
class Site:
    """One matched edge turned into a strand junction.

    ends_u / ends_v hold the complement half-edges at the two removed
    endpoints as (departing, arriving) with respect to the complement-cycle
    traversal. Parallel links departing-at-u with arriving-at-v (and vice
    versa); Crossed links departing with departing and arriving with arriving.
    """

    edge: int
    ends_u: tuple[int, int]
    ends_v: tuple[int, int]
    switch: str

    def links(self) -> tuple[tuple[int, int], tuple[int, int]]:
        (out_u, in_u), (out_v, in_v) = self.ends_u, self.ends_v
        if self.switch == PARALLEL:
            return (out_u, in_v), (in_u, out_v)
        return (out_u, out_v), (in_u, in_v)


@dataclass(frozen=True)
class State:
    graph: CubicGraph
    matching: PerfectMatching
    sites: tuple[Site, ...]
    loops: tuple[tuple[int, ...], ...]
    # per site, the loop indices of its two strands (its two links)
    site_graph: tuple[tuple[int, int], ...]

    @property
    def loop_count(self) -> int:
        return len(self.loops)

    @property
    def switches(self) -> tuple[str, ...]:
        return tuple(s.switch for s in self.sites)


def make_state(g: CubicGraph, matching: Iterable[int], switches: Sequence[str]) -> State:
    m = validate_matching(g, matching)
    ordered = sorted(m)
    if len(switches) != len(ordered):
        raise ValueError(f"need {len(ordered)} switch settings, got {len(switches)}")
    for s in switches:
        if s not in SWITCH_SETTINGS:
            raise ValueError(f"unknown switch setting {s!r}")

    passages = complement_cycles(g, m).passages
    sites = []
    for e, sw in zip(ordered, switches):
        u, v = g.edges[e]
        in_u, out_u = passages[u]
        in_v, out_v = passages[v]
        sites.append(Site(e, (out_u, in_u), (out_v, in_v), sw))

    link: dict[int, int] = {}
    for site in sites:
        for a, b in site.links():
            link[a] = b
            link[b] = a

    loops: list[tuple[int, ...]] = []
    loop_of: dict[int, int] = {}
    for start in sorted(link):
        if start in loop_of:
            continue
        idx = len(loops)
        edges_on: list[int] = []
        h = start
        while True:
            loop_of[h] = loop_of[h ^ 1] = idx
            edges_on.append(h // 2)
            h = link[h ^ 1]
            if h == start:
                break
        loops.append(tuple(edges_on))

    site_graph = tuple(
        (loop_of[site.links()[0][0]], loop_of[site.links()[1][0]]) for site in sites
    )
    return State(g, m, tuple(sites), tuple(loops), site_graph)


def count_state_colorings(s: State) -> int:
    """Maps loops -> {R,B,P} with the two loops at every site distinct.

    This is the number of proper 3-colorings of the site multigraph; a site
    whose strands lie on one loop makes it zero.
    """
    k = s.loop_count
    earlier: list[list[int]] = [[] for _ in range(k)]
    for a, b in s.site_graph:
        if a == b:
            return 0
        earlier[max(a, b)].append(min(a, b))

    colors = [0] * k

    def rec(v: int) -> int:
        if v == k:
            return 1
        total = 0
        for c in range(3):
            if all(colors[w] != c for w in earlier[v]):
                colors[v] = c
                total += rec(v + 1)
        return total

    return rec(0)


def _expansion_slice(g: CubicGraph, m: PerfectMatching, vectors: Iterable[tuple[str, ...]]) -> int:
    return sum(count_state_colorings(make_state(g, m, v)) for v in vectors)


def logical_expansion_count(g: CubicGraph, matching: Iterable[int], workers: int = 1) -> int:
    """Sum count_state_colorings over all 2^|M| switch vectors.

    Equals count_colorings(g) for every perfect matching: each proper
    coloring selects exactly one switch per site (the pairing whose linked
    edges it colors equally) and then colors the loops of that state.
    """
    m = validate_matching(g, matching)
    vectors = list(itertools.product(SWITCH_SETTINGS, repeat=len(m)))
    if workers <= 1 or len(vectors) < 4:
        return _expansion_slice(g, m, vectors)
    workers = min(workers, 4)
    chunks = [vectors[i::workers] for i in range(workers)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return sum(pool.map(lambda ch: _expansion_slice(g, m, ch), chunks))


def squeeze(s: State) -> CubicGraph:
    """Rebuild the cubic graph by pinching every site back into an edge.

    Reconstructed from the state's own data (loop segments and site ends),
    not by returning the stored source; the switch settings do not enter,
    which is why every state of (g, m) squeezes to g.
    """
    g = s.graph
    edge_list: list[tuple[int, int] | None] = [None] * g.edge_count
    for loop in s.loops:
        for e in loop:
            edge_list[e] = (g.half_edge_node(2 * e), g.half_edge_node(2 * e + 1))
    for site in s.sites:
        u = g.half_edge_node(site.ends_u[0])
        v = g.half_edge_node(site.ends_v[0])
        edge_list[site.edge] = (u, v)
    filled = [pair for pair in edge_list if pair is not None]
    assert len(filled) == g.edge_count
    return build_graph(g.node_count, filled)


def state_has_isthmus(s: State) -> bool:
    """True when some site sits on a bridge of the squeezed graph."""
    site_edges = {site.edge for site in s.sites}
    return bool(bridges_per_component(squeeze(s)) & site_edges)
