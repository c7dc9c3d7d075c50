"""Cubic multigraphs with half-edge incidence.

A graph is a node count plus an edge list. Loops and parallel edges are both
allowed: edge ``k`` owns the two half-edges ``2k`` and ``2k + 1``, and a loop
contributes both of its half-edges to the same node. Every node must carry
exactly three half-edges.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import DegreeViolation, Disconnected, EmptyGraph, ParseError

NodeId = int
EdgeId = int
HalfEdge = int


@dataclass(frozen=True)
class CubicGraph:
    """Immutable cubic multigraph.

    ``incidence[n]`` lists the half-edges at node ``n`` in increasing order;
    its length is the degree and must be 3 for every node.
    """

    node_count: int
    edges: tuple[tuple[NodeId, NodeId], ...]
    incidence: tuple[tuple[HalfEdge, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        stubs: list[list[HalfEdge]] = [[] for _ in range(self.node_count)]
        for e, (u, v) in enumerate(self.edges):
            stubs[u].append(2 * e)
            stubs[v].append(2 * e + 1)
        object.__setattr__(self, "incidence", tuple(tuple(s) for s in stubs))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def half_edge_node(self, h: HalfEdge) -> NodeId:
        return self.edges[h // 2][h % 2]

    def other_end(self, h: HalfEdge) -> HalfEdge:
        return h ^ 1


def build_graph(node_count: int, edges: Iterable[Sequence[int]]) -> CubicGraph:
    """Validate and freeze a cubic multigraph.

    Raises EmptyGraph for zero nodes and DegreeViolation for the lowest node
    whose half-edge count differs from 3.
    """
    if node_count <= 0:
        raise EmptyGraph("a cubic graph needs at least one node")
    edge_tuple = tuple((int(u), int(v)) for u, v in edges)
    for u, v in edge_tuple:
        if not (0 <= u < node_count and 0 <= v < node_count):
            raise ValueError(f"edge endpoint out of range: ({u}, {v})")
    degree = [0] * node_count
    for u, v in edge_tuple:
        degree[u] += 1
        degree[v] += 1
    for n, d in enumerate(degree):
        if d != 3:
            raise DegreeViolation(n, d)
    return CubicGraph(node_count, edge_tuple)


def has_loop(g: CubicGraph) -> bool:
    return any(u == v for u, v in g.edges)


def is_connected(g: CubicGraph) -> bool:
    seen = [False] * g.node_count
    stack = [0]
    seen[0] = True
    while stack:
        n = stack.pop()
        for h in g.incidence[n]:
            m = g.half_edge_node(g.other_end(h))
            if not seen[m]:
                seen[m] = True
                stack.append(m)
    return all(seen)


def connected_components(g: CubicGraph) -> list[list[NodeId]]:
    comp = [-1] * g.node_count
    parts: list[list[NodeId]] = []
    for start in range(g.node_count):
        if comp[start] >= 0:
            continue
        comp[start] = len(parts)
        block = [start]
        stack = [start]
        while stack:
            n = stack.pop()
            for h in g.incidence[n]:
                m = g.half_edge_node(g.other_end(h))
                if comp[m] < 0:
                    comp[m] = len(parts)
                    block.append(m)
                    stack.append(m)
        parts.append(block)
    return parts


def bridges(g: CubicGraph) -> frozenset[EdgeId]:
    """Edge ids whose removal disconnects the graph.

    Parallel edges are never bridges because the DFS only refuses to reuse
    the specific edge instance it arrived by, and a loop cannot be a bridge.
    Raises Disconnected when the graph has more than one component; callers
    holding a disconnected graph should work per component.
    """
    if not is_connected(g):
        raise Disconnected("bridge finding requires a connected graph")
    return _bridges_connected(g, 0)


def _bridges_connected(g: CubicGraph, root: NodeId) -> frozenset[EdgeId]:
    pre: dict[NodeId, int] = {}
    low: dict[NodeId, int] = {}
    out: set[EdgeId] = set()
    counter = 0

    # Iterative DFS: stack entries are (node, arrival edge id, iterator index,
    # arrival-edge copies skipped). The skip flag consumes the arrival edge
    # exactly once while keeping its id available for bridge reporting; a
    # parallel twin has a different id and is still walked as a back edge.
    stack: list[list[int]] = [[root, -1, 0, 0]]
    pre[root] = low[root] = counter
    counter += 1
    while stack:
        frame = stack[-1]
        n, arrived_by, i, skipped = frame
        if i < len(g.incidence[n]):
            frame[2] += 1
            h = g.incidence[n][i]
            e = h // 2
            if e == arrived_by and not skipped:
                frame[3] = 1
                continue
            m = g.half_edge_node(g.other_end(h))
            if m in pre:
                low[n] = min(low[n], pre[m])
            else:
                pre[m] = low[m] = counter
                counter += 1
                stack.append([m, e, 0, 0])
        else:
            stack.pop()
            if stack:
                parent = stack[-1][0]
                low[parent] = min(low[parent], low[n])
                if low[n] > pre[parent]:
                    out.add(arrived_by)
    return frozenset(out)


def bridges_per_component(g: CubicGraph) -> frozenset[EdgeId]:
    """Bridge set of a possibly disconnected graph."""
    out: set[EdgeId] = set()
    for block in connected_components(g):
        out |= _bridges_connected(g, block[0])
    return frozenset(out)


def graph_to_json_dict(g: CubicGraph) -> dict:
    return {"nodes": g.node_count, "edges": [[u, v] for u, v in g.edges]}


def graph_to_json(g: CubicGraph) -> str:
    return json.dumps(graph_to_json_dict(g), separators=(",", ":"))


def graph_from_json_dict(data: object) -> CubicGraph:
    if not isinstance(data, dict):
        raise ParseError("graph JSON must be an object")
    try:
        nodes = data["nodes"]
        edges = data["edges"]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"graph JSON is missing key: {exc}") from exc
    if not isinstance(nodes, int) or not isinstance(edges, list):
        raise ParseError("graph JSON: 'nodes' must be an int and 'edges' a list")
    for item in edges:
        if not (isinstance(item, list) and len(item) == 2 and all(isinstance(x, int) for x in item)):
            raise ParseError(f"graph JSON: bad edge entry {item!r}")
    try:
        return build_graph(nodes, edges)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def graph_from_json(text: str) -> CubicGraph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    return graph_from_json_dict(data)
