"""Named graph fixtures, plane diagrams for them, and random generators.

Plane diagrams here are handcrafted rotation systems, checked plane by the
test suite (genus 0). Everything seeded is bit-reproducible.
"""

from __future__ import annotations

import random
from typing import Callable

from .diagram import CIRCLED, Diagram, Port, build_diagram, chord_immersion, genus
from .graph_core import CubicGraph, build_graph


def theta() -> CubicGraph:
    """Two nodes joined by three parallel edges."""
    return build_graph(2, [(0, 1), (0, 1), (0, 1)])


def dumbbell() -> CubicGraph:
    """Two loops joined by a bridge; the smallest uncolorable cubic graph."""
    return build_graph(2, [(0, 0), (0, 1), (1, 1)])


def double_dumbbell() -> CubicGraph:
    """Two dumbbell-like lobes sharing a central bar; no perfect matching.

    Nodes 1, 2, 4, 5 carry loops; 0 and 3 are the hubs of the two lobes.
    """
    return build_graph(
        6,
        [(1, 1), (2, 2), (4, 4), (5, 5), (0, 1), (0, 2), (3, 4), (3, 5), (0, 3)],
    )


def k4() -> CubicGraph:
    return build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


def prism() -> CubicGraph:
    """Two triangles joined by a perfect matching of rungs."""
    return build_graph(
        6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]
    )


def k33() -> CubicGraph:
    return build_graph(6, [(u, v) for u in range(3) for v in range(3, 6)])


def petersen() -> CubicGraph:
    """Outer 5-cycle 0..4, inner pentagram 5..9, spokes i to i+5."""
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)


def isaacs_j(n: int) -> CubicGraph:
    """Flower snark layout: n hubs, an n-cycle of petals, and a 2n-cycle.

    Hub b_i joins a_i, c_i, d_i; the a's form an n-cycle; the c's and d's
    form one 2n-cycle c_0..c_{n-1} d_0..d_{n-1}. Uncolorable for odd n.
    """
    if n < 3:
        raise ValueError("isaacs_j needs n >= 3")
    a = lambda i: i
    b = lambda i: n + i
    c = lambda i: 2 * n + i
    d = lambda i: 3 * n + i
    edges = [(a(i), a((i + 1) % n)) for i in range(n)]
    edges += [(b(i), a(i)) for i in range(n)]
    edges += [(b(i), c(i)) for i in range(n)]
    edges += [(b(i), d(i)) for i in range(n)]
    edges += [(c(i), c(i + 1)) for i in range(n - 1)] + [(c(n - 1), d(0))]
    edges += [(d(i), d(i + 1)) for i in range(n - 1)] + [(d(n - 1), c(0))]
    return build_graph(4 * n, edges)


def truncated_tetrahedron() -> CubicGraph:
    """Four triangles pairwise joined by single edges (edges 12..17)."""
    tri = [(0, 1), (1, 2), (2, 0), (3, 5), (5, 4), (4, 3), (6, 7), (7, 8), (8, 6), (9, 11), (11, 10), (10, 9)]
    joins = [(0, 3), (1, 6), (2, 9), (4, 7), (5, 10), (8, 11)]
    return build_graph(12, tri + joins)


def four_touching_fixture() -> tuple[CubicGraph, frozenset[int]]:
    """Graph plus matching whose unswitched state is four mutually touching loops.

    The loops are the four triangles of the truncated tetrahedron and the six
    sites join every pair, so the site graph of the all-parallel state is K4:
    uncolorable with three colors. Switching every site is the only way to
    color it.
    """
    return truncated_tetrahedron(), frozenset(range(12, 18))


def random_cubic(n: int, seed: int) -> CubicGraph:
    """Configuration model: a uniform pairing of 3n half-edge stubs.

    Loops and parallel edges are kept; they are legal cubic multigraphs.
    """
    if n < 2 or n % 2:
        raise ValueError("random_cubic needs even n >= 2")
    rng = random.Random(seed)
    stubs = [v for v in range(n) for _ in range(3)]
    rng.shuffle(stubs)
    edges = [(stubs[2 * i], stubs[2 * i + 1]) for i in range(3 * n // 2)]
    return build_graph(n, edges)


# ---------------------------------------------------------------------------
# plane diagrams

def _n(owner: int, slot: int) -> Port:
    return Port("n", owner, slot)


def _x(owner: int, slot: int) -> Port:
    return Port("x", owner, slot)


def theta_diagram() -> Diagram:
    return build_diagram(
        2, (), [(_n(0, 0), _n(1, 0)), (_n(0, 1), _n(1, 2)), (_n(0, 2), _n(1, 1))]
    )


def dumbbell_diagram() -> Diagram:
    return build_diagram(
        2, (), [(_n(0, 1), _n(0, 2)), (_n(0, 0), _n(1, 2)), (_n(1, 0), _n(1, 1))]
    )


def k4_diagram() -> Diagram:
    """Outer triangle 0,1,2 with node 3 in the middle."""
    arcs = [
        (_n(0, 0), _n(1, 0)),
        (_n(0, 2), _n(2, 1)),
        (_n(0, 1), _n(3, 2)),
        (_n(1, 1), _n(2, 0)),
        (_n(1, 2), _n(3, 0)),
        (_n(2, 2), _n(3, 1)),
    ]
    return build_diagram(4, (), arcs)


def prism_diagram() -> Diagram:
    cw = {0: [2, 1, 3], 1: [0, 2, 4], 2: [1, 0, 5], 3: [5, 0, 4], 4: [1, 5, 3], 5: [4, 2, 3]}
    arcs = [
        (_n(u, cw[u].index(v)), _n(v, cw[v].index(u)))
        for u, v in prism().edges
    ]
    return build_diagram(6, (), arcs)


def k33_diagram() -> Diagram:
    """K3,3 drawn with a single circled crossing.

    Hexagon 0,3,1,4,2,5 on the outside read with the chords 0-4 and 1-5
    crossing inside and 2-3 routed around the hexagon.
    """
    arcs = [
        (_n(0, 0), _n(3, 0)),
        (_n(5, 0), _n(0, 2)),
        (_n(3, 2), _n(1, 1)),
        (_n(1, 2), _n(4, 2)),
        (_n(3, 1), _n(2, 2)),
        (_n(4, 0), _n(2, 1)),
        (_n(2, 0), _n(5, 2)),
        (_n(0, 1), _x(0, 0)),
        (_x(0, 2), _n(4, 1)),
        (_n(1, 0), _x(0, 1)),
        (_x(0, 3), _n(5, 1)),
    ]
    return build_diagram(6, (CIRCLED,), arcs)


def random_plane_cubic(n: int, seed: int) -> Diagram:
    """Grow a crossing-free plane diagram from the theta diagram.

    Each step replaces a random node by a triangle or a random edge by a
    digon between two new nodes; both moves preserve planarity, cubicity,
    bridgelessness, and the absence of loops, and add two nodes.
    """
    if n < 2 or n % 2:
        raise ValueError("random_plane_cubic needs even n >= 2")
    rng = random.Random(seed)
    mate: dict[Port, Port] = {}
    for p, q in theta_diagram().arcs:
        mate[p] = q
        mate[q] = p
    live: set[int] = {0, 1}
    next_id = 2

    def link(p: Port, q: Port) -> None:
        mate[p] = q
        mate[q] = p

    for _ in range(n // 2 - 1):
        if rng.random() < 0.5:
            # node -> triangle
            v = rng.choice(sorted(live))
            ts = [next_id, next_id + 1, next_id + 2]
            next_id += 3
            old = [mate.pop(Port("n", v, s)) for s in range(3)]
            remap = {Port("n", v, s): Port("n", ts[s], 0) for s in range(3)}
            for i in range(3):
                target = remap.get(old[i], old[i])
                link(Port("n", ts[i], 0), target)
                link(Port("n", ts[i], 1), Port("n", ts[(i + 1) % 3], 2))
            live.discard(v)
            live.update(ts)
        else:
            # edge -> digon
            arcs_now = sorted({tuple(sorted((p, q))) for p, q in mate.items()})
            p, q = rng.choice(arcs_now)
            a, b = next_id, next_id + 1
            next_id += 2
            link(p, Port("n", a, 0))
            link(Port("n", b, 0), q)
            link(Port("n", a, 1), Port("n", b, 2))
            link(Port("n", a, 2), Port("n", b, 1))
            live.update((a, b))

    dense = {old: new for new, old in enumerate(sorted(live))}
    arcs = sorted(
        {
            tuple(sorted((Port("n", dense[p.owner], p.slot), Port("n", dense[q.owner], q.slot))))
            for p, q in mate.items()
        }
    )
    d = build_diagram(len(live), (), arcs)
    assert genus(d) == 0
    return d


# ---------------------------------------------------------------------------
# name registry for the CLI

_PLAIN_GRAPHS: dict[str, Callable[[], CubicGraph]] = {
    "theta": theta,
    "dumbbell": dumbbell,
    "double_dumbbell": double_dumbbell,
    "k4": k4,
    "prism": prism,
    "k33": k33,
    "petersen": petersen,
    "truncated_tetrahedron": truncated_tetrahedron,
}

_PLANE_DIAGRAMS: dict[str, Callable[[], Diagram]] = {
    "theta": theta_diagram,
    "dumbbell": dumbbell_diagram,
    "k4": k4_diagram,
    "prism": prism_diagram,
    "k33": k33_diagram,
}

GENERATOR_NAMES = tuple(
    sorted(tuple(_PLAIN_GRAPHS) + ("isaacs_j", "random_cubic", "random_plane_cubic"))
)


def named_graph(name: str, n: int | None = None, seed: int = 0) -> CubicGraph:
    if name in _PLAIN_GRAPHS:
        return _PLAIN_GRAPHS[name]()
    if name == "isaacs_j":
        if n is None:
            raise ValueError("isaacs_j needs --n")
        return isaacs_j(n)
    if name == "random_cubic":
        if n is None:
            raise ValueError("random_cubic needs --n")
        return random_cubic(n, seed)
    if name == "random_plane_cubic":
        if n is None:
            raise ValueError("random_plane_cubic needs --n")
        from .diagram import underlying_graph

        return underlying_graph(random_plane_cubic(n, seed)).graph
    raise ValueError(f"unknown generator {name!r}; known: {', '.join(GENERATOR_NAMES)}")


def named_diagram(name: str, n: int | None = None, seed: int = 0) -> Diagram:
    if name in _PLANE_DIAGRAMS:
        return _PLANE_DIAGRAMS[name]()
    if name == "random_plane_cubic":
        if n is None:
            raise ValueError("random_plane_cubic needs --n")
        return random_plane_cubic(n, seed)
    return chord_immersion(named_graph(name, n, seed))
