"""Small standard graphs used as fixtures and as construction inputs."""

from __future__ import annotations

import random
from typing import Sequence

from .graph import Graph


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def k4() -> Graph:
    return complete_graph(4)


def k5() -> Graph:
    return complete_graph(5)


def k33() -> Graph:
    return Graph.from_edges(6, [(i, j) for i in range(3) for j in range(3, 6)])


def prism() -> Graph:
    """Triangular prism: triangles 0-1-2 and 3-4-5, rungs i -- i+3."""
    return Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])


def cube() -> Graph:
    return Graph.from_edges(8, [(u, u ^ (1 << b)) for u in range(8) for b in range(3) if u < u ^ (1 << b)])


def octahedron() -> Graph:
    return Graph.from_edges(6, [(i, j) for i in range(6) for j in range(i + 1, 6) if j != i + 3])


def petersen_graph() -> Graph:
    """Outer 5-circuit 0..4 (edge ids 0-4), spokes i--i+5 (ids 5-9), inner pentagram (ids 10-14)."""
    g = Graph(10)
    for i in range(5):
        g.add_edge(i, (i + 1) % 5)
    for i in range(5):
        g.add_edge(i, i + 5)
    for i in range(5):
        g.add_edge(i + 5, (i + 2) % 5 + 5)
    return g


def cycle_permutation_graph(perm: Sequence[int]) -> Graph:
    """Circuits u_0..u_{n-1} (ids 0..n-1) and v_0..v_{n-1} (ids n..2n-1) with spokes u_i -- v_perm[i]."""
    n = len(perm)
    g = Graph(2 * n)
    for i in range(n):
        g.add_edge(i, (i + 1) % n)
    for i in range(n):
        g.add_edge(n + i, n + (i + 1) % n)
    for i, p in enumerate(perm):
        g.add_edge(i, n + p)
    return g


def generalized_petersen(n: int, k: int) -> Graph:
    g = Graph(2 * n)
    for i in range(n):
        g.add_edge(i, (i + 1) % n)
    for i in range(n):
        g.add_edge(i, n + i)
    done = set()
    for i in range(n):
        j = (i + k) % n
        key = frozenset((i, j))
        if key not in done:
            done.add(key)
            g.add_edge(n + i, n + j)
    return g


def subdivide(g: Graph, e: int) -> Graph:
    """Copy of ``g`` with edge ``e`` replaced by a path of length two."""
    h = g.copy()
    u, v = h.endpoints(e)
    h.remove_edge(e)
    w = h.add_vertex()
    h.add_edge(u, w)
    h.add_edge(w, v)
    return h


def aligned_spoke_graph(n: int = 12, aligned: int = 4, seed: int = 0) -> Graph:
    """Cycle permutation graph whose first ``aligned`` spokes join u_i to v_i.

    The remaining spokes are a seeded shuffle.  Four aligned spokes give a
    cyclic 4-edge cut around the aligned stretch.
    """
    if not 0 <= aligned <= n:
        raise ValueError("aligned must lie in 0..n")
    rest = list(range(aligned, n))
    random.Random(seed).shuffle(rest)
    return cycle_permutation_graph(list(range(aligned)) + rest)
