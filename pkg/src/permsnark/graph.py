"""Simple undirected graphs with stable integer ids, graph6/DOT/JSON I/O and girth.

Vertex and edge ids are dense integers handed out in creation order.  Removing
a vertex or an edge leaves a hole; :meth:`Graph.reindex` compacts and returns
the id maps.  Iteration is always in ascending id order so that every search
built on top of this module is reproducible.
"""

from __future__ import annotations

import json
import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    """Structural violation: loop, parallel edge, unknown id, frozen graph."""


class Graph6Error(ValueError):
    """Malformed graph6 input.  ``offset`` is the offending byte position."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class Graph:
    """Undirected simple graph.

    Degree-1 vertices are allowed and may be flagged as *pendant* ends, which
    is how dangling half-edges of graph fragments are represented.
    """

    def __init__(self, order: int = 0):
        self._adj: dict[int, dict[int, int]] = {}  # v -> {neighbor: edge id}
        self._ends: dict[int, tuple[int, int]] = {}
        self._vlabel: dict[int, str] = {}
        self._elabel: dict[int, str] = {}
        self._pendant: set[int] = set()
        self._next_v = 0
        self._next_e = 0
        self._frozen = False
        for _ in range(order):
            self.add_vertex()

    # -- construction -----------------------------------------------------

    def _check_mutable(self) -> None:
        if self._frozen:
            raise GraphError("graph is frozen")

    def add_vertex(self, label: str | None = None, pendant: bool = False) -> int:
        self._check_mutable()
        v = self._next_v
        self._next_v += 1
        self._adj[v] = {}
        if label is not None:
            self._vlabel[v] = label
        if pendant:
            self._pendant.add(v)
        return v

    def add_edge(self, u: int, v: int, label: str | None = None) -> int:
        self._check_mutable()
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        if u not in self._adj or v not in self._adj:
            raise GraphError(f"unknown vertex in edge ({u}, {v})")
        if v in self._adj[u]:
            raise GraphError(f"parallel edge between {u} and {v}")
        e = self._next_e
        self._next_e += 1
        self._ends[e] = (u, v) if u < v else (v, u)
        self._adj[u][v] = e
        self._adj[v][u] = e
        if label is not None:
            self._elabel[e] = label
        return e

    def remove_edge(self, e: int) -> None:
        self._check_mutable()
        u, v = self.endpoints(e)
        del self._adj[u][v]
        del self._adj[v][u]
        del self._ends[e]
        self._elabel.pop(e, None)

    def remove_vertex(self, v: int) -> None:
        self._check_mutable()
        for e in list(self.incident(v)):
            self.remove_edge(e)
        del self._adj[v]
        self._vlabel.pop(v, None)
        self._pendant.discard(v)

    def set_pendant(self, v: int, flag: bool = True) -> None:
        self._check_mutable()
        if flag:
            self._pendant.add(v)
        else:
            self._pendant.discard(v)

    def freeze(self) -> "Graph":
        self._frozen = True
        return self

    @property
    def frozen(self) -> bool:
        return self._frozen

    def copy(self) -> "Graph":
        """Mutable copy preserving all ids and labels."""
        g = Graph()
        g._adj = {v: dict(nb) for v, nb in self._adj.items()}
        g._ends = dict(self._ends)
        g._vlabel = dict(self._vlabel)
        g._elabel = dict(self._elabel)
        g._pendant = set(self._pendant)
        g._next_v = self._next_v
        g._next_e = self._next_e
        return g

    def reindex(self) -> tuple["Graph", dict[int, int], dict[int, int]]:
        """Compact ids to ``0..n-1`` / ``0..m-1``; returns (graph, vmap, emap)."""
        vmap = {v: i for i, v in enumerate(self.vertices())}
        g = Graph()
        for v in self.vertices():
            g.add_vertex(self._vlabel.get(v), v in self._pendant)
        emap = {}
        for e in self.edges():
            u, v = self._ends[e]
            emap[e] = g.add_edge(vmap[u], vmap[v], self._elabel.get(e))
        return g, vmap, emap

    # -- queries ----------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self._adj)

    @property
    def size(self) -> int:
        return len(self._ends)

    def vertices(self) -> list[int]:
        return sorted(self._adj)

    def edges(self) -> list[int]:
        return sorted(self._ends)

    def has_vertex(self, v: int) -> bool:
        return v in self._adj

    def has_edge_id(self, e: int) -> bool:
        return e in self._ends

    def endpoints(self, e: int) -> tuple[int, int]:
        try:
            return self._ends[e]
        except KeyError:
            raise GraphError(f"unknown edge {e}") from None

    def other_end(self, e: int, v: int) -> int:
        a, b = self.endpoints(e)
        if v == a:
            return b
        if v == b:
            return a
        raise GraphError(f"vertex {v} is not an end of edge {e}")

    def edge_between(self, u: int, v: int) -> int | None:
        return self._adj.get(u, {}).get(v)

    def adjacent(self, u: int, v: int) -> bool:
        return v in self._adj.get(u, ())

    def neighbors(self, v: int) -> list[int]:
        try:
            return sorted(self._adj[v])
        except KeyError:
            raise GraphError(f"unknown vertex {v}") from None

    def incident(self, v: int) -> list[int]:
        try:
            return sorted(self._adj[v].values())
        except KeyError:
            raise GraphError(f"unknown vertex {v}") from None

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def is_pendant(self, v: int) -> bool:
        return v in self._pendant

    def pendant_vertices(self) -> list[int]:
        return sorted(self._pendant)

    def vertex_label(self, v: int) -> str | None:
        return self._vlabel.get(v)

    def edge_label(self, e: int) -> str | None:
        return self._elabel.get(e)

    def edge_by_label(self, label: str) -> int:
        for e, lab in self._elabel.items():
            if lab == label:
                return e
        raise KeyError(label)

    def is_regular(self, k: int) -> bool:
        return all(len(nb) == k for nb in self._adj.values())

    def is_cubic(self) -> bool:
        return self.order > 0 and self.is_regular(3)

    def edge_pairs(self) -> list[tuple[int, int]]:
        return [self._ends[e] for e in self.edges()]

    def adjacency_matrix(self) -> list[list[int]]:
        idx = {v: i for i, v in enumerate(self.vertices())}
        n = len(idx)
        mat = [[0] * n for _ in range(n)]
        for u, v in self._ends.values():
            mat[idx[u]][idx[v]] = mat[idx[v]][idx[u]] = 1
        return mat

    def components(self, removed: Iterable[int] = ()) -> list[list[int]]:
        """Connected components (sorted vertex lists) after deleting edges."""
        dead = set(removed)
        seen: set[int] = set()
        comps = []
        for s in self.vertices():
            if s in seen:
                continue
            seen.add(s)
            comp = [s]
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for y, e in self._adj[x].items():
                    if e not in dead and y not in seen:
                        seen.add(y)
                        comp.append(y)
                        queue.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.order > 0 and len(self.components()) == 1

    def induced_edges(self, vertices: Iterable[int]) -> list[int]:
        vs = set(vertices)
        return sorted(e for e, (u, v) in self._ends.items() if u in vs and v in vs)

    def boundary(self, vertices: Iterable[int]) -> list[int]:
        vs = set(vertices)
        return sorted(e for e, (u, v) in self._ends.items() if (u in vs) != (v in vs))

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, size={self.size})"

    # -- standard graphs --------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, pairs: Iterable[Sequence[int]]) -> "Graph":
        g = cls(n)
        for u, v in pairs:
            g.add_edge(u, v)
        return g


@dataclass(frozen=True)
class Subgraph:
    """Edge subset of a host graph; the vertex set is induced by the edges."""

    host: Graph
    edge_ids: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        object.__setattr__(self, "edge_ids", frozenset(self.edge_ids))
        missing = [e for e in self.edge_ids if not self.host.has_edge_id(e)]
        if missing:
            raise GraphError(f"edges {sorted(missing)} not in host")

    @property
    def vertices(self) -> frozenset[int]:
        vs: set[int] = set()
        for e in self.edge_ids:
            vs.update(self.host.endpoints(e))
        return frozenset(vs)

    def degree(self, v: int) -> int:
        return sum(1 for e in self.host.incident(v) if e in self.edge_ids)

    def degrees(self) -> dict[int, int]:
        deg: dict[int, int] = {}
        for e in self.edge_ids:
            for x in self.host.endpoints(e):
                deg[x] = deg.get(x, 0) + 1
        return deg

    def is_two_regular(self) -> bool:
        return bool(self.edge_ids) and all(d == 2 for d in self.degrees().values())

    def is_even(self) -> bool:
        return all(d % 2 == 0 for d in self.degrees().values())

    def components(self) -> list[frozenset[int]]:
        """Edge sets of the connected components, ordered by smallest edge id."""
        by_vertex: dict[int, list[int]] = {}
        for e in self.edge_ids:
            for x in self.host.endpoints(e):
                by_vertex.setdefault(x, []).append(e)
        left = set(self.edge_ids)
        comps = []
        for start in sorted(self.edge_ids):
            if start not in left:
                continue
            comp = {start}
            left.discard(start)
            stack = [start]
            while stack:
                e = stack.pop()
                for x in self.host.endpoints(e):
                    for f in by_vertex[x]:
                        if f in left:
                            left.discard(f)
                            comp.add(f)
                            stack.append(f)
            comps.append(frozenset(comp))
        return comps

    def __len__(self) -> int:
        return len(self.edge_ids)

    def __contains__(self, e: object) -> bool:
        return e in self.edge_ids


# -- graph6 --------------------------------------------------------------

def _encode_order(n: int) -> str:
    if n < 0:
        raise GraphError("negative order")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise GraphError(f"order {n} too large for graph6")


def emit_graph6(g: Graph) -> str:
    """graph6 line (no header, no newline); vertices taken in ascending id order."""
    verts = g.vertices()
    n = len(verts)
    bits = []
    for j in range(1, n):
        vj = verts[j]
        for i in range(j):
            bits.append(1 if g.adjacent(verts[i], vj) else 0)
    bits.extend([0] * (-len(bits) % 6))
    body = "".join(
        chr(63 + int("".join(map(str, bits[k:k + 6])), 2)) for k in range(0, len(bits), 6)
    )
    return _encode_order(n) + body


def parse_graph6(text: str) -> Graph:
    """Parse one graph6 line (an optional ``>>graph6<<`` header is accepted)."""
    line = text.strip("\r\n")
    base = 0
    if line.startswith(">>graph6<<"):
        line = line[10:]
        base = 10
    for k, ch in enumerate(line):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"invalid character {ch!r}", base + k)
    if not line:
        raise Graph6Error("empty input", base)
    if line[0] != "~":
        n, pos = ord(line[0]) - 63, 1
    elif len(line) >= 2 and line[1] == "~":
        if len(line) < 8:
            raise Graph6Error("truncated 8-byte order prefix", base + len(line))
        n, pos = 0, 8
        for ch in line[2:8]:
            n = (n << 6) | (ord(ch) - 63)
    else:
        if len(line) < 4:
            raise Graph6Error("truncated 4-byte order prefix", base + len(line))
        n, pos = 0, 4
        for ch in line[1:4]:
            n = (n << 6) | (ord(ch) - 63)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = line[pos:]
    if len(body) != nbytes:
        raise Graph6Error(
            f"order {n} needs {nbytes} data bytes, found {len(body)}", base + pos + min(len(body), nbytes)
        )
    g = Graph(n)
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(body[k // 6]) - 63
            if (byte >> (5 - k % 6)) & 1:
                g.add_edge(i, j)
            k += 1
    if nbytes:
        pad = 6 * nbytes - nbits
        if (ord(body[-1]) - 63) & ((1 << pad) - 1):
            raise Graph6Error("nonzero padding bits", base + pos + nbytes - 1)
    return g


# -- DOT / JSON ----------------------------------------------------------

_HIGHLIGHT_STYLES = (
    'color="red", penwidth=2.5',
    'color="blue", penwidth=2.5, style="dashed"',
    'color="darkgreen", penwidth=2.5, style="dotted"',
    'color="orange", penwidth=2.5',
)


def emit_dot(g: Graph, highlight: Sequence[Subgraph | Iterable[int]] = (), name: str = "G") -> str:
    """DOT text; each highlighted edge set gets its own style (first match wins)."""
    sets = [frozenset(h.edge_ids if isinstance(h, Subgraph) else h) for h in highlight]
    lines = [f"graph {name} {{"]
    for v in g.vertices():
        attrs = []
        lab = g.vertex_label(v)
        if lab is not None:
            attrs.append(f'label="{lab}"')
        if g.is_pendant(v):
            attrs.append("shape=point")
        lines.append(f"  {v}" + (f" [{', '.join(attrs)}];" if attrs else ";"))
    for e in g.edges():
        u, v = g.endpoints(e)
        attrs = [f'id="e{e}"']
        lab = g.edge_label(e)
        if lab is not None:
            attrs.append(f'label="{lab}"')
        for k, s in enumerate(sets):
            if e in s:
                attrs.append(_HIGHLIGHT_STYLES[k % len(_HIGHLIGHT_STYLES)])
                break
        lines.append(f"  {u} -- {v} [{', '.join(attrs)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json_dict(g: Graph) -> dict:
    """``{order, edges}`` adjacency dump over compacted ids."""
    h, _, _ = g.reindex()
    return {"order": h.order, "edges": [list(p) for p in h.edge_pairs()]}


def from_json_dict(data: dict) -> Graph:
    return Graph.from_edges(int(data["order"]), data["edges"])


def dumps_json(g: Graph) -> str:
    return json.dumps(to_json_dict(g), separators=(",", ":"))


# -- girth ---------------------------------------------------------------

def girth(g: Graph) -> float:
    """Length of a shortest circuit, ``math.inf`` for forests.

    BFS from every vertex; a non-tree edge met at depths d(x), d(y) closes a
    closed walk of length d(x)+d(y)+1, and the minimum over all roots is exact.
    """
    best = math.inf
    for s in g.vertices():
        dist = {s: 0}
        parent = {s: -1}
        queue = deque([s])
        while queue:
            x = queue.popleft()
            if 2 * dist[x] + 1 >= best:
                break
            for y in g.neighbors(x):
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    best = min(best, dist[x] + dist[y] + 1)
    return best


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low
