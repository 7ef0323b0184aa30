"""Cyclic edge connectivity, essential edge connectivity and cut-structure checks.

Cuts are found by one enumerator over connected vertex sets X containing the
lowest vertex with |boundary(X)| <= k.  X is grown edge by edge in BFS order;
each frontier edge either pulls its outer end into X or is declared a cut
edge.  A branch is abandoned when the declared cut edges plus a max-flow lower
bound (separating X from the outer ends of declared edges) exceed k, so the
work is proportional to the number of small cuts rather than to C(|E|, k).
"""

from __future__ import annotations

import time
from collections import deque
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterator

from .construction import PermutationGraph, TransitionedFourRegular
from .graph import Graph, iter_bits


class ConnectivityError(ValueError):
    pass


@dataclass
class CutWitness:
    edges: list[int]
    side_a: list[int]
    side_b: list[int]
    cyclic_a: bool
    cyclic_b: bool
    classification: str

    def to_json_dict(self) -> dict:
        return {
            "edges": self.edges,
            "side_a": self.side_a,
            "side_b": self.side_b,
            "classification": self.classification,
        }


@dataclass
class ConnectivityResult:
    """``value`` is exact when below ``cap``; otherwise None with ``at_least == cap``."""

    value: int | None
    cap: int
    witness: CutWitness | None
    cuts_examined: int
    nodes: int
    wall_time_ms: float = 0.0
    all_cuts: list[CutWitness] = field(default_factory=list, repr=False)

    @property
    def at_least(self) -> int:
        return self.value if self.value is not None else self.cap

    def __str__(self) -> str:
        return str(self.value) if self.value is not None else f">= {self.cap}"

    def to_json_dict(self) -> dict:
        return {
            "value": self.value,
            "at_least": self.at_least,
            "cap": self.cap,
            "witness": self.witness.to_json_dict() if self.witness else None,
            "cuts_examined": self.cuts_examined,
            "nodes_expanded": self.nodes,
            "wall_time_ms": round(self.wall_time_ms, 3),
        }


class _Dense:
    """Graph with vertices renumbered 0..n-1 for bitmask work."""

    def __init__(self, g: Graph):
        self.verts = g.vertices()
        idx = {v: i for i, v in enumerate(self.verts)}
        self.eids = g.edges()
        self.ends = [(idx[a], idx[b]) for a, b in (g.endpoints(e) for e in self.eids)]
        self.n = len(self.verts)
        self.inc: list[list[int]] = [[] for _ in range(self.n)]
        for k, (a, b) in enumerate(self.ends):
            self.inc[a].append(k)
            self.inc[b].append(k)
        self.deg = [len(x) for x in self.inc]

    def other(self, k: int, x: int) -> int:
        a, b = self.ends[k]
        return b if a == x else a


def _max_flow(d: _Dense, source: int, sink: int, blocked: set[int], limit: int) -> int:
    """Edge-disjoint paths from vertex set ``source`` to ``sink`` avoiding ``blocked``, up to ``limit``."""
    if not sink or limit <= 0:
        return 0
    flow = [0] * len(d.ends)  # +1 means a->b for ends (a, b)
    total = 0
    while total < limit:
        prev: dict[int, tuple[int, int]] = {}
        queue = deque(iter_bits(source))
        seen = source
        hit = -1
        while queue and hit < 0:
            x = queue.popleft()
            for k in d.inc[x]:
                if k in blocked:
                    continue
                a, b = d.ends[k]
                if x == a:
                    y, cap = b, 1 - flow[k]
                else:
                    y, cap = a, 1 + flow[k]
                if cap <= 0 or seen >> y & 1:
                    continue
                seen |= 1 << y
                prev[y] = (x, k)
                if sink >> y & 1:
                    hit = y
                    break
                queue.append(y)
        if hit < 0:
            break
        y = hit
        while not (source >> y & 1):
            x, k = prev[y]
            flow[k] += 1 if d.ends[k][0] == x else -1
            y = x
        total += 1
    return total


def _small_bonds(d: _Dense, k: int, stats: dict) -> Iterator[tuple[int, list[int]]]:
    """Yield (X as bitmask, boundary edge indices) for connected X containing vertex 0, |boundary| <= k."""
    full = (1 << d.n) - 1

    def frontier_after(x_mask: int, v: int) -> list[int]:
        return [e for e in d.inc[v] if not (x_mask >> d.other(e, v) & 1)]

    def rec(x_mask: int, queue: list[int], qpos: int, blocked: list[int], t_mask: int):
        stats["nodes"] += 1
        while qpos < len(queue):
            e = queue[qpos]
            a, b = d.ends[e]
            w = b if x_mask >> a & 1 else a
            if x_mask >> w & 1:
                qpos += 1
                continue
            break
        else:
            if x_mask != full:
                yield x_mask, blocked
            return
        if t_mask:
            bs = set(blocked)
            if len(blocked) + _max_flow(d, x_mask, t_mask, bs, k - len(blocked) + 1) > k:
                return
        if not (t_mask >> w & 1):
            nx = x_mask | (1 << w)
            yield from rec(nx, queue + frontier_after(nx, w), qpos + 1, blocked, t_mask)
        if len(blocked) < k:
            yield from rec(x_mask, queue, qpos + 1, blocked + [e], t_mask | (1 << w))

    if d.n == 0:
        return
    yield from rec(1, frontier_after(1, 0), 0, [], 0)


def _components_mask(d: _Dense, mask: int) -> list[int]:
    comps = []
    left = mask
    while left:
        s = left & -left
        comp = s
        stack = [s.bit_length() - 1]
        while stack:
            x = stack.pop()
            for e in d.inc[x]:
                y = d.other(e, x)
                if mask >> y & 1 and not comp >> y & 1:
                    comp |= 1 << y
                    stack.append(y)
        comps.append(comp)
        left &= ~comp
    return comps


def _edges_inside(d: _Dense, mask: int) -> int:
    return sum(1 for a, b in d.ends if mask >> a & 1 and mask >> b & 1)


def _is_cyclic_connected(d: _Dense, mask: int) -> bool:
    return _edges_inside(d, mask) >= bin(mask).count("1")


def _witness(g: Graph, d: _Dense, x_mask: int, cut: list[int], cyc_a: bool, cyc_b: bool, cls: str) -> CutWitness:
    side_a = [d.verts[i] for i in iter_bits(x_mask)]
    side_b = [d.verts[i] for i in iter_bits(((1 << d.n) - 1) & ~x_mask)]
    return CutWitness(sorted(d.eids[e] for e in cut), side_a, side_b, cyc_a, cyc_b, cls)


def _search(g: Graph, cap: int, accept: Callable[[_Dense, int], tuple[bool, bool, bool]], cls: str,
            keep_all: bool = False) -> ConnectivityResult:
    t0 = time.perf_counter()
    d = _Dense(g)
    stats = {"nodes": 0}
    best: tuple | None = None
    examined = 0
    everything = []
    for x_mask, cut in _small_bonds(d, cap - 1, stats):
        examined += 1
        ok, ca, cb = accept(d, x_mask)
        if not ok:
            continue
        key = (len(cut), sorted(d.eids[e] for e in cut))
        if keep_all:
            everything.append(_witness(g, d, x_mask, cut, ca, cb, cls))
        if best is None or key < best[0]:
            best = (key, x_mask, list(cut), ca, cb)
    wit = None
    value = None
    if best is not None:
        value = best[0][0]
        wit = _witness(g, d, best[1], best[2], best[3], best[4], cls)
    ms = (time.perf_counter() - t0) * 1000.0
    return ConnectivityResult(value, cap, wit, examined, stats["nodes"], ms, everything)


def has_two_disjoint_circuits(g: Graph) -> bool:
    """Whether some induced circuit leaves a cyclic graph behind when deleted.

    Two disjoint circuits exist iff two disjoint induced ones do, so induced
    circuits are enough; the short ones through each vertex are tried first.
    """
    verts = g.vertices()

    def rest_cyclic(cycle_vs: set[int]) -> bool:
        rest = [v for v in verts if v not in cycle_vs]
        vs = set(rest)
        m = sum(1 for e in g.edges() if set(g.endpoints(e)) <= vs)
        comps = 0
        seen: set[int] = set()
        for s in rest:
            if s in seen:
                continue
            comps += 1
            stack = [s]
            seen.add(s)
            while stack:
                x = stack.pop()
                for y in g.neighbors(x):
                    if y in vs and y not in seen:
                        seen.add(y)
                        stack.append(y)
        return m - len(rest) + comps > 0

    def chordless(path: list[int]) -> bool:
        pos = {v: i for i, v in enumerate(path)}
        n = len(path)
        for i, v in enumerate(path):
            for w in g.neighbors(v):
                j = pos.get(w)
                if j is not None and (j - i) % n not in (1, n - 1):
                    return False
        return True

    # quick pass: a shortest circuit through each vertex
    for s in verts:
        parent = {s: None}
        depth = {s: 0}
        queue = deque([s])
        found = None
        while queue and found is None:
            x = queue.popleft()
            for y in g.neighbors(x):
                if y not in parent:
                    parent[y] = x
                    depth[y] = depth[x] + 1
                    queue.append(y)
                elif parent[x] != y and found is None:
                    found = (x, y)
        if found is None:
            continue
        cyc: set[int] = set()
        for z in found:
            while z is not None:
                cyc.add(z)
                z = parent[z]
        # the two tree paths may share a prefix beyond s; the closed walk still
        # contains a circuit inside cyc, so the test below stays sound
        if rest_cyclic(cyc):
            return True

    # exhaustive pass over induced circuits, each found from its smallest vertex
    for s in verts:
        stack = [(s, [s])]
        while stack:
            x, path = stack.pop()
            for y in g.neighbors(x):
                if y == s and len(path) >= 3 and path[1] < path[-1]:
                    if chordless(path) and rest_cyclic(set(path)):
                        return True
                elif y > s and y not in path:
                    stack.append((y, path + [y]))
    return False


def cyclic_edge_connectivity(g: Graph, cap: int = 6, keep_all: bool = False) -> ConnectivityResult:
    """Exact cyclic edge connectivity when it is below ``cap``, else ``>= cap``."""
    if not has_two_disjoint_circuits(g):
        raise ConnectivityError("cyclic edge connectivity undefined: no two vertex-disjoint circuits")

    def accept(d: _Dense, x_mask: int):
        full = (1 << d.n) - 1
        ca = _is_cyclic_connected(d, x_mask)
        if not ca:
            return False, False, False
        cb = any(_is_cyclic_connected(d, c) for c in _components_mask(d, full & ~x_mask))
        return cb, ca, cb

    return _search(g, cap, accept, "cyclic", keep_all)


def essential_edge_connectivity(g: Graph, cap: int = 7, keep_all: bool = False) -> ConnectivityResult:
    """Smallest edge cut with at least two vertices on each side, exact below ``cap`` (cap <= 8).

    Below 8 a smallest essential cut has a connected side containing the
    lowest vertex, which is what the enumerator produces.
    """
    if not g.is_regular(4) or not g.is_connected():
        raise ConnectivityError("essential_edge_connectivity needs a connected 4-regular graph")
    if cap > 8:
        raise ConnectivityError("cap above 8 is not supported")

    def accept(d: _Dense, x_mask: int):
        a = bin(x_mask).count("1")
        ok = a >= 2 and d.n - a >= 2
        return ok, ok, ok

    return _search(g, cap, accept, "essential", keep_all)


def enumerate_small_cuts(g: Graph, cap: int) -> list[CutWitness]:
    """Every boundary(X) of size < cap with X connected and containing the lowest vertex."""
    def accept(d, x_mask):
        return True, False, False

    return _search(g, cap, accept, "any", keep_all=True).all_cuts


def even_cut_parity_check(t: TransitionedFourRegular, cap: int = 7) -> dict:
    """All enumerated cuts below ``cap`` have even size; both image circuits are Hamiltonian."""
    g = t.as_graph()
    cuts = enumerate_small_cuts(g, cap)
    hamiltonian = True
    if t.circuit_of_edge:
        for which in (1, 2):
            ks = [k for k, c in enumerate(t.circuit_of_edge) if c == which]
            deg = [0] * t.order
            for k in ks:
                for x in t.edges[k]:
                    deg[x] += 1
            sub = Graph.from_edges(t.order, [t.edges[k] for k in ks])
            hamiltonian &= all(x == 2 for x in deg) and sub.is_connected()
    sizes = sorted({len(c.edges) for c in cuts})
    return {
        "cap": cap,
        "cuts_checked": len(cuts),
        "sizes": sizes,
        "all_even": all(len(c.edges) % 2 == 0 for c in cuts),
        "hamiltonian_circuits": hamiltonian,
    }


# -- cut structure of permutation graphs ---------------------------------

class CutStructureError(ValueError):
    pass


def is_cyclic_cut(g: Graph, cut) -> bool:
    """G - cut has exactly two components, each containing a circuit."""
    comps = g.components(cut)
    if len(comps) != 2:
        return False
    for comp in comps:
        if len(g.induced_edges(comp)) < len(comp):
            return False
    return True


@dataclass
class CutStructureReport:
    is_matching: bool
    two_per_circuit: bool
    neighbor_projection: bool

    @property
    def ok(self) -> bool:
        return self.is_matching and self.two_per_circuit and self.neighbor_projection

    def to_json_dict(self) -> dict:
        return {**asdict(self), "ok": self.ok}


def _arcs(cycle: tuple[int, ...], cut_pairs: list[frozenset[int]]) -> list[set[int]]:
    """Vertex sets of the paths left after deleting the given circuit edges."""
    n = len(cycle)
    cuts_at = [i for i in range(n) if frozenset((cycle[i], cycle[(i + 1) % n])) in cut_pairs]
    arcs = []
    for j, i in enumerate(cuts_at):
        nxt = cuts_at[(j + 1) % len(cuts_at)]
        arc = set()
        p = (i + 1) % n
        while True:
            arc.add(cycle[p])
            if p == nxt:
                break
            p = (p + 1) % n
        arcs.append(arc)
    return arcs


def verify_cut_structure(pg: PermutationGraph, cut) -> CutStructureReport:
    """Structure of a cyclic 4-edge cut of a permutation graph on at least 10 vertices."""
    g, f = pg.graph, pg.factor
    cut = sorted(cut)
    if g.order < 10:
        raise CutStructureError("needs at least 10 vertices")
    if len(cut) != 4 or not is_cyclic_cut(g, cut):
        raise CutStructureError("not a cyclic 4-edge cut")
    spokes = set(f.spokes)
    if any(e in spokes for e in cut):
        raise CutStructureError("a cyclic 4-edge cut of a permutation graph never contains a spoke")
    ends = [g.endpoints(e) for e in cut]
    touched = [x for p in ends for x in p]
    is_matching = len(set(touched)) == 8
    on1 = [e for e in cut if e in set(f.circuit_edges(1))]
    on2 = [e for e in cut if e in set(f.circuit_edges(2))]
    two_per = len(on1) == 2 and len(on2) == 2
    projection = False
    if two_per:
        arcs1 = _arcs(f.circuit1, [frozenset(g.endpoints(e)) for e in on1])
        arcs2 = _arcs(f.circuit2, [frozenset(g.endpoints(e)) for e in on2])
        c2 = set(f.circuit2)
        images = []
        for arc in arcs1:
            images.append(frozenset(w for v in arc for w in g.neighbors(v) if w in c2))
        projection = {frozenset(a) for a in arcs2} == set(images) and len(set(images)) == 2
    return CutStructureReport(is_matching, two_per, projection)
