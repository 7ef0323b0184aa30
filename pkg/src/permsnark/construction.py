"""Building the permutation snarks H(Q1, Q2, Q3, Q4) and the family H_n.

Pipeline: pick an anchor around a spoke z1z2 of each input, cut the input open
into a six-ended block (the y-vertices are flagged pendant ends), glue four
blocks along a gluing table, join the two identified retained ends by the
extra edge alpha, and read the permutation 2-factor F back as the union of the
twelve block paths.
"""

from __future__ import annotations

import hashlib
import itertools
import json
from dataclasses import dataclass, field
from importlib import resources
from typing import Sequence

from .factor import TwoFactor, trace_cycles, verify_permutation_structure
from .graph import Graph, GraphError
from .named import petersen_graph

LABELS = ("e1", "e2", "e3", "e4", "e5", "e6")
RETAINED = {1: "e2", 2: "e3", 3: "e2", 4: "e3"}

# Inter-block skeleton: which pendant labels meet which.  Two-label groups
# leave a within-pair orientation open; single labels are fixed.
SKELETON: tuple[tuple[tuple[int, tuple[str, ...]], tuple[int, tuple[str, ...]]], ...] = (
    ((1, ("e1", "e3")), (4, ("e4", "e5"))),
    ((4, ("e1", "e2")), (3, ("e4", "e5"))),
    ((3, ("e1", "e3")), (2, ("e4", "e5"))),
    ((2, ("e1", "e2")), (1, ("e4", "e5"))),
    ((1, ("e6",)), (3, ("e6",))),
    ((2, ("e6",)), (4, ("e6",))),
)
ALPHA_GROUPS = (((1, "e2"), (3, "e2")), ((2, "e3"), (4, "e3")))

FIXTURE_VERSION = "gluing-v1"


class ConstructionError(RuntimeError):
    pass


class AnchorError(ConstructionError):
    pass


class AssemblyError(ConstructionError):
    pass


class ContractionError(ConstructionError):
    """Spoke contraction would create a parallel edge."""


@dataclass(frozen=True, eq=False)
class PermutationGraph:
    """A cubic graph together with its permutation 2-factor.

    ``alpha`` is the extra edge of an assembled graph (None for inputs such as
    the Petersen graph); ``provenance`` records where vertices and edges came
    from.
    """

    graph: Graph
    factor: TwoFactor
    alpha: int | None = None
    provenance: dict = field(default_factory=dict)

    @property
    def order(self) -> int:
        return self.graph.order

    @property
    def spokes(self) -> list[int]:
        return self.factor.spokes

    def sidecar(self) -> dict:
        """JSON-ready description (circuits, spokes, alpha, provenance)."""
        g = self.graph
        return {
            "order": g.order,
            "circuits": [list(c) for c in self.factor.circuits],
            "spokes": [list(g.endpoints(e)) for e in self.spokes],
            "alpha": list(g.endpoints(self.alpha)) if self.alpha is not None else None,
            "provenance": self.provenance,
        }


def petersen() -> PermutationGraph:
    """Petersen graph with the outer pentagon / inner pentagram 2-factor."""
    g = petersen_graph().freeze()
    f = TwoFactor(g, (0, 1, 2, 3, 4), (5, 7, 9, 6, 8))
    return PermutationGraph(g, f, None, {"name": "P10"})


# -- anchors -------------------------------------------------------------

@dataclass(frozen=True)
class Anchor:
    host: PermutationGraph
    spoke: int
    x1: int
    x2: int
    z2: int
    x6: int
    x4: int
    z1: int
    x5: int

    def marks(self) -> dict[str, int]:
        return {k: getattr(self, k) for k in ("x1", "x2", "z2", "x6", "x4", "z1", "x5")}


def _circuit_neighbors(cycle: Sequence[int], v: int) -> tuple[int, int]:
    i = cycle.index(v)
    return cycle[i - 1], cycle[(i + 1) % len(cycle)]


def select_anchor(pg: PermutationGraph, spoke: int, orient1: int = 0, orient2: int = 0) -> Anchor:
    """Mark x1, x2, z2, x6 on circuit 1 and x4, z1, x5 on circuit 2 around ``spoke``.

    Orientation 0 gives x2 (resp. x4) the smaller of the two circuit
    neighbours of z2 (resp. z1); orientation 1 swaps.
    """
    g, f = pg.graph, pg.factor
    if spoke not in set(f.spokes):
        raise AnchorError(f"edge {spoke} is not a spoke")
    a, b = g.endpoints(spoke)
    z2, z1 = (a, b) if f.side(a) == 1 else (b, a)
    c1, c2 = f.circuits
    n2, n6 = sorted(_circuit_neighbors(c1, z2))
    if orient1:
        n2, n6 = n6, n2
    n4, n5 = sorted(_circuit_neighbors(c2, z1))
    if orient2:
        n4, n5 = n5, n4
    p, q = _circuit_neighbors(c1, n2)
    x1 = q if p == z2 else p
    marks = (x1, n2, z2, n6, n4, z1, n5)
    if len(set(marks)) != 7:
        raise AnchorError(f"anchor marks collide around spoke {spoke} (circuit too short)")
    return Anchor(pg, spoke, x1, n2, z2, n6, n4, z1, n5)


def girth_guard(anchor: Anchor) -> bool:
    """True when x2 is adjacent to neither x4 nor x5 (no 4-circuit through z1z2 and x2)."""
    g = anchor.host.graph
    return not (g.adjacent(anchor.x2, anchor.x4) or g.adjacent(anchor.x2, anchor.x5))


def canonical_anchor(pg: PermutationGraph) -> Anchor:
    """Lowest-id spoke, ascending orientations; later choices only if the guard fails."""
    for s in pg.spokes:
        for o1, o2 in ((0, 0), (0, 1), (1, 0), (1, 1)):
            try:
                a = select_anchor(pg, s, o1, o2)
            except AnchorError:
                continue
            if girth_guard(a):
                return a
    raise AnchorError("no spoke admits a valid anchor")


# -- blocks --------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Block:
    """Six-ended fragment cut from an anchored permutation graph.

    ``pendant[label]`` is the pendant edge id, ``ends[label]`` its degree-1
    vertex and ``inner[label]`` the degree-3 vertex it hangs from.  The paths
    are vertex sequences: A1 from y1 to y6, A2 from y4 to y5, A3 = y2, x2, y3.
    """

    fragment: Graph
    anchor: Anchor
    retain: str
    pendant: dict[str, int]
    ends: dict[str, int]
    inner: dict[str, int]
    paths: dict[str, tuple[int, ...]]

    def path_edges(self, name: str) -> list[int]:
        seq = self.paths[name]
        return [self.fragment.edge_between(seq[i], seq[i + 1]) for i in range(len(seq) - 1)]

    @property
    def a_edges(self) -> frozenset[int]:
        return frozenset(e for p in ("A1", "A2", "A3") for e in self.path_edges(p))

    def interior_vertices(self) -> list[int]:
        return [v for v in self.fragment.vertices() if not self.fragment.is_pendant(v)]


def _arc(cycle: Sequence[int], start: int, avoid: int, stop: int) -> list[int]:
    """Walk ``cycle`` from ``start`` in the direction away from ``avoid`` until ``stop``."""
    n = len(cycle)
    i = cycle.index(start)
    step = -1 if cycle[(i + 1) % n] == avoid else 1
    out = [start]
    while out[-1] != stop:
        i = (i + step) % n
        out.append(cycle[i])
    return out


def build_block(anchor: Anchor, retain: str) -> Block:
    if retain not in ("e2", "e3"):
        raise ConstructionError(f"retained label must be e2 or e3, got {retain!r}")
    pg = anchor.host
    g = pg.graph
    f = pg.factor
    if not g.is_cubic() or not verify_permutation_structure(g, f).ok:
        raise ConstructionError("anchor host is not a cubic permutation graph")
    frag = g.copy()
    frag.remove_edge(g.edge_between(anchor.x1, anchor.x2))
    frag.remove_vertex(anchor.z1)
    frag.remove_vertex(anchor.z2)
    inner = {"e1": anchor.x1, "e2": anchor.x2, "e3": anchor.x2, "e4": anchor.x4, "e5": anchor.x5, "e6": anchor.x6}
    ends, pendant = {}, {}
    for lab in LABELS:
        y = frag.add_vertex(label="y" + lab[1], pendant=True)
        ends[lab] = y
        pendant[lab] = frag.add_edge(inner[lab], y, label=lab)
    c1, c2 = f.circuits
    arc1 = _arc(c1, anchor.x1, anchor.x2, anchor.x6)
    arc2 = _arc(c2, anchor.x4, anchor.z1, anchor.x5)
    paths = {
        "A1": (ends["e1"], *arc1, ends["e6"]),
        "A2": (ends["e4"], *arc2, ends["e5"]),
        "A3": (ends["e2"], anchor.x2, ends["e3"]),
    }
    frag.freeze()
    return Block(frag, anchor, retain, pendant, ends, inner, paths)


# -- gluing tables -------------------------------------------------------

Port = tuple[int, str]


@dataclass(frozen=True)
class GluingTable:
    pairs: tuple[tuple[Port, Port], ...]
    alpha_groups: tuple[tuple[Port, Port], tuple[Port, Port]] = ALPHA_GROUPS
    orientation: tuple[int, ...] = ()
    version: str = FIXTURE_VERSION

    def validate(self) -> None:
        seen: list[Port] = [p for pair in self.pairs for p in pair]
        seen += [p for grp in self.alpha_groups for p in grp]
        expected = [(i, lab) for i in range(1, 5) for lab in LABELS]
        if sorted(seen) != sorted(expected):
            raise AssemblyError("gluing table must use every pendant label exactly once")
        for grp in self.alpha_groups:
            for i, lab in grp:
                if RETAINED[i] != lab:
                    raise AssemblyError(f"{lab} of block {i} is not a retained label")

    def to_json_dict(self) -> dict:
        return {
            "version": self.version,
            "orientation": list(self.orientation),
            "pairs": [[list(a), list(b)] for a, b in self.pairs],
            "alpha_groups": [[list(a), list(b)] for a, b in self.alpha_groups],
            "alpha": [list(self.alpha_groups[0]), list(self.alpha_groups[1])],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "GluingTable":
        def port(p):
            return int(p[0]), str(p[1])

        return cls(
            tuple((port(a), port(b)) for a, b in data["pairs"]),
            tuple((port(a), port(b)) for a, b in data["alpha_groups"]),
            tuple(data.get("orientation", ())),
            data.get("version", FIXTURE_VERSION),
        )


def skeleton_table(orientation: Sequence[int]) -> GluingTable:
    """Gluing table for one choice of within-pair orientation (one bit per two-label group)."""
    bits = iter(orientation)
    pairs = []
    for (i, la), (j, lb) in SKELETON:
        if len(la) == 2:
            lb = lb[::-1] if next(bits) else lb
        pairs.extend(((i, a), (j, b)) for a, b in zip(la, lb))
    return GluingTable(tuple(pairs), ALPHA_GROUPS, tuple(orientation))


def all_skeleton_tables() -> list[GluingTable]:
    return [skeleton_table(o) for o in itertools.product((0, 1), repeat=4)]


def _fixture_text() -> str:
    return resources.files("permsnark").joinpath("data/gluing_v1.json").read_text(encoding="utf-8")


def load_canonical_table() -> GluingTable:
    return GluingTable.from_json_dict(json.loads(_fixture_text()))


def fixture_sha256() -> str:
    return hashlib.sha256(_fixture_text().encode("utf-8")).hexdigest()


# -- assembly ------------------------------------------------------------

def assemble_H(blocks: Sequence[Block], table: GluingTable) -> PermutationGraph:
    """Glue four blocks into the cubic graph H; F is the union of the twelve paths."""
    if len(blocks) != 4:
        raise AssemblyError("assembly needs exactly four blocks")
    table.validate()
    for i, b in enumerate(blocks, start=1):
        if b.retain != RETAINED[i]:
            raise AssemblyError(f"block {i} must retain {RETAINED[i]}, not {b.retain}")
        if not girth_guard(b.anchor):
            raise AssemblyError(f"block {i}: x2 is adjacent to x4 or x5 in its source")

    h = Graph()
    vmap: dict[tuple[int, int], int] = {}
    origin: list[list] = []
    for i, b in enumerate(blocks, start=1):
        for v in b.interior_vertices():
            vmap[i, v] = h.add_vertex(label=f"{i}.{v}")
            origin.append([i, v])
    spokes_h: set[int] = set()
    for i, b in enumerate(blocks, start=1):
        a_edges = b.a_edges
        frag = b.fragment
        for e in frag.edges():
            u, v = frag.endpoints(e)
            if frag.is_pendant(u) or frag.is_pendant(v):
                continue
            he = h.add_edge(vmap[i, u], vmap[i, v], label=f"{i}.{e}")
            if e not in a_edges:
                spokes_h.add(he)
    try:
        for (i, la), (j, lb) in table.pairs:
            x = vmap[i, blocks[i - 1].inner[la]]
            y = vmap[j, blocks[j - 1].inner[lb]]
            h.add_edge(x, y, label=f"{la}^{i}={lb}^{j}")
        group_vertices = []
        for k, grp in enumerate(table.alpha_groups):
            w = h.add_vertex(label=f"alpha{k}")
            origin.append(["alpha", k])
            group_vertices.append(w)
            for i, lab in grp:
                h.add_edge(vmap[i, blocks[i - 1].inner[lab]], w, label=f"{lab}^{i}")
        alpha = h.add_edge(group_vertices[0], group_vertices[1], label="alpha")
    except GraphError as exc:
        raise AssemblyError(f"gluing creates a loop or parallel edge: {exc}") from exc
    spokes_h.add(alpha)
    h.freeze()
    if not h.is_cubic():
        raise AssemblyError("assembled graph is not cubic")

    f_edges = [e for e in h.edges() if e not in spokes_h]
    cycles = trace_cycles(h, f_edges)
    if len(cycles) != 2:
        raise AssemblyError(f"F has {len(cycles)} components, expected 2")
    u0 = group_vertices[0]
    cycles.sort(key=lambda c: u0 not in c)
    factor = TwoFactor(h, cycles[0], cycles[1])
    if not verify_permutation_structure(h, factor).ok:
        raise AssemblyError("F is not a permutation 2-factor of H")
    for c in factor.circuits:
        if sum(w in c for w in group_vertices) != 1:
            raise AssemblyError("an F-circuit does not carry exactly one alpha endpoint")

    provenance = {
        "table": table.to_json_dict(),
        "alpha_vertices": group_vertices,
        "vertex_origin": origin,
        "sources": [b.anchor.host.provenance.get("name", "?") for b in blocks],
        "anchors": [b.anchor.marks() for b in blocks],
    }
    return PermutationGraph(h, factor, alpha, provenance)


def discover_gluing(blocks: Sequence[Block]) -> list[GluingTable]:
    """All skeleton orientations whose assembly yields a valid permutation 2-factor."""
    survivors = []
    for t in all_skeleton_tables():
        try:
            assemble_H(blocks, t)
        except AssemblyError:
            continue
        survivors.append(t)
    if not survivors:
        raise ConstructionError("no gluing orientation survives; the skeleton is inconsistent")
    return survivors


def family_blocks(prev: PermutationGraph) -> list[Block]:
    """Blocks of (prev, P10, P10, P10) with canonical anchors."""
    p10 = petersen()
    sources = [prev, p10, p10, p10]
    return [build_block(canonical_anchor(q), RETAINED[i]) for i, q in enumerate(sources, start=1)]


def build_family(n: int, certify: bool = False, table: GluingTable | None = None) -> PermutationGraph:
    """H_0 = P10 and H_n = H(H_{n-1}, P10, P10, P10) under the canonical table."""
    if n < 0:
        raise ValueError("n must be non-negative")
    table = table or load_canonical_table()
    h = petersen()
    if certify:
        _certify_level(h, 0)
    for level in range(1, n + 1):
        h = assemble_H(family_blocks(h), table)
        h.provenance["name"] = f"H{level}"
        h.provenance["level"] = level
        if certify:
            _certify_level(h, level)
    return h


def _certify_level(h: PermutationGraph, level: int) -> None:
    from .certify import certify_permutation_snark

    report = certify_permutation_snark(h, cdc=level <= 2, lambda_c=level <= 2)
    if not report["overall"]:
        raise ConstructionError(f"certification failed at level {level}: {report}")
    h.provenance["certification"] = {k: v["status"] for k, v in report["checks"].items()}


# -- spoke contraction ---------------------------------------------------

@dataclass(frozen=True)
class TransitionedFourRegular:
    """4-regular (multi)graph with a transition system.

    Vertices are ``0..order-1``; ``edges[k]`` are the endpoints of edge k.
    ``transitions[v]`` is a tuple of disjoint edge pairs at v.  For graphs
    obtained by spoke contraction, ``spoke_of_vertex`` and ``source_edge``
    map back into the cubic source, and ``circuit_of_edge`` says which
    F-circuit an edge came from.
    """

    order: int
    edges: tuple[tuple[int, int], ...]
    transitions: tuple[tuple[frozenset[int], ...], ...]
    spoke_of_vertex: tuple[int, ...] = ()
    source_edge: tuple[int, ...] = ()
    circuit_of_edge: tuple[int, ...] = ()

    def incident(self) -> list[list[int]]:
        inc: list[list[int]] = [[] for _ in range(self.order)]
        for k, (u, v) in enumerate(self.edges):
            inc[u].append(k)
            inc[v].append(k)
        return inc

    @property
    def is_simple(self) -> bool:
        keys = [frozenset(p) for p in self.edges]
        return all(len(k) == 2 for k in keys) and len(set(keys)) == len(keys)

    def validate(self, strict: bool = True) -> None:
        """Every vertex has degree 4; with ``strict`` exactly two disjoint transitions cover it."""
        inc = self.incident()
        for v in range(self.order):
            if len(inc[v]) != 4:
                raise ConstructionError(f"vertex {v} has degree {len(inc[v])}, expected 4")
            used: list[int] = []
            for t in self.transitions[v]:
                if len(t) != 2 or not t <= set(inc[v]):
                    raise ConstructionError(f"bad transition {sorted(t)} at vertex {v}")
                used.extend(t)
            if len(used) != len(set(used)):
                raise ConstructionError(f"overlapping transitions at vertex {v}")
            if strict and len(self.transitions[v]) != 2:
                raise ConstructionError(f"vertex {v} needs exactly two transitions")

    def as_graph(self) -> Graph:
        if not self.is_simple:
            raise ContractionError("multigraph cannot be represented as a simple Graph")
        return Graph.from_edges(self.order, self.edges).freeze()

    @classmethod
    def from_graph(cls, g: Graph, transitions: dict[int, Sequence[Sequence[int]]] | None = None) -> "TransitionedFourRegular":
        """Wrap a simple 4-regular graph; transitions are given as pairs of edge ids."""
        h, vmap, emap = g.reindex()
        trans = []
        for v in g.vertices():
            pairs = (transitions or {}).get(v, ())
            trans.append(tuple(frozenset(emap[e] for e in p) for p in pairs))
        return cls(h.order, tuple(h.edge_pairs()), tuple(trans))


def contract_spokes(pg: PermutationGraph, strict: bool = True) -> TransitionedFourRegular:
    """Contract every spoke; transitions pair the two edges of each image circuit.

    With ``strict`` a parallel edge raises :class:`ContractionError`;
    otherwise the multigraph is returned (needed e.g. for the prism).
    """
    g, f = pg.graph, pg.factor
    if not g.is_cubic() or not verify_permutation_structure(g, f).ok:
        raise ContractionError("contraction needs a cubic graph with a permutation 2-factor")
    spokes = f.spokes
    vertex_of: dict[int, int] = {}
    for k, s in enumerate(spokes):
        for x in g.endpoints(s):
            vertex_of[x] = k
    edges, source, side = [], [], []
    for which in (1, 2):
        for e in sorted(f.circuit_edges(which)):
            a, b = g.endpoints(e)
            edges.append((vertex_of[a], vertex_of[b]))
            source.append(e)
            side.append(which)
    order = len(spokes)
    by_side: list[dict[int, list[int]]] = [{1: [], 2: []} for _ in range(order)]
    for k, (u, v) in enumerate(edges):
        by_side[u][side[k]].append(k)
        by_side[v][side[k]].append(k)
    trans = tuple((frozenset(d[1]), frozenset(d[2])) for d in by_side)
    t = TransitionedFourRegular(order, tuple(edges), trans, tuple(spokes), tuple(source), tuple(side))
    if strict and not t.is_simple:
        raise ContractionError("contracting the spokes creates parallel edges")
    t.validate(strict=True)
    return t
