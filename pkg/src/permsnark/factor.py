"""Permutation 2-factors: two chordless circuits plus a perfect matching of spokes."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Sequence

from .graph import Graph, GraphError


class FactorError(ValueError):
    """The 2-factor does not refer to the host graph consistently."""


def canonical_cycle(seq: Sequence[int]) -> tuple[int, ...]:
    """Rotate so the smallest vertex is first, then pick the smaller direction."""
    seq = list(seq)
    if not seq:
        return ()
    k = seq.index(min(seq))
    fwd = seq[k:] + seq[:k]
    back = [fwd[0]] + fwd[1:][::-1]
    return tuple(min(fwd, back))


def cycle_edges(g: Graph, cycle: Sequence[int]) -> list[int]:
    """Edge ids along a cyclic vertex sequence; raises if a step is not an edge."""
    out = []
    n = len(cycle)
    for i in range(n):
        e = g.edge_between(cycle[i], cycle[(i + 1) % n])
        if e is None:
            raise FactorError(f"{cycle[i]}-{cycle[(i + 1) % n]} is not an edge")
        out.append(e)
    return out


@dataclass(frozen=True)
class TwoFactor:
    """Two circuits of a host graph given as cyclic vertex sequences.

    The order of the two circuits is meaningful (``circuit1`` carries the
    anchor's z2 during construction); each sequence is canonically rotated.
    """

    host: Graph
    circuit1: tuple[int, ...]
    circuit2: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "circuit1", canonical_cycle(self.circuit1))
        object.__setattr__(self, "circuit2", canonical_cycle(self.circuit2))
        for v in self.circuit1 + self.circuit2:
            if not self.host.has_vertex(v):
                raise FactorError(f"unknown vertex {v}")

    @property
    def circuits(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return self.circuit1, self.circuit2

    def circuit_edges(self, which: int) -> list[int]:
        return cycle_edges(self.host, self.circuits[which - 1])

    @property
    def edge_ids(self) -> frozenset[int]:
        return frozenset(self.circuit_edges(1) + self.circuit_edges(2))

    @property
    def spokes(self) -> list[int]:
        f = self.edge_ids
        return [e for e in self.host.edges() if e not in f]

    def side(self, v: int) -> int:
        """1 or 2, the circuit that carries ``v``."""
        if v in self.circuit1:
            return 1
        if v in self.circuit2:
            return 2
        raise FactorError(f"vertex {v} is on neither circuit")

    def key(self) -> frozenset[tuple[int, ...]]:
        """Order-free identity, for comparing 2-factors as sets of circuits."""
        return frozenset(self.circuits)

    def to_json_dict(self) -> dict:
        return {
            "circuits": [list(self.circuit1), list(self.circuit2)],
            "spokes": [list(self.host.endpoints(e)) for e in self.spokes],
        }


def trace_cycles(g: Graph, edge_ids) -> list[tuple[int, ...]]:
    """Vertex sequences of the components of a 2-regular edge set."""
    inc: dict[int, list[int]] = {}
    for e in edge_ids:
        for x in g.endpoints(e):
            inc.setdefault(x, []).append(e)
    if any(len(es) != 2 for es in inc.values()):
        raise FactorError("edge set is not 2-regular")
    seen: set[int] = set()
    cycles = []
    for start in sorted(inc):
        if start in seen:
            continue
        seq = [start]
        seen.add(start)
        prev_e = min(inc[start])
        cur = g.other_end(prev_e, start)
        while cur != start:
            seq.append(cur)
            seen.add(cur)
            a, b = inc[cur]
            nxt = b if a == prev_e else a
            prev_e = nxt
            cur = g.other_end(nxt, cur)
        cycles.append(canonical_cycle(seq))
    return cycles


@dataclass
class PermutationReport:
    is_cubic: bool
    is_2factor: bool
    two_circuits: bool
    chordless1: bool
    chordless2: bool
    spokes_matching: bool

    @property
    def ok(self) -> bool:
        return all(asdict(self).values())

    def to_json_dict(self) -> dict:
        d = asdict(self)
        d["ok"] = self.ok
        return d


def _is_chordless(g: Graph, cycle: Sequence[int]) -> bool:
    n = len(cycle)
    pos = {v: i for i, v in enumerate(cycle)}
    for i, v in enumerate(cycle):
        for w in g.neighbors(v):
            j = pos.get(w)
            if j is not None and (j - i) % n not in (1, n - 1):
                return False
    return True


def _is_simple_cycle(g: Graph, cycle: Sequence[int]) -> bool:
    if len(cycle) < 3 or len(set(cycle)) != len(cycle):
        return False
    return all(g.adjacent(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle)))


def verify_permutation_structure(g: Graph, f: TwoFactor) -> PermutationReport:
    """Check every defining property of a permutation 2-factor independently."""
    if f.host is not g:
        raise FactorError("2-factor refers to a different host graph")
    c1, c2 = f.circuits
    seqs = [c for c in (c1, c2) if c]
    flat = [v for c in seqs for v in c]
    is_2factor = (
        all(_is_simple_cycle(g, c) for c in seqs)
        and len(flat) == len(set(flat))
        and set(flat) == set(g.vertices())
    )
    two_circuits = is_2factor and len(seqs) == 2
    chordless1 = bool(c1) and _is_simple_cycle(g, c1) and _is_chordless(g, c1)
    chordless2 = bool(c2) and _is_simple_cycle(g, c2) and _is_chordless(g, c2)
    covered = set(flat)
    spokes_matching = False
    if is_2factor:
        fe = f.edge_ids
        seen: set[int] = set()
        spokes_matching = True
        for e in g.edges():
            if e in fe:
                continue
            u, v = g.endpoints(e)
            if u in seen or v in seen or (u in c1) == (v in c1) or not two_circuits:
                spokes_matching = False
                break
            seen.update((u, v))
        spokes_matching = spokes_matching and seen == covered
    return PermutationReport(g.is_cubic(), is_2factor, two_circuits, chordless1, chordless2, spokes_matching)


def perfect_matchings(g: Graph, limit: int | None = None) -> list[frozenset[int]]:
    """All perfect matchings (as edge-id sets) by branching on the lowest unmatched vertex."""
    out: list[frozenset[int]] = []
    verts = g.vertices()

    def rec(free: set[int], chosen: list[int]) -> bool:
        if limit is not None and len(out) >= limit:
            return True
        if not free:
            out.append(frozenset(chosen))
            return False
        v = min(free)
        free.discard(v)
        for w in g.neighbors(v):
            if w in free:
                free.discard(w)
                chosen.append(g.edge_between(v, w))
                stop = rec(free, chosen)
                chosen.pop()
                free.add(w)
                if stop:
                    break
        free.add(v)
        return limit is not None and len(out) >= limit

    if len(verts) % 2 == 0:
        rec(set(verts), [])
    return out


def find_permutation_2factors(g: Graph, limit: int | None = None) -> list[TwoFactor]:
    """Every 2-factor made of exactly two chordless circuits, via complements of perfect matchings."""
    if not g.is_cubic():
        raise GraphError("find_permutation_2factors needs a cubic graph")
    found = []
    for m in perfect_matchings(g):
        rest = [e for e in g.edges() if e not in m]
        cycles = trace_cycles(g, rest)
        if len(cycles) != 2:
            continue
        f = TwoFactor(g, *sorted(cycles))
        if verify_permutation_structure(g, f).ok:
            found.append(f)
            if limit is not None and len(found) >= limit:
                break
    return found
