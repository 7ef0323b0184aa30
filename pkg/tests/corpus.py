"""Small fixture graphs as plain edge lists, written out independently of the package."""

from __future__ import annotations

import itertools
import random


def petersen_pairs():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    star = [(i + 5, (i + 2) % 5 + 5) for i in range(5)]
    return 10, outer + spokes + star


def gp_pairs(n: int, k: int):
    pairs = {frozenset((i, (i + 1) % n)) for i in range(n)}
    pairs |= {frozenset((i, n + i)) for i in range(n)}
    pairs |= {frozenset((n + i, n + (i + k) % n)) for i in range(n)}
    return 2 * n, sorted(tuple(sorted(p)) for p in pairs)


def prism_pairs():
    return 6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]


def k4_pairs():
    return 4, list(itertools.combinations(range(4), 2))


def k5_pairs():
    return 5, list(itertools.combinations(range(5), 2))


def k33_pairs():
    return 6, [(a, b) for a in range(3) for b in range(3, 6)]


def cube_pairs():
    return 8, [(a, a ^ (1 << k)) for a in range(8) for k in range(3) if a < a ^ (1 << k)]


def octahedron_pairs():
    return 6, [(a, b) for a, b in itertools.combinations(range(6), 2) if b != a + 3 or a >= 3]


def aligned_pairs(n: int, aligned: int, seed: int):
    rest = list(range(aligned, n))
    random.Random(seed).shuffle(rest)
    perm = list(range(aligned)) + rest
    pairs = [(i, (i + 1) % n) for i in range(n)] + [(n + i, n + (i + 1) % n) for i in range(n)]
    pairs += [(i, n + p) for i, p in enumerate(perm)]
    return 2 * n, pairs


def subdivided(n: int, pairs, k: int = 0):
    """Replace edge k by a path through a new vertex n."""
    u, v = pairs[k]
    return n + 1, pairs[:k] + pairs[k + 1:] + [(u, n), (n, v)]


# cubic fixtures up to 20 vertices that carry two disjoint circuits
CYCLIC_FIXTURES = {
    "prism": prism_pairs(),
    "cube": cube_pairs(),
    "petersen": petersen_pairs(),
    "gp7_2": gp_pairs(7, 2),
    "gp8_3": gp_pairs(8, 3),
    "gp9_2": gp_pairs(9, 2),
    "dodecahedron": gp_pairs(10, 2),
    "aligned10_4": aligned_pairs(10, 4, 0),
    "aligned8_4": aligned_pairs(8, 4, 1),
    "prism_subdivided": subdivided(*prism_pairs()),
    "petersen_subdivided": subdivided(*petersen_pairs(), k=7),
}

ALL_FIXTURES = {
    "k4": k4_pairs(),
    "k33": k33_pairs(),
    **CYCLIC_FIXTURES,
}
