"""Recompute tests/data/expected.json from the independent oracles.

Run from the repository root:  python tests/freeze_expected.py  (several minutes;
the perfect-matching oracle enumerates edge subsets).
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

import oracles as o  # noqa: E402
from corpus import ALL_FIXTURES, CYCLIC_FIXTURES, k5_pairs, octahedron_pairs, petersen_pairs, prism_pairs  # noqa: E402

OUT = Path(__file__).parent / "data" / "expected.json"


def main() -> None:
    data: dict = {"fixtures": {}}
    for name, (n, pairs) in ALL_FIXTURES.items():
        entry = {
            "order": n,
            "size": len(pairs),
            "graph6": o.graph6_reference(n, pairs),
            "girth": o.girth_by_edge_deletion(n, pairs),
        }
        cubic = all(sum(x in p for p in pairs) == 3 for x in range(n))
        if cubic:
            entry["perfect_matchings"] = len(o.perfect_matchings(n, pairs))
            entry["permutation_2factors"] = o.permutation_2factor_count(n, pairs)
            entry["colourable"] = o.is_3_edge_colourable(n, pairs)
        if name in CYCLIC_FIXTURES:
            entry["cyclic_connectivity_cap6"] = o.naive_cyclic_connectivity(n, pairs, 6)
        data["fixtures"][name] = {k: (None if v == float("inf") else v) for k, v in entry.items()}

    n, pairs = octahedron_pairs()
    data["octahedron_essential"] = o.brute_essential_connectivity(n, pairs)
    n, pairs = k5_pairs()
    data["k5_essential"] = o.brute_essential_connectivity(n, pairs)

    n, pairs = petersen_pairs()
    outer, star = frozenset(range(5)), frozenset(range(10, 15))
    data["petersen_cdc_with_factor"] = o.cdc_containing_exists(n, pairs, [outer, star])
    data["petersen_any_cdc"] = o.cdc_containing_exists(n, pairs, [])
    n, pairs = prism_pairs()
    data["prism_cdc_with_triangle"] = o.cdc_containing_exists(n, pairs, [frozenset({0, 1, 2})])
    data["prism_cdc_with_both_triangles"] = o.cdc_containing_exists(
        n, pairs, [frozenset({0, 1, 2}), frozenset({3, 4, 5})])

    # K5 as the image of the pentagon/pentagram: vertex i is spoke i
    k5_edges = [(i, (i + 1) % 5) for i in range(5)] + [(i, (i + 2) % 5) for i in range(5)]
    trans = []
    for v in range(5):
        pent = [k for k in range(5) if v in k5_edges[k]]
        gram = [k for k in range(5, 10) if v in k5_edges[k]]
        trans.append([pent, gram])
    data["k5_bad_ccd_exists"] = o.ccd_exists(5, k5_edges, trans)
    data["k5_empty_transitions_ccd_exists"] = o.ccd_exists(5, k5_edges, [[] for _ in range(5)])

    OUT.parent.mkdir(exist_ok=True)
    OUT.write_text(json.dumps(data, indent=1, sort_keys=True) + "\n", encoding="utf-8")
    print(f"wrote {OUT}")


if __name__ == "__main__":
    main()
