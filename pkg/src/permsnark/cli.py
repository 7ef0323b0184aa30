"""``permsnark`` command line: build, verify, contract, export-dot, discover-gluing.

Exit codes: 0 when the report passes, 1 when a check fails, 2 for usage or
input errors, 3 when a search ran out of budget.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .certify import CHECKS, THEOREM, certify_candidates, run_checks, worker_count
from .connectivity import ConnectivityError, essential_edge_connectivity, even_cut_parity_check
from .construction import (
    FIXTURE_VERSION,
    ConstructionError,
    PermutationGraph,
    build_family,
    contract_spokes,
    discover_gluing,
    family_blocks,
    fixture_sha256,
    petersen,
)
from .cover import INDETERMINATE, UNSAT, ccd_search
from .factor import FactorError, TwoFactor
from .graph import Graph, Graph6Error, emit_dot, emit_graph6, parse_graph6

EXIT_PASS, EXIT_FAIL, EXIT_USAGE, EXIT_INDETERMINATE = 0, 1, 2, 3

# levels above these are certified by theorem rather than by search
DESK_LIMIT = {"lambda_c": 2, "cdc_contains": 2}
CERTIFY_CHECKS = {
    "none": (),
    "fast": ("cubic", "perm2f", "girth", "snark", "lambda_c"),
    "full": ("cubic", "perm2f", "girth", "snark", "lambda_c", "cdc_contains"),
}
DEFAULT_CCD_BUDGET = 5_000_000


class InputError(Exception):
    pass


def _write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text if text.endswith("\n") else text + "\n")


def _dump(data: dict) -> str:
    return json.dumps(data, indent=1, sort_keys=False) + "\n"


def sidecar_path(g6_path: Path) -> Path:
    return g6_path.with_suffix(".json")


def _exit_code(report: dict) -> int:
    if report["overall"]:
        return EXIT_PASS
    statuses = [c["status"] for c in report["checks"].values()]
    if "indeterminate" in statuses and "fail" not in statuses:
        return EXIT_INDETERMINATE
    return EXIT_FAIL


def load_input(path: Path) -> tuple[Graph, dict | None]:
    """graph6 payload (first non-empty line) and its sidecar, if one sits next to it."""
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise InputError(f"{path} is empty")
    try:
        g = parse_graph6(lines[0].strip())
    except Graph6Error as exc:
        raise InputError(f"{path}: {exc}") from exc
    side = sidecar_path(path)
    meta = None
    if side.exists() and side != path:
        meta = json.loads(side.read_text(encoding="utf-8"))
    return g.freeze(), meta


def factor_from_sidecar(g: Graph, meta: dict | None) -> TwoFactor | None:
    if not meta or "circuits" not in meta:
        return None
    c1, c2 = meta["circuits"]
    try:
        return TwoFactor(g, tuple(c1), tuple(c2))
    except FactorError as exc:
        raise InputError(f"sidecar 2-factor does not fit the graph: {exc}") from exc


def alpha_from_sidecar(g: Graph, meta: dict | None) -> int | None:
    if not meta or not meta.get("alpha"):
        return None
    return g.edge_between(*meta["alpha"])


def _parse_checks(spec: str) -> tuple[list[str], dict[str, str]]:
    names, args = [], {}
    for item in (s.strip() for s in spec.split(",")):
        if not item:
            continue
        name, _, arg = item.partition(":")
        if name not in CHECKS:
            raise InputError(f"unknown check {name!r}; choose from {', '.join(CHECKS)}")
        names.append(name)
        if arg:
            args[name] = arg
    return names, args


def _summary_line(name: str, res: dict) -> str:
    detail = ""
    if "verdict" in res:
        v = res["verdict"]
        detail = f"{v['status']} nodes={v['nodes_expanded']}"
    elif name == "lambda_c" and "at_least" in res:
        detail = f"lambda_c={res['value'] if res['value'] is not None else '>=' + str(res['cap'])}"
    elif name == "girth" and "value" in res:
        detail = f"girth={res['value']}"
    elif "error" in res:
        detail = res["error"]
    return f"{name:<13} {res['status']:<21} {detail}".rstrip()


# -- commands --------------------------------------------------------------

def cmd_build(args: argparse.Namespace) -> int:
    if args.n < 0:
        raise InputError("--n must be non-negative")
    h = build_family(args.n)
    out = Path(args.out)
    g6 = emit_graph6(h.graph)
    checks = CERTIFY_CHECKS[args.certify]
    skipped = [c for c in checks if c in DESK_LIMIT and args.n > DESK_LIMIT[c]]
    report = None
    if checks:
        report = run_checks(h.graph, h.factor, checks, budget=args.budget_nodes, skipped=skipped)
    meta = h.sidecar()
    meta.update({
        "graph6": g6,
        "level": args.n,
        "tool_version": __version__,
        "fixture_version": FIXTURE_VERSION,
        "fixture_sha256": fixture_sha256(),
        "certify": args.certify,
        "report": report,
    })
    _write(out, g6)
    _write(sidecar_path(out), _dump(meta))
    print(f"H{args.n}: order {h.order}, size {h.graph.size} -> {out}")
    if report is None:
        return EXIT_PASS
    for name, res in report["checks"].items():
        print(_summary_line(name, res))
    if skipped:
        print(f"note: {', '.join(skipped)} {THEOREM} above level {min(DESK_LIMIT.values())}")
    print("overall", "pass" if report["overall"] else "FAIL")
    return _exit_code(report)


def cmd_verify(args: argparse.Namespace) -> int:
    names, extra = _parse_checks(args.checks)
    g, meta = load_input(Path(args.path))
    f = factor_from_sidecar(g, meta)
    # numeric arguments re-target lambda_c / girth, e.g. lambda_c:3
    params = {n: {"want": int(a)} for n, a in extra.items() if n in ("lambda_c", "girth") and a.isdigit()}
    report = run_checks(g, f, names, budget=args.budget_nodes, params=params)
    report["input"]["path"] = str(args.path)
    report["input"]["sidecar"] = meta is not None
    for name, res in report["checks"].items():
        print(_summary_line(name, res))
    print("overall", "pass" if report["overall"] else "FAIL")
    if args.json:
        _write(Path(args.json), _dump(report))
    return _exit_code(report)


def cmd_contract(args: argparse.Namespace) -> int:
    path = Path(args.path)
    g, meta = load_input(path)
    f = factor_from_sidecar(g, meta)
    if f is None:
        raise InputError("contract needs a sidecar with the permutation 2-factor")
    t = contract_spokes(PermutationGraph(g, f, alpha_from_sidecar(g, meta)))
    try:
        ess = essential_edge_connectivity(t.as_graph(), cap=args.ess_cap)
        ess_json, ess_text, ess_ok = ess.to_json_dict(), str(ess), ess.at_least >= 6
    except ConnectivityError as exc:
        ess_json, ess_text, ess_ok = {"error": str(exc)}, f"error: {exc}", False
    parity = even_cut_parity_check(t, cap=args.ess_cap)
    verdict = ccd_search(t, budget=args.ccd_budget)
    report = {
        "input": {"path": str(path), "graph6": emit_graph6(g), "order": g.order},
        "order": t.order,
        "edges": [list(p) for p in t.edges],
        "transitions": [[sorted(p) for p in tr] for tr in t.transitions],
        "spoke_endpoints": [list(g.endpoints(s)) for s in t.spoke_of_vertex],
        "essential_connectivity": ess_json,
        "even_cut_parity": parity,
        "ccd": verdict.to_json_dict(),
        "tool_version": __version__,
    }
    report["overall"] = verdict.status == UNSAT and ess_ok and parity["all_even"] and parity["hamiltonian_circuits"]
    out = Path(args.out) if args.out else path.with_suffix(".4reg.json")
    _write(out, _dump(report))
    print(f"contracted: order {t.order}, size {len(t.edges)} -> {out}")
    print(f"essential edge connectivity: {ess_text}")
    print(f"cuts even: {parity['all_even']} over {parity['cuts_checked']} cuts")
    print(f"ccd: {verdict.status} nodes={verdict.nodes_expanded}")
    print("overall", "pass" if report["overall"] else "FAIL")
    if verdict.status == INDETERMINATE:
        return EXIT_INDETERMINATE
    return EXIT_PASS if report["overall"] else EXIT_FAIL


def cmd_export_dot(args: argparse.Namespace) -> int:
    g, meta = load_input(Path(args.path))
    sets = []
    for name in (s.strip() for s in args.highlight.split(",") if s.strip()):
        if name == "F":
            f = factor_from_sidecar(g, meta)
            if f is None:
                raise InputError("highlighting F needs a sidecar")
            sets.append(f.edge_ids)
        elif name == "alpha":
            a = alpha_from_sidecar(g, meta)
            sets.append(frozenset() if a is None else frozenset({a}))
        else:
            raise InputError(f"unknown highlight {name!r}; use F and/or alpha")
    text = emit_dot(g, sets, name=Path(args.path).stem.replace("-", "_") or "G")
    if args.out:
        _write(Path(args.out), text)
    else:
        sys.stdout.write(text)
    return EXIT_PASS


def cmd_discover_gluing(args: argparse.Namespace) -> int:
    blocks = family_blocks(petersen())
    survivors = discover_gluing(blocks)
    print(f"{len(survivors)} of 16 orientations assemble to a valid permutation 2-factor")
    summary = []
    if not args.no_certify:
        summary = certify_candidates(blocks, survivors, workers=worker_count())
        for row in summary:
            print(f"orientation {row['orientation']}: {'pass' if row['overall'] else 'FAIL'} "
                  f"lambda_c={row['lambda_c']}")
    first = survivors[0]
    _write(Path(args.out), json.dumps(first.to_json_dict(), indent=1) + "\n")
    print(f"first survivor {list(first.orientation)} -> {args.out}")
    if args.report:
        _write(Path(args.report), _dump({"survivors": [list(t.orientation) for t in survivors],
                                         "certification": summary}))
    if summary and not summary[0]["overall"]:
        return EXIT_FAIL
    return EXIT_PASS


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="permsnark", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="write H_n as graph6 plus a JSON sidecar")
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--certify", choices=tuple(CERTIFY_CHECKS), default="none")
    b.add_argument("--out", required=True, help="graph6 output path; the sidecar gets a .json suffix")
    b.add_argument("--budget-nodes", type=int, default=None)
    b.set_defaults(func=cmd_build)

    v = sub.add_parser("verify", help="run named checks on a graph6 file")
    v.add_argument("path")
    v.add_argument("--checks", required=True, help=f"comma list from {','.join(CHECKS)}")
    v.add_argument("--budget-nodes", type=int, default=None)
    v.add_argument("--json", default=None, help="write the full report here")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("contract", help="contract the spokes and search for a compatible decomposition")
    c.add_argument("path")
    c.add_argument("--ccd-budget", type=int, default=DEFAULT_CCD_BUDGET)
    c.add_argument("--ess-cap", type=int, default=7)
    c.add_argument("--out", default=None)
    c.set_defaults(func=cmd_contract)

    d = sub.add_parser("export-dot", help="DOT rendering with highlighted edge sets")
    d.add_argument("path")
    d.add_argument("--highlight", default="F,alpha")
    d.add_argument("--out", default=None)
    d.set_defaults(func=cmd_export_dot)

    g = sub.add_parser("discover-gluing", help="search the 16 gluing orientations and write the fixture")
    g.add_argument("--out", required=True)
    g.add_argument("--report", default=None)
    g.add_argument("--no-certify", action="store_true")
    g.set_defaults(func=cmd_discover_gluing)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, ConstructionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
