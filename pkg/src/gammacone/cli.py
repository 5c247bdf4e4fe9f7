"""``gammacone`` command-line front end.

Exit status: 0 ok, 1 verification failure, 2 usage or input error,
3 an instance exceeded an enumeration guard.
"""
from __future__ import annotations

import argparse
import json
import sys

from .count import count_ideals_dp, gamma_vector
from .errors import ConsistencyError, GammaConeError, GuardExceeded, guard
from .graph import Graph, classify, components, named_family, parse_graph
from .order import (
    make_orientation,
    parse_orientation_bits,
    principal_decomposition,
    principal_orientation,
)
from .principal import block_decomposition, principal_number_formula, principal_number_induction
from .series import check_a_series, evaluate_family_series
from .verification import invariant_suite

COMMANDS = ("info", "gamma-vector", "principal", "blocks", "extensions", "series", "verify")
VERIFY_MAX_N = 8


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gammacone", description="Chamber counts of acyclic orientations of graphs.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("graph_file", nargs="?", help="edge-list file ('-' for stdin)")
    p.add_argument("--family", help="NAME:N with NAME in path, star, D, E (series: A, D or E)")
    p.add_argument("--side", type=int, choices=(0, 1), default=0, help="0: vertex 0 in pi1, 1: swapped")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized checks (verify)")
    p.add_argument("--max-n", type=int, default=None, help="size bound for series and verify")
    p.add_argument("--orientation", help="edge direction bitstring for 'extensions', edge 0 last")
    return p


def _load_graph(args) -> Graph:
    if args.family and args.graph_file:
        raise UsageError("give either --family or an edge-list file, not both")
    if args.family:
        name, sep, n = args.family.partition(":")
        if not sep or not n.isdigit():
            raise UsageError(f"--family expects NAME:N, got {args.family!r}")
        return named_family(name, int(n))
    if args.graph_file:
        if args.graph_file == "-":
            return parse_graph(sys.stdin.read())
        try:
            with open(args.graph_file, encoding="utf-8") as fh:
                return parse_graph(fh.read())
        except OSError as exc:
            raise UsageError(f"cannot read {args.graph_file}: {exc.strerror}") from None
    raise UsageError("no graph given: use --family NAME:N or an edge-list file")


def _edges(g: Graph) -> list[list[int]]:
    return [[u, v] for u, v in g.edges]


def cmd_info(g: Graph, args) -> tuple[dict, str]:
    c = classify(g)
    data = {
        "vertices": g.n,
        "edges": _edges(g),
        "connected": c.is_connected,
        "acyclic": c.is_acyclic,
        "tree": c.is_tree,
        "forest": c.is_forest,
        "components": c.n_components,
    }
    kind = "tree" if c.is_tree else "forest" if c.is_forest else "graph with cycles"
    text = f"{g.n} vertices, {g.m} edges, {c.n_components} component(s): {kind}"
    return data, text


def cmd_gamma_vector(g: Graph, args) -> tuple[dict, str]:
    gv = gamma_vector(g)
    data = gv.to_json()
    s = data["summary"]
    lines = [f"orientations: {len(gv.sigma)}", f"total: {gv.total()}", f"gamma vector: {s['multiset']}",
             f"max: {s['max']}", "argmax: " + " ".join(s["argmax_bits"])]
    return data, "\n".join(lines)


def _decomposition(g: Graph, side: int):
    if len(components(g)) != 1:
        raise UsageError("principal decomposition needs a connected graph")
    return principal_decomposition(g, side)


def cmd_principal(g: Graph, args) -> tuple[dict, str]:
    d = _decomposition(g, args.side)
    po = principal_orientation(g, d)
    dp = count_ideals_dp(po)
    if classify(g).is_tree:
        formula, induction = principal_number_formula(g, d), principal_number_induction(g, d)
    else:
        formula = induction = None
    data = {
        "pi1": sorted(d.pi1),
        "pi2": sorted(d.pi2),
        "orientation_bits": po.to_bitstring(),
        "sigma": {
            "formula": None if formula is None else str(formula),
            "induction": None if induction is None else str(induction),
            "ideal_dp": str(dp),
        },
        "agree": formula is None or formula == induction == dp,
    }
    lines = [f"pi1: {data['pi1']}", f"pi2: {data['pi2']}", f"orientation: {data['orientation_bits']}"]
    for k, v in data["sigma"].items():
        lines.append(f"sigma ({k}): {'n/a (not a tree)' if v is None else v}")
    return data, "\n".join(lines)


def cmd_blocks(g: Graph, args) -> tuple[dict, str]:
    report = block_decomposition(g, _decomposition(g, args.side))
    data = report.to_json()
    lines = [f"pi1: {data['pi1']}  pi2: {data['pi2']}", f"{len(report.blocks)} blocks, total {report.total}",
             f"{'#':>3} {'root':>4} {'count':>8}  parents (child<-parent)"]
    for i, b in enumerate(report.blocks):
        par = " ".join(f"{c}<-{p}" for c, p in b.lifted.parent)
        lines.append(f"{i:>3} {b.lifted.root:>4} {b.hook_count:>8}  {par}")
    return data, "\n".join(lines)


def cmd_extensions(g: Graph, args) -> tuple[dict, str]:
    if not args.orientation:
        raise UsageError("extensions needs --orientation BITS")
    try:
        o = make_orientation(g, parse_orientation_bits(args.orientation))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    o.require_acyclic()
    sigma = count_ideals_dp(o)
    data = {"orientation_bits": o.to_bitstring(), "pairs": [list(p) for p in o.pairs()], "sigma": str(sigma)}
    return data, f"orientation {o.to_bitstring()}: sigma = {sigma}"


def cmd_series(args) -> tuple[dict, str]:
    if args.graph_file:
        raise UsageError("series takes no graph file")
    fam = (args.family or "A").partition(":")[0].upper()
    if fam not in ("A", "D", "E"):
        raise UsageError(f"series family must be A, D or E, got {fam!r}")
    n_max = 9 if args.max_n is None else args.max_n
    guard(n_max, 9, "series comparison")
    rows = check_a_series(n_max)[1] if fam == "A" else evaluate_family_series(fam, n_max)
    data = {"family": fam, "rows": [r.to_json() for r in rows]}
    lines = [f"{'n':>3} {'direct':>8} {'series':>8}  match"]
    for r in rows:
        direct = "-" if r.direct is None else str(r.direct)
        match = "-" if r.match is None else ("yes" if r.match else "NO")
        lines.append(f"{r.n:>3} {direct:>8} {str(r.series):>8}  {match}")
    return data, "\n".join(lines)


def cmd_verify(args) -> tuple[dict, str, bool]:
    max_n = 7 if args.max_n is None else args.max_n
    guard(max_n, VERIFY_MAX_N, "verify sweep")
    results = invariant_suite(seed=args.seed, max_n=max_n)
    ok = all(results)
    data = {
        "seed": args.seed,
        "max_n": max_n,
        "passed": ok,
        "checks": [{"name": r.name, "passed": r.passed, "failures": list(r.failures)} for r in results],
    }
    lines = [f"{'PASS' if r.passed else 'FAIL'} {r.name}" + "".join(f"\n    {f}" for f in r.failures[:5]) for r in results]
    return data, "\n".join(lines), ok


GRAPH_COMMANDS = {
    "info": cmd_info,
    "gamma-vector": cmd_gamma_vector,
    "principal": cmd_principal,
    "blocks": cmd_blocks,
    "extensions": cmd_extensions,
}


def run(argv, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    ok = True
    try:
        if args.command == "series":
            data, text = cmd_series(args)
        elif args.command == "verify":
            data, text, ok = cmd_verify(args)
        else:
            data, text = GRAPH_COMMANDS[args.command](_load_graph(args), args)
    except GuardExceeded as exc:
        print(f"gammacone: {exc}", file=err)
        return 3
    except ConsistencyError as exc:
        print(f"gammacone: internal check failed: {exc}", file=err)
        return 1
    except (UsageError, GammaConeError, ValueError) as exc:
        print(f"gammacone: {exc}", file=err)
        return 2
    if args.json:
        print(json.dumps(data, indent=2), file=out)
    else:
        print(text, file=out)
    return 0 if ok else 1


def main(argv=None) -> int:
    sys.exit(run(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()
