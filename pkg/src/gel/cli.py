"""Command-line front end.

Every subcommand prints one JSON envelope
``{command, parameters, result, wall_time, nodes}`` (or, with ``--table``,
an aligned two-column rendering of ``result``).  Graphs are given as
graph6 strings, named graphs (``P4``, ``C5`` ...) or generator specs
(``cycle:7``, ``kpq:3,2``, ``gnp:20,0.5,seed=7``, ``affine:5``).

Exit codes: 0 success, 1 failed verification, 2 usage error, 3 solver
timeout (node budget or ``--timeout`` exhausted).
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import graph6
from .bounds import chernoff_bound_value, report
from .chib import binary_chromatic, c_min_c_max
from .construct import affine_construction, coverage_audit
from .editdist import dist_graphs, dist_n_forb, dist_to_forb
from .errors import GelError, SolverTimeout
from .families import ForbiddenFamily, parse_family, parse_graph
from .heuristic import choose_c, derandomized_edit, expected_edits, make_plan, randomized_edit
from .limits import Limits
from .regularity import concentration_experiment

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_TIMEOUT = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _graph(text: str | None, flag: str):
    if text is None:
        raise UsageError(f"{flag} is required")
    try:
        return parse_graph(text)
    except ValueError as exc:
        raise UsageError(f"{flag}: {exc}") from None


def _family(text: str | None) -> ForbiddenFamily:
    if text is None:
        raise UsageError("--forb is required")
    try:
        return parse_family(text)
    except ValueError as exc:
        raise UsageError(f"--forb: {exc}") from None


def _limits(args, label: str) -> Limits:
    return Limits(args.budget, args.timeout, label)


# subcommands -------------------------------------------------------------


def cmd_chib(args):
    g = _graph(args.gen or args.g, "--gen")
    lim = _limits(args, "chib")
    res = binary_chromatic(g, lim)
    c_min = c_max = None
    if res.k >= 1:
        _, c_min, c_max = c_min_c_max(g, lim)
    feas = res.table.to_json()
    for row in feas:
        w = res.table.witnesses.get(row["cliques"])
        row["witness"] = w.to_json() if w is not None else None
    out = {"graph6": graph6.encode(g), "n": g.n, "chi_b": res.chi_b, "k": res.k,
           "c_min": c_min, "c_max": c_max, "feasibility": feas}
    return out, lim.nodes


def cmd_dist(args):
    g = _graph(args.g or args.gen, "--g")
    if args.forb is not None and args.h is None:
        return cmd_forb(args)
    h = _graph(args.h, "--h")
    lim = _limits(args, "dist")
    try:
        d, mapping = dist_graphs(g, h, lim)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return {"distance": d, "map": [mapping[v] for v in range(g.n)]}, lim.nodes


def cmd_forb(args):
    g = _graph(args.g or args.gen, "--g")
    fam = _family(args.forb or args.h)
    lim = _limits(args, "forb")
    try:
        res = dist_to_forb(g, fam, lim, allow_large=args.allow_large)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out = {"graph6": graph6.encode(g), "family": fam.label(), **res.to_json()}
    return out, lim.nodes


def cmd_maxdist(args):
    if args.n is None:
        raise UsageError("--n is required")
    fam = _family(args.forb or args.h)
    lim = _limits(args, "maxdist")
    try:
        res = dist_n_forb(args.n, fam, lim, allow_large=args.allow_large, jobs=args.jobs)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return {"n": args.n, "family": fam.label(), **res.to_json()}, lim.nodes


def _edit_graphs(args):
    if args.graph:
        path = Path(args.graph)
        if not path.exists():
            raise UsageError(f"--graph: no such file {args.graph}")
        try:
            return list(graph6.read_lines(path.read_text().splitlines()))
        except ValueError as exc:
            raise UsageError(f"--graph: {exc}") from None
    return [_graph(args.g or args.gen, "--graph/--g")]


def cmd_edit(args):
    h = _graph(args.h, "--h")
    lim = _limits(args, "edit")
    k, c_min, c_max = c_min_c_max(h, lim)
    rows = []
    for i, g in enumerate(_edit_graphs(args)):
        c = choose_c(g.density, k, c_min, c_max)
        plan = make_plan(g.density, k, c)
        if args.mode == "random":
            seed = None if args.seed is None else args.seed + i
            out = randomized_edit(g, k, c, seed=seed, plan=plan)
        else:
            out = derandomized_edit(g, k, c, plan=plan)
        row = {"graph6": graph6.encode(g), **out.to_json(),
               "expected": float(expected_edits(g.density, g.n, k, c)),
               "output_graph6": graph6.encode(out.graph)}
        rows.append(row)
    return {"mode": args.mode, "graphs": rows}, lim.nodes


def cmd_bounds(args):
    if args.n is None:
        raise UsageError("--n is required")
    fam = _family(args.forb or args.h)
    lim = _limits(args, "bounds")
    try:
        rep = report(args.n, fam, exact=not args.no_exact, limits=lim)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.csv:
        _write_text(args.csv, rep.lub_csv())
    return rep.to_json(), lim.nodes


def cmd_construct(args):
    try:
        g, parts = affine_construction(args.k)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    audit = coverage_audit(args.k, g, parts)
    out = {
        "k": args.k,
        "n": g.n,
        "graph6": graph6.encode(g),
        "partitions": [{"cliques": p.cliques, "cocliques": p.cocliques, "blocks": p.to_json()}
                       for p in parts],
        "audit": audit,
        "audit_passed": not audit,
    }
    return out, 0


def cmd_regularity(args):
    try:
        res = concentration_experiment(args.n, args.l, args.f, args.trials, seed=args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.csv:
        _write_text(args.csv, res.to_csv())
    out = res.to_json()
    out["chernoff_bound"] = chernoff_bound_value(args.n, args.eps_prime, args.f)
    return out, 0


def cmd_verify(args):
    from .acceptance import run_all

    keys = set(args.only.split(",")) if args.only else None
    checks = run_all(keys, jobs=args.jobs)
    if keys and not checks:
        raise UsageError(f"no criterion matches --only {args.only}")
    out = {"all_passed": all(c.passed for c in checks),
           "lines": [c.line() for c in checks],
           "criteria": [{"key": c.key, "title": c.title, "passed": c.passed,
                         "detail": c.detail, "seconds": round(c.seconds, 3)} for c in checks]}
    return out, 0


def _write_text(target: str, text: str) -> None:
    if target == "-":
        sys.stderr.write(text)
    else:
        Path(target).write_text(text)


# parser ------------------------------------------------------------------


def _common(p: argparse.ArgumentParser) -> None:
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="table", action="store_false", help="JSON envelope (default)")
    fmt.add_argument("--table", dest="table", action="store_true", help="aligned columns")
    p.add_argument("--budget", type=int, default=None, metavar="NODES",
                   help="search node budget (default: $GEL_NODE_BUDGET or 10^8)")
    p.add_argument("--timeout", type=float, default=None, metavar="SECS")
    p.add_argument("--jobs", type=int, default=1, metavar="N")
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(table=False)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="gel", description="Editing distance to induced-H-free graphs.")
    sub = ap.add_subparsers(dest="command", required=True)

    def graph_flags(p):
        p.add_argument("--gen", help="generator spec, name or graph6")
        p.add_argument("--g", help="input graph (graph6, name or generator spec)")
        p.add_argument("--h", help="second graph / forbidden graph")
        p.add_argument("--forb", help="forbidden family: forb:X, sub:X, forbset:4v3e, or a name")
        p.add_argument("--allow-large", action="store_true", help="lift vertex-count guards")

    p = sub.add_parser("chib", help="binary chromatic number and its feasibility table")
    graph_flags(p)
    p.set_defaults(func=cmd_chib)

    p = sub.add_parser("dist", help="editing distance between two graphs (or to a family with --forb)")
    graph_flags(p)
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("forb", help="minimum edits making a graph free of a family")
    graph_flags(p)
    p.set_defaults(func=cmd_forb)

    p = sub.add_parser("maxdist", help="maximum distance over all n-vertex graphs")
    graph_flags(p)
    p.add_argument("--n", type=int)
    p.set_defaults(func=cmd_maxdist)

    p = sub.add_parser("edit", help="randomized or derandomized clique/coclique editor")
    graph_flags(p)
    p.add_argument("--graph", help="file with one graph6 per line")
    p.add_argument("--mode", choices=["random", "derandomized"], default="derandomized")
    p.set_defaults(func=cmd_edit)

    p = sub.add_parser("bounds", help="closed-form bounds report")
    graph_flags(p)
    p.add_argument("--n", type=int)
    p.add_argument("--no-exact", action="store_true", help="skip the exhaustive maximum")
    p.add_argument("--csv", metavar="PATH", help="write the per-density bound curve ('-' = stderr)")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("construct", help="prime-grid graph on k^2 vertices")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("regularity", help="G(n,1/2) cluster-density concentration experiment")
    p.add_argument("--n", type=int, default=128)
    p.add_argument("--l", type=int, default=4, help="number of clusters")
    p.add_argument("--f", type=float, default=0.1)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--eps-prime", type=float, default=0.25, help="epsilon' for the union-bound value")
    p.add_argument("--csv", metavar="PATH", help="write per-trial min/max densities ('-' = stderr)")
    p.set_defaults(func=cmd_regularity)

    p = sub.add_parser("verify", help="run the acceptance checks")
    p.add_argument("--only", help="comma-separated criterion keys")
    p.set_defaults(func=cmd_verify)

    for p in sub.choices.values():
        _common(p)
    return ap


def _params(args) -> dict:
    skip = {"func", "table", "command"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip and v is not None}


def _render_table(result: dict) -> str:
    rows = []
    for key, value in result.items():
        if isinstance(value, (list, dict)):
            value = json.dumps(value, sort_keys=True)
        rows.append((key, "-" if value is None else str(value)))
    width = max((len(k) for k, _ in rows), default=0)
    return "\n".join(f"{k:<{width}}  {v}" for k, v in rows)


def run(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    t0 = time.perf_counter()
    try:
        result, nodes = args.func(args)
    except UsageError as exc:
        print(f"gel {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SolverTimeout as exc:
        info = {"command": args.command, "error": "timeout", "message": str(exc), "nodes": exc.nodes}
        if exc.graph is not None:
            info["graph6"] = graph6.encode(exc.graph)
        print(json.dumps(info), file=sys.stderr)
        return EXIT_TIMEOUT
    except (GelError, ValueError) as exc:
        print(f"gel {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    wall = time.perf_counter() - t0
    if args.table:
        if args.command == "verify":
            print("\n".join(result["lines"]), file=stdout)
        else:
            print(_render_table(result), file=stdout)
    else:
        env = {"command": args.command, "parameters": _params(args), "result": result,
               "wall_time": round(wall, 6), "nodes": int(nodes)}
        print(json.dumps(env, indent=2), file=stdout)
    if args.command == "verify" and not result["all_passed"]:
        return EXIT_FAILED
    return EXIT_OK


def main() -> None:
    sys.exit(run())
