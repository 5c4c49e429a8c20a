"""Command-line surface.

Exit codes: 0 success (and every checked identity holds), 1 a checked
identity or bound fails, 2 usage or parse error, 3 validation or
precondition error.  With --json a single machine-readable object is
printed; its content is byte-identical across runs on the same input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import checks, gemio, moves, pi1
from .boundary import boundary_component_count, boundary_graph
from .core import ColoredGraph, classify_vertices
from .errors import GemError, ParseError, ValidationError
from .invariants import (
    enumerate_cyclic_permutations,
    euler_characteristic,
    f_vector,
    gurau_degree,
    invariant_report,
    regular_genus,
    rho_table,
)

EXIT_OK = 0
EXIT_INCONSISTENT = 1
EXIT_USAGE = 2
EXIT_VALIDATION = 3


def _load(path: str) -> ColoredGraph:
    return gemio.read_gem(path)


def _emit(args, payload: dict, human: list[str]) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True, separators=(",", ":")))
    else:
        for line in human:
            print(line)


def cmd_validate(args) -> int:
    graph = _load(args.file)
    cls = classify_vertices(graph)
    payload = {
        "command": "validate", "ok": True,
        "dimension": graph.dimension, "vertices": graph.num_vertices,
        "regular": graph.is_regular, "bipartite": graph.is_bipartite,
        "boundary_vertices": 2 * cls.p_bar,
    }
    human = [f"valid gem: dimension {graph.dimension}, {graph.num_vertices} vertices, "
             f"{'regular' if graph.is_regular else f'{2 * cls.p_bar} boundary vertices'}, "
             f"{'bipartite' if graph.is_bipartite else 'non-bipartite'}"]
    _emit(args, payload, human)
    return EXIT_OK


def cmd_info(args) -> int:
    graph = _load(args.file)
    report = invariant_report(graph)
    payload = {"command": "info", **report.to_jsonable()}
    human = [
        f"dimension {report.dimension}, 2p = {report.num_vertices} "
        f"(p_bar={report.p_bar}, p_dot={report.p_dot})",
        f"regular: {report.is_regular}, bipartite: {report.is_bipartite}, "
        f"boundary components: {report.boundary_components}",
        f"f-vector: {report.f_vector}, chi = {report.chi}",
        f"rho_min = {report.rho_min}" + (
            f", omega_G = {report.omega_g}" if report.omega_g is not None else ""),
        "g (pairs): " + ", ".join(
            f"{''.join(map(str, k))}:{v[0]}/{v[1]}"
            for k, v in sorted(report.g_pairs.items())),
    ]
    _emit(args, payload, human)
    return EXIT_OK


def cmd_boundary(args) -> int:
    graph = _load(args.file)
    bg = boundary_graph(graph)
    out_graph = bg.graph if args.component is None \
        else bg.component_subgraph(args.component)
    gemio.write_gem(out_graph, args.output, name=args.name)
    payload = {
        "command": "boundary", "ok": True, "h": bg.num_components,
        "boundary_vertices": out_graph.num_vertices, "output": str(args.output),
    }
    human = [f"boundary graph: {out_graph.num_vertices} vertices, "
             f"h = {bg.num_components} -> {args.output}"]
    if args.component is None and bg.num_components > 1:
        human.append("note: boundary graph is disconnected; use --component "
                     "to extract one piece")
    _emit(args, payload, human)
    return EXIT_OK


def cmd_regularize(args) -> int:
    graph = _load(args.file)
    out_graph, record = moves.regularize(graph, singular_color=args.singular_color)
    gemio.write_gem(out_graph, args.output, name=args.name)
    payload = {
        "command": "regularize", "ok": True,
        "singular_color": record.singular_color_choice,
        "added_edges": [list(e) for e in record.added_edges],
        "color_swap": list(record.color_swap),
        "output": str(args.output),
    }
    human = [f"capped {len(record.added_edges)} path(s) with color "
             f"{graph.dimension}, swapped colors {record.color_swap[0]} and "
             f"{record.color_swap[1]} -> {args.output}"]
    _emit(args, payload, human)
    return EXIT_OK


def cmd_dipoles(args) -> int:
    graph = _load(args.file)
    sites = moves.find_1_dipoles(graph)
    payload = {
        "command": "dipoles", "ok": True,
        "sites": [{"color": s.color, "vertices": list(s.vertices)} for s in sites],
    }
    human = [f"{len(sites)} one-dipole site(s)"]
    human += [f"  [{k}] color {s.color} at {s.vertices}" for k, s in enumerate(sites)]
    if args.cancel is not None:
        if not (0 <= args.cancel < len(sites)):
            raise ParseError(f"no dipole with index {args.cancel}")
        if args.output is None:
            raise ParseError("--cancel needs -o OUT")
        result = moves.cancel_1_dipole(graph, sites[args.cancel])
        gemio.write_gem(result, args.output, name=args.name)
        payload["cancelled"] = args.cancel
        payload["output"] = str(args.output)
        human.append(f"cancelled [{args.cancel}] -> {args.output}")
    _emit(args, payload, human)
    return EXIT_OK


def cmd_contract(args) -> int:
    graph = _load(args.file)
    result = moves.full_contraction(graph)
    gemio.write_gem(result, args.output, name=args.name)
    payload = {"command": "contract", "ok": True,
               "vertices_before": graph.num_vertices,
               "vertices_after": result.num_vertices, "output": str(args.output)}
    human = [f"contracted {graph.num_vertices} -> {result.num_vertices} "
             f"vertices -> {args.output}"]
    _emit(args, payload, human)
    return EXIT_OK


def cmd_genus(args) -> int:
    graph = _load(args.file)
    best, argmin = regular_genus(graph)
    payload = {"command": "genus", "ok": True, "rho_min": str(best),
               "argmin": [eps.label() for eps in argmin]}
    human = [f"rho = {best} (attained by {len(argmin)} cyclic order(s))"]
    if args.all_perms:
        table = rho_table(graph)
        payload["table"] = {eps.label(): str(v) for eps, v in sorted(table.items())}
        human += [f"  ({eps.label()}) -> {v}" for eps, v in sorted(table.items())]
    _emit(args, payload, human)
    return EXIT_OK


def cmd_gdegree(args) -> int:
    graph = _load(args.file)
    omega = gurau_degree(graph)
    _emit(args, {"command": "gdegree", "ok": True, "omega_g": str(omega)},
          [f"omega_G = {omega}"])
    return EXIT_OK


def cmd_fvector(args) -> int:
    graph = _load(args.file)
    fv = f_vector(graph)
    _emit(args, {"command": "fvector", "ok": True, "f_vector": list(fv)},
          [f"f = {fv}"])
    return EXIT_OK


def cmd_euler(args) -> int:
    graph = _load(args.file)
    chi = euler_characteristic(graph)
    _emit(args, {"command": "euler", "ok": True, "chi": chi}, [f"chi = {chi}"])
    return EXIT_OK


def cmd_pi1(args) -> int:
    graph = _load(args.file)
    try:
        i, j = (int(x) for x in args.pair.split(","))
    except ValueError as exc:
        raise ParseError(f"--pair wants I,J with integers, got {args.pair!r}") from exc
    pres = pi1.presentation(graph, i, j)
    if args.simplify:
        pres = pi1.tietze_simplify(pres)
    free_rank, divisors = pi1.abelianization_rank(pres)
    lower, upper = pi1.rank_bounds(pres)
    payload = {
        "command": "pi1", "ok": True, "pair": [min(i, j), max(i, j)],
        "generators": pres.num_generators,
        "relators": [list(w) for w in pres.relators],
        "abelianization": {"free_rank": free_rank, "divisors": divisors},
        "rank_bounds": [lower, upper],
        "simplified": bool(args.simplify),
    }
    human = [pres.pretty(),
             f"abelianization: free rank {free_rank}, torsion {divisors or 'none'}",
             f"rank bounds: [{lower}, {upper}]"]
    _emit(args, payload, human)
    return EXIT_OK


def _dipole_suite(graph: ColoredGraph) -> tuple[dict, list[str], bool]:
    sites = moves.find_1_dipoles(graph)
    results = []
    ok = True
    base_abel = pi1.abelianization_rank(pi1.presentation(graph, 0, 1))
    base_chi = euler_characteristic(graph)
    base_rho = rho_table(graph) if graph.is_regular else None
    base_f = f_vector(graph)
    for site in sites:
        entry = {"color": site.color, "vertices": list(site.vertices)}
        u, v = site.vertices
        mixed = graph.has_color(u, graph.dimension) != graph.has_color(v, graph.dimension)
        if mixed:
            entry["skipped"] = "endpoints straddle the boundary"
            results.append(entry)
            continue
        after = moves.cancel_1_dipole(graph, site)
        entry["abelianization_invariant"] = (
            pi1.abelianization_rank(pi1.presentation(after, 0, 1)) == base_abel)
        checks_here = [entry["abelianization_invariant"]]
        if graph.is_regular:
            delta = tuple(b - a for b, a in zip(base_f, f_vector(after)))
            entry["f_delta"] = list(delta)
            entry["f_delta_ok"] = (delta == (1, 4, 6, 5, 2)) if graph.dimension == 4 \
                else (sum((-1) ** h * x for h, x in enumerate(delta)) == 0)
            entry["chi_invariant"] = euler_characteristic(after) == base_chi
            entry["rho_invariant"] = rho_table(after) == base_rho
            checks_here += [entry["f_delta_ok"], entry["chi_invariant"],
                            entry["rho_invariant"]]
        ok = ok and all(checks_here)
        results.append(entry)
    return {"sites": results}, [f"checked {len(sites)} dipole site(s)"], ok


def cmd_check(args) -> int:
    graph = _load(args.file)
    suite = args.suite
    if suite == "lemma" or suite == "corollary":
        reports = {c: checks.check_regularization_identities(graph, c)
                   for c in range(graph.dimension)}
        if suite == "lemma":
            ok = all(r.lemma_ok for r in reports.values())
        else:
            ok = all(r.transfer_ok for r in reports.values())
        payload = {"command": "check", "suite": suite, "ok": ok,
                   "by_color": {str(c): r.to_jsonable() for c, r in reports.items()}}
        human = [f"{suite} identities: {'hold' if ok else 'VIOLATED'} "
                 f"for all {graph.dimension} color choices"]
    elif suite == "omega":
        report = checks.check_omega_pairing(graph)
        ok = report.ok
        payload = {"command": "check", "suite": suite, "ok": ok,
                   **report.to_jsonable()}
        human = [f"omega pairing: omega_G = {report.omega}, "
                 f"{'holds' if ok else 'VIOLATED'}"]
    elif suite == "dipole":
        detail, human, ok = _dipole_suite(graph)
        payload = {"command": "check", "suite": suite, "ok": ok, **detail}
        human.append("dipole invariances: " + ("hold" if ok else "VIOLATED"))
    elif suite == "dehn":
        report = checks.check_dehn_sommerville(graph)
        ok = report.ok
        payload = {"command": "check", "suite": suite, "ok": ok,
                   **report.to_jsonable()}
        human = [f"2p = {report.lhs}, 6chi + 2*sum(g_ijk) - 30 = {report.rhs}: "
                 f"{'holds' if ok else 'VIOLATED'}"]
    else:  # pragma: no cover - argparse restricts choices
        raise ParseError(f"unknown suite {suite!r}")
    _emit(args, payload, human)
    return EXIT_OK if ok else EXIT_INCONSISTENT


def cmd_bound(args) -> int:
    graph = _load(args.file)
    report = checks.check_bound_on_gem(graph, args.chi, args.m, args.h, args.mhat)
    payload = {"command": "bound", "ok": report.ok, **report.to_jsonable()}
    human = [
        f"genus bound {report.genus_bound}: "
        f"{'met' if report.genus_ok else 'VIOLATED'}"
        + (" with equality" if report.genus_equality else ""),
        f"G-degree bound {report.gdegree_bound} vs omega_G = {report.omega}: "
        f"{'met' if report.gdegree_ok else 'VIOLATED'}"
        + (" with equality" if report.gdegree_equality else ""),
    ]
    ok = report.ok
    if args.semisimple:
        ss = checks.check_semisimple(graph, args.m, args.mhat, args.h)
        payload["semisimple"] = ss.to_jsonable()
        human.append(f"semi-simple: {ss.semi_simple}; weak witnesses: "
                     f"{len(ss.weak_semi_simple)} of "
                     f"{len(enumerate_cyclic_permutations(4))}")
    _emit(args, payload, human)
    return EXIT_OK if ok else EXIT_INCONSISTENT


def cmd_catalog(args) -> int:
    if args.action == "add":
        if args.file is None:
            raise ParseError("catalog add needs a gem FILE")
        graph = _load(args.file)
        record, added = gemio.catalog_add(args.store, graph, name=args.name)
        payload = {"command": "catalog", "action": "add", "ok": True,
                   "added": added, "record": record}
        human = [("added " if added else "already present: ") + record["digest"]]
        _emit(args, payload, human)
        return EXIT_OK
    records, warnings = gemio.catalog_scan(args.store, args.where or ())
    payload = {"command": "catalog", "action": "scan", "ok": True,
               "count": len(records), "records": records,
               "corrupt_lines": [w.line_number for w in warnings]}
    human = [f"{len(records)} record(s)"]
    human += [f"  {r['digest'][:12]}  {r.get('name') or '-'}  "
              f"rho_min={r.get('rho_min')} omega_G={r.get('omega_g')}"
              for r in records]
    human += [f"warning: corrupt line {w.line_number}" for w in warnings]
    _emit(args, payload, human)
    return EXIT_OK


def cmd_export_dot(args) -> int:
    graph = _load(args.file)
    gemio.export_dot(graph, args.output, name=args.name or "gem")
    _emit(args, {"command": "export-dot", "ok": True, "output": str(args.output)},
          [f"wrote {args.output}"])
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gemkit",
        description="Manipulate edge-colored graphs encoding PL manifolds "
                    "and verify their genus and degree identities.")
    parser.add_argument("--json", action="store_true",
                        help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(func=func)
        return p

    p = add("validate", cmd_validate, help="validate a gem file")
    p.add_argument("file")
    p = add("info", cmd_info, help="vertex classes, residue counts, invariants")
    p.add_argument("file")
    p = add("boundary", cmd_boundary, help="write the boundary graph")
    p.add_argument("file")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--component", type=int, default=None,
                   help="extract one boundary component")
    p.add_argument("--name", default=None)
    p = add("regularize", cmd_regularize, help="cap the boundary and swap colors")
    p.add_argument("file")
    p.add_argument("--singular-color", type=int, required=True)
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--name", default=None)
    p = add("dipoles", cmd_dipoles, help="list (and optionally cancel) 1-dipoles")
    p.add_argument("file")
    p.add_argument("--cancel", type=int, default=None, metavar="INDEX")
    p.add_argument("-o", "--output", default=None)
    p.add_argument("--name", default=None)
    p = add("contract", cmd_contract, help="cancel 1-dipoles until none remain")
    p.add_argument("file")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--name", default=None)
    p = add("genus", cmd_genus, help="regular genus")
    p.add_argument("file")
    p.add_argument("--all-perms", action="store_true")
    p = add("gdegree", cmd_gdegree, help="Gurau degree")
    p.add_argument("file")
    p = add("fvector", cmd_fvector, help="simplex counts")
    p.add_argument("file")
    p = add("euler", cmd_euler, help="Euler characteristic")
    p.add_argument("file")
    p = add("pi1", cmd_pi1, help="fundamental group presentation")
    p.add_argument("file")
    p.add_argument("--pair", required=True, metavar="I,J")
    p.add_argument("--simplify", action="store_true")
    p = add("check", cmd_check, help="run an identity suite")
    p.add_argument("file")
    p.add_argument("--suite", required=True,
                   choices=["lemma", "corollary", "omega", "dipole", "dehn"])
    p = add("bound", cmd_bound, help="check genus/G-degree lower bounds")
    p.add_argument("file")
    p.add_argument("--chi", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--mhat", type=int, required=True)
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--semisimple", action="store_true")
    p = add("catalog", cmd_catalog, help="content-addressed invariant store")
    p.add_argument("action", choices=["add", "scan"])
    p.add_argument("store")
    p.add_argument("file", nargs="?", default=None)
    p.add_argument("--name", default=None)
    p.add_argument("--where", action="append", metavar="FIELD OP VALUE")
    p = add("export-dot", cmd_export_dot, help="write a DOT drawing")
    p.add_argument("file")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--name", default=None)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValidationError as exc:
        print(f"invalid gem: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except GemError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
