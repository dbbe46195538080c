"""labelkit command-line interface.

One process per command.  JSON goes to stdout unless --csv (CSV to stdout)
or --out (delimited file plus, for report commands, a PNG figure rendered
alongside).  Exit codes: 0 success, 1 domain error, 2 usage error.  The
output for a fixed invocation and seed is byte-identical across runs.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from . import census as census_mod
from . import goodness as good_mod
from . import graphs as graphs_mod
from . import growth as growth_mod
from . import labeling as label_mod
from . import randgraphs as rand_mod
from .errors import DomainError, LabelkitError

#: Operations exercised by each subcommand; the test suite checks that every
#: public operation of the library shows up at least once.
REGISTRY: dict[str, tuple[str, ...]] = {
    "graph info": ("parse_graph", "induced_subgraph", "degeneracy"),
    "graph canon": ("parse_graph", "canonical_form"),
    "graph iso": ("parse_graph", "are_isomorphic"),
    "graph aut": ("parse_graph", "automorphism_count", "labeled_count"),
    "graph enum": ("enumerate_unlabeled",),
    "graph count": ("parse_graph", "count_subgraph_copies", "count_embeddings"),
    "label encode": ("parse_graph", "degeneracy_ordering", "encode"),
    "label decode": ("decode",),
    "label roundtrip": ("parse_graph", "encode", "decode"),
    "universal build": ("build_universal_graph",),
    "universal check": ("parse_graph", "build_universal_graph", "embed_into_universal"),
    "good check": (
        "parse_graph",
        "eval",
        "threshold",
        "max_edges_k_subgraph",
        "is_f_good",
        "naive_goodness_oracle",
    ),
    "decent certify": ("certify_builtin", "eval"),
    "decent falsify": ("falsify_decency", "eval"),
    "decent constants": ("constant_c", "ratio_inequalities"),
    "sample gnp": ("sample_gnp",),
    "sample gnm": ("sample_gnm",),
    "experiment goodness": (
        "run_goodness_experiment",
        "sample_gnp",
        "sample_gnm",
        "is_f_good",
        "constant_c",
    ),
    "experiment transfer": ("run_transfer_experiment", "sample_gnp", "sample_gnm"),
    "experiment chernoff": ("chernoff_tail",),
    "census": (
        "parse_graph",
        "mon_closure_census",
        "smallness_probe",
        "labeled_count",
        "automorphism_count",
    ),
    "ledger": ("counting_ledger", "certify_builtin", "monotone_class_bound"),
    "tree dense-core": ("parse_graph", "bounded_degree_max_tree", "dense_core"),
    "tree family": ("parse_graph", "bounded_degree_max_tree", "spanning_family"),
}


def _emit_json(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True, indent=2) + "\n")


def _emit_text(text: str) -> None:
    sys.stdout.write(text)


def _hex_arg(value: str) -> str:
    try:
        bytes.fromhex(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a hex string: {value!r}") from None
    return value


def _growth_arg(value: str):
    try:
        return growth_mod.parse_growth_spec(value)
    except LabelkitError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _int_list(value: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in value.split(",") if part.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma list of integers: {value!r}") from None


def _load(path: str) -> graphs_mod.Graph:
    return graphs_mod.load_graph(path)


def _figure_path(out: str) -> Path:
    p = Path(out)
    return p.with_suffix(".png") if p.suffix else Path(str(p) + ".png")


def _write_report(args, csv_text: str, json_obj, plot_fn=None) -> None:
    """Common report plumbing: --out writes CSV (+ figure), --csv prints CSV,
    otherwise JSON to stdout."""
    if args.out:
        Path(args.out).write_text(csv_text, encoding="utf-8")
        if plot_fn is not None and not args.no_plot:
            plot_fn(_figure_path(args.out))
    elif getattr(args, "csv", False):
        _emit_text(csv_text)
    else:
        _emit_json(json_obj)


# ---------------------------------------------------------------------------
# graph subcommands


def cmd_graph_info(args) -> int:
    g = _load(args.graph)
    out = {
        "n": g.n,
        "m": g.m,
        "degrees": list(g.degrees),
        "min_degree": g.min_degree(),
        "max_degree": g.max_degree(),
        "connected": g.is_connected(),
        "degeneracy": label_mod.degeneracy(g),
    }
    if args.induced is not None:
        sub = graphs_mod.induced_subgraph(g, args.induced)
        out["induced"] = {"vertices": list(args.induced), "graph": sub.to_edge_list()}
    _emit_json(out)
    return 0


def cmd_graph_canon(args) -> int:
    g = _load(args.graph)
    _emit_json({"canonical": graphs_mod.canonical_form(g, guard=args.guard)})
    return 0


def cmd_graph_iso(args) -> int:
    g, h = _load(args.left), _load(args.right)
    cert = graphs_mod.are_isomorphic(g, h, guard=args.guard)
    _emit_json(
        {
            "isomorphic": cert is not None,
            "permutation": list(cert.permutation) if cert else None,
        }
    )
    return 0


def cmd_graph_aut(args) -> int:
    g = _load(args.graph)
    aut = graphs_mod.automorphism_count(g, guard=args.guard)
    _emit_json(
        {"aut": aut, "labeled_copies": str(graphs_mod.labeled_count(g, guard=args.guard))}
    )
    return 0


def cmd_graph_enum(args) -> int:
    gs = graphs_mod.enumerate_unlabeled(args.n)
    _emit_json(
        {"n": args.n, "count": len(gs), "graphs": [g.to_edge_list() for g in gs]}
    )
    return 0


def cmd_graph_count(args) -> int:
    f, g = _load(args.pattern), _load(args.host)
    copies = graphs_mod.count_subgraph_copies(f, g, guard=args.guard)
    _emit_json(
        {
            "subgraph_copies": copies,
            "embeddings": copies * graphs_mod.automorphism_count(f, guard=args.guard),
        }
    )
    return 0


# ---------------------------------------------------------------------------
# label / universal subcommands


def cmd_label_encode(args) -> int:
    g = _load(args.graph)
    params, labels = label_mod.encode(g)
    ordering = label_mod.degeneracy_ordering(g)
    _emit_json(
        {
            "header": {"n": params.n, "k": params.k, "w": params.w},
            "bits_per_label": params.bits,
            "order": list(ordering.order),
            "labels": [lab.to_hex() for lab in labels],
        }
    )
    return 0


def cmd_label_decode(args) -> int:
    params = label_mod.SchemeParams.for_graph(args.n, args.k)
    a = label_mod.Label.from_hex(args.left, params)
    b = label_mod.Label.from_hex(args.right, params)
    _emit_json({"adjacent": label_mod.decode(a, b, params)})
    return 0


def cmd_label_roundtrip(args) -> int:
    g = _load(args.graph)
    params, labels = label_mod.encode(g)
    for u in range(g.n):
        for v in range(u + 1, g.n):
            got = label_mod.decode(labels[u], labels[v], params)
            if got != g.has_edge(u, v):
                raise DomainError(f"roundtrip mismatch on pair ({u}, {v})")
    _emit_json(
        {"ok": True, "n": params.n, "k": params.k, "w": params.w, "bits": params.bits}
    )
    return 0


def cmd_universal_build(args) -> int:
    params = label_mod.SchemeParams.for_graph(args.n, args.k)
    uni = label_mod.build_universal_graph(params)
    if args.out:
        Path(args.out).write_text(uni.graph.to_edge_list(), encoding="utf-8")
    _emit_json(
        {
            "n": params.n,
            "k": params.k,
            "w": params.w,
            "vertices": uni.graph.n,
            "edges": uni.graph.m,
            "labels": list(uni.labels),
        }
    )
    return 0


def cmd_universal_check(args) -> int:
    g = _load(args.graph)
    params = label_mod.SchemeParams.for_graph(args.n, args.k)
    uni = label_mod.build_universal_graph(params)
    mapping = label_mod.embed_into_universal(g, params, uni)
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if uni.graph.has_edge(mapping[u], mapping[v]) != g.has_edge(u, v):
                raise DomainError(f"induced embedding broken on pair ({u}, {v})")
    _emit_json(
        {"embedded": True, "universal_vertices": uni.graph.n,
         "map": {str(v): mapping[v] for v in range(g.n)}}
    )
    return 0


# ---------------------------------------------------------------------------
# goodness / growth subcommands


def _goodness_json(report: good_mod.GoodnessReport) -> dict:
    return {
        "verdict": report.verdict,
        "witness": None
        if report.witness is None
        else {"vertices": list(report.witness[0]), "edges": report.witness[1]},
        "per_k": [
            {
                "k": rec.k,
                "threshold": rec.thresh,
                "max_edges": rec.max_edges,
                "exhaustive": rec.exhaustive,
                "certified": rec.certified,
                "method": rec.method,
            }
            for rec in report.records
        ],
        "nodes": report.nodes,
    }


def cmd_good_check(args) -> int:
    g = _load(args.graph)
    if args.oracle:
        report = good_mod.naive_goodness_oracle(g, args.f, args.c)
    else:
        mode = "refute" if args.refute else "exact"
        report = good_mod.is_f_good(g, args.f, args.c, mode=mode, node_budget=args.budget)
    _emit_json(_goodness_json(report))
    return 0


def cmd_decent_certify(args) -> int:
    cert = growth_mod.certify_builtin(args.f)
    _emit_json({"f": args.f.spec(), "delta": cert.delta, "C": cert.C, "s": cert.s})
    return 0


def _cert_from_args(args) -> growth_mod.DecencyCertificate:
    if args.delta is not None or args.C is not None or args.s is not None:
        if None in (args.delta, args.C, args.s):
            raise DomainError("--delta, --C and --s must be given together")
        return growth_mod.DecencyCertificate(args.delta, args.C, args.s)
    return growth_mod.certify_builtin(args.f)


def cmd_decent_falsify(args) -> int:
    cert = _cert_from_args(args)
    if args.integer_grid:
        grid = growth_mod.integer_grid(math.ceil(cert.s), args.grid_points)
    else:
        grid = growth_mod.standard_grid(cert, hi=args.grid_hi, points=args.grid_points)
    ce = growth_mod.falsify_decency(args.f, cert, grid)
    _emit_json(
        {
            "f": args.f.spec(),
            "certificate": {"delta": cert.delta, "C": cert.C, "s": cert.s},
            "grid_points": len(grid),
            "counterexample": None
            if ce is None
            else {
                "kind": ce.kind,
                "x": ce.x,
                "y": ce.y,
                "lhs": ce.lhs,
                "rhs": ce.rhs,
                "pair_index": ce.pair_index,
            },
        }
    )
    return 0


def cmd_decent_constants(args) -> int:
    cert = _cert_from_args(args)
    consts = growth_mod.scale_constants(cert, args.gamma)
    out = {
        "f": args.f.spec(),
        "gamma": args.gamma,
        "c1": consts.c1,
        "c2": consts.c2,
        "c": consts.c,
    }
    if args.check_ratio:
        n_s, k_s = args.check_ratio.split(":", 1)
        report = growth_mod.ratio_inequalities(
            args.f, cert, args.gamma, float(n_s), float(k_s)
        )
        out["ratio_check"] = {
            "n": report.n,
            "k": report.k,
            "lhs": report.lhs,
            "regime": report.regime,
            "large_k": {
                "rhs": report.large_k.rhs,
                "holds": report.large_k.holds,
            },
            "small_k": None
            if report.small_k is None
            else {
                "rhs": report.small_k.rhs,
                "holds": report.small_k.holds,
                "in_derivation_range": report.small_k.in_derivation_range,
            },
            "violations": report.violations,
        }
    _emit_json(out)
    return 0


# ---------------------------------------------------------------------------
# sampling / experiments


def cmd_sample_gnp(args) -> int:
    rng = rand_mod.RngStream(args.seed).trial(0)
    g = rand_mod.sample_gnp(args.n, args.p, rng)
    doc = g.to_edge_list()
    if args.out:
        Path(args.out).write_text(doc, encoding="utf-8")
        _emit_json({"n": g.n, "m": g.m, "p": args.p, "seed": args.seed, "out": args.out})
    else:
        _emit_json({"n": g.n, "m": g.m, "p": args.p, "seed": args.seed, "graph": doc})
    return 0


def cmd_sample_gnm(args) -> int:
    rng = rand_mod.RngStream(args.seed).trial(0)
    g = rand_mod.sample_gnm(args.n, args.m, rng)
    doc = g.to_edge_list()
    if args.out:
        Path(args.out).write_text(doc, encoding="utf-8")
        _emit_json({"n": g.n, "m": g.m, "seed": args.seed, "out": args.out})
    else:
        _emit_json({"n": g.n, "m": g.m, "seed": args.seed, "graph": doc})
    return 0


def cmd_experiment_goodness(args) -> int:
    if args.c == "auto":
        cert = growth_mod.certify_builtin(args.f)
        c_value = growth_mod.scale_constants(cert, args.gamma).c
    else:
        c_value = float(args.c)
    cfg = rand_mod.ExperimentConfig(
        n_values=args.n,
        f=args.f,
        f_spec=args.f.spec(),
        gamma=args.gamma,
        c=c_value,
        trials=args.trials,
        base_seed=args.seed,
        mode=args.mode,
        node_budget=args.budget,
    )
    report = rand_mod.run_goodness_experiment(cfg, threads=args.threads)
    json_obj = {
        "config": report.config_summary,
        "rows": [
            {
                "n": r.n,
                "trials": r.trials,
                "violations": r.violations,
                "inconclusive": r.inconclusive,
                "rate": r.rate,
                "n_pow_minus_2": r.n_pow_minus_2,
                "c_used": r.c_used,
                "p_used": r.p_used,
                "status": r.status,
            }
            for r in report.rows
        ],
    }

    def plot(path):
        from . import plots

        plots.save_experiment_figure(report, path)

    _write_report(args, report.to_csv(), json_obj, plot)
    return 0


def cmd_experiment_transfer(args) -> int:
    report = rand_mod.run_transfer_experiment(
        args.property, args.n, args.p, args.trials, args.seed
    )
    rows = [report.fixed_count, report.independent]
    csv_lines = ["model,hits,trials,frequency,wilson_low,wilson_high"]
    csv_lines.extend(
        f"{r.model},{r.hits},{r.trials},{r.frequency!r},{r.wilson_low!r},{r.wilson_high!r}"
        for r in rows
    )
    json_obj = {
        "property": report.property_name,
        "n": report.n,
        "p": report.p,
        "m": report.m,
        "factor": report.factor,
        "models": [
            {
                "model": r.model,
                "hits": r.hits,
                "trials": r.trials,
                "frequency": r.frequency,
                "wilson": [r.wilson_low, r.wilson_high],
            }
            for r in rows
        ],
        "point_estimate_ok": report.point_estimate_ok,
        "statistically_violated": report.statistically_violated,
    }

    def plot(path):
        from . import plots

        plots.save_transfer_figure(report, path)

    _write_report(args, "\n".join(csv_lines) + "\n", json_obj, plot)
    return 0


def cmd_experiment_chernoff(args) -> int:
    tight, loose = rand_mod.chernoff_tail(args.N, args.p, args.t)
    out = {"N": args.N, "p": args.p, "t": args.t, "tight": tight, "loose": loose}
    if args.N <= 10_000:
        out["exact_tail"] = rand_mod.exact_binomial_tail(args.N, args.p, args.t)
    _emit_json(out)
    return 0


# ---------------------------------------------------------------------------
# census / ledger / tree


def cmd_census(args) -> int:
    seeds = [_load(path) for path in args.seeds]
    table = census_mod.mon_closure_census(seeds, args.max_n)
    probe = census_mod.smallness_probe(table)
    probe_by_n = dict(probe)
    csv_lines = ["n,unlabeled,labeled,c_n"]
    for row in table.rows:
        c_n = probe_by_n.get(row.n)
        csv_lines.append(
            f"{row.n},{row.unlabeled},{row.labeled},{'' if c_n is None else repr(c_n)}"
        )
    json_obj = {
        "max_n": args.max_n,
        "rows": [
            {
                "n": row.n,
                "unlabeled": row.unlabeled,
                "labeled": str(row.labeled),
                "c_n": probe_by_n.get(row.n),
            }
            for row in table.rows
        ],
    }

    def plot(path):
        from . import plots

        plots.save_census_figure(table, probe, path)

    _write_report(args, "\n".join(csv_lines) + "\n", json_obj, plot)
    return 0


def cmd_ledger(args) -> int:
    cert = _cert_from_args(args)
    gamma = None if args.gamma == "auto" else float(args.gamma)
    n_values = census_mod.parse_n_grid(args.n_grid)
    report = census_mod.counting_ledger(args.f, cert, gamma, n_values)
    csv_lines = [
        "n,log2_u,log2_k,log2_E1,log2_E2,ratio,dominant,ub_degeneracy,ub_label_bits"
    ]
    rows_json = []
    for row in report.rows:
        ub_deg, ub_bits = label_mod.monotone_class_bound(args.speed_constant, args.f, row.n)
        csv_lines.append(
            f"{row.n},{row.log2_u!r},{row.log2_k!r},{row.log2_E1!r},{row.log2_E2!r},"
            f"{row.ratio!r},{int(row.dominant)},{ub_deg},{ub_bits}"
        )
        rows_json.append(
            {
                "n": row.n,
                "log2_u": row.log2_u,
                "log2_k": row.log2_k,
                "log2_E1": row.log2_E1,
                "log2_E2": row.log2_E2,
                "ratio": row.ratio,
                "dominant": row.dominant,
                "ub_degeneracy": str(ub_deg),
                "ub_label_bits": str(ub_bits),
            }
        )
    json_obj = {
        "f": report.f_spec,
        "gamma": report.gamma,
        "delta": report.delta,
        "crossover_n": report.crossover_n,
        "note": report.note,
        "rows": rows_json,
    }

    def plot(path):
        from . import plots

        plots.save_ledger_figure(report, path)

    _write_report(args, "\n".join(csv_lines) + "\n", json_obj, plot)
    return 0


def cmd_tree_dense_core(args) -> int:
    g = _load(args.graph)
    core = census_mod.dense_core(g, args.d)
    _emit_json(
        {
            "vertices": list(core.vertices),
            "core": core.subgraph.to_edge_list(),
            "core_min_degree": core.subgraph.min_degree(),
            "tree": core.tree.to_edge_list(),
            "tree_max_degree": core.tree.max_degree(),
        }
    )
    return 0


def cmd_tree_family(args) -> int:
    g = _load(args.graph)
    d = args.d if args.d is not None else max(g.max_degree(), 1)
    tree = census_mod.bounded_degree_max_tree(g, d)
    report = census_mod.spanning_family(g, tree.edges)
    _emit_json(
        {
            "tree": sorted(list(e) for e in tree.edges),
            "family_size": str(report.family_size),
            "extra_edges": report.extra_edges,
            "iso_classes": report.iso_classes,
            "max_aut": str(report.max_aut),
            "tree_embeddings": str(report.tree_embeddings),
            "aut_bound_holds": report.aut_bound_holds,
        }
    )
    return 0


# ---------------------------------------------------------------------------
# parser wiring


def _add_report_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--out", help="write CSV here (a PNG lands alongside)")
    p.add_argument("--csv", action="store_true", help="print CSV instead of JSON")
    p.add_argument("--no-plot", action="store_true", help="skip the figure")


def _add_cert_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--delta", type=float, help="certificate delta (with --C and --s)")
    p.add_argument("--C", type=float, help="certificate C")
    p.add_argument("--s", type=float, help="certificate domain start")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="labelkit",
        description="Adjacency labels, universal graphs, and density experiments "
        "for subgraph-closed graph classes.",
    )
    parser.add_argument(
        "--threads",
        type=int,
        default=1,
        help="worker threads for trial evaluation (results are identical "
        "for any value)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    graph = sub.add_parser("graph", help="inspect, canonize, compare small graphs")
    gsub = graph.add_subparsers(dest="subcommand", required=True)
    p = gsub.add_parser("info")
    p.add_argument("graph")
    p.add_argument("--induced", type=_int_list, help="comma list of vertices")
    p.set_defaults(handler=cmd_graph_info)
    p = gsub.add_parser("canon")
    p.add_argument("graph")
    p.add_argument("--guard", type=int, default=graphs_mod.DEFAULT_CANONICAL_GUARD)
    p.set_defaults(handler=cmd_graph_canon)
    p = gsub.add_parser("iso")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--guard", type=int, default=graphs_mod.DEFAULT_SEARCH_GUARD)
    p.set_defaults(handler=cmd_graph_iso)
    p = gsub.add_parser("aut")
    p.add_argument("graph")
    p.add_argument("--guard", type=int, default=graphs_mod.DEFAULT_SEARCH_GUARD)
    p.set_defaults(handler=cmd_graph_aut)
    p = gsub.add_parser("enum")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(handler=cmd_graph_enum)
    p = gsub.add_parser("count")
    p.add_argument("--pattern", required=True)
    p.add_argument("--host", required=True)
    p.add_argument("--guard", type=int, default=graphs_mod.DEFAULT_SEARCH_GUARD)
    p.set_defaults(handler=cmd_graph_count)

    label = sub.add_parser("label", help="encode, decode, roundtrip adjacency labels")
    lsub = label.add_subparsers(dest="subcommand", required=True)
    p = lsub.add_parser("encode")
    p.add_argument("graph")
    p.set_defaults(handler=cmd_label_encode)
    p = lsub.add_parser("decode")
    p.add_argument("left", type=_hex_arg)
    p.add_argument("right", type=_hex_arg)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(handler=cmd_label_decode)
    p = lsub.add_parser("roundtrip")
    p.add_argument("graph")
    p.set_defaults(handler=cmd_label_roundtrip)

    universal = sub.add_parser("universal", help="build and check universal graphs")
    usub = universal.add_subparsers(dest="subcommand", required=True)
    p = usub.add_parser("build")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--out", help="write the universal graph as an edge list")
    p.set_defaults(handler=cmd_universal_build)
    p = usub.add_parser("check")
    p.add_argument("graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(handler=cmd_universal_check)

    good = sub.add_parser("good", help="subgraph-density certification")
    gdsub = good.add_subparsers(dest="subcommand", required=True)
    p = gdsub.add_parser("check")
    p.add_argument("graph")
    p.add_argument("--f", type=_growth_arg, required=True)
    p.add_argument("--c", type=float, required=True)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", help="exact per-k maxima (default)")
    mode.add_argument("--refute", action="store_true", help="stop at the first violation")
    p.add_argument("--oracle", action="store_true", help="use the all-subsets oracle")
    p.add_argument("--budget", type=int, default=None, help="node budget")
    p.set_defaults(handler=cmd_good_check)

    decent = sub.add_parser("decent", help="growth-function certificates and constants")
    dsub = decent.add_subparsers(dest="subcommand", required=True)
    p = dsub.add_parser("certify")
    p.add_argument("--f", type=_growth_arg, required=True)
    p.set_defaults(handler=cmd_decent_certify)
    p = dsub.add_parser("falsify")
    p.add_argument("--f", type=_growth_arg, required=True)
    _add_cert_flags(p)
    p.add_argument("--grid-hi", type=float, default=1e6)
    p.add_argument("--grid-points", type=int, default=400)
    p.add_argument("--integer-grid", action="store_true",
                   help="consecutive integers from ceil(s) instead of a geometric grid")
    p.set_defaults(handler=cmd_decent_falsify)
    p = dsub.add_parser("constants")
    p.add_argument("--f", type=_growth_arg, required=True)
    p.add_argument("--gamma", type=float, required=True)
    _add_cert_flags(p)
    p.add_argument("--check-ratio", help="evaluate the ratio chains at 'n:k'")
    p.set_defaults(handler=cmd_decent_constants)

    sample = sub.add_parser("sample", help="seeded random graphs")
    ssub = sample.add_subparsers(dest="subcommand", required=True)
    p = ssub.add_parser("gnp")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--out")
    p.set_defaults(handler=cmd_sample_gnp)
    p = ssub.add_parser("gnm")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--out")
    p.set_defaults(handler=cmd_sample_gnm)

    experiment = sub.add_parser("experiment", help="Monte Carlo experiments")
    esub = experiment.add_subparsers(dest="subcommand", required=True)
    p = esub.add_parser("goodness")
    p.add_argument("--f", type=_growth_arg, required=True)
    p.add_argument("--gamma", type=float, required=True)
    p.add_argument("--c", default="auto", help="density scale, or 'auto' to derive")
    p.add_argument("--n", type=_int_list, required=True, help="comma list of sizes")
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--mode", choices=("gnp", "gnm"), default="gnp")
    p.add_argument("--budget", type=int, default=2_000_000)
    _add_report_flags(p)
    p.set_defaults(handler=cmd_experiment_goodness)
    p = esub.add_parser("transfer")
    p.add_argument("--property", required=True,
                   choices=sorted(rand_mod.GRAPH_PROPERTIES))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, default=42)
    _add_report_flags(p)
    p.set_defaults(handler=cmd_experiment_transfer)
    p = esub.add_parser("chernoff")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--t", type=float, required=True)
    p.set_defaults(handler=cmd_experiment_chernoff)

    p = sub.add_parser("census", help="monotone closure census of seed graphs")
    p.add_argument("--seeds", nargs="+", required=True)
    p.add_argument("--max-n", type=int, default=census_mod.CENSUS_LIMIT)
    _add_report_flags(p)
    p.set_defaults(handler=cmd_census)

    p = sub.add_parser("ledger", help="counting-exponent comparison along a size grid")
    p.add_argument("--f", type=_growth_arg, required=True)
    p.add_argument("--gamma", default="auto")
    p.add_argument("--n-grid", default="2^10..2^24")
    p.add_argument("--speed-constant", type=float, default=1.0,
                   help="growth constant for the label-size upper bound columns")
    _add_cert_flags(p)
    _add_report_flags(p)
    p.set_defaults(handler=cmd_ledger)

    tree = sub.add_parser("tree", help="bounded-degree trees and spanning families")
    tsub = tree.add_subparsers(dest="subcommand", required=True)
    p = tsub.add_parser("dense-core")
    p.add_argument("graph")
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(handler=cmd_tree_dense_core)
    p = tsub.add_parser("family")
    p.add_argument("graph")
    p.add_argument("--d", type=int, default=None,
                   help="degree cap for the greedy spanning tree (default: max degree)")
    p.set_defaults(handler=cmd_tree_family)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except LabelkitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
