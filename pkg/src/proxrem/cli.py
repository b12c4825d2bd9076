"""Command-line front end.

Exit codes: 0 ok, 1 certified violation, 2 input/parameter error,
3 stated-form discrepancy only (a closed form exceeded, nothing certified broken).
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
from fractions import Fraction

from .audit import (CSV_COLUMNS, EXIT_IO, EXIT_OK, audit,
                    check_propositions, csv_row_for_sequence, csv_rows_for_report,
                    discrepancy_probe, is_reportable, rat, rows_exit_code)
from .bounds import CLOSED_FORM
from .constructions import (ConstructionError, chain_graph, layered_join,
                            palindrome_graph, polarity_graph, pruned_polarity_graph)
from .families import ConstraintFamily
from .graph import (DistanceTable, GraphError, format_edge_list, is_c4_free,
                    is_triangle_free, min_degree, read_edge_list)
from .search import maximize_g, shift_local_opt
from .sequences import (SequenceError, construct_w, construct_x, construct_y,
                        construct_z, format_seq, parse_seq)

log = logging.getLogger("proxrem")

SEQ_KINDS = {"x": construct_x, "y": construct_y, "z": construct_z, "w": construct_w}
GRAPH_KINDS = ("gx", "palindrome", "polarity", "pruned", "chain")


class UsageError(Exception):
    pass


def int_range(text: str) -> list[int]:
    """``5`` or ``2..8`` (inclusive)."""
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            lo, hi = int(a), int(b)
            if hi < lo:
                raise ValueError
            return list(range(lo, hi + 1))
        return [int(text)]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or A..B, got {text!r}") from None


def _need(args, *names):
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n, None) is None]
    if missing:
        raise UsageError(f"{args.command} {getattr(args, 'kind', '')}".strip()
                         + " needs " + ", ".join(missing))


def _emit_json(obj) -> None:
    print(json.dumps(obj, indent=2))


# -- subcommands -----------------------------------------------------------


def cmd_metrics(args) -> int:
    G = read_edge_list(args.file)
    dt = DistanceTable(G)
    _emit_json({
        "n": G.n,
        "m": G.m,
        "min_degree": min_degree(G),
        "radius": dt.radius(),
        "diameter": dt.diameter(),
        "proximity": rat(dt.proximity()),
        "remoteness": rat(dt.remoteness()),
        "triangle_free": is_triangle_free(G),
        "c4_free": is_c4_free(G),
    })
    return EXIT_OK


def cmd_construct(args) -> int:
    kind = args.kind
    if kind in SEQ_KINDS:
        _need(args, "n", "delta")
        print(format_seq(SEQ_KINDS[kind](args.n, args.delta)))
        return EXIT_OK
    comments = []
    if kind == "gx":
        if args.seq is not None:
            seq = parse_seq(args.seq)
        else:
            _need(args, "n", "delta")
            seq = construct_x(args.n, args.delta)
        comments.append(f"layered join of {format_seq(seq)}")
        G = layered_join(seq)
    elif kind == "palindrome":
        _need(args, "k", "delta")
        G = palindrome_graph(args.k, args.delta)
    elif kind == "polarity":
        _need(args, "q")
        G = polarity_graph(args.q)
    elif kind == "pruned":
        _need(args, "q")
        res = pruned_polarity_graph(args.q)
        G = res.graph
        comments += res.annotations()
    else:
        _need(args, "k", "q")
        G = chain_graph(args.k, args.q)
    sys.stdout.write(format_edge_list(G, comments))
    return EXIT_OK


def _budget(args) -> dict:
    return {"node_budget": args.node_budget, "time_budget": args.time_budget, "cap": args.cap}


def cmd_maximize(args) -> int:
    fam = ConstraintFamily(args.family, args.n, args.delta)
    res = maximize_g(fam, **_budget(args))
    out = {"family": args.family, "n": args.n, "delta": args.delta}
    out.update(res.to_json())
    _emit_json(out)
    return EXIT_OK


def cmd_localopt(args) -> int:
    fam = ConstraintFamily(args.family, args.n, args.delta)
    rep = shift_local_opt(parse_seq(args.seq), fam)
    _emit_json(rep.to_json())
    return EXIT_OK


def cmd_props(args) -> int:
    G = read_edge_list(args.file)
    if args.vertex is not None:
        rep = check_propositions(G, "vertex", args.vertex)
    elif args.center:
        rep = check_propositions(G, "center")
    else:
        rep = check_propositions(G, "all")
    _emit_json(rep.to_json())
    return EXIT_OK if rep.ok else 1


def cmd_audit(args) -> int:
    G = read_edge_list(args.file)
    rep = audit(G, args.id or args.file)
    _emit_json(rep.to_json())
    return rep.exit_code


def _sweep_rows(args) -> list[dict]:
    rows: list[dict] = []
    kind = args.kind
    if kind == "chain":
        _need(args, "q", "k")
        for q in args.q:
            for k in args.k:
                rep = audit(chain_graph(k, q), f"chain-{k}-{q}", propositions=False)
                rows += csv_rows_for_report(kind, f"q={q};k={k}", rep)
    elif kind == "palindrome":
        _need(args, "k", "delta")
        for d in args.delta:
            for k in args.k:
                rep = audit(palindrome_graph(k, d), f"palindrome-{k}-{d}", propositions=False)
                rows += csv_rows_for_report(kind, f"k={k}", rep)
    elif kind in SEQ_KINDS:
        _need(args, "n", "delta")
        for d in args.delta:
            for n in args.n:
                rows.append(csv_row_for_sequence(kind, n, d))
    else:  # probe
        for dsc in discrepancy_probe(args.delta or [3, 4, 5]):
            if not (is_reportable(dsc) or dsc.probe.endswith("_equality")):
                continue
            stated, direct = Fraction(dsc.stated), Fraction(dsc.direct)
            rows.append({
                "kind": "probe", "params": dsc.probe, "n": dsc.n, "delta": dsc.delta,
                "invariant": "direct", "bound_name": dsc.probe,
                "bound_num": stated.numerator, "bound_den": stated.denominator,
                # every reportable row is a disagreement, whichever side is larger
                "margin_sign": -1 if is_reportable(dsc) else 0,
                "level": CLOSED_FORM,
                "invariant_num": direct.numerator, "invariant_den": direct.denominator,
            })
    return rows


def cmd_sweep(args) -> int:
    rows = _sweep_rows(args)
    w = csv.DictWriter(sys.stdout, fieldnames=CSV_COLUMNS, lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return rows_exit_code(rows)


# -- parser ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="proxrem",
                                description="Proximity and remoteness bounds toolkit.")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("metrics", help="invariants of an edge-list graph")
    s.add_argument("file")
    s.set_defaults(func=cmd_metrics)

    s = sub.add_parser("construct", help="emit a canonical sequence or a constructed graph")
    s.add_argument("kind", choices=list(SEQ_KINDS) + list(GRAPH_KINDS))
    s.add_argument("--n", type=int)
    s.add_argument("--delta", type=int)
    s.add_argument("--q", type=int)
    s.add_argument("--k", type=int)
    s.add_argument("--seq", help="comma-separated layer sizes (gx only)")
    s.set_defaults(func=cmd_construct)

    for name, func, helptext in (("maximize", cmd_maximize, "maximise g over a family"),
                                 ("localopt", cmd_localopt, "single-unit exchange check")):
        s = sub.add_parser(name, help=helptext)
        s.add_argument("--family", required=True, choices=["a", "b", "c", "d"])
        s.add_argument("--n", type=int, required=True)
        s.add_argument("--delta", type=int, required=True)
        if name == "maximize":
            s.add_argument("--node-budget", type=int)
            s.add_argument("--time-budget", type=float)
            s.add_argument("--cap", type=int, help="entry cap; a capped run is non-exhaustive")
        else:
            s.add_argument("--seq", required=True)
        s.set_defaults(func=func)

    s = sub.add_parser("props", help="check the distance-degree propositions")
    s.add_argument("file")
    grp = s.add_mutually_exclusive_group()
    grp.add_argument("--vertex", type=int)
    grp.add_argument("--center", action="store_true")
    grp.add_argument("--all", action="store_true")
    s.set_defaults(func=cmd_props)

    s = sub.add_parser("audit", help="evaluate every applicable bound")
    s.add_argument("file")
    s.add_argument("--id", help="graph id for the report (default: file name)")
    s.set_defaults(func=cmd_audit)

    s = sub.add_parser("sweep", help="CSV rows over a parameter range")
    s.add_argument("--kind", required=True,
                   choices=["chain", "palindrome", "x", "y", "z", "w", "probe"])
    s.add_argument("--n", type=int_range)
    s.add_argument("--delta", type=int_range)
    s.add_argument("--q", type=int_range)
    s.add_argument("--k", type=int_range)
    s.set_defaults(func=cmd_sweep)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (OSError, GraphError, SequenceError, ConstructionError, UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except BrokenPipeError:
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
