"""Command-line interface.

Subcommands: indpoly, hilbert, wlp, blockcheck, classify, verify-paper.
Exit codes: 0 for success (and WLP holds / checks pass), 1 for a negative
mathematical outcome (no WLP, a disagreement, a failed check), 2 for usage
or input errors.  All JSON goes to stdout; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import verify
from .algebra import from_generators, from_graph, hilbert_series, parse_generators
from .graphs import complete, lollipop, path, read_edge_list
from .indpoly import independence_polynomial, mode_analysis
from .lefschetz import expected_lollipop_wlp, wlp_report
from .tensor import tensor_with_squarefree_block, verdict_via_theorem
from .verify import DEFAULT_SEED, random_artinian_algebra


class CliError(ValueError):
    """Raised for bad invocations; also plays nicely as an argparse type error."""


def _add_graph_args(sub, gens: bool = False):
    group = sub.add_mutually_exclusive_group(required=True)
    group.add_argument("--path", type=int, metavar="N", help="path graph on N vertices")
    group.add_argument("--complete", type=int, metavar="M", help="complete graph on M vertices")
    group.add_argument("--lollipop", type=int, nargs=2, metavar=("M", "N"),
                       help="clique of size M joined to a path on N vertices")
    group.add_argument("--graph-file", metavar="FILE",
                       help="edge-list file: 'n <count>' header, then 'u v' lines")
    if gens:
        group.add_argument("--gens-file", metavar="FILE",
                           help="monomial generators, one per line (e.g. 'y1^2', 'y1 y3')")


def _graph_from_args(args):
    if args.path is not None:
        return path(args.path)
    if args.complete is not None:
        return complete(args.complete)
    if args.lollipop is not None:
        return lollipop(*args.lollipop)
    if args.graph_file is not None:
        return read_edge_list(args.graph_file)
    raise CliError("no graph source given")


def _algebra_from_args(args):
    if getattr(args, "gens_file", None):
        with open(args.gens_file, encoding="utf-8") as fh:
            num_vars, gens, labels = parse_generators(fh.read())
        return from_generators(num_vars, gens, var_labels=labels)
    return from_graph(_graph_from_args(args))


def _parse_range(text: str) -> range:
    if ".." in text:
        lo, hi = text.split("..", 1)
        lo, hi = int(lo), int(hi)
    else:
        lo = hi = int(text)
    if lo < 1 or hi < lo:
        raise CliError(f"bad range {text!r}")
    return range(lo, hi + 1)


def cmd_indpoly(args) -> int:
    g = _graph_from_args(args)
    poly = independence_polynomial(g)
    analysis = mode_analysis(poly)
    if args.output == "json":
        print(json.dumps({
            "polynomial": poly.to_json(),
            "unimodal": analysis.is_unimodal,
            "mode": analysis.mode,
        }))
    else:
        print(poly.to_text())
        print(f"unimodal: {'yes' if analysis.is_unimodal else 'no'}")
        if analysis.is_unimodal:
            print(f"mode: {analysis.mode}")
    return 0


def cmd_hilbert(args) -> int:
    algebra = _algebra_from_args(args)
    hs = hilbert_series(algebra)
    if args.output == "json":
        print(json.dumps({
            "hilbert": hs.to_json(),
            "socle_degree": algebra.socle_degree,
        }))
    else:
        print(hs.to_text())
        print(f"socle degree: {algebra.socle_degree}")
    return 0


def cmd_wlp(args) -> int:
    algebra = _algebra_from_args(args)
    report = wlp_report(algebra)
    if args.output == "json":
        print(json.dumps(report.to_json_dict()))
    else:
        print(f"Hilbert series: {report.hilbert.to_text()}")
        print(f"socle degree: {report.socle_degree}")
        print(f"{'degree':>6} {'h_i':>8} {'h_next':>8} {'rank':>8} {'inj':>4} {'surj':>5}")
        for v in report.verdicts:
            print(f"{v.degree:>6} {v.h_source:>8} {v.h_target:>8} {v.rank:>8} "
                  f"{'yes' if v.injective else 'no':>4} {'yes' if v.surjective else 'no':>5}")
        for degree, kind in report.failing_degrees:
            print(f"failure: {kind} at degree {degree}")
        print(f"WLP: {'yes' if report.has_wlp else 'no'}")
    return 0 if report.has_wlp else 1


def cmd_blockcheck(args) -> int:
    import random as _random

    reports = []
    if getattr(args, "gens_file", None):
        algebras = [_algebra_from_args(args)]
    else:
        rng = _random.Random(args.seed)
        algebras = [random_artinian_algebra(rng) for _ in range(args.random)]
    ok = True
    for idx, algebra in enumerate(algebras):
        for n in args.block_vars:
            tb = tensor_with_squarefree_block(n, algebra)
            for i in range(algebra.socle_degree + 1):
                rep = verdict_via_theorem(tb, i)
                reports.append((idx, n, rep))
                ok = ok and rep.agree
    if args.output == "json":
        print(json.dumps({
            "ok": ok,
            "reports": [
                {"algebra": idx, "n": n, **rep.to_json_dict()} for idx, n, rep in reports
            ],
        }))
    else:
        for idx, n, rep in reports:
            print(f"algebra {idx} n={n} degree {rep.degree}: "
                  f"{'agree' if rep.agree else 'DISAGREE'} (direct rank {rep.direct_rank})")
        print(f"blockcheck: {'all agree' if ok else 'DISAGREEMENT'} "
              f"({len(reports)} degree verdicts)")
    return 0 if ok else 1


def _classify_column(task) -> list[dict]:
    n, ms = task
    out = []
    for m in ms:
        report = wlp_report(from_graph(lollipop(m, n)))
        expected = expected_lollipop_wlp(m, n)
        out.append({"m": m, "n": n, "computed": report.has_wlp,
                    "expected": expected, "agree": report.has_wlp == expected})
    return out


def cmd_classify(args) -> int:
    ms = list(args.m_range)
    tasks = [(n, ms) for n in args.n_range]
    if args.jobs > 1 and len(tasks) > 1:
        import multiprocessing as mp

        # heaviest columns first so the pool stays busy; output order restored after
        with mp.get_context("fork").Pool(args.jobs) as pool:
            columns = pool.map(_classify_column, sorted(tasks, key=lambda t: -t[0]))
        by_n = {col[0]["n"]: col for col in columns if col}
        cells = [cell for n, _ in tasks for cell in by_n.get(n, [])]
    else:
        cells = [cell for task in tasks for cell in _classify_column(task)]
    agreements = sum(1 for c in cells if c["agree"])
    ok = agreements == len(cells)
    if args.output == "json":
        print(json.dumps({"cells": cells, "agreements": agreements, "total": len(cells)}))
    else:
        for c in cells:
            print(f"m={c['m']:>2} n={c['n']:>2}  computed={'wlp' if c['computed'] else 'no-wlp':>6}  "
                  f"expected={'wlp' if c['expected'] else 'no-wlp':>6}  "
                  f"{'agree' if c['agree'] else 'DISAGREE'}")
        print(f"agreements {agreements}/{len(cells)}")
    return 0 if ok else 1


def cmd_verify_paper(args) -> int:
    progress = None
    if args.output != "json":
        progress = lambda result: print(result.line(), flush=True)
    manifest = verify.run_all(seed=args.seed, jobs=args.jobs, progress=progress)
    if args.output == "json":
        print(json.dumps(manifest.to_json_dict()))
    else:
        print(f"verify-paper: {'all checks passed' if manifest.ok else 'FAILURES PRESENT'}")
    return 0 if manifest.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wlpgraph",
        description="Weak Lefschetz Property computations for graph-defined monomial algebras",
    )
    parser.add_argument("--output", choices=("text", "json"), default="text")
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED,
                        help="seed for randomized suites")
    parser.add_argument("--jobs", type=int, default=1,
                        help="parallel workers for grid sweeps")
    sub = parser.add_subparsers(dest="command", required=True)

    p_ind = sub.add_parser("indpoly", help="independence polynomial and its mode")
    _add_graph_args(p_ind)
    p_ind.set_defaults(func=cmd_indpoly)

    p_hil = sub.add_parser("hilbert", help="Hilbert series of the associated algebra")
    _add_graph_args(p_hil, gens=True)
    p_hil.set_defaults(func=cmd_hilbert)

    p_wlp = sub.add_parser("wlp", help="weak Lefschetz property report")
    _add_graph_args(p_wlp, gens=True)
    p_wlp.set_defaults(func=cmd_wlp)

    p_blk = sub.add_parser("blockcheck",
                           help="tensor block-matrix verdicts: predicted vs direct")
    group = p_blk.add_mutually_exclusive_group()
    group.add_argument("--gens-file", metavar="FILE")
    group.add_argument("--random", type=int, default=5, metavar="COUNT",
                       help="number of random inner algebras")
    p_blk.add_argument("--block-vars", type=int, nargs="+", default=[1, 2, 3],
                       metavar="N", help="sizes of the quadratic block")
    p_blk.set_defaults(func=cmd_blockcheck)

    p_cls = sub.add_parser("classify", help="lollipop classification sweep")
    p_cls.add_argument("--m", dest="m_range", type=_parse_range, required=True,
                       metavar="A..B")
    p_cls.add_argument("--n", dest="n_range", type=_parse_range, required=True,
                       metavar="C..D")
    p_cls.set_defaults(func=cmd_classify)

    p_ver = sub.add_parser("verify-paper", help="run the full verification suite")
    p_ver.set_defaults(func=cmd_verify_paper)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (CliError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
