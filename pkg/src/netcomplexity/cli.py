"""Command-line front end: ``netcomplexity <subcommand> ...``.

A graph is given as a description bitstring (``1110100``), a path to an
edge-list file, or a generator spec (``--gen er -n 10 -p 0.5 --seed 1``).
"""

from __future__ import annotations

import argparse
import csv
import os
import sys
import time
from pathlib import Path
from typing import Sequence

from . import ensemble
from .canon import automorphism_order, canonical_form
from .codec import MAX_ENUMERATION_N, Description, decode, encode
from .ensemble import CSV_HEADER, MAX_ENUMERATE_N, report_row
from .graph_core import Graph, format_edge_list, read_edge_list
from .measures import (
    Method, complexity_report, offdiagonal_complexity, zcomplexity,
)
from .rle_compressor import DEFAULT_VARIANT, Variant, best_compression, compress, decompress, zeta_by_wordsize


class CliError(Exception):
    pass


# --------------------------------------------------------------------------
# graph input


def _graph_from_text(text: str) -> Graph:
    p = Path(text)
    if p.is_file():
        return read_edge_list(p)
    if text and not set(text) - {"0", "1"}:
        return decode(Description(text))
    raise CliError(f"not a description bitstring or readable edge-list file: {text!r}")


def load_graph(args: argparse.Namespace) -> Graph:
    if args.gen and args.graph:
        raise CliError("give either a graph or --gen, not both")
    if args.gen:
        return _generate(args.gen, args)
    if not args.graph:
        raise CliError("no graph given (description, edge-list path or --gen)")
    return _graph_from_text(args.graph)


def _generate(kind: str, args: argparse.Namespace) -> Graph:
    if args.n is None:
        raise CliError(f"--gen {kind} needs -n")
    if kind == "er":
        if args.p is None:
            raise CliError("--gen er needs -p")
        return ensemble.er_random(args.n, args.p, args.seed)
    if args.m is None:
        raise CliError("--gen ba needs -m")
    return ensemble.ba_random(args.n, args.m, args.seed)


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def _csv_out(rows: list[list[str]], header: Sequence[str] = CSV_HEADER) -> None:
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)


# --------------------------------------------------------------------------
# subcommands


def cmd_complexity(args) -> int:
    g = load_graph(args)
    rep = complexity_report(g, with_zcomplexity=False)
    if args.csv:
        _csv_out([report_row(canonical_form(g).bits, rep)])
    else:
        print(f"n={rep.n} links={rep.links} C={_fmt(rep.C)} S={_fmt(rep.S)} "
              f"omega={rep.omega} aut={rep.aut_order}")
    return 0


def cmd_zcomplexity(args) -> int:
    g = load_graph(args)
    cz = zcomplexity(g, args.variant, args.method, max_n=args.max_n)
    rep = complexity_report(g, args.variant, cz=cz)
    if args.csv:
        _csv_out([report_row(canonical_form(g).bits, rep)])
    else:
        print(f"C_z={_fmt(cz)} C={_fmt(rep.C)} compression_error={rep.compression_error:.4f} "
              f"variant={Variant(args.variant).value}")
    return 0


def cmd_odc(args) -> int:
    g = load_graph(args)
    print(f"odc={offdiagonal_complexity(g):.4f}")
    return 0


def cmd_canon(args) -> int:
    g = load_graph(args)
    print(f"canonical={canonical_form(g).bits} aut={automorphism_order(g)}")
    return 0


def cmd_compress(args) -> int:
    g = load_graph(args)
    d = encode(g)
    if args.w is None:
        c = best_compression(d, args.variant)
    else:
        c = compress(d, args.w, args.variant)
    ok = decompress(c) == d
    by_w = zeta_by_wordsize(d, args.variant)
    print(f"compressed={c.bits}")
    print(f"w={c.w} variant={c.variant.value} zeta={len(c)} "
          f"best_zeta={min(by_w.values())} uncompressed={len(d)} roundtrip={'ok' if ok else 'FAILED'}")
    return 0 if ok else 1


def cmd_enumerate(args) -> int:
    if args.n is None:
        raise CliError("enumerate needs -n")
    t0 = time.perf_counter()
    res = ensemble.enumerate_graphs(args.n, max_n=args.max_n, jobs=args.jobs,
                                    with_zcomplexity=args.zcomplexity, variant=args.variant)
    if args.csv:
        _csv_out([report_row(encode(r.graph).bits, r.report, "enumeration") for r in res])
    else:
        for r in res:
            line = f"{encode(r.graph).bits} links={r.report.links} omega={r.omega} C={_fmt(r.report.C)}"
            if r.report.C_z is not None:
                line += f" C_z={_fmt(r.report.C_z)}"
            print(line)
    total = res.omega_total
    print(f"# n={args.n} classes={len(res)} sum_omega={total} "
          f"2^L={1 << (args.n * (args.n - 1) // 2)} partition={'ok' if res.check_partition() else 'FAILED'} "
          f"time={time.perf_counter() - t0:.1f}s", file=sys.stderr)
    return 0 if res.check_partition() else 1


def cmd_sweep(args) -> int:
    n = 10 if args.n is None else args.n
    max_links = 6 if args.l is None else args.l
    p = 0.5 if args.p is None else args.p

    def progress(msg: str) -> None:
        if not args.quiet:
            print(f"# {msg}", file=sys.stderr, flush=True)

    rows = ensemble.sparse_sweep_experiment(
        n, max_links, args.samples, seed=args.seed, variant=args.variant, p=p,
        jobs=args.jobs, progress=progress,
    )
    text = ensemble.write_csv(rows, args.output)
    if args.csv:
        sys.stdout.write(text)
    means = ensemble.group_means(rows)
    summary = [f"rows={len(rows)}"]
    summary += [f"mean_error[{k}]={v:.4f}" for k, v in sorted(means.items())]
    if len(rows) >= 2:
        try:
            r, slope, icpt = ensemble.correlate(rows, "odc", "compression_error")
            summary.append(f"pearson_r(odc,compression_error)={r:.4f} slope={slope:.4f} intercept={icpt:.4f}")
        except ValueError as exc:
            summary.append(f"correlation undefined: {exc}")
    print(("# " if args.csv else "") + " ".join(summary), file=sys.stderr if args.csv else sys.stdout)
    return 0


def cmd_gen(args) -> int:
    kind = args.kind
    g = _generate(kind, args)
    if args.edges:
        sys.stdout.write(format_edge_list(g))
    else:
        print(encode(g).bits)
    return 0


# --------------------------------------------------------------------------
# parser


def _add_graph_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("graph", nargs="?", help="description bitstring or edge-list file")
    p.add_argument("--gen", choices=("er", "ba"), help="generate the graph instead")
    _add_gen_params(p)


def _add_gen_params(p: argparse.ArgumentParser) -> None:
    p.add_argument("-n", type=int, help="node count")
    p.add_argument("-p", type=float, help="link probability (er)")
    p.add_argument("-m", type=int, help="links per new node (ba)")
    p.add_argument("--seed", type=int, default=0)


def _add_variant(p: argparse.ArgumentParser) -> None:
    p.add_argument("--variant", choices=[v.value for v in Variant], default=DEFAULT_VARIANT.value)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="netcomplexity",
                                 description="Information-content complexity of undirected graphs.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("complexity", help="C, omega and |Aut|")
    _add_graph_args(p)
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_complexity)

    p = sub.add_parser("zcomplexity", help="compression-based complexity C_z")
    _add_graph_args(p)
    _add_variant(p)
    p.add_argument("--method", choices=[m.value for m in Method], default=Method.AUTO.value)
    p.add_argument("--max-n", type=int, default=MAX_ENUMERATION_N,
                   help=f"largest n for labeling enumeration (default {MAX_ENUMERATION_N})")
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_zcomplexity)

    p = sub.add_parser("odc", help="offdiagonal complexity")
    _add_graph_args(p)
    p.set_defaults(func=cmd_odc)

    p = sub.add_parser("canon", help="canonical description and |Aut|")
    _add_graph_args(p)
    p.set_defaults(func=cmd_canon)

    p = sub.add_parser("compress", help="run-length compress a description")
    _add_graph_args(p)
    _add_variant(p)
    p.add_argument("-w", type=int, help="wordsize (default: best legal one)")
    p.set_defaults(func=cmd_compress)

    p = sub.add_parser("enumerate", help="all isomorphism classes on n nodes")
    p.add_argument("-n", type=int)
    p.add_argument("--max-n", type=int, default=MAX_ENUMERATE_N,
                   help=f"largest n enumerated without override (default {MAX_ENUMERATE_N})")
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    p.add_argument("--zcomplexity", action="store_true", help="also compute C_z per class")
    _add_variant(p)
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("sweep", help="sparse sweep plus random sample correlation experiment")
    p.add_argument("-n", type=int, help="node count (default 10)")
    p.add_argument("-l", type=int, help="largest link count swept exhaustively (default 6)")
    p.add_argument("-p", type=float, help="link density of the random sample (default 0.5)")
    p.add_argument("--samples", type=int, default=740)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    p.add_argument("-o", "--output", help="write the CSV to this file")
    p.add_argument("--quiet", action="store_true")
    _add_variant(p)
    p.add_argument("--csv", action="store_true", help="print the CSV to stdout")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("gen", help="generate a random graph")
    p.add_argument("kind", choices=("er", "ba"))
    _add_gen_params(p)
    p.add_argument("--edges", action="store_true", help="print an edge list instead of a description")
    p.set_defaults(func=cmd_gen)
    return ap


def run(argv: Sequence[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except (CliError, ValueError, OSError, RuntimeError) as exc:
        print(f"{ap.prog} {args.command}: error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


__all__ = ["build_parser", "load_graph", "main", "run"]
