"""Graph ensembles: exhaustive enumeration, random generators, experiments.

Enumeration grows classes one vertex at a time: every ``n``-node graph is an
``(n-1)``-node graph plus a vertex joined to some subset of the old nodes, so
trying every subset on one representative per ``(n-1)``-node class reaches
every ``n``-node class.  Canonical forms remove the duplicates.
"""

from __future__ import annotations

import csv
import io
import random
import statistics
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterable, Sequence

from .canon import canonical_form, canonical_graph
from .codec import Description
from .graph_core import Graph, num_pairs
from .measures import (
    ComplexityReport, Method, complexity_report,
    zcomplexity_class_sweep, zcomplexity_method2,
)
from .rle_compressor import DEFAULT_VARIANT, Variant, as_variant

MAX_ENUMERATE_N = 8

CSV_HEADER = ("id", "n", "links", "aut_order", "omega", "C", "C_z", "odc",
              "compression_error", "source")

SPARSE = "exhaustive-sparse"
SAMPLED = "random-sample"


# --------------------------------------------------------------------------
# exhaustive enumeration


@dataclass(frozen=True)
class ClassRecord:
    graph: Graph            # canonical representative
    omega: int
    report: ComplexityReport


@dataclass
class EnumerationResult:
    n: int
    records: list[ClassRecord] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self):
        return iter(self.records)

    @property
    def omega_total(self) -> int:
        return sum(r.omega for r in self.records)

    def check_partition(self) -> bool:
        """Every link field belongs to exactly one class."""
        return self.omega_total == 1 << num_pairs(self.n)


def _extend(args: tuple[int, int]) -> set[int]:
    """Canonical link fields of all one-vertex extensions of one class."""
    n, links = args
    out = set()
    base = n * (n - 1) // 2  # positions of the new vertex's pairs start here
    for subset in range(1 << n):
        g = Graph(n + 1, links | subset << base)
        out.add(canonical_graph(g).links)
    return out


def _map(fn: Callable, items: Sequence, jobs: int, chunksize: int = 1) -> list:
    if jobs <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=chunksize))


def class_representatives(n: int, jobs: int = 1) -> list[Graph]:
    """Canonical representatives of every isomorphism class on ``n`` nodes."""
    if n < 0:
        raise ValueError("node count must be non-negative")
    layer = {0}  # the single graph on min(n, 1) nodes
    for k in range(1, n):
        parts = _map(_extend, [(k, x) for x in sorted(layer)], jobs, chunksize=16)
        layer = set().union(*parts)
    return [Graph(n, x) for x in sorted(layer)]


def _record(args: tuple[int, int, bool, str]) -> ClassRecord:
    n, links, with_cz, variant = args
    g = Graph(n, links)
    rep = complexity_report(g, variant, with_zcomplexity=with_cz, method=Method.AUTO)
    return ClassRecord(g, rep.omega, rep)


def enumerate_graphs(n: int, max_n: int = MAX_ENUMERATE_N, jobs: int = 1,
                     with_zcomplexity: bool = False,
                     variant: Variant | str = DEFAULT_VARIANT) -> EnumerationResult:
    """One record per isomorphism class of ``n``-node graphs."""
    if n > max_n:
        raise ValueError(f"enumerating n={n} exceeds max_n={max_n}; raise it to override")
    reps = class_representatives(n, jobs)
    v = as_variant(variant).value
    recs = _map(_record, [(n, g.links, with_zcomplexity, v) for g in reps], jobs, chunksize=64)
    return EnumerationResult(n, recs)


# --------------------------------------------------------------------------
# random graphs


def er_random(n: int, p: float, seed: int | None = None) -> Graph:
    """Each of the ``n(n-1)/2`` links present independently with probability ``p``."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"link probability must lie in [0, 1], got {p}")
    rng = random.Random(seed)
    links = 0
    for k in range(num_pairs(n)):
        if rng.random() < p:
            links |= 1 << k
    return Graph(n, links)


def ba_random(n: int, m: int, seed: int | None = None) -> Graph:
    """Preferential attachment grown from a complete graph on ``m`` nodes.

    Each new node picks ``m`` distinct existing nodes, each draw proportional
    to current degree (uniform while all degrees are zero).
    """
    if not 1 <= m < n:
        raise ValueError(f"need 1 <= m < n, got m={m}, n={n}")
    rng = random.Random(seed)
    pairs = [(i, j) for j in range(m) for i in range(j)]
    deg = [m - 1] * m
    for v in range(m, n):
        chosen: set[int] = set()
        while len(chosen) < m:
            cand = [u for u in range(v) if u not in chosen]
            weights = [deg[u] for u in cand]
            if sum(weights) == 0:
                u = rng.choice(cand)
            else:
                u = rng.choices(cand, weights=weights)[0]
            chosen.add(u)
        for u in chosen:
            pairs.append((u, v))
            deg[u] += 1
        deg.append(m)
    return Graph.from_edges(n, pairs)


# --------------------------------------------------------------------------
# the sparse / random correlation experiment


@dataclass(frozen=True)
class ExperimentRow:
    id: str
    n: int
    links: int
    aut_order: int
    omega: int
    C: float
    C_z: float
    odc: float
    compression_error: float
    source: str

    @classmethod
    def from_report(cls, ident: str, rep: ComplexityReport, source: str) -> "ExperimentRow":
        return cls(ident, rep.n, rep.links, rep.aut_order, rep.omega, rep.C,
                   rep.C_z, rep.odc, rep.compression_error, source)


def _row(g: Graph, cz: float, source: str) -> ExperimentRow:
    rep = complexity_report(g, with_zcomplexity=False, cz=cz)
    return ExperimentRow.from_report(canonical_form(g).bits, rep, source)


def _method2_row(args: tuple[int, int, str]) -> ExperimentRow:
    n, links, variant = args
    g = Graph(n, links)
    return _row(g, zcomplexity_method2(g, variant), SAMPLED)


def sample_classes(n: int, count: int, min_links: int, p: float = 0.5,
                   seed: int | None = None, max_draws: int | None = None) -> list[Graph]:
    """``count`` distinct classes from uniform link fields at density ``p``.

    Draws with ``min_links`` links or fewer are rejected; repeats of an
    already drawn class are skipped.
    """
    rng = random.Random(seed)
    seen: set[Description] = set()
    out: list[Graph] = []
    draws = 0
    limit = max_draws if max_draws is not None else 1000 * max(count, 1)
    while len(out) < count:
        draws += 1
        if draws > limit:
            raise RuntimeError(f"only {len(out)} distinct classes after {limit} draws")
        g = er_random(n, p, rng.getrandbits(64))
        if g.num_links <= min_links:
            continue
        form = canonical_form(g)
        if form in seen:
            continue
        seen.add(form)
        out.append(g)
    return out


def sparse_sweep_experiment(n: int = 10, max_links: int = 6, sample_count: int = 740,
                            seed: int | None = 0, variant: Variant | str = DEFAULT_VARIANT,
                            p: float = 0.5, jobs: int = 1,
                            progress: Callable[[str], None] | None = None) -> list[ExperimentRow]:
    """Sparse classes by link-field sweep plus sampled denser classes by relabeling.

    Every class with at most ``max_links`` links gets a row from one sweep
    per link count; ``sample_count`` distinct classes with more links, drawn
    at density ``p``, get rows from the labeling enumeration.
    """
    v = as_variant(variant).value
    rows: list[ExperimentRow] = []
    for l in range(min(max_links, num_pairs(n)) + 1):
        sweep = zcomplexity_class_sweep(n, l, v)
        for form in sorted(sweep):
            g = Graph.from_link_bits(form.link_bits) if n > 1 else Graph(n)
            rows.append(_row(g, sweep[form], SPARSE))
        if progress:
            progress(f"sweep l={l}: {len(sweep)} classes")
    if sample_count:
        sample = sample_classes(n, sample_count, max_links, p, seed)
        args = [(n, g.links, v) for g in sample]
        if jobs <= 1:
            for k, a in enumerate(args):
                rows.append(_method2_row(a))
                if progress and (k + 1) % 20 == 0:
                    progress(f"sampled {k + 1}/{len(args)}")
        else:
            rows.extend(_map(_method2_row, args, jobs))
    return rows


# --------------------------------------------------------------------------
# statistics and output


def correlate(rows: Iterable, x_field: str, y_field: str) -> tuple[float, float, float]:
    """Pearson r and least-squares line ``y = slope*x + intercept``."""
    rows = list(rows)
    if len(rows) < 2:
        raise ValueError("correlation needs at least two rows")
    xs = [float(getattr(r, x_field)) for r in rows]
    ys = [float(getattr(r, y_field)) for r in rows]
    if max(xs) == min(xs):
        raise ValueError(f"{x_field} has zero variance")
    if max(ys) == min(ys):
        return 0.0, 0.0, ys[0]
    slope, intercept = statistics.linear_regression(xs, ys)
    return statistics.correlation(xs, ys), slope, intercept


def group_means(rows: Iterable[ExperimentRow], y_field: str = "compression_error") -> dict[str, float]:
    groups: dict[str, list[float]] = {}
    for r in rows:
        groups.setdefault(r.source, []).append(getattr(r, y_field))
    return {k: statistics.fmean(v) for k, v in groups.items()}


def _fmt(v) -> str:
    if v is None:
        return ""
    if isinstance(v, float):
        return f"{v:.6g}"
    return str(v)


def report_row(ident: str, rep: ComplexityReport, source: str = "") -> list[str]:
    return [ident, *(_fmt(getattr(rep, k)) for k in CSV_HEADER[1:-1]), source]


def write_csv(rows: Iterable[ExperimentRow], path: str | Path | None = None) -> str:
    """Rows as CSV text; also written to ``path`` when given."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in rows:
        w.writerow([_fmt(getattr(r, k)) for k in CSV_HEADER])
    text = buf.getvalue()
    if path is not None:
        Path(path).write_text(text)
    return text


def read_csv(path: str | Path) -> list[ExperimentRow]:
    out = []
    with open(path, newline="") as f:
        for rec in csv.DictReader(f):
            out.append(ExperimentRow(
                rec["id"], int(rec["n"]), int(rec["links"]), int(rec["aut_order"]),
                int(rec["omega"]), float(rec["C"]), float(rec["C_z"]), float(rec["odc"]),
                float(rec["compression_error"]), rec["source"],
            ))
    return out


__all__ = [
    "CSV_HEADER", "ClassRecord", "EnumerationResult", "ExperimentRow", "SAMPLED", "SPARSE",
    "ba_random", "class_representatives", "correlate", "enumerate_graphs", "er_random",
    "group_means", "read_csv", "sample_classes", "sparse_sweep_experiment", "write_csv",
]
