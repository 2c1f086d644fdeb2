from __future__ import annotations

import math
from collections import Counter

import pytest

from netcomplexity.canon import canonical_form, canonical_graph
from netcomplexity.ensemble import (
    CSV_HEADER, SAMPLED, SPARSE, ExperimentRow, ba_random, class_representatives, correlate,
    enumerate_graphs, er_random, group_means, read_csv, sample_classes,
    sparse_sweep_experiment, write_csv,
)
from netcomplexity.graph_core import Graph


@pytest.mark.parametrize("n,count", [(0, 1), (1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156)])
def test_class_counts_and_partition(n, count):
    res = enumerate_graphs(n)
    assert len(res) == count
    assert res.check_partition()
    for r in res:
        assert canonical_graph(r.graph) == r.graph
        assert r.omega == r.report.omega


def test_parallel_enumeration_matches_serial():
    a = [r.graph for r in enumerate_graphs(5, jobs=1)]
    b = [r.graph for r in enumerate_graphs(5, jobs=2)]
    assert a == b


def test_enumeration_guard():
    with pytest.raises(ValueError, match="max_n"):
        enumerate_graphs(9)
    with pytest.raises(ValueError):
        class_representatives(-1)


def test_enumeration_with_zcomplexity():
    res = enumerate_graphs(4, with_zcomplexity=True)
    for r in res:
        assert r.report.C_z <= r.report.C + 1


def test_er_random_extremes_and_determinism():
    assert er_random(6, 0.0, 1) == Graph.empty(6)
    assert er_random(6, 1.0, 1) == Graph.complete(6)
    assert er_random(9, 0.3, 42) == er_random(9, 0.3, 42)
    mean = sum(er_random(10, 0.5, s).num_links for s in range(1000)) / 1000
    assert abs(mean - 22.5) <= 1
    with pytest.raises(ValueError):
        er_random(5, 1.5, 0)


def test_ba_random():
    for m in range(1, 5):
        assert ba_random(m + 1, m, 3) == Graph.complete(m + 1)
    tree = ba_random(50, 1, 7)
    assert tree.num_links == 49  # one-node seed clique has no links
    assert ba_random(30, 2, 5) == ba_random(30, 2, 5)
    for bad in ((5, 0), (5, 5)):
        with pytest.raises(ValueError):
            ba_random(*bad, 0)


def test_ba_tail_heavier_than_er():
    """At equal density the largest BA degrees exceed the largest ER degrees."""
    n, m = 200, 2
    ba_max, er_max = [], []
    for seed in range(10):
        g = ba_random(n, m, seed)
        p = g.num_links / (n * (n - 1) / 2)
        ba_max.append(max(g.degree_sequence()))
        er_max.append(max(er_random(n, p, seed).degree_sequence()))
    assert sorted(ba_max)[len(ba_max) // 2] > sorted(er_max)[len(er_max) // 2]


def test_sample_classes_distinct_and_dense():
    gs = sample_classes(7, 25, 6, seed=1)
    assert len(gs) == 25
    assert len({canonical_form(g) for g in gs}) == 25
    assert all(g.num_links > 6 for g in gs)
    with pytest.raises(RuntimeError):
        sample_classes(3, 5, 0, seed=0, max_draws=200)  # only 3 classes have a link


def test_small_sweep_experiment(tmp_path):
    rows = sparse_sweep_experiment(n=6, max_links=3, sample_count=12, seed=2)
    sparse = [r for r in rows if r.source == SPARSE]
    sampled = [r for r in rows if r.source == SAMPLED]
    assert Counter(r.links for r in sparse) == {0: 1, 1: 1, 2: 2, 3: 5}
    assert len(sampled) == 12 and all(r.links > 3 for r in sampled)
    for r in rows:
        assert r.C_z <= r.C + 1 + 1e-9
        assert r.omega == math.factorial(r.n) // r.aut_order
    means = group_means(rows)
    assert means[SPARSE] > means[SAMPLED]
    path = tmp_path / "out.csv"
    text = write_csv(rows, path)
    assert text.splitlines()[0] == ",".join(CSV_HEADER)
    back = read_csv(path)
    assert [r.id for r in back] == [r.id for r in rows]
    assert back[0].C == pytest.approx(rows[0].C, rel=1e-5)


def _rows(xs, ys):
    return [ExperimentRow("x", 1, 0, 1, 1, 0.0, 0.0, x, y, "t") for x, y in zip(xs, ys)]


def test_correlate():
    r, slope, icpt = correlate(_rows([0, 1, 2, 3], [1, 3, 5, 7]), "odc", "compression_error")
    assert r == pytest.approx(1) and slope == pytest.approx(2) and icpt == pytest.approx(1)
    r, slope, _ = correlate(_rows([0, 1, 2], [4, 2, 0]), "odc", "compression_error")
    assert r == pytest.approx(-1) and slope == pytest.approx(-2)
    assert correlate(_rows([0, 1, 2], [5, 5, 5]), "odc", "compression_error") == (0.0, 0.0, 5.0)
    with pytest.raises(ValueError):
        correlate(_rows([1, 1], [0, 1]), "odc", "compression_error")
    with pytest.raises(ValueError):
        correlate(_rows([1], [0]), "odc", "compression_error")
