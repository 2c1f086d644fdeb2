from __future__ import annotations

import math
import random

import pytest

import oracles
from netcomplexity.canon import (
    automorphism_order, canonical_form, canonical_graph, canonical_search, certificate,
    is_isomorphic, omega,
)
from netcomplexity.codec import all_descriptions, encode
from netcomplexity.graph_core import Graph


def _random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    g = Graph(n)
    links = sum(1 << k for k in range(n * (n - 1) // 2) if rng.random() < p)
    return Graph(n, links)


def _shuffle(rng: random.Random, g: Graph) -> Graph:
    perm = list(range(g.n))
    rng.shuffle(perm)
    return g.relabel(perm)


@pytest.mark.parametrize("n", range(0, 6))
def test_aut_and_omega_against_brute_force(n):
    for k in range(2 ** (n * (n - 1) // 2)):
        g = Graph(n, k)
        aut = oracles.aut_count(n, g.link_bits())
        assert automorphism_order(g) == aut
        assert omega(g) == math.factorial(n) // aut


def test_canonical_form_is_labeling_invariant():
    rng = random.Random(11)
    for _ in range(150):
        n = rng.randrange(1, 11)
        g = _random_graph(rng, n, rng.random())
        h = _shuffle(rng, g)
        assert canonical_form(g) == canonical_form(h)
        assert is_isomorphic(g, h)
        assert automorphism_order(g) == automorphism_order(h)


def test_canonical_form_is_one_of_the_descriptions():
    rng = random.Random(5)
    for _ in range(40):
        g = _random_graph(rng, rng.randrange(1, 7))
        assert canonical_form(g) in all_descriptions(g)


def test_canonical_graph_is_fixed_point():
    rng = random.Random(8)
    for _ in range(60):
        c = canonical_graph(_random_graph(rng, rng.randrange(1, 10)))
        assert canonical_graph(c) == c
        assert encode(c) == canonical_form(c)


def test_labeling_maps_graph_onto_canonical_graph():
    rng = random.Random(2)
    for _ in range(40):
        g = _random_graph(rng, rng.randrange(1, 10))
        r = canonical_search(g)
        assert g.relabel(list(r.labeling)) == r.graph


def test_non_isomorphic_graphs_differ():
    p4, star = Graph.path(4), Graph.star(4)
    assert not is_isomorphic(p4, star)
    assert certificate(p4) != certificate(star)
    assert not is_isomorphic(Graph.empty(3), Graph.empty(4))


@pytest.mark.parametrize("g,aut", [
    (Graph.complete(7), math.factorial(7)),
    (Graph.empty(6), 720),
    (Graph.cycle(9), 18),
    (Graph.star(6), 120),
    (Graph.path(5), 2),
])
def test_known_group_orders(g, aut):
    assert automorphism_order(g) == aut


def test_larger_regular_graphs():
    # Petersen graph, |Aut| = 120
    outer = [(k, (k + 1) % 5) for k in range(5)]
    spokes = [(k, k + 5) for k in range(5)]
    inner = [(5 + k, 5 + (k + 2) % 5) for k in range(5)]
    pet = Graph.from_edges(10, outer + spokes + inner)
    assert automorphism_order(pet) == 120
    # disjoint union of 4 triangles: 3!^4 * 4!
    tri = [(3 * t + a, 3 * t + b) for t in range(4) for a, b in ((0, 1), (1, 2), (0, 2))]
    assert automorphism_order(Graph.from_edges(12, tri)) == 6 ** 4 * 24


def test_hundreds_of_nodes_run():
    rng = random.Random(1)
    g = _random_graph(rng, 200, 0.05)
    h = _shuffle(rng, g)
    assert canonical_form(g) == canonical_form(h)
    assert automorphism_order(Graph.cycle(300)) == 600
