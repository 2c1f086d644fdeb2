from __future__ import annotations

import random

import pytest

import oracles
from netcomplexity.codec import Description, encode
from netcomplexity.graph_core import Graph
from netcomplexity.rle_compressor import (
    Variant, as_variant, best_compression, block_cost, cap_length, compress, decompress,
    empty_full_closed_form, legal_wordsizes, zeta, zeta_by_wordsize,
)

VARIANTS = [Variant.IMPLICIT, Variant.EXPLICIT]


def _desc(n: int, links: int) -> Description:
    return encode(Graph(n, links))


def test_worked_example():
    c = compress("1111110101010101010101", 3, "explicit-len")
    assert c.bits == "1110110000" + "01010"
    assert len(c) == 15
    assert decompress(c).bits == "1111110101010101010101"


@pytest.mark.parametrize("n,ws", [(0, []), (1, [1]), (2, [1]), (3, [2]), (4, [2]),
                                  (5, [3]), (8, [3, 4]), (10, [4, 5]), (16, [4, 5, 6]),
                                  (33, [6, 7, 8, 9])])
def test_legal_wordsizes(n, ws):
    assert legal_wordsizes(n) == ws


def test_cap_length():
    assert [cap_length(n) for n in range(5)] == [1, 2, 4, 7, 11]


@pytest.mark.parametrize("variant", VARIANTS)
@pytest.mark.parametrize("n", range(1, 6))
def test_zeta_matches_parse_oracle_exhaustive(n, variant):
    implicit = variant is Variant.IMPLICIT
    for k in range(2 ** (n * (n - 1) // 2)):
        d = _desc(n, k)
        assert zeta(d, variant) == oracles.zeta(d.bits, implicit)


@pytest.mark.parametrize("variant", VARIANTS)
@pytest.mark.parametrize("n", range(2, 6))
def test_zeta_matches_stream_enumeration(n, variant):
    """Every stream shorter than the cap is decoded; the shortest one per description wins."""
    implicit = variant is Variant.IMPLICIT
    cap = cap_length(n)
    best = oracles.brute_zeta(cap - 1, implicit)
    for k in range(2 ** (n * (n - 1) // 2)):
        d = _desc(n, k)
        assert min(zeta(d, variant), cap) == best.get(d.bits, cap)


@pytest.mark.parametrize("variant", VARIANTS)
def test_zeta_matches_parse_oracle_sampled(variant):
    rng = random.Random(17)
    implicit = variant is Variant.IMPLICIT
    for _ in range(60):
        n = rng.randrange(6, 9)
        d = _desc(n, rng.getrandbits(n * (n - 1) // 2))
        for w, z in zeta_by_wordsize(d, variant).items():
            assert z == oracles.zeta_w(d.link_bits, w, implicit)


@pytest.mark.parametrize("variant", VARIANTS)
def test_roundtrip_and_length(variant):
    rng = random.Random(4)
    for _ in range(150):
        n = rng.randrange(1, 14)
        density = rng.choice([0.05, 0.5, 0.95])
        links = sum(1 << k for k in range(n * (n - 1) // 2) if rng.random() < density)
        d = _desc(n, links)
        by_w = zeta_by_wordsize(d, variant)
        for w in legal_wordsizes(n):
            c = compress(d, w, variant)
            assert len(c) == by_w[w] == 2 * w + 1 + block_cost(d, w, variant)
            assert decompress(c) == d
            assert decompress(c.bits, variant) == d
        assert len(best_compression(d, variant)) == zeta(d, variant)


def test_zero_and_one_node():
    assert zeta("0") == float("inf")
    with pytest.raises(ValueError):
        best_compression("0")
    c = compress("10", 1)
    assert c.bits == "101" and decompress(c).bits == "10"


def test_illegal_wordsize_rejected():
    with pytest.raises(ValueError, match="legal"):
        compress(_desc(10, 0), 3)


def test_unknown_variant():
    with pytest.raises(ValueError, match="variant"):
        as_variant("huffman")


@pytest.mark.parametrize("bits", ["", "0", "1111", "1100", "1010", "11011000001", "1110110000010100"])
def test_decompress_rejects_malformed(bits):
    with pytest.raises(ValueError):
        decompress(bits, "explicit-len")


def test_implicit_nonfinal_block_must_not_reach_end():
    # n=3 (w=2), count 1, length 3, payload 101 covers the whole field,
    # so it should have been written as a final block
    with pytest.raises(ValueError):
        decompress("110" + "11" + "01" + "11" + "101", "implicit-final-len")


def test_zero_field_means_two_to_the_w():
    # n field "00" = 4 with w = 2; one explicit block of count 4 ("00"), length 2
    d = decompress("110" + "00" + "00" + "10" + "10", "explicit-len")
    assert d.n == 4 and d.link_bits == "101010"


def test_empty_graph_closed_form():
    """The single-block closed form is an upper bound; the optimiser matches it for small n."""
    for n in range(2, 41):
        z = zeta(encode(Graph.empty(n)))
        bound = empty_full_closed_form(n) - 1
        assert z <= bound
        if n <= 15 or 17 <= n <= 19:
            assert z == bound
    assert zeta(encode(Graph.empty(16))) == 20
    assert zeta(encode(Graph.empty(64))) == 32
    with pytest.raises(ValueError):
        empty_full_closed_form(1)


def test_empty_and_full_compress_equally():
    for n in range(2, 16):
        assert zeta(encode(Graph.empty(n))) == zeta(encode(Graph.complete(n)))
