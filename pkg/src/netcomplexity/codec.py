"""Prefix-free bitstring descriptions of labeled graphs.

A description is ``n`` ones, a single zero, then the ``n(n-1)/2`` link bits.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .graph_core import Graph, num_pairs

#: Largest ``n`` for which :func:`all_descriptions` runs without an override.
MAX_ENUMERATION_N = 10


@dataclass(frozen=True, order=True)
class Description:
    bits: str

    def __post_init__(self) -> None:
        bits = self.bits
        if bits.strip("01"):
            raise ValueError("a description holds only '0' and '1'")
        n = bits.find("0")
        if n < 0:
            raise ValueError("malformed header: no terminating 0")
        want = n + 1 + num_pairs(n)
        if len(bits) != want:
            raise ValueError(
                f"wrong length for n={n}: expected {want} bits, got {len(bits)}"
            )

    @property
    def n(self) -> int:
        return self.bits.index("0")

    @property
    def link_bits(self) -> str:
        return self.bits[self.n + 1 :]

    def __len__(self) -> int:
        return len(self.bits)

    def __str__(self) -> str:
        return self.bits


def as_description(d: Description | str) -> Description:
    return d if isinstance(d, Description) else Description(d)


def encode(g: Graph, relabeling: Sequence[int] | None = None) -> Description:
    """Description of ``g`` after renaming node ``v`` to ``relabeling[v]``."""
    if relabeling is not None:
        if len(relabeling) != g.n:
            raise ValueError(
                f"relabeling has {len(relabeling)} entries for a {g.n}-node graph"
            )
        g = g.relabel(relabeling)
    return Description("1" * g.n + "0" + g.link_bits())


def decode(d: Description | str) -> Graph:
    d = as_description(d)
    n = d.n
    links = 0
    for k, ch in enumerate(d.link_bits):
        if ch == "1":
            links |= 1 << k
    return Graph(n, links)


def description_from_links(n: int, links: int) -> Description:
    return encode(Graph(n, links))


@lru_cache(maxsize=4)
def permutation_array(n: int) -> np.ndarray:
    """All ``n!`` permutations of ``range(n)`` as rows, lexicographic order."""
    perms = np.zeros((1, 0), dtype=np.int8)
    for m in range(1, n + 1):
        # insert the new symbol m-1 at every slot of each (m-1)-permutation
        rows = []
        for slot in range(m):
            rows.append(np.insert(perms, slot, m - 1, axis=1))
        perms = np.concatenate(rows)
    if n == 0:
        perms.setflags(write=False)
        return perms
    order = np.lexsort(perms.T[::-1])
    perms = perms[order]
    perms.setflags(write=False)
    return perms


def distinct_link_fields(g: Graph, max_n: int = MAX_ENUMERATION_N) -> np.ndarray:
    """Sorted array of the distinct link fields over all ``n!`` relabelings."""
    n = g.n
    if n > max_n:
        raise ValueError(
            f"n={n} exceeds the enumeration bound {max_n}; raise max_n to override"
        )
    if num_pairs(n) > 64:
        raise ValueError("link fields wider than 64 bits are not supported here")
    perms = permutation_array(n)
    codes = np.zeros(len(perms), dtype=np.uint64)
    for i, j in g.edges():
        a = perms[:, i].astype(np.int16)
        b = perms[:, j].astype(np.int16)
        lo = np.minimum(a, b)
        hi = np.maximum(a, b)
        pos = (hi * (hi - 1) // 2 + lo).astype(np.uint64)
        codes |= np.left_shift(np.uint64(1), pos)
    return np.unique(codes)


def all_descriptions(g: Graph, max_n: int = MAX_ENUMERATION_N) -> set[Description]:
    """Every distinct description of ``g`` over all node relabelings."""
    return {
        description_from_links(g.n, int(code))
        for code in distinct_link_fields(g, max_n=max_n)
    }
