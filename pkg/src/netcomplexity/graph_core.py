"""Undirected simple graphs stored as a packed link field.

Nodes are numbered ``0..n-1``.  The unordered pair ``(i, j)`` with ``i < j``
lives at link-field position ``j*(j-1)//2 + i``, so the field for ``n``
nodes reads ``(0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...``.  The field is
held in a Python ``int`` whose bit ``k`` is position ``k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from pathlib import Path
from typing import Iterable, Sequence


def num_pairs(n: int) -> int:
    return n * (n - 1) // 2


def edge_index(i: int, j: int, n: int) -> int:
    """Position of the pair ``(i, j)``, ``0 <= i < j < n``, in the link field."""
    if not 0 <= i < j < n:
        raise ValueError(f"need 0 <= i < j < n, got i={i}, j={j}, n={n}")
    return j * (j - 1) // 2 + i


@lru_cache(maxsize=64)
def pair_table(n: int) -> tuple[tuple[int, int], ...]:
    """Inverse of :func:`edge_index`: ``pair_table(n)[k] == (i, j)``."""
    return tuple((i, j) for j in range(n) for i in range(j))


@dataclass(frozen=True)
class Graph:
    """Immutable undirected simple graph.

    ``links`` is the link field packed into an int (bit ``k`` = position ``k``).
    """

    n: int
    links: int = 0

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("node count must be non-negative")
        if self.links < 0 or self.links >> num_pairs(self.n):
            raise ValueError("link field does not fit n(n-1)/2 positions")

    # construction -------------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, pairs: Iterable[Sequence[int]]) -> "Graph":
        links = 0
        for pair in pairs:
            a, b = pair
            if a == b:
                raise ValueError(f"self-loop at node {a}")
            if not (0 <= a < n and 0 <= b < n):
                raise ValueError(f"node index out of range in pair {(a, b)} for n={n}")
            i, j = (a, b) if a < b else (b, a)
            links |= 1 << (j * (j - 1) // 2 + i)
        return cls(n, links)

    @classmethod
    def from_link_bits(cls, bits: str) -> "Graph":
        """Build from a '0'/'1' link-field string; its length fixes ``n``."""
        L = len(bits)
        n = _nodes_for_pairs(L)
        if n is None:
            raise ValueError(f"link field length {L} is not n(n-1)/2 for any n")
        links = 0
        for k, ch in enumerate(bits):
            if ch == "1":
                links |= 1 << k
            elif ch != "0":
                raise ValueError(f"bad character {ch!r} in link field")
        return cls(n, links)

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, 0)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, (1 << num_pairs(n)) - 1)

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise ValueError("a cycle needs at least 3 nodes")
        return cls.from_edges(n, [(k, (k + 1) % n) for k in range(n)])

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(k, k + 1) for k in range(n - 1)])

    @classmethod
    def star(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(0, k) for k in range(1, n)])

    # queries ------------------------------------------------------------

    @property
    def num_links(self) -> int:
        return self.links.bit_count()

    @property
    def num_pairs(self) -> int:
        return num_pairs(self.n)

    def has_edge(self, i: int, j: int) -> bool:
        if i > j:
            i, j = j, i
        return bool(self.links >> edge_index(i, j, self.n) & 1)

    def edges(self) -> list[tuple[int, int]]:
        table = pair_table(self.n)
        out = []
        x = self.links
        while x:
            low = x & -x
            out.append(table[low.bit_length() - 1])
            x ^= low
        return out

    @cached_property
    def adjacency(self) -> tuple[int, ...]:
        """Neighbour sets as bitmasks, one int per node."""
        adj = [0] * self.n
        for i, j in self.edges():
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        return tuple(adj)

    def degree_sequence(self) -> list[int]:
        return [a.bit_count() for a in self.adjacency]

    def link_bits(self) -> str:
        L = self.num_pairs
        return "".join("1" if self.links >> k & 1 else "0" for k in range(L))

    # transformations ----------------------------------------------------

    def complement(self) -> "Graph":
        return Graph(self.n, self.links ^ ((1 << self.num_pairs) - 1))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with node ``v`` renamed to ``perm[v]``."""
        n = self.n
        if len(perm) != n or sorted(perm) != list(range(n)):
            raise ValueError("relabeling must be a permutation of 0..n-1")
        links = 0
        for i, j in self.edges():
            a, b = perm[i], perm[j]
            if a > b:
                a, b = b, a
            links |= 1 << (b * (b - 1) // 2 + a)
        return Graph(n, links)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def _nodes_for_pairs(L: int) -> int | None:
    n = 0
    while num_pairs(n) < L:
        n += 1
    if num_pairs(n) != L:
        return None
    # n = 0 and n = 1 both give an empty field; prefer 1 only if asked via header
    return n


def from_edge_list(n: int, pairs: Iterable[Sequence[int]]) -> Graph:
    """Graph on ``n`` nodes with the given 0-based pairs; duplicates collapse."""
    return Graph.from_edges(n, pairs)


def complement(g: Graph) -> Graph:
    return g.complement()


def degree_sequence(g: Graph) -> list[int]:
    return g.degree_sequence()


# edge-list text format -------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse ``n`` on the first line, then one ``i j`` pair per line.

    Blank lines and ``#`` comments are ignored.
    """
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    if not rows:
        raise ValueError("edge list is empty")
    if len(rows[0]) != 1:
        raise ValueError("first line must hold the node count")
    n = int(rows[0][0])
    pairs = []
    for row in rows[1:]:
        if len(row) != 2:
            raise ValueError(f"expected 'i j', got {' '.join(row)!r}")
        pairs.append((int(row[0]), int(row[1])))
    return Graph.from_edges(n, pairs)


def format_edge_list(g: Graph) -> str:
    lines = [str(g.n)] + [f"{i} {j}" for i, j in g.edges()]
    return "\n".join(lines) + "\n"


def read_edge_list(path: str | Path) -> Graph:
    return parse_edge_list(Path(path).read_text())


def write_edge_list(g: Graph, path: str | Path) -> None:
    Path(path).write_text(format_edge_list(g))
