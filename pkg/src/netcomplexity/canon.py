"""Canonical labeling and automorphism group order.

Partition refinement with individualization, in the style of McKay's
practical graph isomorphism search.  The canonical form is the
lexicographically greatest link field (position 0 most significant) among
the leaves of the search tree.  Automorphisms are discovered as pairs of
leaves with equal link fields and used to prune equivalent branches; the
group order is the product of the first-path orbit sizes.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .codec import Description, encode
from .graph_core import Graph


@dataclass(frozen=True)
class CanonicalResult:
    labeling: tuple[int, ...]   # labeling[v] = canonical label of node v
    code: int                   # canonical link field, position 0 most significant
    aut_order: int
    n: int

    @property
    def graph(self) -> Graph:
        return _graph_from_code(self.n, self.code)

    @property
    def description(self) -> Description:
        return encode(self.graph)


def _mask(cell) -> int:
    m = 0
    for v in cell:
        m |= 1 << v
    return m


def refine(adj, cells: list[list[int]], splitters: list[list[int]]) -> list[list[int]]:
    """Refine the ordered partition ``cells`` to an equitable one.

    Each splitter cell counts the neighbours of every vertex inside it; cells
    whose vertices disagree are split into fragments ordered by that count.
    """
    queue = deque(splitters)
    pending = {id(c) for c in splitters}
    n_cells = len(cells)
    n = sum(len(c) for c in cells)
    while queue and n_cells < n:
        w = queue.popleft()
        if id(w) not in pending:
            continue
        pending.discard(id(w))
        wmask = _mask(w)
        out = []
        for x in cells:
            if len(x) == 1:
                out.append(x)
                continue
            counts = [(adj[v] & wmask).bit_count() for v in x]
            first = counts[0]
            if all(c == first for c in counts):
                out.append(x)
                continue
            groups: dict[int, list[int]] = {}
            for v, c in zip(x, counts):
                groups.setdefault(c, []).append(v)
            frags = [groups[c] for c in sorted(groups)]
            out.extend(frags)
            n_cells += len(frags) - 1
            if id(x) in pending:
                pending.discard(id(x))
                skip = None
            else:
                skip = max(range(len(frags)), key=lambda k: (len(frags[k]), -k))
            for k, f in enumerate(frags):
                if k != skip:
                    queue.append(f)
                    pending.add(id(f))
        cells = out
    return cells


def _leaf_code(adj, lab: list[int]) -> int:
    pos = {v: k for k, v in enumerate(lab)}
    code = 0
    for b in range(1, len(lab)):
        nb = adj[lab[b]]
        col = 0
        while nb:
            low = nb & -nb
            a = pos[low.bit_length() - 1]
            if a < b:
                col |= 1 << (b - 1 - a)
            nb ^= low
        code = (code << b) | col
    return code


def _graph_from_code(n: int, code: int) -> Graph:
    L = n * (n - 1) // 2
    links = 0
    for k in range(L):
        if code >> (L - 1 - k) & 1:
            links |= 1 << k
    return Graph(n, links)


class _Search:
    def __init__(self, adj, n: int):
        self.adj = adj
        self.n = n
        self.gens: list[tuple[int, ...]] = []
        self.first_lab: list[int] | None = None
        self.first_code = -1
        self.best_lab: list[int] | None = None
        self.best_code = -1
        self.log_order = 0
        self.order = 1

    # orbits of the group generated by known automorphisms fixing ``path``
    def _orbits(self, path) -> list[int]:
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in self.gens:
            if any(g[v] != v for v in path):
                continue
            for v in range(self.n):
                a, b = find(v), find(g[v])
                if a != b:
                    parent[max(a, b)] = min(a, b)
        return [find(v) for v in range(self.n)]

    def _add_gen(self, src: list[int], dst: list[int]) -> None:
        g = [0] * self.n
        for a, b in zip(src, dst):
            g[a] = b
        self.gens.append(tuple(g))

    def visit(self, cells, path, on_first: bool) -> bool:
        """Explore the subtree at ``cells``.  True means an automorphism to
        the first leaf was found and the caller may abandon this subtree."""
        if len(cells) == self.n:
            lab = [c[0] for c in cells]
            code = _leaf_code(self.adj, lab)
            if self.first_lab is None:
                self.first_lab, self.first_code = lab, code
                self.best_lab, self.best_code = lab, code
                return False
            if code == self.first_code:
                self._add_gen(self.first_lab, lab)
                return True
            if code == self.best_code:
                self._add_gen(self.best_lab, lab)
            elif code > self.best_code:
                self.best_lab, self.best_code = lab, code
            return False

        # first smallest non-singleton cell
        t = min(
            (k for k, c in enumerate(cells) if len(c) > 1),
            key=lambda k: (len(cells[k]), k),
        )
        target = cells[t]
        explored: list[int] = []
        for idx, v in enumerate(target):
            if explored:
                orb = self._orbits(path)
                if any(orb[v] == orb[u] for u in explored):
                    continue
            rest = [u for u in target if u != v]
            child = cells[:t] + [[v], rest] + cells[t + 1 :]
            child = refine(self.adj, child, [child[t]])
            found = self.visit(child, path + [v], on_first and idx == 0)
            explored.append(v)
            if found and not on_first:
                return True
        if on_first:
            orb = self._orbits(path)
            size = sum(1 for u in target if orb[u] == orb[target[0]])
            self.order *= size
        return False


def canonical_search(g: Graph) -> CanonicalResult:
    n = g.n
    if n == 0:
        return CanonicalResult((), 0, 1, 0)
    adj = g.adjacency
    start = [list(range(n))]
    cells = refine(adj, start, [start[0]])
    s = _Search(adj, n)
    s.visit(cells, [], True)
    labeling = [0] * n
    for k, v in enumerate(s.best_lab):
        labeling[v] = k
    return CanonicalResult(tuple(labeling), s.best_code, s.order, n)


@lru_cache(maxsize=4096)
def _cached(g: Graph) -> CanonicalResult:
    return canonical_search(g)


def canonical_graph(g: Graph) -> Graph:
    return _cached(g).graph


def canonical_form(g: Graph) -> Description:
    """Description of ``g`` under its canonical relabeling."""
    return _cached(g).description


def certificate(g: Graph) -> tuple[int, int]:
    """Hashable isomorphism certificate ``(n, canonical code)``."""
    r = _cached(g)
    return (g.n, r.code)


def automorphism_order(g: Graph) -> int:
    return _cached(g).aut_order


def omega(g: Graph) -> int:
    """Number of distinct descriptions of ``g``: ``n! / |Aut(g)|``."""
    r = _cached(g)
    q, rem = divmod(math.factorial(g.n), r.aut_order)
    assert rem == 0, "automorphism group order must divide n!"
    return q


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.num_links == h.num_links and certificate(g) == certificate(h)
