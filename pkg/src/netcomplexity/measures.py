"""Complexity measures: C, zcomplexity C_z, offdiagonal complexity.

C_z aggregates ``2**-min(zeta(b), cap)`` over the distinct descriptions ``b``
of a graph.  Every quantity is accumulated exactly as an integer
``sum 2**(cap - z)`` and only the final logarithm is floating point.
"""

from __future__ import annotations

import enum
import math
from collections import Counter
from dataclasses import asdict, dataclass
from functools import lru_cache
from typing import Iterable

import numpy as np

from . import _fast
from .canon import automorphism_order, canonical_form, omega
from .codec import MAX_ENUMERATION_N, Description
from .graph_core import Graph, num_pairs
from .rle_compressor import DEFAULT_VARIANT, Variant, as_variant, cap_length, legal_wordsizes, zeta


class Method(str, enum.Enum):
    ONE = "1"
    TWO = "2"
    AUTO = "auto"

    def __str__(self) -> str:
        return self.value


def as_method(m: Method | str | int) -> Method:
    s = str(m).lower().removeprefix("method")
    try:
        return Method(s)
    except ValueError:
        raise ValueError(f"unknown method {m!r}; expected 1, 2 or auto") from None


# sweeping more link fields than this needs an explicit override
MAX_SWEEP_FIELDS = 50_000_000


# --------------------------------------------------------------------------
# C and S


def max_complexity(n: int) -> int:
    """``n(n+1)/2 + 1``, attained by the empty and the full graph."""
    return cap_length(n)


def complexity(g: Graph) -> float:
    """``C = n(n+1)/2 + 1 - log2(omega)``."""
    return cap_length(g.n) - math.log2(omega(g))


def derived_entropy(g: Graph) -> float:
    """``S = log2(omega)``, so that ``C + S`` is the maximal complexity."""
    return math.log2(omega(g))


# --------------------------------------------------------------------------
# C_z


def method_selector(n: int, l: int) -> Method:
    """Method 1 iff there are fewer link fields with ``l`` links than labelings."""
    return Method.ONE if math.comb(num_pairs(n), l) < math.factorial(n) else Method.TWO


def capped_zeta(d: Description | str, variant: Variant | str = DEFAULT_VARIANT) -> int:
    from .codec import as_description

    d = as_description(d)
    return int(min(zeta(d, variant), cap_length(d.n)))


def zcomplexity_from_sum(weighted: int, n: int, divisor: int = 1) -> float:
    """C_z from ``weighted = divisor * sum_b 2**(cap - min(zeta_b, cap))``."""
    return 1 + cap_length(n) - math.log2(weighted) + math.log2(divisor)


def histogram_sum(counts: Iterable[int], cap: int) -> int:
    return sum(int(c) << (cap - z) for z, c in enumerate(counts) if c)


@lru_cache(maxsize=1)
def _fact_table() -> np.ndarray:
    return np.array([math.factorial(k) for k in range(21)], dtype=np.int64)


def twin_classes(g: Graph) -> list[int]:
    """Class id per vertex; vertices in one class are pairwise twins.

    ``u`` and ``v`` are twins when they have the same neighbours apart from
    each other, so swapping them is an automorphism.
    """
    adj = g.adjacency
    n = g.n
    cls = list(range(n))
    for v in range(n):
        for u in range(v):
            if cls[u] == u and (adj[u] & ~(1 << v)) == (adj[v] & ~(1 << u)):
                cls[v] = u
                break
    members: dict[int, list[int]] = {}
    for v, c in enumerate(cls):
        members.setdefault(c, []).append(v)
    for group in members.values():
        for a in group:
            for b in group:
                if a < b and (adj[a] & ~(1 << b)) != (adj[b] & ~(1 << a)):
                    return list(range(n))
    return cls


def labeling_histogram(g: Graph, variant: Variant | str = DEFAULT_VARIANT,
                       use_twins: bool = True) -> np.ndarray:
    """``counts[z]`` = number of the ``n!`` labelings whose capped zeta is ``z``."""
    v = as_variant(variant)
    n = g.n
    cap = cap_length(n)
    counts = np.zeros(cap + 1, dtype=np.int64)
    ws = legal_wordsizes(n)
    if n <= 1:
        # no link bits; the compressed header alone already reaches the cap
        z = min(cap, 2 * ws[0] + 1) if ws else cap
        counts[z] = 1
        return counts
    if num_pairs(n) > _fast.MAXL:
        raise ValueError(f"labeling enumeration supports n <= 11, got n={n}")
    adj = np.zeros((n, n), dtype=np.uint8)
    for i, j in g.edges():
        adj[i, j] = adj[j, i] = 1
    cls = np.array(twin_classes(g) if use_twins else range(n), dtype=np.int64)
    return _fast.labeling_histogram(
        adj, n, np.array(ws, dtype=np.int64), v is Variant.IMPLICIT, cls,
        _fast.CEIL, _fast.FIN, _fast.FINX, _fast.DIV, _fast.GEQ, _fact_table(),
    )


def zcomplexity_method2(g: Graph, variant: Variant | str = DEFAULT_VARIANT,
                        max_n: int = MAX_ENUMERATION_N) -> float:
    """C_z by running over every relabeling of ``g``."""
    if g.n > max_n:
        raise ValueError(f"method 2 enumerates n! labelings; n={g.n} exceeds max_n={max_n}")
    counts = labeling_histogram(g, variant)
    total = histogram_sum(counts, cap_length(g.n))
    return zcomplexity_from_sum(total, g.n, automorphism_order(g))


def zcomplexity_method1(g: Graph, variant: Variant | str = DEFAULT_VARIANT,
                        max_fields: int = MAX_SWEEP_FIELDS) -> float:
    """C_z of ``g`` read off a sweep over all link fields with its link count."""
    sweep = zcomplexity_class_sweep(g.n, g.num_links, variant, max_fields=max_fields)
    return sweep[canonical_form(g)]


def zcomplexity(g: Graph, variant: Variant | str = DEFAULT_VARIANT,
                method: Method | str | int = Method.AUTO,
                max_n: int = MAX_ENUMERATION_N,
                max_fields: int = MAX_SWEEP_FIELDS) -> float:
    """``C_z = 1 - log2 sum_b 2**-min(zeta(b), cap)`` over distinct descriptions."""
    m = as_method(method)
    if m is Method.AUTO:
        m = method_selector(g.n, g.num_links)
        if m is Method.ONE and math.comb(num_pairs(g.n), g.num_links) > max_fields:
            m = Method.TWO
    if m is Method.ONE:
        return zcomplexity_method1(g, variant, max_fields=max_fields)
    return zcomplexity_method2(g, variant, max_n=max_n)


def zcomplexity_class_sweep(n: int, l: int, variant: Variant | str = DEFAULT_VARIANT,
                            max_fields: int = MAX_SWEEP_FIELDS) -> dict[Description, float]:
    """C_z of every isomorphism class with ``n`` nodes and ``l`` links.

    One pass over all ``binom(n(n-1)/2, l)`` link fields; each field's
    ``2**(cap - min(zeta, cap))`` is added to the bin of its canonical form.
    """
    from .sweep import class_sweep_sums

    sums = class_sweep_sums(n, l, variant, max_fields=max_fields)
    return {form: zcomplexity_from_sum(s, n) for form, s in sums.items()}


def compression_error(g: Graph, variant: Variant | str = DEFAULT_VARIANT,
                      method: Method | str | int = Method.AUTO,
                      cz: float | None = None) -> float:
    """``(C - C_z) / C``."""
    c = complexity(g)
    if cz is None:
        cz = zcomplexity(g, variant, method)
    return (c - cz) / c


# --------------------------------------------------------------------------
# offdiagonal complexity


def degree_correlation(g: Graph) -> Counter:
    """``c[(k, l)]``, k <= l: number of edges joining degrees ``k`` and ``l``."""
    deg = g.degree_sequence()
    c: Counter = Counter()
    for i, j in g.edges():
        a, b = sorted((deg[i], deg[j]))
        c[(a, b)] += 1
    return c


def offdiagonal_complexity(g: Graph) -> float:
    """Entropy (bits) of edge counts summed along the diagonals of the degree matrix.

    ``a_m`` sums ``c[k][k+m]`` over ``k``; an edgeless graph gives 0.
    """
    a: Counter = Counter()
    for (k, l), cnt in degree_correlation(g).items():
        a[l - k] += cnt
    total = sum(a.values())
    if total == 0:
        return 0.0
    h = 0.0
    for _, cnt in sorted(a.items()):  # fixed order: same float result for any labeling
        p = cnt / total
        h -= p * math.log2(p)
    return h + 0.0  # normalise -0.0


# --------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class ComplexityReport:
    n: int
    links: int
    aut_order: int
    omega: int
    C: float
    C_z: float | None
    odc: float
    compression_error: float | None

    @property
    def S(self) -> float:
        return math.log2(self.omega)

    def as_dict(self) -> dict:
        return asdict(self)


def complexity_report(g: Graph, variant: Variant | str = DEFAULT_VARIANT,
                      with_zcomplexity: bool = True,
                      method: Method | str | int = Method.AUTO,
                      cz: float | None = None) -> ComplexityReport:
    aut = automorphism_order(g)
    om = math.factorial(g.n) // aut
    c = cap_length(g.n) - math.log2(om)
    if cz is None and with_zcomplexity:
        cz = zcomplexity(g, variant, method)
    err = None if cz is None else (c - cz) / c
    return ComplexityReport(g.n, g.num_links, aut, om, c, cz, offdiagonal_complexity(g), err)
