"""Method 1: one pass over all link fields with a fixed link count."""

from __future__ import annotations

import itertools
import math

import numpy as np

from . import _fast
from .canon import canonical_form, canonical_graph
from .codec import Description, description_from_links, distinct_link_fields
from .graph_core import Graph, num_pairs
from .rle_compressor import DEFAULT_VARIANT, Variant, as_variant, cap_length, legal_wordsizes

# below this many fields the sweep canonicalises every field directly
DIRECT_LIMIT = 5_000


def classes_with_links(n: int, l: int) -> list[Graph]:
    """Canonical representatives of all classes with ``n`` nodes and ``l`` links.

    Built by adding one edge at a time to the classes with one link fewer.
    """
    L = num_pairs(n)
    if not 0 <= l <= L:
        return []
    flip = l > L - l
    target = L - l if flip else l
    layer = {canonical_graph(Graph.empty(n))}
    for _ in range(target):
        nxt: set[Graph] = set()
        for g in layer:
            for k in range(L):
                if not g.links >> k & 1:
                    nxt.add(canonical_graph(Graph(n, g.links | 1 << k)))
        layer = nxt
    if flip:
        layer = {canonical_graph(g.complement()) for g in layer}
    return sorted(layer, key=lambda g: g.links)


def zeta_of_fields(n: int, fields: np.ndarray, variant: Variant | str = DEFAULT_VARIANT) -> np.ndarray:
    """Capped zeta for each link field (``uint64`` array) of an ``n``-node graph."""
    if num_pairs(n) > _fast.MAXL:
        raise ValueError("fast zeta needs n <= 11")
    ws = legal_wordsizes(n)
    if not ws:
        return np.full(len(fields), cap_length(n), dtype=np.int64)
    return _fast.zeta_many(
        np.ascontiguousarray(fields, dtype=np.uint64), n, np.array(ws, dtype=np.int64),
        as_variant(variant) is Variant.IMPLICIT, _fast.CEIL, _fast.FIN, _fast.FINX, _fast.GEQ,
    )


def class_sweep_sums(n: int, l: int, variant: Variant | str = DEFAULT_VARIANT,
                     max_fields: int = 50_000_000) -> dict[Description, int]:
    """Map canonical form -> ``sum 2**(cap - min(zeta, cap))`` over the class's fields."""
    L = num_pairs(n)
    total = math.comb(L, l)
    if total == 0:
        return {}
    if total > max_fields:
        raise ValueError(
            f"sweep over {total} link fields exceeds max_fields={max_fields}; raise it to override"
        )
    if L > _fast.MAXL:
        raise ValueError("method 1 sweeps support n <= 11")
    cap = cap_length(n)
    ws = np.array(legal_wordsizes(n), dtype=np.int64)
    implicit = as_variant(variant) is Variant.IMPLICIT
    if total <= DIRECT_LIMIT or n > 10:
        sums: dict[Description, int] = {}
        batch = []
        for combo in itertools.combinations(range(L), l):
            batch.append(sum(1 << k for k in combo))
        zs = zeta_of_fields(n, np.array(batch, dtype=np.uint64), variant)
        for x, z in zip(batch, zs):
            form = canonical_form(Graph(n, x))
            sums[form] = sums.get(form, 0) + (1 << (cap - int(z)))
        return sums
    reps = classes_with_links(n, l)
    tables = [distinct_link_fields(g) for g in reps]
    codes = np.concatenate(tables)
    code_cls = np.concatenate([np.full(len(t), c, dtype=np.int64) for c, t in enumerate(tables)])
    if len(codes) != total:
        raise RuntimeError("class tables do not partition the link fields")
    order = np.argsort(codes, kind="stable")
    codes, code_cls = codes[order], code_cls[order]
    hist = _fast.sweep_histogram(
        n, l, ws, implicit, codes, code_cls, len(reps),
        _fast.CEIL, _fast.FIN, _fast.FINX, _fast.GEQ,
    )
    if hist[0, 0] < 0:
        raise RuntimeError("link field missing from the class tables")
    out = {}
    for c, g in enumerate(reps):
        out[description_from_links(n, g.links)] = sum(
            int(cnt) << (cap - z) for z, cnt in enumerate(hist[c]) if cnt
        )
    return out
