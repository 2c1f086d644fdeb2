"""Run-length compression of graph descriptions.

Stream layout: ``w`` ones, a ``0``, the node count in ``w`` bits, then a
sequence of blocks.  A block is a ``w``-bit repeat count ``c``, a ``w``-bit
period length ``p`` and ``p`` payload bits; its expansion is the payload
repeated ``c`` times.  Every ``w``-bit field holding all zeros stands for
``2**w``.  The last block may overrun the link field; the excess is dropped.

Two grammars are supported:

``explicit-len``
    every block carries its length field.  Decoding stops once the link field
    is full and the stream must then be exhausted.
``implicit-final-len``
    the last block omits its length field, which the decoder recovers as
    ``ceil(remaining / c)``.  After reading a count the decoder treats the
    block as final exactly when the bits left in the stream equal that value;
    other blocks must end strictly before the link field does.  The encoder
    never emits a non-final block that would be misread as final.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from . import _dp
from .codec import Description, as_description
from .graph_core import num_pairs


class Variant(str, enum.Enum):
    EXPLICIT = "explicit-len"
    IMPLICIT = "implicit-final-len"

    def __str__(self) -> str:
        return self.value


DEFAULT_VARIANT = Variant.IMPLICIT


def as_variant(v: Variant | str) -> Variant:
    try:
        return Variant(v)
    except ValueError:
        raise ValueError(
            f"unknown grammar variant {v!r}; expected one of "
            + ", ".join(x.value for x in Variant)
        ) from None


@dataclass(frozen=True)
class Block:
    count: int
    length: int
    payload: str
    final: bool = False


@dataclass(frozen=True)
class CompressedDescription:
    w: int
    bits: str
    variant: Variant

    def __len__(self) -> int:
        return len(self.bits)

    def __str__(self) -> str:
        return self.bits


def legal_wordsizes(n: int) -> list[int]:
    """Integer wordsizes with ``n <= 2**w <= n(n-1)/2``.

    When that range is empty (n <= 3) the smallest width able to hold ``n``
    is used instead, never less than 1.  ``n = 0`` has no encoding at all.
    """
    if n < 1:
        return []
    L = num_pairs(n)
    ws = [w for w in range(1, L.bit_length() + 1) if n <= (1 << w) <= L]
    if ws:
        return ws
    return [max(1, (n - 1).bit_length())]


def cap_length(n: int) -> int:
    """Uncompressed description length ``n(n+1)/2 + 1``."""
    return n * (n + 1) // 2 + 1


def _field(v: int, w: int) -> str:
    if not 1 <= v <= (1 << w):
        raise ValueError(f"value {v} does not fit a {w}-bit field")
    return format(v % (1 << w), f"0{w}b")


def _bits_array(link_bits: str) -> np.ndarray:
    return np.frombuffer(link_bits.encode("ascii"), dtype=np.uint8) - 48


def _block_cost(bits: np.ndarray, w: int, implicit: bool) -> tuple[int, np.ndarray]:
    """Exact minimal block cost and the suffix-cost sets that certify it."""
    R = int(_dp.relaxed_cost(bits, w, implicit))
    nwords = R // 64 + 2
    while True:
        sets = _dp.suffix_cost_sets(bits, w, implicit, nwords)
        t = int(_dp.lowest_cost(sets[0]))
        if t >= 0:
            return t, sets
        nwords *= 2


def _has(sets: np.ndarray, j: int, t: int) -> bool:
    if t < 0 or t >= 64 * sets.shape[1]:
        return False
    return bool((int(sets[j, t // 64]) >> (t % 64)) & 1)


def _periodic(s: str, i: int, end: int, p: int) -> bool:
    return all(s[t] == s[t + p] for t in range(i, end - p))


def _reconstruct(s: str, w: int, implicit: bool, sets: np.ndarray, total: int) -> list[Block]:
    L = len(s)
    W = 1 << w
    blocks: list[Block] = []
    i, T = 0, total
    while i < L:
        rem = L - i
        found = None
        if implicit:
            for c in range(W, 0, -1):
                p = -(-rem // c)
                if w + p == T and _periodic(s, i, L, p):
                    found = Block(c, p, s[i:i + p], True)
                    break
        else:
            for p in range(1, min(W, rem) + 1):
                if 2 * w + p == T and -(-rem // p) <= W and _periodic(s, i, L, p):
                    found = Block(-(-rem // p), p, s[i:i + p], True)
                    break
        if found is not None:
            blocks.append(found)
            return blocks
        for p in range(1, min(W, rem - 1) + 1):
            rest = T - 2 * w - p
            for c in range(1, W + 1):
                j = i + c * p
                if j >= L or not _periodic(s, i, j, p):
                    break
                if implicit and T - w == -(-rem // c):
                    continue
                if _has(sets, j, rest):
                    found = Block(c, p, s[i:i + p])
                    break
            if found is not None:
                break
        if found is None:  # pragma: no cover - the DP guarantees a parse
            raise RuntimeError("parse reconstruction failed")
        blocks.append(found)
        i += found.count * found.length
        T -= 2 * w + found.length
    return blocks


def _emit(n: int, w: int, blocks: list[Block], implicit: bool) -> str:
    out = ["1" * w, "0", _field(n, w)]
    for b in blocks:
        out.append(_field(b.count, w))
        if not (implicit and b.final):
            out.append(_field(b.length, w))
        out.append(b.payload)
    return "".join(out)


def compress(d: Description | str, w: int, variant: Variant | str = DEFAULT_VARIANT) -> CompressedDescription:
    """Shortest encoding of ``d`` with wordsize ``w`` under ``variant``."""
    d = as_description(d)
    v = as_variant(variant)
    legal = legal_wordsizes(d.n)
    if w not in legal:
        raise ValueError(f"wordsize {w} out of range for n={d.n}; legal: {legal}")
    implicit = v is Variant.IMPLICIT
    s = d.link_bits
    if not s:
        blocks: list[Block] = []
    else:
        cost, sets = _block_cost(_bits_array(s), w, implicit)
        blocks = _reconstruct(s, w, implicit, sets, cost)
    return CompressedDescription(w, _emit(d.n, w, blocks, implicit), v)


def block_cost(d: Description | str, w: int, variant: Variant | str = DEFAULT_VARIANT) -> int:
    """Length of the block stream alone (no header) in the optimal parse."""
    d = as_description(d)
    implicit = as_variant(variant) is Variant.IMPLICIT
    if not d.link_bits:
        return 0
    return _block_cost(_bits_array(d.link_bits), w, implicit)[0]


class _Reader:
    def __init__(self, bits: str):
        self.bits = bits
        self.pos = 0

    def left(self) -> int:
        return len(self.bits) - self.pos

    def take(self, k: int) -> str:
        if k > self.left():
            raise ValueError("compressed stream ends before the link field is filled")
        out = self.bits[self.pos:self.pos + k]
        self.pos += k
        return out

    def field(self, w: int) -> int:
        v = int(self.take(w), 2)
        return v if v else 1 << w


def decompress(c: CompressedDescription | str, variant: Variant | str | None = None) -> Description:
    """Invert :func:`compress`."""
    if isinstance(c, CompressedDescription):
        bits, v = c.bits, c.variant if variant is None else as_variant(variant)
    else:
        bits, v = str(c).replace(" ", ""), as_variant(variant or DEFAULT_VARIANT)
    if set(bits) - {"0", "1"}:
        raise ValueError("compressed stream must contain only 0 and 1")
    w = 0
    while w < len(bits) and bits[w] == "1":
        w += 1
    if w == 0 or w == len(bits):
        raise ValueError("malformed wordsize header")
    r = _Reader(bits)
    r.pos = w + 1
    n = r.field(w)
    L = num_pairs(n)
    out: list[str] = []
    filled = 0
    implicit = v is Variant.IMPLICIT
    while filled < L:
        cnt = r.field(w)
        rem = L - filled
        if implicit and r.left() == -(-rem // cnt):
            payload = r.take(r.left())
            out.append((payload * cnt)[:rem])
            filled = L
            break
        p = r.field(w)
        payload = r.take(p)
        chunk = payload * cnt
        if implicit and len(chunk) >= rem:
            raise ValueError("non-final block reaches the end of the link field")
        out.append(chunk[:rem])
        filled += min(len(chunk), rem)
    if r.left():
        raise ValueError(f"{r.left()} trailing bits after the link field")
    return Description("1" * n + "0" + "".join(out))


def zeta_by_wordsize(d: Description | str, variant: Variant | str = DEFAULT_VARIANT) -> dict[int, int]:
    d = as_description(d)
    return {w: 2 * w + 1 + block_cost(d, w, variant) for w in legal_wordsizes(d.n)}


def zeta(d: Description | str, variant: Variant | str = DEFAULT_VARIANT) -> float:
    """Compressed length using the best wordsize (``inf`` when n = 0)."""
    by_w = zeta_by_wordsize(d, variant)
    return min(by_w.values()) if by_w else math.inf


def best_compression(d: Description | str, variant: Variant | str = DEFAULT_VARIANT) -> CompressedDescription:
    d = as_description(d)
    by_w = zeta_by_wordsize(d, variant)
    if not by_w:
        raise ValueError("the 0-node description has no compressed form")
    w = min(by_w, key=lambda k: (by_w[k], k))
    return compress(d, w, variant)


def empty_full_closed_form(n: int) -> int:
    """Closed-form zcomplexity of the empty (or full) graph at ``w = ceil(log2 n)``."""
    if n < 2:
        raise ValueError("closed form needs n >= 2")
    w = (n - 1).bit_length()
    return 2 + 3 * w + -(-n * (n - 1) // (1 << (w + 1)))
