"""Instance generators: stacked prisms and random greedy drawings."""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .drawing import ConvexDrawing, Edge
from .errors import InvalidInputError

# below this size the greedy generators use precomputed crossing bitsets
BITSET_MAX_N = 96


@dataclass(frozen=True)
class StackedPrismSpec:
    m: int  # rows, even
    n: int  # columns

    def __post_init__(self) -> None:
        if self.m < 2 or self.m % 2:
            raise InvalidInputError(f"stacked prism needs an even number of rows >= 2, got m={self.m}")
        if self.n < 1:
            raise InvalidInputError(f"stacked prism needs n >= 1 columns, got n={self.n}")


def prism_position(spec: StackedPrismSpec, row: int, col: int) -> int:
    """Circular position of grid vertex ``(row, col)``: rows laid out back and forth."""
    return row * spec.n + (col if row % 2 == 0 else spec.n - 1 - col)


def stacked_prism(spec: StackedPrismSpec | tuple[int, int]) -> ConvexDrawing:
    """``Y_{m,n}``: the ``m x n`` grid plus an edge from top to bottom row in every column.

    Rows are placed around the circle one after another, alternating their
    direction, so row edges run along the circle and never cross.
    """
    if not isinstance(spec, StackedPrismSpec):
        spec = StackedPrismSpec(*spec)
    m, n = spec.m, spec.n
    edges: set[Edge] = set()

    def add(p: int, q: int) -> None:
        edges.add((p, q) if p < q else (q, p))

    for r in range(m):
        for c in range(n):
            here = prism_position(spec, r, c)
            if c + 1 < n:
                add(here, prism_position(spec, r, c + 1))
            if r + 1 < m:
                add(here, prism_position(spec, r + 1, c))
    for c in range(n):
        add(prism_position(spec, 0, c), prism_position(spec, m - 1, c))
    return ConvexDrawing(m * n, tuple(sorted(edges)))


def prism_row_edges(spec: StackedPrismSpec | tuple[int, int]) -> list[Edge]:
    if not isinstance(spec, StackedPrismSpec):
        spec = StackedPrismSpec(*spec)
    out = []
    for r in range(spec.m):
        for c in range(spec.n - 1):
            p, q = prism_position(spec, r, c), prism_position(spec, r, c + 1)
            out.append((min(p, q), max(p, q)))
    return out


def _candidates(n: int, max_span: int | None) -> list[Edge]:
    """Non-polygon chords in canonical order, optionally limited in cyclic span."""
    limit = n // 2 if max_span is None else min(max_span, n // 2)
    out = set()
    for i in range(n):
        for s in range(2, limit + 1):
            j = (i + s) % n
            out.add((i, j) if i < j else (j, i))
    return sorted(out)


def _outer_cycle(n: int) -> list[Edge]:
    return sorted({(min(i, (i + 1) % n), max(i, (i + 1) % n)) for i in range(n)})


@lru_cache(maxsize=128)
def _pair_table(n: int) -> tuple[dict[Edge, int], list[Edge], tuple[int, ...]]:
    """All vertex pairs of an ``n``-gon with a crossing bitmask per pair."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    index = {p: t for t, p in enumerate(pairs)}
    a = np.array([p[0] for p in pairs], dtype=np.int64)
    b = np.array([p[1] for p in pairs], dtype=np.int64)
    masks = []
    for i, j in pairs:
        hit = ((i < a) & (a < j) & (j < b)) | ((a < i) & (i < b) & (b < j))
        bits = np.packbits(hit[::-1].astype(np.uint8))
        value = int.from_bytes(bits.tobytes(), "big") >> (8 * len(bits) - len(pairs))
        masks.append(value)
    return index, pairs, tuple(masks)


def random_outer_k_planar(n: int, k: int, seed: int, max_span: int | None = None) -> ConvexDrawing:
    """Outer cycle plus greedily accepted random chords, every edge crossed at most ``k`` times.

    Candidate chords (all non-polygon pairs, or those of cyclic span at most
    ``max_span``) are shuffled with ``random.Random(seed)`` and each is kept
    iff no crossing count exceeds ``k`` afterwards.  Deterministic per
    ``(n, k, seed, max_span)``.
    """
    if n < 3:
        raise InvalidInputError(f"random drawings need n >= 3, got n={n}")
    if k < 0:
        raise InvalidInputError(f"k must be non-negative, got {k}")
    cands = _candidates(n, max_span)
    random.Random(seed).shuffle(cands)
    if n <= BITSET_MAX_N:
        chosen = _greedy_bitset(n, k, cands)
    else:
        chosen = _greedy_local(n, k, cands)
    return ConvexDrawing(n, tuple(sorted(chosen)))


def _greedy_bitset(n: int, k: int, cands: list[Edge]) -> list[Edge]:
    index, pairs, masks = _pair_table(n)
    present = 0
    for e in _outer_cycle(n):
        present |= 1 << index[e]
    saturated = 0
    counts: dict[int, int] = {}
    for e in cands:
        p = index[e]
        hits = masks[p] & present
        c = hits.bit_count()
        if c > k or hits & saturated:
            continue
        present |= 1 << p
        counts[p] = c
        if c == k:
            saturated |= 1 << p
        while hits:
            low = hits & -hits
            f = low.bit_length() - 1
            hits ^= low
            counts[f] = counts.get(f, 0) + 1
            if counts[f] == k:
                saturated |= low
    chosen = []
    t = 0
    while present:
        if present & 1:
            chosen.append(pairs[t])
        present >>= 1
        t += 1
    return chosen


def _crossers_local(n: int, a: int, b: int, adj: list[set[int]]) -> list[Edge]:
    """Present edges crossing chord ``(a, b)``, scanning the shorter side."""
    inside = b - a - 1
    out = []
    if inside <= n - inside - 2:
        for t in range(a + 1, b):
            for z in adj[t]:
                if z < a or z > b:
                    out.append((t, z) if t < z else (z, t))
    else:
        for t in list(range(b + 1, n)) + list(range(0, a)):
            for z in adj[t]:
                if a < z < b:
                    out.append((t, z) if t < z else (z, t))
    return out


def _greedy_local(n: int, k: int, cands: list[Edge]) -> list[Edge]:
    adj: list[set[int]] = [set() for _ in range(n)]
    counts: dict[Edge, int] = {}
    for i, j in _outer_cycle(n):
        adj[i].add(j)
        adj[j].add(i)
        counts[(i, j)] = 0
    for e in cands:
        a, b = e
        hits = _crossers_local(n, a, b, adj)
        if len(hits) > k or any(counts[f] >= k for f in hits):
            continue
        adj[a].add(b)
        adj[b].add(a)
        counts[e] = len(hits)
        for f in hits:
            counts[f] += 1
    return list(counts)


def planted_heavy_edge(n: int, k: int) -> list[Edge] | None:
    """A chord crossed ``k + 1`` times by pairwise non-crossing chords, if ``n`` allows it."""
    h = k + 2
    if h + k + 1 > n - 1:
        return None
    return [(0, h)] + [(h - i, h + i) for i in range(1, k + 2)]


def random_outer_min_k_planar(n: int, k: int, seed: int, plant_heavy: bool = True) -> ConvexDrawing:
    """Greedy random outer min-``k``-planar drawing.

    With ``plant_heavy`` (and ``n >= 2k + 4``) the drawing starts from a
    chord crossed ``k + 1`` times, so it contains at least one heavy edge.
    Random chords are then kept iff no two crossing edges both exceed ``k``
    crossings.
    """
    if n < 3 or n > BITSET_MAX_N:
        raise InvalidInputError(f"min-k generator supports 3 <= n <= {BITSET_MAX_N}, got n={n}")
    if k < 1:
        raise InvalidInputError(f"min-k generator needs k >= 1, got k={k}")
    index, pairs, masks = _pair_table(n)
    present = 0
    for e in _outer_cycle(n):
        present |= 1 << index[e]
    counts = [0] * len(pairs)
    heavy = 0

    def try_add(p: int) -> bool:
        nonlocal present, heavy
        hits = masks[p] & present
        c = hits.bit_count()
        grown = []
        h = hits
        while h:
            low = h & -h
            f = low.bit_length() - 1
            h ^= low
            if counts[f] + 1 > k and not (heavy >> f) & 1:
                grown.append(f)
        new_heavy = heavy
        for f in grown:
            new_heavy |= 1 << f
        if c > k:
            new_heavy |= 1 << p
        new_present = present | (1 << p)
        check = list(grown) + ([p] if c > k else [])
        for g in check:
            if masks[g] & new_present & new_heavy:
                return False
        present = new_present
        heavy = new_heavy
        counts[p] = c
        h = hits
        while h:
            low = h & -h
            counts[low.bit_length() - 1] += 1
            h ^= low
        return True

    rng = random.Random(seed)
    if plant_heavy:
        planted = planted_heavy_edge(n, k)
        for e in planted or []:
            if not (present >> index[e]) & 1:
                try_add(index[e])
    cands = _candidates(n, None)
    rng.shuffle(cands)
    for e in cands:
        p = index[e]
        if (present >> p) & 1:
            continue
        try_add(p)
    chosen = [pairs[t] for t in range(len(pairs)) if (present >> t) & 1]
    return ConvexDrawing(n, tuple(chosen))
