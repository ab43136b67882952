"""Combinatorial model of convex drawings.

A convex drawing is fully described by its cyclic vertex order, so vertices
are identified with their positions ``0..n-1`` (counterclockwise) and no
coordinates are ever stored.  Two chords cross iff their endpoints are four
distinct vertices that interleave around the circle.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple

from . import kernels
from .errors import BoundViolationError, InvalidInputError

Edge = tuple[int, int]


def _arc_offset(a: int, t: int, n: int) -> int:
    """Counterclockwise distance from ``a`` to ``t``."""
    return (t - a) % n


def intertwined(a: int, b: int, c: int, d: int, n: int) -> bool:
    """True iff exactly one of ``c, d`` lies on the open ccw arc from ``a`` to ``b``."""
    if len({a, b, c, d}) != 4:
        raise InvalidInputError(f"intertwined needs four distinct vertices, got {(a, b, c, d)}")
    for v in (a, b, c, d):
        if not 0 <= v < n:
            raise InvalidInputError(f"vertex {v} outside [0, {n})")
    span = _arc_offset(a, b, n)
    inside_c = 0 < _arc_offset(a, c, n) < span
    inside_d = 0 < _arc_offset(a, d, n) < span
    return inside_c != inside_d


def chords_cross(e: Edge, f: Edge) -> bool:
    """Crossing test for normalized chords ``(a, b)``, ``a < b``.

    Shared endpoints never cross; no modulus needed once normalized.
    """
    a, b = e
    c, d = f
    return (a < c < b < d) or (c < a < d < b)


class Link(NamedTuple):
    """A side or a diagonal of the ``n``-gon.

    The orientation matters for :func:`piercing_edges`: the *right side* of
    ``Link(a, b)`` is the open ccw arc from ``a`` to ``b``.
    """

    a: int
    b: int

    def kind(self, n: int) -> str:
        return "outer" if (self.b - self.a) % n in (1, n - 1) else "inner"

    def normalized(self) -> Edge:
        return (self.a, self.b) if self.a < self.b else (self.b, self.a)


@dataclass(frozen=True)
class ConvexDrawing:
    """A graph drawn with its vertices on a circle in the order ``0..n-1``.

    ``edges`` is kept normalized (``i < j``) and sorted; build instances with
    :meth:`from_edges` to get that normalization for free.
    """

    n: int
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 0:
            raise InvalidInputError(f"vertex count must be a non-negative int, got {self.n!r}")
        seen = set()
        prev = None
        for e in self.edges:
            i, j = e
            if i == j:
                raise InvalidInputError(f"self-loop at vertex {i}")
            if not (0 <= i < j < self.n):
                raise InvalidInputError(f"edge {e} is not a normalized pair inside [0, {self.n})")
            if e in seen:
                raise InvalidInputError(f"duplicate edge {e}")
            if prev is not None and e < prev:
                raise InvalidInputError("edges must be sorted; use ConvexDrawing.from_edges")
            seen.add(e)
            prev = e

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Iterable[int]]) -> "ConvexDrawing":
        normalized = []
        seen = set()
        for pair in edges:
            i, j = (int(x) for x in pair)
            if i == j:
                raise InvalidInputError(f"self-loop at vertex {i}")
            for v in (i, j):
                if not 0 <= v < n:
                    raise InvalidInputError(f"vertex {v} outside [0, {n})")
            e = (i, j) if i < j else (j, i)
            if e in seen:
                raise InvalidInputError(f"duplicate edge {e}")
            seen.add(e)
            normalized.append(e)
        return cls(n, tuple(sorted(normalized)))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        return {e: idx for idx, e in enumerate(self.edges)}

    @cached_property
    def neighbors(self) -> list[list[int]]:
        """Sorted adjacency lists."""
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        for row in adj:
            row.sort()
        return adj

    @cached_property
    def crossings(self) -> list[list[int]]:
        """For each edge id, the ids of the edges crossing it (ascending)."""
        us = [e[0] for e in self.edges]
        vs = [e[1] for e in self.edges]
        ptr, idx = kernels.crossing_csr(self.n, us, vs)
        return [idx[ptr[e] : ptr[e + 1]] for e in range(self.m)]

    @cached_property
    def crossing_counts(self) -> list[int]:
        return [len(row) for row in self.crossings]

    def has_edge(self, i: int, j: int) -> bool:
        return ((i, j) if i < j else (j, i)) in self.edge_index

    def rotated(self, shift: int) -> "ConvexDrawing":
        """Same graph with every vertex moved ``shift`` positions ccw."""
        return ConvexDrawing.from_edges(
            self.n, (((i + shift) % self.n, (j + shift) % self.n) for i, j in self.edges)
        )


@dataclass(frozen=True)
class CrossingProfile:
    per_edge: dict[Edge, int]
    max_count: int
    min_k_ok_for: int


def crossing_profile(d: ConvexDrawing) -> CrossingProfile:
    """Per-edge crossing counts of the fixed drawing.

    ``max_count`` is the local crossing number of this drawing and
    ``min_k_ok_for`` the smallest ``k`` for which the drawing is outer
    min-``k``-planar (every crossing pair has a side crossed at most ``k``
    times).
    """
    counts = d.crossing_counts
    per_edge = dict(zip(d.edges, counts))
    max_count = max(counts, default=0)
    min_k = 0
    for e, row in enumerate(d.crossings):
        ce = counts[e]
        for f in row:
            if f > e:
                pair_min = min(ce, counts[f])
                if pair_min > min_k:
                    min_k = pair_min
    return CrossingProfile(per_edge=per_edge, max_count=max_count, min_k_ok_for=min_k)


def piercing_order_key(link: Link, edge: Edge, n: int) -> tuple[int, int]:
    """Sort key of a piercing edge in bottom-to-top order across ``link``.

    Piercing edges are ordered by their right endpoint along the right arc
    from ``link.a``; edges sharing a right endpoint are ordered by how close
    their left endpoint is to ``link.a`` walking clockwise, which is the
    order in which they meet the link once all their mutual crossings are
    pushed to the left side.
    """
    a, b = link
    span = _arc_offset(a, b, n)
    i, j = edge
    if 0 < _arc_offset(a, i, n) < span:
        right, left = i, j
    else:
        right, left = j, i
    return (_arc_offset(a, right, n), _arc_offset(left, a, n))


def piercing_edges(d: ConvexDrawing, link: Link | tuple[int, int]) -> list[Edge]:
    """Edges of ``d`` intertwined with ``link``, bottom-to-top."""
    link = Link(*link)
    a, b = link
    if a == b or not (0 <= a < d.n and 0 <= b < d.n):
        raise InvalidInputError(f"invalid link {tuple(link)} for n={d.n}")
    n = d.n
    span = _arc_offset(a, b, n)
    found = []
    for i, j in d.edges:
        if i in (a, b) or j in (a, b):
            continue
        if (0 < _arc_offset(a, i, n) < span) != (0 < _arc_offset(a, j, n) < span):
            found.append((i, j))
    found.sort(key=lambda e: piercing_order_key(link, e, n))
    return found


def augment_outer_cycle(d: ConvexDrawing) -> ConvexDrawing:
    """Add every missing polygon side ``{i, i+1 mod n}``.

    Polygon sides are never intertwined with anything, so no existing
    crossing count changes.
    """
    if d.n < 3:
        raise InvalidInputError(f"outer cycle needs n >= 3, got n={d.n}")
    present = d.edge_index
    missing = []
    for i in range(d.n):
        j = (i + 1) % d.n
        e = (i, j) if i < j else (j, i)
        if e not in present:
            missing.append(e)
    if not missing:
        return d
    return ConvexDrawing(d.n, tuple(sorted(d.edges + tuple(missing))))


def has_outer_cycle(d: ConvexDrawing) -> bool:
    return d.n >= 3 and all(d.has_edge(i, (i + 1) % d.n) for i in range(d.n))


def require_outer_k_planar(d: ConvexDrawing, k: int) -> None:
    """Raise :class:`BoundViolationError` naming the first edge crossed > k times."""
    for e, c in zip(d.edges, d.crossing_counts):
        if c > k:
            raise BoundViolationError(
                f"edge {list(e)} is crossed {c} times, drawing is not outer {k}-planar", witness=e
            )


def require_outer_min_k_planar(d: ConvexDrawing, k: int) -> None:
    """Raise :class:`BoundViolationError` naming a crossing pair of two heavy edges."""
    counts = d.crossing_counts
    for e, row in enumerate(d.crossings):
        if counts[e] <= k:
            continue
        for f in row:
            if counts[f] > k:
                pair = (d.edges[e], d.edges[f])
                raise BoundViolationError(
                    f"crossing edges {list(pair[0])} and {list(pair[1])} are both crossed more "
                    f"than {k} times, drawing is not outer min-{k}-planar",
                    witness=pair,
                )
