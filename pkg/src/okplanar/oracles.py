"""Exact exponential oracles for small graphs.

Each oracle returns an :class:`OracleResult` whose witness certifies the
value and can be re-checked in polynomial time with the ``check_*``
helpers.  Inputs above the size caps are refused with
:class:`OracleCapError`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterable

from .drawing import ConvexDrawing, Edge, chords_cross
from .errors import InvalidInputError, OracleCapError

TREEWIDTH_CAP = 14
SEPARATION_CAP = 14
LCR_CAP = 12


@dataclass(frozen=True)
class OracleResult:
    value: int
    witness: Any
    method: str


def _graph(g: ConvexDrawing | tuple[int, Iterable[Iterable[int]]]) -> ConvexDrawing:
    if isinstance(g, ConvexDrawing):
        return g
    n, edges = g
    return ConvexDrawing.from_edges(n, edges)


def _adjacency_masks(d: ConvexDrawing) -> list[int]:
    adj = [0] * d.n
    for i, j in d.edges:
        adj[i] |= 1 << j
        adj[j] |= 1 << i
    return adj


def _bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _cap(n: int, cap: int, what: str) -> None:
    if n > cap:
        raise OracleCapError(f"{what} oracle is capped at n = {cap}, got n = {n}")


# treewidth ----------------------------------------------------------------


def _eliminated_neighbors(adj: list[int], gone: int, v: int) -> int:
    """Neighbours of ``v`` once every vertex of ``gone`` has been eliminated."""
    seen = 1 << v
    frontier = 1 << v
    out = 0
    while frontier:
        reach = 0
        for x in _bits(frontier):
            reach |= adj[x]
        reach &= ~seen
        seen |= reach
        out |= reach & ~gone
        frontier = reach & gone
    return out


def elimination_width(d: ConvexDrawing, order: list[int]) -> int:
    """Width of the tree decomposition induced by an elimination order."""
    if sorted(order) != list(range(d.n)):
        raise InvalidInputError("elimination order must be a permutation of the vertices")
    adj = [set() for _ in range(d.n)]
    for i, j in d.edges:
        adj[i].add(j)
        adj[j].add(i)
    width = -1 if d.n == 0 else 0
    for v in order:
        nb = adj[v]
        width = max(width, len(nb))
        for x in nb:
            adj[x].discard(v)
            adj[x].update(nb - {x})
        adj[v] = set()
    return width


def _degeneracy_bound(adj: list[int], n: int) -> int:
    """Contraction-degeneracy style lower bound (min degree, contract into a min-degree neighbour)."""
    live = (1 << n) - 1
    g = list(adj)
    best = 0
    while live and bin(live).count("1") > 1:
        v = min(_bits(live), key=lambda x: (bin(g[x] & live).count("1"), x))
        deg = bin(g[v] & live).count("1")
        best = max(best, deg)
        nbrs = g[v] & live
        if nbrs:
            u = min(_bits(nbrs), key=lambda x: (bin(g[x] & live).count("1"), x))
            merged = (g[u] | g[v]) & ~(1 << u) & ~(1 << v)
            g[u] = merged
            for x in _bits(merged):
                g[x] |= 1 << u
        live &= ~(1 << v)
    return best


def _min_fill_order(adj: list[int], n: int) -> list[int]:
    g = list(adj)
    live = (1 << n) - 1
    order = []
    while live:
        def fill(v: int) -> tuple[int, int]:
            nb = list(_bits(g[v] & live))
            missing = sum(1 for i, a in enumerate(nb) for b in nb[i + 1:] if not (g[a] >> b) & 1)
            return (missing, v)

        v = min(_bits(live), key=fill)
        nb = g[v] & live
        for x in _bits(nb):
            g[x] |= nb & ~(1 << x)
        live &= ~(1 << v)
        order.append(v)
    return order


def brute_treewidth(g: ConvexDrawing | tuple[int, Iterable[Iterable[int]]]) -> OracleResult:
    """Exact treewidth by a memoized search over sets of eliminated vertices.

    For increasing ``t`` from a degeneracy lower bound, a depth-first search
    decides whether some elimination order has every eliminated vertex
    adjacent to at most ``t`` remaining vertices; failed sets are memoized.
    """
    d = _graph(g)
    _cap(d.n, TREEWIDTH_CAP, "treewidth")
    n = d.n
    if n == 0:
        return OracleResult(-1, [], "elimination-dp")
    adj = _adjacency_masks(d)
    full = (1 << n) - 1
    upper_order = _min_fill_order(adj, n)
    upper = elimination_width(d, upper_order)
    t = _degeneracy_bound(adj, n)
    while t < upper:
        order = _decide(adj, n, full, t)
        if order is not None:
            return OracleResult(t, order, "elimination-dp")
        t += 1
    return OracleResult(upper, upper_order, "elimination-dp")


def _decide(adj: list[int], n: int, full: int, t: int) -> list[int] | None:
    failed: set[int] = set()
    order: list[int] = []

    def search(gone: int) -> bool:
        rest = full & ~gone
        if bin(rest).count("1") <= t + 1:
            order.extend(_bits(rest))
            return True
        if gone in failed:
            return False
        options = []
        for v in _bits(rest):
            q = _eliminated_neighbors(adj, gone, v)
            size = bin(q).count("1")
            if size > t:
                continue
            # a vertex whose remaining neighbourhood is a clique can always go first
            if all((_eliminated_neighbors(adj, gone, x) | (1 << x)) & q == q for x in _bits(q)):
                options = [v]
                break
            options.append(v)
        for v in options:
            order.append(v)
            if search(gone | (1 << v)):
                return True
            order.pop()
        failed.add(gone)
        return False

    return list(order) if search(0) else None


def check_treewidth(d: ConvexDrawing, r: OracleResult) -> bool:
    return elimination_width(d, list(r.witness)) == r.value


# balanced separation ----------------------------------------------------


def _components(adj: list[int], live: int) -> list[int]:
    comps = []
    while live:
        start = live & -live
        comp = start
        frontier = start
        while frontier:
            reach = 0
            for x in _bits(frontier):
                reach |= adj[x]
            reach &= live & ~comp
            comp |= reach
            frontier = reach
        comps.append(comp)
        live &= ~comp
    return comps


def brute_min_balanced_separation(g: ConvexDrawing | tuple[int, Iterable[Iterable[int]]]) -> OracleResult:
    """Minimum order of a separation ``(A, B)`` with ``|A\\B|, |B\\A| <= 2n/3``.

    Separators ``X = A & B`` are enumerated by size; ``X`` works iff the
    components of ``G - X`` can be split into two groups of at most ``2n/3``
    vertices each (a subset-sum check).
    """
    from itertools import combinations

    d = _graph(g)
    _cap(d.n, SEPARATION_CAP, "balanced separation")
    n = d.n
    adj = _adjacency_masks(d)
    full = (1 << n) - 1
    limit = 2 * n // 3
    for size in range(n + 1):
        for sep in combinations(range(n), size):
            xmask = sum(1 << v for v in sep)
            comps = _components(adj, full & ~xmask)
            sizes = [bin(c).count("1") for c in comps]
            rest = n - size
            # reachable subset sums with a backpointer to recover the grouping
            reach = {0: ()}
            for idx, s in enumerate(sizes):
                for total, picked in list(reach.items()):
                    if total + s not in reach:
                        reach[total + s] = picked + (idx,)
            for total in sorted(reach):
                if total <= limit and rest - total <= limit:
                    group = reach[total]
                    a_only = 0
                    for idx in group:
                        a_only |= comps[idx]
                    b_only = full & ~xmask & ~a_only
                    a = sorted(_bits(a_only | xmask))
                    b = sorted(_bits(b_only | xmask))
                    return OracleResult(size, (tuple(a), tuple(b)), "separator-enumeration")
    raise AssertionError("the full vertex set always separates")


def check_separation(d: ConvexDrawing, r: OracleResult) -> bool:
    from .separation import Separation, validate_separation

    a, b = r.witness
    report = validate_separation(d, Separation(tuple(a), tuple(b), d.n))
    return report.ok and report.balanced and report.order == r.value


# convex local crossing number ---------------------------------------------


def drawing_in_order(d: ConvexDrawing, order: list[int]) -> ConvexDrawing:
    """``d`` redrawn with vertex ``order[p]`` at circle position ``p``."""
    pos = {v: p for p, v in enumerate(order)}
    return ConvexDrawing.from_edges(d.n, ((pos[i], pos[j]) for i, j in d.edges))


def _max_crossings(n: int, edges: list[Edge]) -> int:
    counts = [0] * len(edges)
    for x in range(len(edges)):
        for y in range(x + 1, len(edges)):
            if chords_cross(edges[x], edges[y]):
                counts[x] += 1
                counts[y] += 1
    return max(counts, default=0)


def brute_convex_lcr(g: ConvexDrawing | tuple[int, Iterable[Iterable[int]]]) -> OracleResult:
    """Smallest maximum per-edge crossing count over all circular vertex orders.

    Branch and bound over placements: vertex 0 sits at position 0 (rotation)
    and the vertex at position 1 must be smaller than the one at the last
    position (reflection).  A chord crosses every completed chord that
    strictly contains its first endpoint, and every completed chord is
    certain to be crossed by each pending edge leaving a vertex inside it.
    """
    d = _graph(g)
    _cap(d.n, LCR_CAP, "convex local crossing number")
    n = d.n
    if n < 4 or not d.edges:
        return OracleResult(0, list(range(n)), "branch-and-bound")
    nbrs = d.neighbors
    deg = [len(x) for x in nbrs]
    best_order = list(range(n))
    best = _max_crossings(n, list(d.edges))

    pos = [-1] * n
    order: list[int] = []
    chords: list[list[int]] = []  # [left pos, right pos, count]
    pending = [0] * n  # per position: edges still open at that vertex

    def forced_ok(limit: int) -> bool:
        for c in chords:
            extra = 0
            for p in range(c[0] + 1, c[1]):
                extra += pending[p]
            if c[2] + extra > limit:
                return False
        return True

    def place(depth: int) -> None:
        nonlocal best, best_order
        if depth == n:
            if order[1] < order[-1]:
                best = max(c[2] for c in chords) if chords else 0
                best_order = list(order)
            return
        limit = best - 1
        cands = [v for v in range(n) if pos[v] < 0]
        cands.sort(key=lambda v: (-sum(1 for y in nbrs[v] if pos[y] >= 0), -deg[v], v))
        for v in cands:
            added = []
            ok = True
            pos[v] = depth
            order.append(v)
            placed_nbrs = sorted(pos[y] for y in nbrs[v] if pos[y] >= 0)
            before = len(chords)  # chords at v share an endpoint and never cross
            for q in placed_nbrs:
                new = [q, depth, 0]
                for c in chords[:before]:
                    if c[0] < q < c[1]:
                        c[2] += 1
                        new[2] += 1
                        added.append(c)
                        if c[2] > limit:
                            ok = False
                if new[2] > limit:
                    ok = False
                chords.append(new)
                pending[q] -= 1
            pending[depth] = deg[v] - len(placed_nbrs)
            # reflection: the last vertex must exceed the one at position 1
            if ok and depth >= 2 and max((x for x in cands if x != v), default=n) < order[1]:
                ok = False
            if ok and forced_ok(limit):
                place(depth + 1)
                limit = best - 1
            pending[depth] = 0
            for q in placed_nbrs:
                pending[q] += 1
                chords.pop()
            for c in added:
                c[2] -= 1
            order.pop()
            pos[v] = -1
            if best == 0:
                return

    pos[0] = 0
    order.append(0)
    pending[0] = deg[0]
    place(1)
    return OracleResult(best, best_order, "branch-and-bound")


def check_convex_lcr(d: ConvexDrawing, r: OracleResult) -> bool:
    redrawn = drawing_in_order(d, list(r.witness))
    return max(redrawn.crossing_counts, default=0) == r.value
