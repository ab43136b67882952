"""Splitting procedures that triangulate the outer cycle of a convex drawing.

All four procedures share one loop.  An *active link* ``(u, v)`` with
``u < v`` owns the right side ``u+1 .. v-1``; each step picks a split vertex
``w`` on that side, emits the face ``(u, w, v)`` and activates ``(u, w)`` and
``(w, v)``.  The piercing edges of every active link are carried along, and
the piercing edges of a new link are found among the edges crossing the
guide edges the step used, so a whole run touches ``O(nk)`` edges.

Geometric notions ("first crossing on the middle edge", "crossings of the
helper edge on either side of that point") are evaluated in one fixed
realization of the pushed drawing: the right side sits on the parabola
``y = t**2`` at integer abscissae ``t = position - u``, and every left-side
vertex sits at the parabola's point at infinity, perturbed so that vertices
closer to ``v`` tilt their edges further toward ``v``.  Parabola plus point
at infinity is projectively a circle, so this is a genuine convex drawing,
and all crossing comparisons reduce to exact integer arithmetic.
"""

from __future__ import annotations

import gc
from bisect import bisect_left
from contextlib import contextmanager
from dataclasses import dataclass, field

from . import kernels
from .drawing import (
    ConvexDrawing,
    Edge,
    Link,
    augment_outer_cycle,
    piercing_edges,
    require_outer_k_planar,
    require_outer_min_k_planar,
)
from .errors import CertificateError, InvalidInputError

Face = tuple[int, int, int]

NO_PIERCING = "no-piercing"
MIDDLE_ENDPOINT = "middle-endpoint"
DISJOINT = "disjoint-ê"
SHARES_U = "shares-u"
SHARES_V = "shares-v"
HEAVY_FIRST = "heavy-first-case"
HEAVY_SECOND = "heavy-second-case"

CASE_TAGS = (NO_PIERCING, MIDDLE_ENDPOINT, DISJOINT, SHARES_U, SHARES_V, HEAVY_FIRST, HEAVY_SECOND)

METHODS = ("weak", "strong", "o2p", "min")


@dataclass(frozen=True)
class SplitRecord:
    active_link: Edge
    case_tag: str
    split_vertex: int
    new_links: tuple[Edge, Edge]
    piercing: tuple[int, int]
    active_piercing: int


@dataclass(frozen=True)
class Triangulation:
    """A triangulated ``n``-gon together with piercing data of its source drawing.

    ``piercers`` maps every inner link to its piercing edges in bottom-to-top
    order (right side = the open interval between the link's endpoints).
    """

    n: int
    inner_links: tuple[Edge, ...]
    faces: tuple[Face, ...]
    edge_piercing: dict[Edge, int]
    triangle_piercing: dict[Face, int]
    piercers: dict[Edge, tuple[Edge, ...]] = field(repr=False)
    method: str = "strong"
    k: int = 0

    @property
    def edge_pn(self) -> int:
        return max(self.edge_piercing.values(), default=0)

    @property
    def triangle_pn(self) -> int:
        return max(self.triangle_piercing.values(), default=0)

    def link_piercing(self, a: int, b: int) -> int:
        key = (a, b) if a < b else (b, a)
        return self.edge_piercing[key]


def piercing_stats(t: Triangulation) -> tuple[int, int]:
    """``(edge piercing number, triangle piercing number)``."""
    return t.edge_pn, t.triangle_pn


def face_sides(face: Face) -> tuple[Edge, Edge, Edge]:
    a, b, c = face
    return ((a, b), (b, c), (a, c))


def _bound_for(method: str, k: int) -> int:
    if method == "strong":
        return k
    if method == "o2p":
        return 2
    return max(2 * k - 1, 0)


def triangulate_weak(d: ConvexDrawing, k: int) -> tuple[Triangulation, list[SplitRecord]]:
    """Middle-edge splitting; every link is pierced at most ``2k - 1`` times."""
    return _triangulate(d, k, "weak")


def triangulate_strong(d: ConvexDrawing, k: int) -> tuple[Triangulation, list[SplitRecord]]:
    """Refined splitting; every link pierced at most ``k`` times.

    For odd ``k`` every face additionally has piercing number at most ``3k - 1``.
    """
    return _triangulate(d, k, "strong")


def triangulate_o2p(d: ConvexDrawing) -> tuple[Triangulation, list[SplitRecord]]:
    """Outer 2-planar variant: links pierced at most twice, faces at most 4 times."""
    return _triangulate(d, 2, "o2p")


def triangulate_min(d: ConvexDrawing, k: int) -> tuple[Triangulation, list[SplitRecord]]:
    """Outer min-``k``-planar variant; heavy edges are never used as guides."""
    return _triangulate(d, k, "min")


def triangulate(d: ConvexDrawing, k: int, method: str = "strong") -> tuple[Triangulation, list[SplitRecord]]:
    if method not in METHODS:
        raise InvalidInputError(f"unknown method {method!r}; choose one of {METHODS}")
    return _triangulate(d, k, method)


def _prepare(d: ConvexDrawing, k: int, method: str) -> ConvexDrawing:
    if d.n < 3:
        raise InvalidInputError(f"triangulation needs n >= 3, got n={d.n}")
    if k < 0:
        raise InvalidInputError(f"k must be non-negative, got {k}")
    d = augment_outer_cycle(d)
    if method == "min":
        require_outer_min_k_planar(d, k)
    else:
        require_outer_k_planar(d, 2 if method == "o2p" else k)
    return d


@contextmanager
def _gc_paused():
    # the build allocates millions of small acyclic objects; cyclic collection only adds overhead
    was = gc.isenabled()
    gc.disable()
    try:
        yield
    finally:
        if was:
            gc.enable()


def _triangulate(d: ConvexDrawing, k: int, method: str) -> tuple[Triangulation, list[SplitRecord]]:
    with _gc_paused():
        return _triangulate_impl(d, k, method)


def _triangulate_impl(d: ConvexDrawing, k: int, method: str) -> tuple[Triangulation, list[SplitRecord]]:
    d = _prepare(d, k, method)
    n = d.n
    edges = d.edges
    eid = d.edge_index
    crossing = d.crossings
    counts = d.crossing_counts
    nbrs = d.neighbors
    bound = _bound_for(method, k)
    flt = kernels.piercing_filter(n, [e[0] for e in edges], [e[1] for e in edges])

    faces: list[Face] = []
    piercers: dict[Edge, tuple[int, ...]] = {}
    trace: list[SplitRecord] = []

    # stack of (u, v, piercing edge ids in bottom-to-top order)
    stack: list[tuple[int, int, list[int]]] = [(0, n - 1, [])]
    while stack:
        u, v, pierce = stack.pop()
        ell = len(pierce)
        if ell == 0:
            row = nbrs[u]
            w = row[bisect_left(row, v) - 1]
            guide = eid[(u, w)]
            cands = crossing[guide]
            tag = NO_PIERCING
            if method == "min" and counts[guide] > k:
                hat = _first_crossing_from_u(u, w, crossing[guide], edges)
                w = edges[hat][0]
                cands = crossing[guide] + crossing[hat]
                tag = HEAVY_FIRST
        else:
            ej = pierce[(ell + 2) // 2 - 1]
            a, b = edges[ej]
            if u < a < v:
                wj, lj = a, b
            else:
                wj, lj = b, a
            w = wj
            tag = MIDDLE_ENDPOINT
            cands = pierce + crossing[ej]
            if method in ("strong", "o2p") or (method == "min" and counts[ej] > k):
                hat = _first_right_crossing(u, v, wj, crossing[ej], edges)
                if hat is not None:
                    p, q = edges[hat]
                    cands = cands + crossing[hat]
                    if p == u:
                        w, tag = q, SHARES_U
                    elif q == v:
                        w, tag = (wj if method == "o2p" else p), SHARES_V
                    else:
                        w = _lighter_endpoint(n, u, v, wj, lj, ej, hat, crossing[hat], edges)
                        tag = DISJOINT
                    if method == "min":
                        tag = HEAVY_SECOND

        if not u < w < v:
            raise CertificateError(
                f"split vertex {w} outside the right side of ({u}, {v})",
                {"active_link": (u, v), "case": tag},
            )
        faces.append((u, w, v))
        new_counts = []
        children = []
        for x, y in ((u, w), (w, v)):
            if y - x < 2:
                new_counts.append(0)
                continue
            sub = flt(x, y, cands)
            if len(sub) > bound:
                raise CertificateError(
                    f"{method} split of ({u}, {v}) at {w} left link ({x}, {y}) pierced "
                    f"{len(sub)} > {bound} times",
                    {"active_link": (u, v), "case": tag, "link": (x, y),
                     "piercing": [edges[e] for e in sub]},
                )
            piercers[(x, y)] = tuple(sub)
            new_counts.append(len(sub))
            children.append((x, y, sub))
        trace.append(SplitRecord((u, v), tag, w, ((u, w), (w, v)), tuple(new_counts), ell))
        for child in reversed(children):
            stack.append(child)

    t = _assemble(n, faces, {l: tuple(edges[e] for e in ids) for l, ids in piercers.items()}, method, k)
    _certify(t, method, k)
    return t, trace


def _first_right_crossing(u: int, v: int, wj: int, row: list[int], edges) -> int | None:
    """The edge whose crossing with the middle edge is closest to the active link.

    Candidates are the edges crossing the middle edge with both endpoints on
    the closed right arc.  In the parabola realization such an edge
    ``(p, q)`` meets the middle edge at height ``(wj - p) * (q - wj)`` above
    ``wj`` with ties resolved by slope ``p + q``; the highest one is met first
    when walking from the link toward ``wj``.
    """
    best = None
    best_key = None
    for f in row:
        p, q = edges[f]
        if p < u or q > v or (p == u and q == v):
            continue
        key = ((wj - p) * (q - wj), p + q)
        if best_key is None or key > best_key:
            best, best_key = f, key
    return best


def _lighter_endpoint(n: int, u: int, v: int, wj: int, lj: int, ej: int, hat: int, row: list[int], edges) -> int:
    """Endpoint of the helper edge on the side of its crossing with fewer crossings.

    Crossings of the helper edge ``(p, q)`` are classified as lying on the
    ``p`` or ``q`` side of the point where the middle edge crosses it.  That
    point sits infinitesimally to the ``q`` side of abscissa ``wj``.
    """
    p, q = edges[hat]
    lp, lq, lw = p - u, q - u, wj - u
    p_side = q_side = 0
    dist_lj = (u - lj) % n
    for g in row:
        if g == ej:
            continue
        g1, g2 = edges[g]
        if u <= g1 and g2 <= v:
            a, b = g1 - u, g2 - u
            num = lp * lq - a * b
            den = lp + lq - a - b
            on_p = num <= lw * den if den > 0 else num >= lw * den
        else:
            # a piercing edge: near-vertical ray above its right endpoint
            r, left = (g1, g2) if p < g1 < q else (g2, g1)
            if r != wj:
                on_p = r < wj
            else:
                on_p = (u - left) % n < dist_lj
        if on_p:
            p_side += 1
        else:
            q_side += 1
    return p if p_side <= q_side else q


def _first_crossing_from_u(u: int, w: int, row: list[int], edges) -> int:
    """Crossing of the chord ``(u, w)`` closest to ``u`` (parabola realization).

    Every edge crossing ``(u, w)`` here is a chord ``(a, b)`` with
    ``u < a < w < b``; it meets ``(u, w)`` at abscissa ``ab / (a + b - w)``
    in local coordinates.  Concurrent crossings are resolved toward the
    smallest ``a``, whose ray into the cap is angularly closest to ``u``.
    """
    best = None
    best_num = best_den = 0
    lw = w - u
    for f in row:
        a, b = edges[f]
        la, lb = a - u, b - u
        num, den = la * lb, la + lb - lw
        if best is None:
            best, best_num, best_den = f, num, den
            continue
        lhs, rhs = num * best_den, best_num * den
        if lhs < rhs or (lhs == rhs and a < edges[best][0]):
            best, best_num, best_den = f, num, den
    return best


def _assemble(n: int, faces: list[Face], piercers: dict[Edge, tuple[Edge, ...]], method: str, k: int) -> Triangulation:
    inner = tuple(sorted({l for f in faces for l in face_sides(f) if l[1] - l[0] not in (1, n - 1)}))
    edge_piercing: dict[Edge, int] = {}
    for i in range(n):
        j = (i + 1) % n
        edge_piercing[(i, j) if i < j else (j, i)] = 0
    for link in inner:
        edge_piercing[link] = len(piercers.get(link, ()))
    full_piercers = {link: piercers.get(link, ()) for link in inner}
    sorted_faces = tuple(sorted(faces))
    triangle_piercing = {f: sum(edge_piercing[s] for s in face_sides(f)) for f in sorted_faces}
    return Triangulation(
        n=n,
        inner_links=inner,
        faces=sorted_faces,
        edge_piercing=edge_piercing,
        triangle_piercing=triangle_piercing,
        piercers=full_piercers,
        method=method,
        k=k,
    )


def _certify(t: Triangulation, method: str, k: int) -> None:
    problems = structural_problems(t)
    if problems:
        raise CertificateError(f"{method} produced an invalid triangulation: {problems[0]}",
                               {"problems": problems})
    if method == "strong" and k % 2 == 1 and t.triangle_pn > 3 * k - 1:
        face = max(t.triangle_piercing, key=t.triangle_piercing.get)
        raise CertificateError(
            f"face {face} has piercing number {t.triangle_piercing[face]} > 3k-1 = {3 * k - 1}",
            {"face": face},
        )
    if method == "o2p" and t.triangle_pn > 4:
        face = max(t.triangle_piercing, key=t.triangle_piercing.get)
        raise CertificateError(
            f"face {face} has piercing number {t.triangle_piercing[face]} > 4", {"face": face}
        )
    if method == "min" and t.triangle_pn > max(6 * k - 3, 0):
        face = max(t.triangle_piercing, key=t.triangle_piercing.get)
        raise CertificateError(
            f"face {face} has piercing number {t.triangle_piercing[face]} > 6k-3", {"face": face}
        )


def structural_problems(t: Triangulation) -> list[str]:
    """Cheap structural check: ``n - 3`` pairwise non-crossing inner links, ``n - 2`` faces
    whose sides are all links.

    Non-crossing is verified with a nesting stack in ``O(n log n)``.
    """
    n = t.n
    problems = []
    if len(t.inner_links) != n - 3:
        problems.append(f"expected {n - 3} inner links, got {len(t.inner_links)}")
    if len(t.faces) != n - 2:
        problems.append(f"expected {n - 2} faces, got {len(t.faces)}")
    links = set(t.inner_links)
    for a, b in t.inner_links:
        if not 0 <= a < b < n or b - a in (1, n - 1):
            problems.append(f"({a}, {b}) is not an inner link")
    open_stack: list[int] = []
    for a, b in sorted(t.inner_links, key=lambda l: (l[0], -l[1])):
        while open_stack and open_stack[-1] <= a:
            open_stack.pop()
        if open_stack and b > open_stack[-1]:
            problems.append(f"link ({a}, {b}) crosses another inner link")
            break
        open_stack.append(b)
    for f in t.faces:
        for a, b in face_sides(f):
            if (a, b) not in links and b - a not in (1, n - 1):
                problems.append(f"side ({a}, {b}) of face {f} is not a link")
    return problems


def replay(n: int, trace: list[SplitRecord]) -> tuple[tuple[Edge, ...], tuple[Face, ...]]:
    """Rebuild inner links and faces from a split trace alone."""
    faces = []
    inner = set()
    active = {(0, n - 1)} if n >= 3 else set()
    for rec in trace:
        u, v = rec.active_link
        if (u, v) not in active:
            raise InvalidInputError(f"trace activates ({u}, {v}) before it exists")
        active.discard((u, v))
        w = rec.split_vertex
        faces.append((u, w, v))
        for x, y in ((u, w), (w, v)):
            if y - x >= 2:
                inner.add((x, y))
                active.add((x, y))
    return tuple(sorted(inner)), tuple(sorted(faces))


def triangulation_from_links(d: ConvexDrawing, inner_links, method: str = "given", k: int = 0) -> Triangulation:
    """Triangulation with the given inner links, piercing data computed from ``d``.

    Faces are recovered by walking from the link ``(0, n-1)``: the face on
    the inner side of ``(u, v)`` has apex the largest link neighbour of
    ``u`` below ``v``.
    """
    n = d.n
    if n < 3:
        raise InvalidInputError(f"triangulation needs n >= 3, got n={n}")
    d = augment_outer_cycle(d)
    links = sorted({(min(a, b), max(a, b)) for a, b in inner_links})
    if len(links) != n - 3:
        raise InvalidInputError(f"expected {n - 3} inner links, got {len(links)}")
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for i in range(n):
        j = (i + 1) % n
        nbrs[i].append(j)
        nbrs[j].append(i)
    for a, b in links:
        if not 0 <= a < b < n or b - a in (1, n - 1):
            raise InvalidInputError(f"({a}, {b}) is not an inner link of the {n}-gon")
        nbrs[a].append(b)
        nbrs[b].append(a)
    for row in nbrs:
        row.sort()
    faces = []
    stack = [(0, n - 1)]
    while stack:
        u, v = stack.pop()
        row = nbrs[u]
        w = row[bisect_left(row, v) - 1]
        if not u < w < v or v not in nbrs[w]:
            raise InvalidInputError(f"links do not triangulate the polygon near ({u}, {v})")
        faces.append((u, w, v))
        for x, y in ((u, w), (w, v)):
            if y - x >= 2:
                stack.append((x, y))
    if len(faces) != n - 2:
        raise InvalidInputError("links do not triangulate the polygon")
    piercers = {link: tuple(piercing_edges(d, Link(*link))) for link in links}
    t = _assemble(n, faces, piercers, method, k)
    problems = structural_problems(t)
    if problems:
        raise InvalidInputError(problems[0])
    return t
