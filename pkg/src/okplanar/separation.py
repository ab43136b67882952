"""Balanced separations from the centroid face of a triangulation."""

from __future__ import annotations

from dataclasses import dataclass

from .decomposition import weak_dual
from .drawing import ConvexDrawing, Edge, augment_outer_cycle
from .errors import CertificateError, InvalidInputError
from .triangulation import Face, Triangulation


@dataclass(frozen=True)
class Separation:
    A: tuple[int, ...]
    B: tuple[int, ...]
    n: int
    face: Face | None = None
    link: Edge | None = None

    @property
    def order(self) -> int:
        return len(set(self.A) & set(self.B))

    @property
    def sides(self) -> tuple[int, int]:
        a, b = set(self.A), set(self.B)
        return len(a - b), len(b - a)

    @property
    def balance(self) -> float:
        return max(self.sides) / self.n if self.n else 0.0


def centroid_triangle(t: Triangulation) -> Face:
    """Face whose removal splits the weak dual into parts of at most ``(n-2)//2`` faces."""
    dual = weak_dual(t)
    total = len(dual.faces)
    adj = dual.adjacency
    order = []
    parent = {0: -1}
    stack = [0]
    while stack:
        f = stack.pop()
        order.append(f)
        for g, _ in adj[f]:
            if g not in parent:
                parent[g] = f
                stack.append(g)
    size = [1] * total
    for f in reversed(order):
        if parent[f] >= 0:
            size[parent[f]] += size[f]
    best = None
    for f in range(total):
        parts = [size[g] for g, _ in adj[f] if parent.get(g) == f]
        parts.append(total - size[f])
        if max(parts) <= total // 2 and (best is None or dual.faces[f] < dual.faces[best]):
            best = f
    return dual.faces[best]


def _outer_parts(face: Face, n: int) -> list[tuple[Edge, list[int]]]:
    a, b, c = sorted(face)
    return [
        ((a, b), list(range(a + 1, b))),
        ((b, c), list(range(b + 1, c))),
        ((a, c), list(range(c + 1, n)) + list(range(0, a))),
    ]


def build_separation(d: ConvexDrawing, t: Triangulation) -> Separation:
    """Separation of order at most ``edge_pn + 2`` with both sides at most ``2n/3``.

    The largest region cut off by a side of the centroid face goes to ``A``
    together with that side and the far endpoints of its piercing edges.
    """
    if d.n != t.n:
        raise InvalidInputError(f"drawing has n={d.n} but triangulation has n={t.n}")
    n = d.n
    everything = tuple(range(n))
    if n <= 3:
        return Separation(everything, everything, n)
    d = augment_outer_cycle(d)
    face = centroid_triangle(t)
    parts = _outer_parts(face, n)
    link, v1 = max(parts, key=lambda p: (len(p[1]), [-x for x in p[0]]))
    inside = set(v1)
    separator = set(link)
    for e in t.piercers.get(link, ()):
        separator.update(z for z in e if z not in inside)
    a_side = inside | separator
    b_side = set(everything) - inside
    sep = Separation(tuple(sorted(a_side)), tuple(sorted(b_side)), n, face, link)
    if sep.order > t.edge_pn + 2 or 3 * max(sep.sides) > 2 * n:
        raise CertificateError(
            f"separation at face {face} has order {sep.order} and sides {sep.sides}",
            {"face": face, "link": link, "piercing": list(t.piercers.get(link, ()))},
        )
    report = validate_separation(d, sep)
    if not report.ok:
        raise CertificateError(f"constructed separation is invalid: {report.problems[0]}",
                               {"problems": report.problems})
    return sep


@dataclass(frozen=True)
class SeparationReport:
    order: int
    balance: float
    uncovered: tuple[int, ...]
    crossing_edges: tuple[Edge, ...]
    balanced: bool

    @property
    def ok(self) -> bool:
        return not self.uncovered and not self.crossing_edges

    @property
    def problems(self) -> list[str]:
        out = [f"vertex {v} is in neither side" for v in self.uncovered]
        out += [f"edge {list(e)} joins A\\B and B\\A" for e in self.crossing_edges]
        return out


def validate_separation(d: ConvexDrawing, s: Separation) -> SeparationReport:
    """Check cover and the no-edge-across condition; report order and balance."""
    a, b = set(s.A), set(s.B)
    only_a, only_b = a - b, b - a
    uncovered = tuple(v for v in range(d.n) if v not in a and v not in b)
    crossing = tuple(
        (x, y) for x, y in d.edges
        if (x in only_a and y in only_b) or (x in only_b and y in only_a)
    )
    big = max(len(only_a), len(only_b))
    return SeparationReport(
        order=len(a & b),
        balance=big / d.n if d.n else 0.0,
        uncovered=uncovered,
        crossing_edges=crossing,
        balanced=3 * big <= 2 * d.n,
    )
