"""Tree decompositions built from a pierced triangulation.

The bags start as the faces of the triangulation arranged along its weak
dual.  Copy bags are inserted between a face and its children, and the
endpoints of every piercing edge are lifted toward each other until they
share a bag.  With triangle piercing number ``c`` no bag grows beyond
``(c + 7) / 2`` vertices; the construction asserts this for every bag.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from .drawing import ConvexDrawing, Edge, augment_outer_cycle
from .errors import CertificateError, InvalidInputError
from .triangulation import Face, Triangulation, face_sides


@dataclass(frozen=True)
class WeakDual:
    """Faces as nodes, adjacent when they share an inner link."""

    faces: tuple[Face, ...]
    edges: tuple[tuple[int, int], ...]
    links: tuple[Edge, ...]  # links[i] is the link shared along edges[i]

    @property
    def adjacency(self) -> list[list[tuple[int, Edge]]]:
        adj: list[list[tuple[int, Edge]]] = [[] for _ in self.faces]
        for (i, j), link in zip(self.edges, self.links):
            adj[i].append((j, link))
            adj[j].append((i, link))
        return adj


def weak_dual(t: Triangulation) -> WeakDual:
    if t.n < 3:
        raise InvalidInputError(f"weak dual needs n >= 3, got n={t.n}")
    owner: dict[Edge, int] = {}
    edges = []
    links = []
    for idx, f in enumerate(t.faces):
        for side in face_sides(f):
            if side[1] - side[0] in (1, t.n - 1):
                continue
            other = owner.pop(side, None)
            if other is None:
                owner[side] = idx
            else:
                edges.append((other, idx))
                links.append(side)
    return WeakDual(t.faces, tuple(edges), tuple(links))


@dataclass(frozen=True)
class Part:
    """Faces glued along pierced links only."""

    faces: tuple[int, ...]  # indices into ``Triangulation.faces``
    links: tuple[Edge, ...]  # pierced inner links inside the part


@dataclass(frozen=True)
class PartSplit:
    parts: tuple[Part, ...]
    joins: tuple[tuple[Edge, int, int], ...]  # unpierced link and the two parts it separates


def split_at_unpierced_links(t: Triangulation, dual: WeakDual | None = None) -> PartSplit:
    """Cut the triangulation along every unpierced inner link."""
    dual = dual or weak_dual(t)
    parent = list(range(len(dual.faces)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    cuts = []
    for (i, j), link in zip(dual.edges, dual.links):
        if t.edge_piercing[link]:
            parent[find(i)] = find(j)
        else:
            cuts.append((link, i, j))
    groups: dict[int, list[int]] = {}
    for idx in range(len(dual.faces)):
        groups.setdefault(find(idx), []).append(idx)
    ordered = sorted(groups.values(), key=lambda g: g[0])
    part_of = {}
    for p, g in enumerate(ordered):
        for idx in g:
            part_of[idx] = p
    part_links: list[list[Edge]] = [[] for _ in ordered]
    for (i, j), link in zip(dual.edges, dual.links):
        if t.edge_piercing[link]:
            part_links[part_of[i]].append(link)
    parts = tuple(Part(tuple(g), tuple(sorted(ls))) for g, ls in zip(ordered, part_links))
    joins = tuple(sorted((link, *sorted((part_of[i], part_of[j]))) for link, i, j in cuts))
    return PartSplit(parts, joins)


class BagOrigin(NamedTuple):
    kind: str  # "face", "primary" or "secondary"
    face: Face
    index: int = 0  # position i of a secondary copy, counted from the top


@dataclass(frozen=True)
class EdgeClassification:
    """Where every piercing edge lives relative to the rooted weak dual.

    ``short[f]`` / ``long[f]`` list the edges with one / no endpoint on ``f``
    that pierce links of ``f``.  Each edge has a top face: ``lineal`` maps
    edges whose top face holds one of their endpoints, ``bent`` maps edges
    that pass through their top face into two child subtrees.
    """

    short: dict[Face, tuple[Edge, ...]]
    long: dict[Face, tuple[Edge, ...]]
    lineal: dict[Edge, Face]
    bent: dict[Edge, Face]


@dataclass(frozen=True)
class TreeDecomposition:
    bags: tuple[tuple[int, ...], ...]
    tree_edges: tuple[tuple[int, int], ...]
    provenance: tuple[BagOrigin, ...] = ()
    classification: EdgeClassification | None = field(default=None, repr=False, compare=False)

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1


def _root_part(part: Part, faces: tuple[Face, ...], adj, t: Triangulation):
    """Root at the leaf with the smallest face; order children left/right."""
    members = set(part.faces)
    local = {f: [(g, link) for g, link in adj[f] if g in members and t.edge_piercing[link]] for f in part.faces}
    leaves = [f for f in part.faces if len(local[f]) <= 1]
    root = min(leaves, key=lambda f: faces[f])
    depth = {root: 0}
    parent: dict[int, int] = {}
    children: dict[int, list[tuple[int, Edge]]] = {}
    order = []
    stack = [root]
    while stack:
        f = stack.pop()
        kids = [(g, link) for g, link in local[f] if g not in depth]
        kids.sort(key=lambda gl: (t.edge_piercing[gl[1]], gl[1]))
        children[f] = kids
        order.append(f)
        for g, _ in reversed(kids):
            depth[g] = depth[f] + 1
            parent[g] = f
            stack.append(g)
    return root, depth, parent, children, order


def build_tree_decomposition(d: ConvexDrawing, t: Triangulation) -> TreeDecomposition:
    """Tree decomposition of ``d`` with every bag of size at most ``(c + 7) / 2``.

    ``c`` is the triangle piercing number of ``t``.  Raises
    :class:`CertificateError` if a bag exceeds the cap or the result fails
    validation; neither can happen for a correct triangulation.
    """
    if d.n != t.n:
        raise InvalidInputError(f"drawing has n={d.n} but triangulation has n={t.n}")
    d = augment_outer_cycle(d)
    faces = t.faces
    dual = weak_dual(t)
    adj = dual.adjacency
    split = split_at_unpierced_links(t, dual)
    cap = (t.triangle_pn + 7) // 2

    bags: list[set[int]] = []
    parent_node: list[int] = []
    provenance: list[BagOrigin] = []
    part_nodes: list[range] = []
    short: dict[Face, list[Edge]] = {}
    long: dict[Face, list[Edge]] = {}
    lineal_top: dict[Edge, Face] = {}
    bent_top: dict[Edge, Face] = {}

    def new_node(par: int, origin: BagOrigin, face: Face) -> int:
        bags.append(set(face))
        parent_node.append(par)
        provenance.append(origin)
        return len(bags) - 1

    for part in split.parts:
        first = len(bags)
        root, depth, parent, children, order = _root_part(part, faces, adj, t)
        preorder = {f: i for i, f in enumerate(order)}

        # face each link leads down into
        child_of_link = {link: g for f in part.faces for g, link in children[f]}
        pierced: dict[Edge, list[Edge]] = {}
        for link in part.links:
            for e in t.piercers[link]:
                pierced.setdefault(e, []).append(link)

        # top face of each vertex within this part
        vertex_top: dict[int, int] = {}
        for f in part.faces:
            for z in faces[f]:
                if z not in vertex_top or depth[f] < depth[vertex_top[z]]:
                    vertex_top[z] = f

        lineal_jobs = []  # (vertex, top face, child face)
        bent_at: dict[int, list[tuple[int, int, Edge]]] = {}
        for e, links in pierced.items():
            through = [child_of_link[link] for link in links]
            tops = [parent[g] for g in through]
            top = min(tops, key=lambda f: depth[f])
            down = [g for g, f in zip(through, tops) if f == top]
            path = set(through) | {top}
            for f in path:
                (short if set(e) & set(faces[f]) else long).setdefault(faces[f], []).append(e)
            if len(down) == 1:
                x, y = e if e[0] in faces[top] else (e[1], e[0])
                lineal_jobs.append((y, top, down[0]))
                lineal_top[e] = faces[top]
            else:
                left_child = children[top][0][0]
                left_link = children[top][0][1]
                a, b = left_link
                apex = next(z for z in faces[top] if z not in left_link)
                apex_inside = a < apex < b
                u, w = e if (a < e[0] < b) != apex_inside else (e[1], e[0])
                bent_at.setdefault(top, []).append((u, w, e))
                bent_top[e] = faces[top]
                assert left_child in down

        # bent edges numbered top to bottom: deepest left endpoint first
        for f, jobs in bent_at.items():
            jobs.sort(key=lambda j: (-preorder[vertex_top[j[0]]], j[2]))

        original: dict[int, int] = {}
        primary: dict[tuple[int, int], int] = {}
        secondary: dict[int, list[int]] = {}
        # face bags in preorder, then the copy chains hung between them
        for f in order:
            original[f] = new_node(-1, BagOrigin("face", faces[f]), faces[f])
        for f in order:
            kids = children[f]
            for pos, (g, _) in enumerate(kids):
                tail = original[f]
                if pos == 0 and len(kids) == 2 and f in bent_at:
                    secondary[f] = []
                    for i in range(1, len(bent_at[f]) + 1):
                        tail = new_node(tail, BagOrigin("secondary", faces[f], i), faces[f])
                        secondary[f].append(tail)
                primary[(f, g)] = new_node(tail, BagOrigin("primary", faces[f]), faces[f])
                parent_node[original[g]] = primary[(f, g)]

        top_node = {z: original[f] for z, f in vertex_top.items()}

        def lift(z: int, target: int) -> None:
            if z in bags[target]:
                return
            node = top_node[z]
            while node != target:
                node = parent_node[node]
                if node < 0:
                    raise CertificateError(
                        f"lifting vertex {z} never reaches bag {target}",
                        {"vertex": z, "target": provenance[target]},
                    )
                bags[node].add(z)
            top_node[z] = target

        for y, top, g in lineal_jobs:
            lift(y, primary[(top, g)])
        for f, jobs in bent_at.items():
            for i, (u, w, _) in enumerate(jobs):
                lift(u, secondary[f][i])
                lift(w, original[f])
                for node in secondary[f][: i + 1]:
                    bags[node].add(w)

        part_nodes.append(range(first, len(bags)))
        for node in part_nodes[-1]:
            if len(bags[node]) > cap:
                raise CertificateError(
                    f"bag {node} ({provenance[node].kind} of face {provenance[node].face}) has "
                    f"{len(bags[node])} vertices, cap is {cap}",
                    {"bag": sorted(bags[node]), "origin": provenance[node], "c": t.triangle_pn},
                )

    tree_edges = [(p, i) for i, p in enumerate(parent_node) if p >= 0]
    for (a, b), p, q in split.joins:
        ends = []
        for part_idx in (p, q):
            ends.append(next(i for i in part_nodes[part_idx] if a in bags[i] and b in bags[i]))
        tree_edges.append(tuple(sorted(ends)))

    classification = EdgeClassification(
        short={f: tuple(sorted(es)) for f, es in short.items()},
        long={f: tuple(sorted(es)) for f, es in long.items()},
        lineal=lineal_top,
        bent=bent_top,
    )
    td = TreeDecomposition(
        bags=tuple(tuple(sorted(b)) for b in bags),
        tree_edges=tuple(sorted(tree_edges)),
        provenance=tuple(provenance),
        classification=classification,
    )
    report = validate_td(d, td)
    if not report.ok:
        raise CertificateError(f"constructed tree decomposition is invalid: {report.problems[0]}",
                               {"problems": report.problems})
    return td


@dataclass(frozen=True)
class TDReport:
    width: int
    missing_vertices: tuple[int, ...]
    uncovered_edges: tuple[Edge, ...]
    disconnected_vertices: tuple[int, ...]
    tree_problems: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not (self.missing_vertices or self.uncovered_edges
                    or self.disconnected_vertices or self.tree_problems)

    @property
    def problems(self) -> list[str]:
        out = list(self.tree_problems)
        out += [f"vertex {v} is in no bag" for v in self.missing_vertices]
        out += [f"edge {list(e)} has no common bag" for e in self.uncovered_edges]
        out += [f"bags of vertex {v} are not connected" for v in self.disconnected_vertices]
        return out


def validate_td(d: ConvexDrawing, td: TreeDecomposition) -> TDReport:
    """Check tree shape, vertex and edge coverage and per-vertex connectivity."""
    nb = len(td.bags)
    tree_problems = []
    if nb == 0:
        tree_problems.append("no bags")
    if len(td.tree_edges) != max(nb - 1, 0):
        tree_problems.append(f"{len(td.tree_edges)} tree edges for {nb} bags")
    uf = list(range(nb))

    def find(x: int) -> int:
        while uf[x] != x:
            uf[x] = uf[uf[x]]
            x = uf[x]
        return x

    for i, j in td.tree_edges:
        if not (0 <= i < nb and 0 <= j < nb) or i == j:
            tree_problems.append(f"bad tree edge {(i, j)}")
            continue
        ri, rj = find(i), find(j)
        if ri == rj:
            tree_problems.append(f"tree edge {(i, j)} closes a cycle")
        uf[ri] = rj
    if nb and len({find(i) for i in range(nb)}) != 1:
        tree_problems.append("bag tree is disconnected")

    where: dict[int, list[int]] = {}
    for idx, bag in enumerate(td.bags):
        for v in bag:
            where.setdefault(v, []).append(idx)
    missing = tuple(v for v in range(d.n) if v not in where)
    sets = [set(b) for b in td.bags]
    uncovered = []
    for a, b in d.edges:
        wa, wb = where.get(a, ()), where.get(b, ())
        small, other = (wa, b) if len(wa) <= len(wb) else (wb, a)
        if not any(other in sets[i] for i in small):
            uncovered.append((a, b))
    inner = {v: 0 for v in where}
    if not tree_problems:
        for i, j in td.tree_edges:
            for v in sets[i] & sets[j]:
                inner[v] += 1
        disconnected = tuple(sorted(v for v, occ in where.items() if len(occ) - inner[v] != 1))
    else:
        disconnected = ()
    return TDReport(
        width=td.width,
        missing_vertices=missing,
        uncovered_edges=tuple(uncovered),
        disconnected_vertices=disconnected,
        tree_problems=tuple(tree_problems),
    )
