"""Static SVG and DOT output.  Byte-identical for identical input."""

from __future__ import annotations

import math

from .decomposition import TreeDecomposition
from .drawing import ConvexDrawing, Edge

SIZE = 400
RADIUS = 170


def _point(i: int, n: int) -> tuple[str, str]:
    angle = 2 * math.pi * i / n
    x = SIZE / 2 + RADIUS * math.cos(angle)
    y = SIZE / 2 - RADIUS * math.sin(angle)
    return f"{x:.3f}", f"{y:.3f}"


def drawing_svg(d: ConvexDrawing, links: list[Edge] | None = None) -> str:
    """Vertices on a circle at angles ``2*pi*i/n``, edges as straight chords.

    Triangulation links are drawn dashed on top of the edges.
    """
    n = d.n
    pts = [_point(i, n) for i in range(n)]
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" '
        f'viewBox="0 0 {SIZE} {SIZE}">',
        f'<circle cx="{SIZE // 2}" cy="{SIZE // 2}" r="{RADIUS}" fill="none" stroke="#ddd"/>',
    ]
    for i, j in d.edges:
        (x1, y1), (x2, y2) = pts[i], pts[j]
        out.append(f'<line class="edge" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="#222"/>')
    for i, j in links or []:
        (x1, y1), (x2, y2) = pts[i], pts[j]
        out.append(
            f'<line class="link" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" '
            f'stroke="#c33" stroke-dasharray="6 4"/>'
        )
    for i, (x, y) in enumerate(pts):
        out.append(f'<circle class="vertex" cx="{x}" cy="{y}" r="5" fill="#225"/>')
        out.append(f'<text x="{x}" y="{y}" dx="7" dy="-7" font-size="12">{i}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def drawing_dot(d: ConvexDrawing, links: list[Edge] | None = None) -> str:
    """Graphviz source with pinned circular positions (render with ``neato -n``)."""
    out = ["graph drawing {", "  node [shape=circle width=0.3 fixedsize=true];"]
    for i in range(d.n):
        x, y = _point(i, d.n)
        out.append(f'  {i} [pos="{x},{SIZE - float(y):.3f}!"];')
    for i, j in d.edges:
        out.append(f"  {i} -- {j};")
    for i, j in links or []:
        out.append(f"  {i} -- {j} [style=dashed color=red];")
    out.append("}")
    return "\n".join(out) + "\n"


def td_dot(td: TreeDecomposition) -> str:
    """Bag tree; copy bags are drawn as ellipses, face bags as boxes."""
    out = ["graph td {"]
    for idx, bag in enumerate(td.bags):
        kind = td.provenance[idx].kind if td.provenance else "face"
        shape = "box" if kind == "face" else "ellipse"
        label = " ".join(str(v) for v in bag)
        out.append(f'  b{idx} [shape={shape} label="{label}"];')
    for i, j in td.tree_edges:
        out.append(f"  b{i} -- b{j};")
    out.append("}")
    return "\n".join(out) + "\n"
