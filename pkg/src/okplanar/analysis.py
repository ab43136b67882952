"""End-to-end pipeline: profile, triangulate, decompose, separate, report bounds."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

from .decomposition import build_tree_decomposition
from .drawing import ConvexDrawing, augment_outer_cycle, crossing_profile
from .errors import BoundViolationError, InvalidInputError
from .separation import build_separation
from .triangulation import triangulate


@dataclass(frozen=True)
class Bounds:
    tw: int  # floor(1.5k + 2)
    tw_o2p: int | None  # 4 when k = 2
    tw_min_k: int  # 3k + 1
    sn: int  # k + 2
    sn_min_k: int  # 2k + 1
    cop: float  # 0.75k + 1.75


def bounds_for(k: int) -> Bounds:
    return Bounds(
        tw=math.floor(1.5 * k + 2),
        tw_o2p=4 if k == 2 else None,
        tw_min_k=3 * k + 1,
        sn=k + 2,
        sn_min_k=2 * k + 1,
        cop=0.75 * k + 1.75,
    )


@dataclass(frozen=True)
class AnalysisReport:
    n: int
    m: int
    k: int
    min_k_mode: bool
    lcr_of_drawing: int
    is_outer_k_planar: bool
    min_k_planar_k: int
    triangulations: dict[str, dict[str, int]]
    td_method: str
    td_width: int
    td_bound: int
    td_bags: int
    separation_order: int
    separation_bound: int
    separation_balance: float
    bounds: Bounds

    def to_obj(self) -> dict:
        obj = asdict(self)
        obj["notes"] = ["treewidth is at most 15 times the separation number (not computed)"]
        return obj


def analyze(d: ConvexDrawing, k: int | None = None, min_k: bool = False) -> AnalysisReport:
    """Run every applicable procedure and check each achieved value against its bound.

    ``k`` defaults to the drawing's own local crossing number (or, with
    ``min_k``, the smallest ``k`` for which it is outer min-``k``-planar).
    """
    if d.n < 3:
        raise InvalidInputError(f"analysis needs n >= 3, got n={d.n}")
    d = augment_outer_cycle(d)
    profile = crossing_profile(d)
    if k is None:
        k = profile.min_k_ok_for if min_k else profile.max_count
    if k < 0:
        raise InvalidInputError(f"k must be non-negative, got {k}")
    b = bounds_for(k)

    methods = ["min"] if min_k else ["weak", "strong"] + (["o2p"] if k == 2 else [])
    tris = {}
    results = {}
    for method in methods:
        t, _ = triangulate(d, k, method)
        results[method] = t
        tris[method] = {"edge_pn": t.edge_pn, "triangle_pn": t.triangle_pn}

    if min_k:
        td_method, td_bound, sep_bound = "min", b.tw_min_k, b.sn_min_k
    elif k == 2:
        td_method, td_bound, sep_bound = "o2p", 4, b.sn
    else:
        td_method, td_bound, sep_bound = "strong", b.tw, b.sn
    t = results[td_method]
    td = build_tree_decomposition(d, t)
    sep = build_separation(d, t)
    if td.width > td_bound:
        raise BoundViolationError(f"tree decomposition width {td.width} exceeds bound {td_bound}")
    if sep.order > sep_bound:
        raise BoundViolationError(f"separation order {sep.order} exceeds bound {sep_bound}")

    return AnalysisReport(
        n=d.n,
        m=d.m,
        k=k,
        min_k_mode=min_k,
        lcr_of_drawing=profile.max_count,
        is_outer_k_planar=profile.max_count <= k,
        min_k_planar_k=profile.min_k_ok_for,
        triangulations=tris,
        td_method=td_method,
        td_width=td.width,
        td_bound=td_bound,
        td_bags=len(td.bags),
        separation_order=sep.order,
        separation_bound=sep_bound,
        separation_balance=sep.balance,
        bounds=b,
    )


def summary_lines(r: AnalysisReport) -> list[str]:
    lines = [
        f"drawing: n={r.n} m={r.m} local crossing number {r.lcr_of_drawing}, "
        f"min-k planar for k >= {r.min_k_planar_k}",
        f"k = {r.k}" + (" (min-k mode)" if r.min_k_mode else ""),
    ]
    for method, stats in r.triangulations.items():
        lines.append(f"  {method:6s} edge piercing {stats['edge_pn']}, triangle piercing {stats['triangle_pn']}")
    lines.append(f"tree decomposition ({r.td_method}): width {r.td_width} <= {r.td_bound}, {r.td_bags} bags")
    lines.append(
        f"separation: order {r.separation_order} <= {r.separation_bound}, balance {r.separation_balance:.3f}"
    )
    lines.append(f"cop number bound: {r.bounds.cop:g}")
    return lines
