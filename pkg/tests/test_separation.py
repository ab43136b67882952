from __future__ import annotations

from hypothesis import given
from hypothesis import strategies as st

from conftest import complete, cycle
from okplanar import (
    ConvexDrawing,
    Separation,
    build_separation,
    centroid_triangle,
    random_outer_k_planar,
    random_outer_min_k_planar,
    stacked_prism,
    triangulate_min,
    triangulate_o2p,
    triangulate_strong,
    validate_separation,
    weak_dual,
)
from okplanar.triangulation import triangulation_from_links


def test_centroid_of_triangle():
    t, _ = triangulate_strong(cycle(3), 1)
    assert centroid_triangle(t) == (0, 1, 2)


def test_centroid_of_fan_path():
    t = triangulation_from_links(cycle(6), [(0, 2), (0, 3), (0, 4)])
    # dual path (0,1,2)-(0,2,3)-(0,3,4)-(0,4,5): both middle faces qualify
    assert centroid_triangle(t) == (0, 2, 3)


def test_centroid_k5_is_middle_of_dual():
    t, _ = triangulate_o2p(complete(5))
    dual = weak_dual(t)
    middle = next(f for f, adj in zip(dual.faces, dual.adjacency) if len(adj) == 2)
    assert centroid_triangle(t) == middle


@given(st.integers(3, 40), st.integers(1, 5), st.integers(0, 10**6))
def test_centroid_components_small(n, k, seed):
    t, _ = triangulate_strong(random_outer_k_planar(n, k, seed), k)
    dual = weak_dual(t)
    c = dual.faces.index(centroid_triangle(t))
    adj = dual.adjacency
    for start, _ in adj[c]:
        seen = {c, start}
        stack = [start]
        while stack:
            for y, _ in adj[stack.pop()]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        assert len(seen) - 1 <= (n - 2) // 2


def test_k5_order():
    t, _ = triangulate_o2p(complete(5))
    assert build_separation(complete(5), t).order <= 4


def test_cycle_separation():
    s = build_separation(cycle(6), triangulate_strong(cycle(6), 1)[0])
    assert s.order == 2 and s.balance <= 2 / 3


def test_prism_separation():
    d = stacked_prism((6, 2))
    assert build_separation(d, triangulate_strong(d, 2)[0]).order <= 4


def test_tiny_is_trivial():
    s = build_separation(cycle(3), triangulate_strong(cycle(3), 1)[0])
    assert s.A == s.B == (0, 1, 2)


@given(st.integers(4, 40), st.integers(1, 6), st.integers(0, 10**6))
def test_order_and_balance(n, k, seed):
    d = random_outer_k_planar(n, k, seed)
    s = build_separation(d, triangulate_strong(d, k)[0])
    rep = validate_separation(d, s)
    assert rep.ok and rep.balanced
    assert s.order <= k + 2
    assert 3 * max(s.sides) <= 2 * n


@given(st.integers(6, 24), st.integers(1, 3), st.integers(0, 10**6))
def test_min_order(n, k, seed):
    d = random_outer_min_k_planar(n, k, seed)
    s = build_separation(d, triangulate_min(d, k)[0])
    assert s.order <= 2 * k + 1 and validate_separation(d, s).ok


def test_everything_on_both_sides():
    d = complete(5)
    rep = validate_separation(d, Separation(tuple(range(5)), tuple(range(5)), 5))
    assert rep.ok and rep.order == 5 and rep.balance == 0


def test_edge_across_reported():
    d = ConvexDrawing.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    rep = validate_separation(d, Separation((0, 1), (2, 3), 4))
    assert not rep.ok and rep.crossing_edges == ((1, 2),)


def test_uncovered_reported():
    rep = validate_separation(cycle(4), Separation((0, 1), (1, 2), 4))
    assert 3 in rep.uncovered
