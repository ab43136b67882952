from __future__ import annotations

import itertools

from hypothesis import given
from hypothesis import strategies as st

from conftest import complete, cycle
from okplanar import (
    ConvexDrawing,
    build_tree_decomposition,
    random_outer_k_planar,
    random_outer_min_k_planar,
    split_at_unpierced_links,
    triangulate_min,
    triangulate_o2p,
    triangulate_strong,
    validate_td,
    weak_dual,
)
from okplanar.decomposition import TreeDecomposition
from okplanar.triangulation import triangulation_from_links


def _is_tree(nodes: int, edges) -> bool:
    if len(edges) != nodes - 1:
        return False
    seen = {0}
    adj = {i: [] for i in range(nodes)}
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    stack = [0]
    while stack:
        for y in adj[stack.pop()]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == nodes


def test_dual_single_face():
    dual = weak_dual(triangulate_strong(cycle(3), 1)[0])
    assert len(dual.faces) == 1 and dual.edges == ()


def test_dual_of_fan_is_path():
    dual = weak_dual(triangulation_from_links(cycle(6), [(0, 2), (0, 3), (0, 4)]))
    degrees = sorted(len(a) for a in dual.adjacency)
    assert len(dual.faces) == 4 and degrees == [1, 1, 2, 2]


def test_dual_k5():
    dual = weak_dual(triangulate_strong(complete(5), 2)[0])
    assert len(dual.faces) == 3 and _is_tree(3, dual.edges)


@given(st.integers(4, 30), st.integers(1, 5), st.integers(0, 10**6))
def test_dual_is_tree(n, k, seed):
    t, _ = triangulate_strong(random_outer_k_planar(n, k, seed), k)
    dual = weak_dual(t)
    assert len(dual.faces) == n - 2 and _is_tree(n - 2, dual.edges)


def test_split_cycle_into_faces():
    t, _ = triangulate_strong(cycle(6), 1)
    split = split_at_unpierced_links(t)
    assert len(split.parts) == 4 and len(split.joins) == 3


def test_split_k4_single_part():
    split = split_at_unpierced_links(triangulate_strong(complete(4), 1)[0])
    assert len(split.parts) == 1 and split.joins == ()


def test_split_two_k4s():
    edges = list(itertools.combinations(range(4), 2)) + list(itertools.combinations(range(4, 8), 2))
    d = ConvexDrawing.from_edges(8, edges)
    t, _ = triangulate_strong(d, 1)
    split = split_at_unpierced_links(t)
    assert len(split.parts) >= 2
    for link, _, _ in split.joins:
        assert t.edge_piercing[link] == 0
    for part in split.parts:
        assert all(t.edge_piercing[l] > 0 for l in part.links)


def test_cycle_width_two():
    td = build_tree_decomposition(cycle(6), triangulate_strong(cycle(6), 1)[0])
    assert td.width == 2


def test_k5_o2p_width_four():
    td = build_tree_decomposition(complete(5), triangulate_o2p(complete(5))[0])
    assert td.width == 4


def test_k4_strong_width():
    td = build_tree_decomposition(complete(4), triangulate_strong(complete(4), 1)[0])
    assert td.width <= 3


def _check(d, t):
    td = build_tree_decomposition(d, t)
    report = validate_td(d, td)
    assert report.ok, report.problems
    cap = (t.triangle_pn + 7) // 2
    assert max(len(b) for b in td.bags) <= cap
    assert len(td.provenance) == len(td.bags)
    assert sum(o.kind == "face" for o in td.provenance) == d.n - 2
    return td


@given(st.integers(4, 34), st.integers(1, 6), st.integers(0, 10**6))
def test_width_bounds(n, k, seed):
    d = random_outer_k_planar(n, k, seed)
    td = _check(d, triangulate_strong(d, k)[0])
    assert td.width <= int(1.5 * k + 2)
    if k == 2:
        assert _check(d, triangulate_o2p(d)[0]).width <= 4


@given(st.integers(6, 24), st.integers(1, 3), st.integers(0, 10**6))
def test_min_width_bound(n, k, seed):
    d = random_outer_min_k_planar(n, k, seed)
    assert _check(d, triangulate_min(d, k)[0]).width <= 3 * k + 1


@given(st.integers(4, 26), st.integers(1, 4), st.integers(0, 10**6))
def test_any_triangulation_gets_capped_bags(n, k, seed):
    # fan triangulations are far from optimal but the bag cap still follows c
    d = random_outer_k_planar(n, k, seed)
    t = triangulation_from_links(d, [(0, j) for j in range(2, n - 1)])
    _check(d, t)


def test_classification_consistent():
    d = random_outer_k_planar(24, 3, 11)
    t, _ = triangulate_strong(d, 3)
    cls = build_tree_decomposition(d, t).classification
    pierced = {e for l in t.inner_links for e in t.piercers[l]}
    assert set(cls.lineal) | set(cls.bent) == pierced
    assert not set(cls.lineal) & set(cls.bent)
    for face, es in cls.long.items():
        for e in es:
            assert not set(e) & set(face)
    for face, es in cls.short.items():
        for e in es:
            assert len(set(e) & set(face)) == 1


def test_single_bag_is_valid():
    d = complete(6)
    rep = validate_td(d, TreeDecomposition(bags=(tuple(range(6)),), tree_edges=()))
    assert rep.ok and rep.width == 5


def test_missing_edge_bag_reported():
    d = cycle(4)
    td = TreeDecomposition(bags=((0, 1, 2), (0, 2)), tree_edges=((0, 1),))
    rep = validate_td(d, td)
    assert not rep.ok
    assert set(rep.uncovered_edges) == {(2, 3), (0, 3)}
    assert 3 in rep.missing_vertices


def test_disconnected_vertex_reported():
    d = cycle(4)
    td = TreeDecomposition(bags=((0, 1, 2), (2, 3), (0, 3)), tree_edges=((0, 1), (1, 2)))
    rep = validate_td(d, td)
    assert rep.disconnected_vertices == (0,)


def test_non_tree_reported():
    d = cycle(3)
    td = TreeDecomposition(bags=((0, 1, 2), (0, 1), (1, 2)), tree_edges=((0, 1), (1, 2), (0, 2)))
    assert validate_td(d, td).tree_problems
