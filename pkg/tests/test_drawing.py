from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import brute_counts, complete, cycle, drawings
from okplanar import (
    BoundViolationError,
    ConvexDrawing,
    InvalidInputError,
    Link,
    augment_outer_cycle,
    crossing_profile,
    intertwined,
    piercing_edges,
)
from okplanar.drawing import has_outer_cycle, require_outer_k_planar, require_outer_min_k_planar


def test_intertwined_quadrilateral():
    assert intertwined(0, 2, 1, 3, 4)
    assert not intertwined(0, 1, 2, 3, 4)


def test_intertwined_rejects_shared_vertex():
    with pytest.raises(InvalidInputError):
        intertwined(0, 2, 2, 4, 5)


def test_intertwined_rejects_out_of_range():
    with pytest.raises(InvalidInputError):
        intertwined(0, 1, 2, 7, 5)


@given(st.integers(4, 12).flatmap(lambda n: st.tuples(st.just(n), st.permutations(range(n)))))
def test_intertwined_symmetric(case):
    n, perm = case
    a, b, c, d = perm[:4]
    assert intertwined(a, b, c, d, n) == intertwined(c, d, a, b, n)
    assert intertwined(a, b, c, d, n) == intertwined(b, a, c, d, n)


def test_profile_k5():
    p = crossing_profile(complete(5))
    for (i, j), c in p.per_edge.items():
        assert c == (2 if (j - i) % 5 in (2, 3) else 0)
    assert p.max_count == 2


def test_profile_cycle_is_crossing_free():
    p = crossing_profile(cycle(6))
    assert set(p.per_edge.values()) == {0}
    assert p.max_count == 0


def test_profile_three_long_diagonals():
    d = ConvexDrawing.from_edges(6, [(0, 3), (1, 4), (2, 5)])
    p = crossing_profile(d)
    assert p.per_edge == {(0, 3): 2, (1, 4): 2, (2, 5): 2}
    assert p.max_count == 2


def test_profile_empty():
    p = crossing_profile(ConvexDrawing(4, ()))
    assert p.max_count == 0 and p.min_k_ok_for == 0


@given(drawings())
def test_profile_matches_definition(d):
    assert crossing_profile(d).per_edge == brute_counts(d)


@given(drawings(max_n=12), st.integers(0, 11))
def test_rotation_keeps_counts(d, shift):
    counts = sorted(crossing_profile(d).per_edge.values())
    assert sorted(crossing_profile(d.rotated(shift)).per_edge.values()) == counts


@given(drawings(max_n=9))
def test_every_rotation_keeps_each_edge_count(d):
    base = crossing_profile(d).per_edge
    for s in range(d.n):
        rot = crossing_profile(d.rotated(s)).per_edge
        for (i, j), c in base.items():
            e = tuple(sorted(((i + s) % d.n, (j + s) % d.n)))
            assert rot[e] == c


def test_piercing_k4():
    assert piercing_edges(complete(4), Link(1, 3)) == [(0, 2)]


def test_piercing_k5_canonical_order():
    # shared right endpoint 1: the edge whose left end is nearer 0 clockwise is lower
    assert piercing_edges(complete(5), Link(0, 2)) == [(1, 4), (1, 3)]


@given(drawings(min_n=3), st.data())
def test_outer_links_never_pierced(d, data):
    i = data.draw(st.integers(0, d.n - 1))
    assert piercing_edges(d, Link(i, (i + 1) % d.n)) == []
    assert piercing_edges(d, Link((i + 1) % d.n, i)) == []


@given(drawings(min_n=4), st.data())
def test_piercing_set_is_intertwined_set(d, data):
    a, b = data.draw(st.lists(st.integers(0, d.n - 1), min_size=2, max_size=2, unique=True))
    got = piercing_edges(d, Link(a, b))
    want = {e for e in d.edges if len({a, b, *e}) == 4 and intertwined(a, b, e[0], e[1], d.n)}
    assert set(got) == want and len(got) == len(want)


def test_piercing_rejects_bad_link():
    with pytest.raises(InvalidInputError):
        piercing_edges(complete(4), Link(1, 1))


def test_augment_fills_cycle():
    d = augment_outer_cycle(ConvexDrawing.from_edges(4, [(0, 2)]))
    assert set(d.edges) == {(0, 2), (0, 1), (1, 2), (2, 3), (0, 3)}


def test_augment_idempotent():
    c5 = cycle(5)
    assert augment_outer_cycle(c5) is c5


def test_augment_empty_has_no_crossings():
    assert crossing_profile(augment_outer_cycle(ConvexDrawing(5, ()))).max_count == 0


def test_augment_rejects_small():
    with pytest.raises(InvalidInputError):
        augment_outer_cycle(ConvexDrawing(2, ((0, 1),)))


@given(drawings())
def test_augment_preserves_counts(d):
    before = crossing_profile(d)
    after = augment_outer_cycle(d)
    prof = crossing_profile(after)
    assert has_outer_cycle(after)
    assert prof.max_count <= before.max_count
    for e, c in before.per_edge.items():
        assert prof.per_edge[e] == c
    for e in set(after.edges) - set(d.edges):
        assert prof.per_edge[e] == 0


@pytest.mark.parametrize(
    "n, edges",
    [(3, [(0, 0)]), (3, [(0, 1), (1, 0)]), (3, [(0, 3)]), (3, [(-1, 1)])],
)
def test_from_edges_rejects(n, edges):
    with pytest.raises(InvalidInputError):
        ConvexDrawing.from_edges(n, edges)


def test_constructor_requires_sorted_edges():
    with pytest.raises(InvalidInputError):
        ConvexDrawing(4, ((1, 2), (0, 1)))


def test_k_planarity_witness():
    with pytest.raises(BoundViolationError) as info:
        require_outer_k_planar(complete(5), 1)
    assert crossing_profile(complete(5)).per_edge[info.value.witness] == 2


def test_min_k_witness():
    d = complete(6)
    with pytest.raises(BoundViolationError) as info:
        require_outer_min_k_planar(d, 2)
    e, f = info.value.witness
    counts = crossing_profile(d).per_edge
    assert counts[e] > 2 and counts[f] > 2
    require_outer_min_k_planar(d, crossing_profile(d).min_k_ok_for)
