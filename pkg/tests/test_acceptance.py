"""Acceptance criteria.  Each test prints one ``PASS``/``FAIL`` line."""

from __future__ import annotations

import math
import random
import time

import numpy as np
import pytest

from conftest import complete, cycle
from okplanar import (
    ConvexDrawing,
    Separation,
    brute_convex_lcr,
    brute_min_balanced_separation,
    brute_treewidth,
    build_separation,
    build_tree_decomposition,
    random_outer_k_planar,
    random_outer_min_k_planar,
    stacked_prism,
    triangulate_min,
    triangulate_o2p,
    triangulate_strong,
    triangulate_weak,
    validate_separation,
    validate_td,
)
from okplanar.decomposition import TreeDecomposition

SUITE_PER_K = 1000
MIN_K_PER_K = 200
SANDWICH_MAX_N = 12


@pytest.fixture
def report(capsys):
    def emit(criterion: str, ok: bool, detail: str) -> None:
        with capsys.disabled():
            print(f"\n{'PASS' if ok else 'FAIL'} criterion {criterion}: {detail}")

    return emit


def _suite(k: int, count: int):
    rng = random.Random(1000 + k)
    for i in range(count):
        n = rng.randint(6, 40)
        yield random_outer_k_planar(n, k, seed=k * 100_000 + i)


def _min_suite(k: int, count: int):
    rng = random.Random(2000 + k)
    for i in range(count):
        n = rng.randint(6, 40)
        yield random_outer_min_k_planar(n, k, seed=k * 100_000 + i)


# shared across criteria 2-4 and 7 so the suites are built once
_small: list[tuple[ConvexDrawing, int, int]] = []  # (drawing, td width, separation order)
_validated = {"td": 0, "sep": 0, "td_bad": [], "sep_bad": []}


def _check_objects(d, td, sep):
    rt, rs = validate_td(d, td), validate_separation(d, sep)
    _validated["td"] += 1
    _validated["sep"] += 1
    if not rt.ok:
        _validated["td_bad"].append((d, rt.problems))
    if not rs.ok:
        _validated["sep_bad"].append((d, rs.problems))


def test_k5_end_to_end(report):
    t0 = time.perf_counter()
    d = complete(5)
    lcr = brute_convex_lcr(d).value
    t, _ = triangulate_o2p(d)
    td = build_tree_decomposition(d, t)
    sep = build_separation(d, t)
    elapsed = time.perf_counter() - t0
    _check_objects(d, td, sep)
    ok = (
        lcr == 2
        and t.edge_pn <= 2
        and t.triangle_pn <= 4
        and td.width == 4
        and sep.order <= 4
        and elapsed < 1.0
    )
    report(
        "1 (K5 end to end)",
        ok,
        f"lcr={lcr} edge_pn={t.edge_pn} triangle_pn={t.triangle_pn} width={td.width} "
        f"sep={sep.order} time={elapsed:.3f}s",
    )
    assert ok


def test_random_suite(report):
    t0 = time.perf_counter()
    violations: list[str] = []
    total = 0
    for k in range(1, 7):
        tw_bound = math.floor(1.5 * k + 2)
        for d in _suite(k, SUITE_PER_K):
            total += 1
            weak, _ = triangulate_weak(d, k)
            strong, _ = triangulate_strong(d, k)
            td = build_tree_decomposition(d, strong)
            sep = build_separation(d, strong)
            tag = f"k={k} n={d.n} m={d.m}"
            if strong.edge_pn > k:
                violations.append(f"{tag}: strong edge_pn {strong.edge_pn}")
            if weak.edge_pn > 2 * k - 1:
                violations.append(f"{tag}: weak edge_pn {weak.edge_pn}")
            if k % 2 == 1 and strong.triangle_pn > 3 * k - 1:
                violations.append(f"{tag}: triangle_pn {strong.triangle_pn}")
            if td.width > tw_bound:
                violations.append(f"{tag}: width {td.width}")
            if sep.order > k + 2:
                violations.append(f"{tag}: separation order {sep.order}")
            if sep.balance > 2 / 3:
                violations.append(f"{tag}: balance {sep.balance:.3f}")
            _check_objects(d, td, sep)
            if d.n <= SANDWICH_MAX_N:
                _small.append((d, td.width, sep.order))
    elapsed = time.perf_counter() - t0
    ok = not violations and elapsed < 120
    report(
        "2 (random outer k-planar suite)",
        ok,
        f"{total} drawings, {len(violations)} violations, time={elapsed:.1f}s",
    )
    assert not violations, violations[:10]
    assert elapsed < 120


def test_min_k_suite(report):
    violations: list[str] = []
    total = heavy = 0
    for k in range(1, 4):
        for d in _min_suite(k, MIN_K_PER_K):
            total += 1
            if max(d.crossing_counts, default=0) > k:
                heavy += 1
            t, _ = triangulate_min(d, k)
            td = build_tree_decomposition(d, t)
            sep = build_separation(d, t)
            tag = f"k={k} n={d.n} m={d.m}"
            if t.edge_pn > 2 * k - 1:
                violations.append(f"{tag}: edge_pn {t.edge_pn}")
            if t.triangle_pn > 6 * k - 3:
                violations.append(f"{tag}: triangle_pn {t.triangle_pn}")
            if td.width > 3 * k + 1:
                violations.append(f"{tag}: width {td.width}")
            if sep.order > 2 * k + 1:
                violations.append(f"{tag}: separation order {sep.order}")
            _check_objects(d, td, sep)
            if d.n <= SANDWICH_MAX_N:
                _small.append((d, td.width, sep.order))
    # every drawing with n >= 2k + 4 carries a planted heavy edge
    ok = not violations and heavy > 0
    report(
        "3 (outer min-k-planar suite)",
        ok,
        f"{total} drawings ({heavy} with a heavy edge), {len(violations)} violations",
    )
    assert not violations, violations[:10]
    assert heavy > 0


def test_oracle_sandwich(report):
    small = list(_small)
    if not small:
        # run standalone: rebuild the small part of the suites
        for k in range(1, 7):
            for d in _suite(k, SUITE_PER_K):
                if d.n <= SANDWICH_MAX_N:
                    t, _ = triangulate_strong(d, k)
                    small.append((d, build_tree_decomposition(d, t).width, build_separation(d, t).order))
        for k in range(1, 4):
            for d in _min_suite(k, MIN_K_PER_K):
                if d.n <= SANDWICH_MAX_N:
                    t, _ = triangulate_min(d, k)
                    small.append((d, build_tree_decomposition(d, t).width, build_separation(d, t).order))
    bad = []
    for d, width, order in small:
        tw = brute_treewidth(d).value
        sn = brute_min_balanced_separation(d).value
        if tw > width or sn > order:
            bad.append((d, tw, width, sn, order))
    ok = bool(small) and not bad
    report("4 (oracle sandwich, n <= 12)", ok, f"{len(small)} drawings, {len(bad)} failures")
    assert small
    assert not bad, bad[:5]


def test_stacked_prism(report):
    d = stacked_prism((6, 2))
    lcr = brute_convex_lcr(d).value
    tw = brute_treewidth(d).value
    sep = brute_min_balanced_separation(d).value
    ok = d.n == 12 and lcr == 2 and tw == 4
    report("5 (stacked prism Y_{6,2})", ok, f"lcr={lcr} tw={tw} recorded min separation order={sep}")
    assert ok
    # recorded observation, not a bound
    assert sep == 3


def _timed_strong(d: ConvexDrawing, k: int) -> float:
    t0 = time.perf_counter()
    triangulate_strong(d, k)
    return time.perf_counter() - t0


@pytest.mark.slow
def test_performance(report):
    k = 4
    sizes = [12_500, 25_000, 50_000, 100_000]
    times = []
    for n in sizes:
        d = random_outer_k_planar(n, k, seed=7, max_span=8)
        times.append(min(_timed_strong(d, k) for _ in range(3)))
    slope = float(np.polyfit(np.log(sizes), np.log(times), 1)[0])
    ok = times[-1] < 5.0 and slope < 1.25
    pairs = " ".join(f"{n}:{t:.2f}s" for n, t in zip(sizes, times))
    report("6 (performance, n = 1e5, k = 4)", ok, f"{pairs} log-log slope={slope:.2f}")
    assert times[-1] < 5.0
    assert slope < 1.25


def _negative_fixtures():
    c4 = cycle(4)
    missing_edge = TreeDecomposition(bags=((0, 1, 2), (0, 2)), tree_edges=((0, 1),))
    broken_subtree = TreeDecomposition(bags=((0, 1, 2), (2, 3), (0, 3)), tree_edges=((0, 1), (1, 2)))
    p4 = ConvexDrawing.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    edge_across = Separation((0, 1), (2, 3), 4)
    return [
        ("td missing edge", not validate_td(c4, missing_edge).ok),
        ("td disconnected vertex", not validate_td(c4, broken_subtree).ok),
        ("separation edge across", not validate_separation(p4, edge_across).ok),
    ]


def test_validators(report):
    if _validated["td"] == 0:
        for k in (1, 2, 3):
            for d in _suite(k, 50):
                t, _ = triangulate_strong(d, k)
                _check_objects(d, build_tree_decomposition(d, t), build_separation(d, t))
    negatives = _negative_fixtures()
    ok = not _validated["td_bad"] and not _validated["sep_bad"] and all(r for _, r in negatives)
    report(
        "7 (validators)",
        ok,
        f"{_validated['td']} decompositions and {_validated['sep']} separations valid, "
        f"negative fixtures rejected: {sum(r for _, r in negatives)}/3",
    )
    assert not _validated["td_bad"], _validated["td_bad"][:3]
    assert not _validated["sep_bad"], _validated["sep_bad"][:3]
    assert all(r for _, r in negatives), negatives
