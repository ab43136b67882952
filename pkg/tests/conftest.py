from __future__ import annotations

import itertools

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from okplanar import ConvexDrawing

settings.register_profile(
    "default", max_examples=80, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


def complete(n: int) -> ConvexDrawing:
    return ConvexDrawing.from_edges(n, itertools.combinations(range(n), 2))


def cycle(n: int) -> ConvexDrawing:
    return ConvexDrawing.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> ConvexDrawing:
    return ConvexDrawing.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def brute_counts(d: ConvexDrawing) -> dict[tuple[int, int], int]:
    """Crossing counts straight from the interleaving definition."""
    out = {}
    for a, b in d.edges:
        out[(a, b)] = sum(
            1
            for c, e in d.edges
            if len({a, b, c, e}) == 4 and ((a < c < b) != (a < e < b))
        )
    return out


@st.composite
def drawings(draw: st.DrawFn, min_n: int = 3, max_n: int = 12) -> ConvexDrawing:
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs)))
    return ConvexDrawing.from_edges(n, chosen)
