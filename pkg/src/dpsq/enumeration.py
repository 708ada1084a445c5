"""Exhaustive generation of connected subcubic graphs up to isomorphism.

Level n is grown from level n-1 by adding one vertex joined to 1..3 existing
vertices of degree < 3. Every connected graph has a non-cut vertex (a leaf of
any spanning tree), so this reaches every isomorphism class; duplicates are
removed by canonical certificate.
"""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations
from typing import Iterator

from .errors import BudgetError, InputError
from .graph import Graph, build_graph
from .iso import canonical_labelling

DEFAULT_MAX_N = 10


@lru_cache(maxsize=None)
def _level(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (build_graph(1, []),)
    found: dict = {}
    for g in _level(n - 1):
        open_slots = [v for v in range(g.n) if g.degree(v) < 3]
        base = g.edges()
        for size in (1, 2, 3):
            for nbrs in combinations(open_slots, size):
                h = build_graph(n, base + [(v, n - 1) for v in nbrs])
                cert, perm = canonical_labelling(h)
                if cert not in found:
                    found[cert] = h.relabel(perm)
    return tuple(found[c] for c in sorted(found))


def enumerate_subcubic(n: int, limit: int = DEFAULT_MAX_N) -> Iterator[Graph]:
    """Yield connected subcubic graphs on ``n`` vertices, one per class.

    Graphs come out canonically labelled and in certificate order, so the
    stream is reproducible.
    """
    if n < 1:
        raise InputError("n must be positive")
    if n > limit:
        raise BudgetError(f"enumeration limited to n <= {limit}")
    yield from _level(n)


def corpus(max_n: int, limit: int = DEFAULT_MAX_N) -> Iterator[Graph]:
    for n in range(1, max_n + 1):
        yield from enumerate_subcubic(n, limit)


def random_subcubic(n: int, rng: random.Random, connected: bool = True,
                    min_degree: int = 0, attempts: int = 1000) -> Graph:
    """Sample a subcubic graph by random edge insertion.

    Edges are added in random order while both endpoints have spare degree;
    the draw is rejected until the connectivity and minimum-degree
    requirements hold. Not uniform over isomorphism classes.
    """
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for _ in range(attempts):
        rng.shuffle(pairs)
        target = rng.randint(max(n - 1, 0), (3 * n) // 2)
        deg = [0] * n
        edges = []
        for u, v in pairs:
            if len(edges) >= target:
                break
            if deg[u] < 3 and deg[v] < 3:
                edges.append((u, v))
                deg[u] += 1
                deg[v] += 1
        g = build_graph(n, edges)
        if connected and not g.is_connected():
            continue
        if min(deg, default=0) < min_degree:
            continue
        return g
    raise BudgetError(f"no subcubic graph on {n} vertices met the constraints after {attempts} draws")
