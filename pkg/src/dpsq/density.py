"""Maximum average degree, computed two independent ways.

``mad_bruteforce`` scans every vertex subset. ``mad_exact`` runs a rational
binary search whose feasibility oracle is a minimum cut in the edge/vertex
closure network: for a guess p/q there is a vertex set S with
q*e(S) - p*|S| > 0 exactly when the max flow is below q*m. All arithmetic is
integral; densities are ``Fraction`` throughout.
"""

from __future__ import annotations

from fractions import Fraction

import networkx as nx

from .errors import BudgetError, InputError
from .graph import Graph

BRUTEFORCE_LIMIT = 20


def average_degree(g: Graph) -> Fraction:
    if g.n == 0:
        return Fraction(0)
    return Fraction(2 * g.m, g.n)


def mad_bruteforce(g: Graph, limit: int = BRUTEFORCE_LIMIT) -> Fraction:
    if g.n > limit:
        raise BudgetError(f"subset scan limited to {limit} vertices")
    if g.n <= 1:
        return Fraction(0)
    masks = g.masks
    best_e, best_v = 0, 1
    # edges(S) built incrementally from S minus its lowest vertex
    edges_of = [0] * (1 << g.n)
    size_of = [0] * (1 << g.n)
    for s in range(1, 1 << g.n):
        low = (s & -s).bit_length() - 1
        rest = s & (s - 1)
        e = edges_of[s] = edges_of[rest] + (masks[low] & rest).bit_count()
        v = size_of[s] = size_of[rest] + 1
        if e * best_v > best_e * v:
            best_e, best_v = e, v
    best = Fraction(2 * best_e, best_v)
    return best


def _denser_set_exists(g: Graph, edges: list[tuple[int, int]], p: int, q: int) -> bool:
    """Is there a vertex set with e(S)/|S| > p/q?"""
    net = nx.DiGraph()
    for idx, (u, v) in enumerate(edges):
        node = ("e", idx)
        net.add_edge("s", node, capacity=q)
        net.add_edge(node, ("v", u))
        net.add_edge(node, ("v", v))
    for v in range(g.n):
        net.add_edge(("v", v), "t", capacity=p)
    flow = nx.maximum_flow_value(net, "s", "t")
    return flow < q * len(edges)


def max_density(g: Graph) -> Fraction:
    """max over non-empty S of e(S)/|S|, via min-cut binary search."""
    if g.n <= 1 or g.m == 0:
        return Fraction(0)
    edges = g.edges()
    n = g.n
    lo = Fraction(g.m, n)  # attained by S = V
    hi = Fraction(3, 2) if g.is_subcubic() else Fraction(n - 1, 2)
    if not _denser_set_exists(g, edges, lo.numerator, lo.denominator):
        return lo
    # invariant: some S attains >= lo, none exceeds hi
    gap = Fraction(1, n * n)
    while hi - lo >= gap:
        mid = (lo + hi) / 2
        if _denser_set_exists(g, edges, mid.numerator, mid.denominator):
            lo = mid
        else:
            hi = mid
    # distinct fractions with denominators <= n differ by more than 1/n^2
    for size in range(1, n + 1):
        e = -(-lo.numerator * size // lo.denominator)
        cand = Fraction(e, size)
        if lo <= cand <= hi:
            return cand
    raise AssertionError("binary search lost the optimum")  # pragma: no cover


def mad_exact(g: Graph) -> Fraction:
    return 2 * max_density(g)


def girth_mad_bound(girth_value: int) -> Fraction:
    """2g/(g-2): planar graphs of girth >= g have mad below this."""
    if girth_value < 3:
        raise InputError("girth must be at least 3")
    return Fraction(2 * girth_value, girth_value - 2)
