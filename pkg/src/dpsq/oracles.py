"""Brute-force colouring oracles, kept free of the cover machinery.

They exist to cross-check ``dp``: identity covers must reproduce
``list_coloring_oracle`` and the sandwich chi <= chi_l <= chi_DP must hold.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .graph import Graph


def list_coloring_oracle(g: Graph, lists: Sequence[Iterable[int]]) -> bool:
    """Is there a proper colouring with each vertex coloured from its list?"""
    lists = [sorted(set(lst)) for lst in lists]
    colour: list[int | None] = [None] * g.n
    order = sorted(range(g.n), key=lambda v: (len(lists[v]), v))

    def rec(pos: int) -> bool:
        if pos == len(order):
            return True
        v = order[pos]
        for c in lists[v]:
            if all(colour[w] != c for w in g.adj[v]):
                colour[v] = c
                if rec(pos + 1):
                    return True
        colour[v] = None
        return False

    return rec(0)


def is_k_colorable(g: Graph, k: int) -> bool:
    return list_coloring_oracle(g, [range(k)] * g.n)


def chromatic_oracle(g: Graph) -> int:
    """Exact chromatic number by DSATUR-ordered branch and bound."""
    if g.n == 0:
        return 0
    colour = [-1] * g.n
    best = g.n

    def rec(used: int, done: int) -> None:
        nonlocal best
        if used >= best:
            return
        if done == g.n:
            best = used
            return
        v = max(
            (u for u in range(g.n) if colour[u] < 0),
            key=lambda u: (len({colour[w] for w in g.adj[u] if colour[w] >= 0}), g.degree(u), -u),
        )
        taken = {colour[w] for w in g.adj[v]}
        for c in range(used + 1):
            if c in taken or c >= best:
                continue
            colour[v] = c
            rec(max(used, c + 1), done + 1)
            colour[v] = -1

    rec(0, 0)
    return best


def two_distance_colorable(g: Graph, k: int) -> bool:
    """k-colouring of g in which vertices at distance 1 or 2 differ.

    Distances are read off g itself, never via the square graph; vertices
    are coloured in index order with plain backtracking.
    """
    close = []
    for u in range(g.n):
        near = set(g.adj[u])
        for w in g.adj[u]:
            near.update(g.adj[w])
        near.discard(u)
        close.append([v for v in near if v < u])
    colour = [-1] * g.n

    def rec(u: int) -> bool:
        if u == g.n:
            return True
        for c in range(k):
            if all(colour[v] != c for v in close[u]):
                colour[u] = c
                if rec(u + 1):
                    return True
        colour[u] = -1
        return False

    return rec(0)


def two_distance_number(g: Graph) -> int:
    k = 0
    while not two_distance_colorable(g, k):
        k += 1
    return k
