"""Canonical labelling and isomorphism for small graphs.

Individualisation-refinement without automorphism pruning: refine an ordered
partition to an equitable one, branch on the first non-singleton cell, and
keep the lexicographically largest relabelled edge list. Exponential in the
worst case, but fast for the subcubic graphs this package handles (n <= 12).
"""

from __future__ import annotations

from .errors import BudgetError
from .graph import Graph

MAX_ISO_VERTICES = 12

Certificate = tuple[int, tuple[tuple[int, int], ...]]


def _refine(g: Graph, cells: list[list[int]]) -> list[list[int]]:
    while True:
        where = [0] * g.n
        for i, cell in enumerate(cells):
            for v in cell:
                where[v] = i
        new_cells: list[list[int]] = []
        changed = False
        for i, cell in enumerate(cells):
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            sig = {}
            for v in cell:
                counts = [0] * len(cells)
                for w in g.adj[v]:
                    counts[where[w]] += 1
                sig[v] = tuple(counts)
            keys = sorted(set(sig.values()))
            if len(keys) == 1:
                new_cells.append(cell)
                continue
            changed = True
            for key in keys:
                new_cells.append([v for v in cell if sig[v] == key])
        cells = new_cells
        if not changed:
            return cells


def _certificate(g: Graph, cells: list[list[int]]) -> tuple[tuple[tuple[int, int], ...], list[int]]:
    pos = [0] * g.n
    for i, cell in enumerate(cells):
        pos[cell[0]] = i
    edges = sorted(tuple(sorted((pos[u], pos[v]))) for u, v in g.edges())
    return tuple(edges), pos


def canonical_labelling(g: Graph) -> tuple[Certificate, list[int]]:
    """Return the canonical certificate and a permutation realising it.

    ``g.relabel(perm)`` has exactly the edge list stored in the certificate.
    """
    best: list = [None, None]

    def search(cells: list[list[int]]) -> None:
        cells = _refine(g, cells)
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            cert, pos = _certificate(g, cells)
            if best[0] is None or cert > best[0]:
                best[0], best[1] = cert, pos
            return
        cell = cells[target]
        for v in cell:
            rest = [w for w in cell if w != v]
            search(cells[:target] + [[v], rest] + cells[target + 1:])

    if g.n == 0:
        return (0, ()), []
    start = {}
    for v in range(g.n):
        start.setdefault(g.degree(v), []).append(v)
    search([start[d] for d in sorted(start)])
    return (g.n, best[0]), best[1]


def canonical_form(g: Graph) -> Certificate:
    return canonical_labelling(g)[0]


def is_isomorphic(g: Graph, h: Graph, limit: int = MAX_ISO_VERTICES) -> bool:
    if max(g.n, h.n) > limit:
        raise BudgetError(f"isomorphism test limited to {limit} vertices")
    if g.n != h.n or g.m != h.m:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)
