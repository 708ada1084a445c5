"""Immutable simple graphs and the structural queries used throughout.

Vertices are ``0..n-1``. Adjacency is stored both as sorted neighbor tuples
and as integer bitmasks; the masks back the hot loops in the colouring code.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import InputError


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[tuple[int, ...], ...]
    masks: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        masks = []
        for v, nbrs in enumerate(self.adj):
            m = 0
            for w in nbrs:
                m |= 1 << w
            masks.append(m)
        object.__setattr__(self, "masks", tuple(masks))

    def __len__(self) -> int:
        return self.n

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def is_subcubic(self) -> bool:
        return self.max_degree() <= 3

    def induced(self, vertices: Sequence[int]) -> Graph:
        """Induced subgraph, relabelled ``vertices[i] -> i``."""
        index = {v: i for i, v in enumerate(vertices)}
        edges = [
            (index[u], index[v])
            for u in vertices
            for v in self.adj[u]
            if v in index and u < v
        ]
        return build_graph(len(vertices), edges)

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        return build_graph(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return len(bfs_distances(self, 0)) == self.n

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            comp = sorted(bfs_distances(self, s))
            for v in comp:
                seen[v] = True
            comps.append(comp)
        return comps


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if n < 0:
        raise InputError(f"vertex count must be non-negative, got {n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise InputError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise InputError(f"loop at vertex {u}")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n, tuple(tuple(sorted(s)) for s in nbrs))


def bfs_distances(g: Graph, source: int, cutoff: int | None = None) -> dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        if cutoff is not None and dist[u] >= cutoff:
            continue
        for w in g.adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def square(g: Graph) -> Graph:
    """Join every pair of vertices at distance at most two."""
    edges = []
    for u in range(g.n):
        reach = g.masks[u]
        for w in g.adj[u]:
            reach |= g.masks[w]
        reach &= ~(1 << u)
        v = 0
        while reach:
            if reach & 1 and u < v:
                edges.append((u, v))
            reach >>= 1
            v += 1
    return build_graph(g.n, edges)


def girth(g: Graph) -> int | None:
    """Length of a shortest cycle, or ``None`` for a forest.

    One BFS per root; a non-tree edge ``(u, w)`` seen from root ``r`` closes a
    closed walk of length ``d(u) + d(w) + 1`` through ``r``, and the minimum of
    these over all roots is the girth.
    """
    best = None
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] >= best:
                break
            for w in g.adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    length = dist[u] + dist[w] + 1
                    if best is None or length < best:
                        best = length
    return best


@dataclass(frozen=True)
class DegreeStats:
    min_degree: int
    max_degree: int
    histogram: dict[int, int]

    @property
    def is_subcubic(self) -> bool:
        return self.max_degree <= 3


def degree_stats(g: Graph) -> DegreeStats:
    degs = g.degrees()
    return DegreeStats(min(degs, default=0), max(degs, default=0), dict(sorted(Counter(degs).items())))


def require_subcubic(g: Graph) -> None:
    if not g.is_subcubic():
        raise InputError(f"graph is not subcubic (max degree {g.max_degree()})")


@dataclass(frozen=True)
class Thread:
    """A maximal run of degree-2 vertices.

    ``ends`` holds the two attachment vertices (degree != 2) in walk order; it
    is empty for a cyclic thread, i.e. a whole 2-regular component. Both ends
    may be the same vertex when the thread closes a cycle through one
    3-vertex.
    """

    vertices: tuple[int, ...]
    ends: tuple[int, ...]
    end_degrees: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def cyclic(self) -> bool:
        return not self.ends

    @property
    def longest(self) -> bool:
        return len(self.ends) == 2 and self.end_degrees == (3, 3)


def find_threads(g: Graph) -> list[Thread]:
    require_subcubic(g)
    deg = g.degrees()
    seen = [False] * g.n
    threads = []
    for start in range(g.n):
        if deg[start] != 2 or seen[start]:
            continue
        seen[start] = True
        # walk each way from start
        sides = []
        closed = False
        for first in g.adj[start]:
            run = []
            prev, cur = start, first
            while deg[cur] == 2 and cur != start:
                run.append(cur)
                seen[cur] = True
                nxt = g.adj[cur][0] if g.adj[cur][0] != prev else g.adj[cur][1]
                prev, cur = cur, nxt
            if cur == start:
                closed = True
                break
            sides.append((run, cur))
        if closed:
            cycle = _cycle_order(g, start)
            threads.append(Thread(tuple(cycle), (), ()))
            continue
        (left, lend), (right, rend) = sides
        verts = list(reversed(left)) + [start] + right
        ends = (lend, rend)
        if verts[0] > verts[-1] or (len(verts) == 1 and lend > rend):
            verts.reverse()
            ends = (rend, lend)
        threads.append(Thread(tuple(verts), ends, (deg[ends[0]], deg[ends[1]])))
    threads.sort(key=lambda t: min(t.vertices))
    return threads


def _cycle_order(g: Graph, start: int) -> list[int]:
    first = min(g.adj[start])
    order = [start]
    prev, cur = start, first
    while cur != start:
        order.append(cur)
        nxt = g.adj[cur][0] if g.adj[cur][0] != prev else g.adj[cur][1]
        prev, cur = cur, nxt
    lo = order.index(min(order))
    order = order[lo:] + order[:lo]
    if len(order) > 2 and order[-1] < order[1]:
        order = [order[0]] + order[:0:-1]
    return order


@dataclass(frozen=True, order=True)
class ThreadProfile:
    """Sorted thread lengths on the three branches at a 3-vertex."""

    lengths: tuple[int, int, int]

    def within(self, bound: tuple[int, int, int]) -> bool:
        return all(a <= b for a, b in zip(self.lengths, sorted(bound)))


def branch_length(g: Graph, v: int, first: int) -> tuple[int, int]:
    """Walk from ``v`` through ``first`` along degree-2 vertices.

    Returns the number of degree-2 vertices passed and the vertex where the
    walk stopped (a vertex of degree != 2, or ``v`` itself).
    """
    count = 0
    prev, cur = v, first
    while g.degree(cur) == 2 and cur != v:
        count += 1
        a, b = g.adj[cur]
        prev, cur = cur, (b if a == prev else a)
    return count, cur


def y_profile(g: Graph, v: int) -> ThreadProfile:
    if g.degree(v) != 3:
        raise InputError(f"vertex {v} has degree {g.degree(v)}, expected 3")
    lengths = sorted(branch_length(g, v, w)[0] for w in g.adj[v])
    return ThreadProfile(tuple(lengths))
