"""Named graph families and the reducible configurations.

Configuration generators return a ``Marked`` graph: internal vertices come
first, boundary vertices (stand-ins for "the rest of the host graph") last.
"""

from __future__ import annotations

from typing import NamedTuple

from .errors import InputError
from .graph import Graph, build_graph


class Marked(NamedTuple):
    graph: Graph
    boundary: frozenset[int]

    @property
    def internal(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.graph.n) if v not in self.boundary)


def cycle(n: int) -> Graph:
    if n < 3:
        raise InputError("cycle needs at least 3 vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise InputError("path needs at least 1 vertex")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    if n < 1:
        raise InputError("complete graph needs at least 1 vertex")
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)


def y_graph(a: int, b: int, c: int) -> Graph:
    """A centre (vertex 0) with three threads of a, b, c degree-2 vertices.

    Each branch ends in a leaf, so the centre's profile is exactly (a, b, c).
    """
    if min(a, b, c) < 0:
        raise InputError("thread lengths must be non-negative")
    edges = []
    n = 1
    for length in (a, b, c):
        prev = 0
        for _ in range(length + 1):
            edges.append((prev, n))
            prev = n
            n += 1
    return build_graph(n, edges)


def theta(a: int, b: int, c: int) -> Graph:
    """Hubs 0 and 1 joined by three internally disjoint threads."""
    lengths = sorted((a, b, c))
    if lengths[0] < 0:
        raise InputError("thread lengths must be non-negative")
    if lengths[1] == 0:
        raise InputError("at most one thread of a theta graph may be empty")
    edges = []
    n = 2
    for length in (a, b, c):
        prev = 0
        for _ in range(length):
            edges.append((prev, n))
            prev = n
            n += 1
        edges.append((prev, 1))
    return build_graph(n, edges)


def f23() -> Graph:
    """K_{2,3}: hubs 0, 1 and the three common neighbours 2, 3, 4."""
    return build_graph(5, [(h, u) for h in (0, 1) for u in (2, 3, 4)])


def face(m: int) -> Marked:
    """An m-cycle whose vertex 0 carries a pendant boundary vertex m."""
    c = cycle(m)
    g = build_graph(m + 1, c.edges() + [(0, m)])
    return Marked(g, frozenset({m}))


def pendant() -> Marked:
    """A 1-vertex (0) hanging off a boundary vertex (1)."""
    return Marked(build_graph(2, [(0, 1)]), frozenset({1}))


def thread_config(length: int, shared_end: bool = False) -> Marked:
    """A thread of ``length`` 2-vertices attached to one or two boundary ends."""
    if length < 1:
        raise InputError("thread length must be positive")
    edges = [(i, i + 1) for i in range(length - 1)]
    if shared_end:
        edges += [(length, 0), (length - 1, length)]
        return Marked(build_graph(length + 1, edges), frozenset({length}))
    edges += [(length, 0), (length - 1, length + 1)]
    return Marked(build_graph(length + 2, edges), frozenset({length, length + 1}))


def lemma5(i: int, shared_end: bool = False) -> Marked:
    """The six configurations shown 5-reducible.

    1: 3-thread v1 v2 v3 (optionally with both ends on one host vertex);
    2: 3-face v1 v2 v3 whose 3-vertices v1, v2 carry 1-threads v1', v2';
    3: 4-face v1..v4 with adjacent 3-vertices v1, v2 carrying 1-threads;
    4: two 3-faces on a common edge (K_4 minus an edge);
    5: two 4-faces on a common edge;
    6: a 3-face and a 4-face on a common edge.
    """
    if i == 1:
        return thread_config(3, shared_end)
    if i == 2:
        # v1=0 v2=1 v3=2 v1'=3 v2'=4, boundary u1=5 u2=6
        edges = [(0, 1), (1, 2), (2, 0), (0, 3), (1, 4), (3, 5), (4, 6)]
        return Marked(build_graph(7, edges), frozenset({5, 6}))
    if i == 3:
        # v1=0 v2=1 v3=2 v4=3 v1'=4 v2'=5, boundary u1=6 u2=7
        edges = [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 5), (4, 6), (5, 7)]
        return Marked(build_graph(8, edges), frozenset({6, 7}))
    if i == 4:
        # u=0 v=1 w1=2 w2=3
        edges = [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)]
        return Marked(build_graph(4, edges), frozenset())
    if i == 5:
        # v1..v6 = 0..5; faces v1v2v3v4 and v1v2v5v6
        edges = [(0, 1), (1, 2), (2, 3), (3, 0), (1, 4), (4, 5), (5, 0)]
        return Marked(build_graph(6, edges), frozenset())
    if i == 6:
        # v1..v5 = 0..4; faces v1v2v3 and v1v2v4v5
        edges = [(0, 1), (1, 2), (2, 0), (1, 3), (3, 4), (4, 0)]
        return Marked(build_graph(5, edges), frozenset())
    raise InputError(f"lemma5 has items 1..6, got {i}")


def lemma6(i: int, shared_end: bool = False) -> Marked:
    """The three configurations shown 6-reducible.

    1: 2-thread v1 v2 (optionally with a common host neighbour);
    2: 4-face v1..v4 whose only 3-vertices v1, v3 are non-adjacent;
    3: F_{2,3}.
    """
    if i == 1:
        return thread_config(2, shared_end)
    if i == 2:
        # v1..v4 = 0..3, boundary u1=4 (at v1), u3=5 (at v3)
        edges = [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (2, 5)]
        return Marked(build_graph(6, edges), frozenset({4, 5}))
    if i == 3:
        return Marked(f23(), frozenset())
    raise InputError(f"lemma6 has items 1..3, got {i}")


_ARITY = {
    "cycle": 1, "path": 1, "complete": 1, "y": 3, "theta": 3, "f23": 0,
    "face": 1, "lemma5": 1, "lemma6": 1, "petersen": 0,
}


def names() -> list[str]:
    return sorted(_ARITY)


def generate_marked(name: str, *params: int) -> Marked:
    if name not in _ARITY:
        raise InputError(f"unknown generator {name!r}; known: {', '.join(names())}")
    if len(params) != _ARITY[name]:
        raise InputError(f"{name} takes {_ARITY[name]} integer parameter(s), got {len(params)}")
    if name == "face":
        return face(*params)
    if name == "lemma5":
        return lemma5(*params)
    if name == "lemma6":
        return lemma6(*params)
    build = {
        "cycle": cycle, "path": path, "complete": complete, "y": y_graph,
        "theta": theta, "f23": f23, "petersen": petersen,
    }[name]
    return Marked(build(*params), frozenset())


def generate(name: str, *params: int) -> Graph:
    return generate_marked(name, *params).graph
