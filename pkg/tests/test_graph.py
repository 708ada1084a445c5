from __future__ import annotations

from collections import deque

import networkx as nx
import pytest
from hypothesis import given, settings

from dpsq.errors import InputError
from dpsq.generators import complete, cycle, generate, path, petersen, theta, y_graph
from dpsq.graph import (
    build_graph,
    degree_stats,
    find_threads,
    girth,
    square,
    y_profile,
)
from strategies import subcubic_graphs


def bfs_dist(g, s):
    dist = {s: 0}
    queue = deque([s])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def test_build_path_and_cycle():
    p3 = build_graph(3, [(0, 1), (1, 2)])
    assert p3.adj == ((1,), (0, 2), (1,))
    c4 = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert c4.edges() == [(0, 1), (0, 3), (1, 2), (2, 3)]


def test_build_rejects_loop_and_range():
    with pytest.raises(InputError):
        build_graph(1, [(0, 0)])
    with pytest.raises(InputError):
        build_graph(2, [(0, 2)])


def test_duplicate_edges_collapse():
    g = build_graph(2, [(0, 1), (1, 0), (0, 1)])
    assert g.m == 1


@given(subcubic_graphs(max_n=9))
def test_adjacency_invariants(g):
    for v in range(g.n):
        assert v not in g.adj[v]
        assert list(g.adj[v]) == sorted(set(g.adj[v]))
        for w in g.adj[v]:
            assert 0 <= w < g.n and v in g.adj[w]


def test_square_examples():
    assert square(cycle(4)).edges() == complete(4).edges()
    assert square(path(3)).edges() == complete(3).edges()
    assert square(petersen()).edges() == complete(10).edges()


def test_square_of_complete_is_complete():
    for n in range(1, 9):
        assert square(complete(n)).edges() == complete(n).edges()


@given(subcubic_graphs(max_n=10))
def test_square_matches_bfs_distances(g):
    sq = square(g)
    for u in range(g.n):
        d = bfs_dist(g, u)
        for v in range(g.n):
            assert sq.has_edge(u, v) == (u != v and d.get(v, 99) <= 2)


@given(subcubic_graphs(max_n=9))
def test_square_contains_edges_and_induced_monotone(g):
    sq = square(g)
    assert set(g.edges()) <= set(sq.edges())
    keep = list(range(0, g.n, 2)) or [0]
    h = g.induced(keep)
    sq_h = square(h)
    for a, b in sq_h.edges():
        assert sq.has_edge(keep[a], keep[b])


def test_girth_examples():
    assert girth(cycle(5)) == 5
    assert girth(path(6)) is None
    assert girth(y_graph(2, 1, 3)) is None
    assert girth(petersen()) == 5
    assert girth(complete(4)) == 3


@settings(max_examples=60)
@given(subcubic_graphs(max_n=10))
def test_girth_matches_networkx(g):
    expected = nx.girth(nx.Graph(g.edges()))
    assert girth(g) == (None if expected == float("inf") else expected)


def test_degree_stats_examples():
    def triple(g):
        s = degree_stats(g)
        return s.min_degree, s.max_degree, s.histogram

    assert triple(cycle(4)) == (2, 2, {2: 4})
    assert triple(complete(4)) == (3, 3, {3: 4})
    star = build_graph(4, [(0, 1), (0, 2), (0, 3)])
    assert triple(star) == (1, 3, {1: 3, 3: 1})
    stats = degree_stats(star)
    assert stats.is_subcubic
    assert not degree_stats(complete(5)).is_subcubic


def test_threads_y122():
    threads = find_threads(y_graph(1, 2, 2))
    assert sorted(len(t) for t in threads) == [1, 2, 2]


def test_threads_cycle_is_cyclic():
    (t,) = find_threads(cycle(6))
    assert t.cyclic and sorted(t.vertices) == list(range(6))


def test_threads_theta222():
    threads = find_threads(theta(2, 2, 2))
    assert [len(t) for t in threads] == [2, 2, 2]
    assert all(set(t.ends) == {0, 1} and t.longest for t in threads)


def test_threads_reject_non_subcubic():
    with pytest.raises(InputError):
        find_threads(complete(5))


@given(subcubic_graphs(max_n=10))
def test_threads_partition_degree_two_vertices(g):
    threads = find_threads(g)
    covered = [v for t in threads for v in t.vertices]
    assert sorted(covered) == [v for v in range(g.n) if g.degree(v) == 2]
    for t in threads:
        for a, b in zip(t.vertices, t.vertices[1:]):
            assert g.has_edge(a, b)


def test_y_profiles():
    assert y_profile(theta(2, 2, 2), 0).lengths == (2, 2, 2)
    assert all(y_profile(complete(4), v).lengths == (0, 0, 0) for v in range(4))
    assert y_profile(generate("y", 1, 1, 1), 0).lengths == (1, 1, 1)
    with pytest.raises(InputError):
        y_profile(cycle(4), 0)


def test_theta222_degrees():
    g = generate("theta", 2, 2, 2)
    assert (g.n, g.m) == (8, 9)
    assert sorted(g.degrees()) == [2] * 6 + [3] * 2


def test_generate_rejects_unknown():
    with pytest.raises(InputError):
        generate("nope")
    with pytest.raises(InputError):
        generate("cycle")
    with pytest.raises(InputError):
        generate("lemma5", 7)
