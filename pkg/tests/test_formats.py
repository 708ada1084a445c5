from __future__ import annotations

import random

import pytest
from hypothesis import given

from dpsq.dp import build_cover, find_transversal, is_dp_k_colorable
from dpsq.enumeration import random_subcubic
from dpsq.errors import InputError, InvalidCoverError
from dpsq.formats import format_cover, format_graph, parse_cover, parse_graph, read_graph, write_graph
from dpsq.generators import cycle, petersen
from dpsq.graph import build_graph, square
from strategies import subcubic_graphs


def test_graph_text_is_exact():
    assert format_graph(cycle(4)) == "p edge 4 4\ne 1 2\ne 1 4\ne 2 3\ne 3 4\n"


def test_parse_with_comments_and_blank_lines():
    g = parse_graph("c hello\n\np edge 3 2\ne 2 1\nc mid\ne 2 3\n")
    assert g.edges() == [(0, 1), (1, 2)]


@pytest.mark.parametrize("text", [
    "e 1 2\n",
    "p edge 2 1\ne 1 3\n",
    "p edge 2 2\ne 1 2\n",
    "p edge 2 1\ne 1 1\n",
    "p edge x 1\n",
    "p col 2 1\ne 1 2\n",
    "p edge 2 0\np edge 2 0\n",
    "p edge 2 1\nq 1 2\n",
    "",
])
def test_parse_graph_rejects(text):
    with pytest.raises(InputError):
        parse_graph(text)


@given(subcubic_graphs(max_n=12))
def test_graph_round_trip(g):
    text = format_graph(g)
    again = parse_graph(text)
    assert again == g
    assert format_graph(again) == text


def test_graph_file_round_trip(tmp_path):
    path = tmp_path / "petersen.txt"
    write_graph(petersen(), path)
    assert read_graph(path) == petersen()


def test_cover_round_trip_with_transversal():
    rng = random.Random(4)
    for _ in range(50):
        g = square(random_subcubic(rng.randint(2, 7), rng))
        sizes = [rng.randint(1, 4) for _ in range(g.n)]
        matchings = {}
        for u, v in g.edges():
            left, right = list(range(sizes[u])), list(range(sizes[v]))
            rng.shuffle(right)
            matchings[(u, v)] = list(zip(left, right))
        cover = build_cover(g, sizes, matchings)
        t = find_transversal(cover)
        text = format_cover(cover, t)
        again = parse_cover(text)
        assert again.sizes == cover.sizes
        assert again.base == cover.base
        assert all(again.pairs(u, v) == cover.pairs(u, v) for u, v in g.edges())
        assert format_cover(again, t) == text


def test_witness_cover_round_trip():
    verdict = is_dp_k_colorable(cycle(4), 2)
    text = format_cover(verdict.witness)
    assert text.splitlines()[:4] == ["l 1 2", "l 2 2", "l 3 2", "l 4 2"]
    assert find_transversal(parse_cover(text)) is None


def test_cover_against_given_base():
    base = build_graph(3, [(0, 1), (1, 2)])
    cover = parse_cover("l 1 1\nl 2 1\nl 3 1\nm 1 2 0:0\n", base)
    assert cover.base == base
    assert find_transversal(cover) is None


@pytest.mark.parametrize("text", [
    "l 1 2\nl 2 2\nm 1 2 0:0 0:1\n",
    "l 1 2\nl 2 2\nm 1 2 0-0\n",
    "l 1 2\nm 1 2\n",
    "l 0 2\n",
    "x 1 2\n",
])
def test_parse_cover_rejects(text):
    with pytest.raises((InputError, InvalidCoverError)):
        parse_cover(text)
