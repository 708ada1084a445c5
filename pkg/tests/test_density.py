from __future__ import annotations

from fractions import Fraction

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dpsq.density import average_degree, girth_mad_bound, mad_bruteforce, mad_exact
from dpsq.enumeration import corpus
from dpsq.errors import BudgetError, InputError
from dpsq.generators import complete, cycle, path, petersen, theta, y_graph
from dpsq.graph import build_graph
from strategies import subcubic_graphs


def test_bruteforce_examples():
    assert mad_bruteforce(cycle(7)) == 2
    assert mad_bruteforce(complete(4)) == 3
    assert mad_bruteforce(theta(2, 2, 2)) == Fraction(9, 4)


def test_exact_examples():
    tree = build_graph(5, [(0, 1), (0, 2), (2, 3), (2, 4)])
    assert mad_exact(tree) == Fraction(8, 5) == mad_bruteforce(tree)
    assert mad_exact(path(5)) == Fraction(8, 5)
    assert mad_exact(petersen()) == 3
    g = y_graph(2, 2, 2)
    assert mad_exact(g) == mad_bruteforce(g)


def test_degenerate_graphs():
    assert mad_exact(build_graph(0, [])) == 0
    assert mad_exact(build_graph(1, [])) == 0
    assert mad_bruteforce(build_graph(1, [])) == 0
    assert mad_exact(build_graph(4, [])) == 0


def test_bruteforce_limit():
    with pytest.raises(BudgetError):
        mad_bruteforce(cycle(21))


def test_exact_on_larger_and_non_subcubic():
    assert mad_exact(cycle(40)) == 2
    assert mad_exact(complete(6)) == 5
    # K4 with a pendant path: the dense part wins
    joined = build_graph(9, complete(4).edges() + [(3, 4), (4, 5), (5, 6), (6, 7), (7, 8)])
    assert mad_exact(joined) == 3


def test_oracle_equivalence_corpus():
    for g in corpus(8):
        assert mad_exact(g) == mad_bruteforce(g)


@settings(max_examples=80)
@given(subcubic_graphs(max_n=12))
def test_mad_properties(g):
    mad = mad_exact(g)
    assert mad == mad_bruteforce(g)
    assert mad >= average_degree(g)
    assert mad <= 3
    # equality with 3 iff a cubic subgraph exists, i.e. the 3-core is non-empty
    core = nx.k_core(nx.Graph(g.edges()), 3) if g.m else nx.Graph()
    assert (mad == 3) == (core.number_of_nodes() > 0)
    half = g.induced(range(g.n // 2 + 1))
    assert mad_exact(half) <= mad


def test_mad_is_canonical_fraction():
    value = mad_exact(theta(2, 2, 2))
    assert (value.numerator, value.denominator) == (9, 4)


def test_girth_bound_examples():
    assert girth_mad_bound(19) == Fraction(38, 17) < Fraction(9, 4)
    assert girth_mad_bound(13) == Fraction(26, 11) < Fraction(12, 5)
    assert girth_mad_bound(3) == 6
    assert girth_mad_bound(18) == Fraction(9, 4)
    with pytest.raises(InputError):
        girth_mad_bound(2)


@given(st.integers(3, 10**6))
def test_girth_bound_decreasing_towards_two(g):
    assert girth_mad_bound(g + 1) < girth_mad_bound(g)
    assert girth_mad_bound(g) > 2


def test_girth_bound_against_cycles():
    # a cycle of length g has mad 2 < 2g/(g-2)
    for g in range(3, 30):
        assert mad_exact(cycle(g)) < girth_mad_bound(g)
