from __future__ import annotations

import random

import pytest

from dpsq.budget import Budget
from dpsq.dp import all_covers_have_transversal, find_transversal, is_dp_k_colorable
from dpsq.density import mad_exact
from dpsq.discharging import BOUNDS
from dpsq.enumeration import corpus, random_subcubic
from dpsq.errors import InputError
from dpsq.generators import Marked, complete, cycle, face, lemma5, lemma6, theta, thread_config, y_graph
from dpsq.graph import build_graph, square
from dpsq.reducibility import (
    SUBCUBIC_SQUARE_DEGREE,
    audit_minimal_structure,
    detect_reducible,
    greedy_order_exists,
    lemma_ids,
    lemma_spec,
    make_configuration,
    order_is_greedy,
    residual_sizes,
    verify_lemma,
    verify_reducible_exhaustive,
)


def sizes_of(marked, k):
    return residual_sizes(make_configuration(marked, k))


def test_residual_examples():
    assert sizes_of(lemma5(1), 5) == (2, 3, 2)
    assert sizes_of(lemma6(1), 6) == (2, 2)
    assert sizes_of(lemma6(1, shared_end=True), 6) == (4, 4)
    assert sizes_of(lemma5(4), 5) == (5, 5, 5, 5)
    assert sizes_of(lemma5(2), 5) == (4, 4, 5, 2, 2)
    assert sizes_of(lemma5(3), 5) == (4, 4, 5, 5, 2, 2)
    assert sizes_of(lemma6(2), 6) == (3, 4, 3, 4)


def test_face_residuals():
    for m in range(3, 9):
        s = sizes_of(face(m), 5)
        assert s[0] == 2 and s[1] == s[-1] == 4
        assert all(x == 5 for x in s[2:-1])


def test_ext2_within_square_degree():
    for lemma_id in lemma_ids():
        specs = lemma_spec(lemma_id)
        for spec in specs if isinstance(specs, list) else [specs]:
            for _, marked in spec.variants:
                cfg = make_configuration(marked, spec.k)
                for pos, e in enumerate(cfg.ext2):
                    assert 0 <= e <= SUBCUBIC_SQUARE_DEGREE - cfg.internal_square.degree(pos)


def test_ext2_override_validation():
    with pytest.raises(InputError):
        make_configuration(lemma6(1), 6, {0: 9})
    with pytest.raises(InputError):
        make_configuration(lemma6(1), 6, {0: -1})


def test_greedy_examples():
    triangle = complete(3)
    assert greedy_order_exists(triangle, (2, 3, 2)) == (0, 2, 1)
    k4 = complete(4)
    order = greedy_order_exists(k4, (3, 4, 3, 4))
    assert order is not None and order_is_greedy(k4, (3, 4, 3, 4), order)
    assert order_is_greedy(k4, (3, 4, 3, 4), (0, 2, 1, 3))
    assert not order_is_greedy(k4, (3, 4, 3, 4), (0, 1))
    assert greedy_order_exists(complete(2), (1, 1)) is None


def test_greedy_matches_permutation_search():
    from itertools import permutations

    rng = random.Random(8)
    for _ in range(150):
        g = square(random_subcubic(rng.randint(1, 6), rng))
        sizes = [rng.randint(1, 5) for _ in range(g.n)]
        found = greedy_order_exists(g, sizes)
        any_order = any(order_is_greedy(g, sizes, p) for p in permutations(range(g.n)))
        assert (found is not None) == any_order
        if found is not None:
            assert order_is_greedy(g, sizes, found)


def test_greedy_certificate_never_contradicted():
    rng = random.Random(12)
    for _ in range(60):
        g = square(random_subcubic(rng.randint(2, 6), rng))
        sizes = [rng.randint(1, 6) for _ in range(g.n)]
        if greedy_order_exists(g, sizes) is None:
            continue
        verdict = all_covers_have_transversal(g, sizes, Budget(covers=10**5), use_peel=False, prune=False)
        assert verdict.colorable


def test_exhaustive_examples():
    cfg = make_configuration(lemma5(2), 5)
    report = verify_reducible_exhaustive(cfg)
    assert report.sizes == (4, 4, 5, 2, 2) and report.status == "VERIFIED"
    k2 = make_configuration(Marked(complete(2), frozenset()), 1)
    report = verify_reducible_exhaustive(k2)
    assert report.status == "REFUTED"
    assert find_transversal(report.witness) is None
    report = verify_reducible_exhaustive(make_configuration(lemma6(3), 6))
    assert report.status == "VERIFIED" and report.n_covers > 0


def test_verify_lemma_examples():
    report = verify_lemma("5red:4")
    assert report.status == "VERIFIED" and report.iso == "K4"
    report = verify_lemma("6red:1")
    assert {c.name: c.sizes for c in report.cases} == {"separate": (2, 2), "shared": (4, 4)}
    assert report.status == "VERIFIED"
    report = verify_lemma("face:3:5")
    (case,) = report.cases
    assert case.method == "greedy" and case.order == (0, 1, 2)
    assert case.stated_order_ok
    line = verify_lemma("6red:3").line()
    assert line.startswith("LEMMA 6red:3 VERIFIED") and line.endswith("iso=K5")


def test_stated_orders_and_sizes():
    for lemma_id in ("5red:1", "5red:2", "5red:3", "5red:5", "6red:1"):
        for case in verify_lemma(lemma_id).cases:
            assert case.stated_order_ok in (True, None)
            assert case.stated_sizes_ok in (True, None)
    # the partial order v1, v2 is not a full certificate, another order is used
    (sep, shared) = verify_lemma("6red:2").cases
    assert sep.stated_order_ok is False and sep.method == "greedy"


@pytest.mark.parametrize("lemma_id", lemma_ids())
def test_every_lemma_verifies(lemma_id):
    assert verify_lemma(lemma_id).status == "VERIFIED"
    assert verify_lemma(lemma_id, exhaustive=True).status == "VERIFIED"


def test_unknown_lemma():
    for bad in ("7red:1", "face:2:5", "face:x", "5red:9"):
        with pytest.raises(InputError):
            verify_lemma(bad)


def test_ext2_override_can_refute():
    report = verify_lemma("6red:1", ext2_override={0: 5, 1: 5})
    assert report.status == "REFUTED"


def test_detect_examples():
    occ = detect_reducible(theta(2, 2, 2), 6)
    assert [o.kind for o in occ] == ["2-thread"] * 3
    occ = detect_reducible(y_graph(3, 1, 1), 5)
    assert any(o.kind == "3-thread" for o in occ)
    assert detect_reducible(complete(4), 5) == []
    assert detect_reducible(theta(2, 2, 2), 5) == []
    with pytest.raises(InputError):
        detect_reducible(complete(5), 5)


def embed(marked, rng, host_n=7):
    """Config plus a random host, each boundary vertex joined to spare host slots."""
    g = marked.graph
    host = random_subcubic(host_n, rng)
    shift = g.n
    edges = g.edges() + [(u + shift, v + shift) for u, v in host.edges()]
    deg = g.degrees() + host.degrees()
    for b in sorted(marked.boundary):
        spare = [h for h in range(shift, shift + host_n) if deg[h] < 3]
        rng.shuffle(spare)
        for h in spare[:rng.randint(1, 2)]:
            edges.append((b, h))
            deg[b] += 1
            deg[h] += 1
    return build_graph(shift + host_n, edges)


@pytest.mark.parametrize("k,kind,marked", [
    (5, "3-thread", lemma5(1)),
    (5, "5red:2", lemma5(2)),
    (5, "5red:3", lemma5(3)),
    (5, "5red:4", lemma5(4)),
    (5, "5red:5", lemma5(5)),
    (5, "5red:6", lemma5(6)),
    (6, "2-thread", lemma6(1)),
    (6, "6red:2", lemma6(2)),
    (6, "6red:3", lemma6(3)),
])
def test_detector_finds_embedded_configurations(k, kind, marked):
    rng = random.Random(kind)
    inside = set(marked.internal)
    for _ in range(15):
        g = embed(marked, rng)
        found = [set(o.vertices) for o in detect_reducible(g, k) if o.kind == kind]
        assert inside in found


def test_face_detection():
    g = build_graph(6, cycle(5).edges() + [(0, 5)])
    assert any(o.kind == "face" for o in detect_reducible(g, 5))


def test_audit_examples():
    report = audit_minimal_structure(theta(2, 2, 2), 5)
    assert report.applicable and report.ok
    assert report.profiles == {0: (2, 2, 2), 1: (2, 2, 2)}
    # K4 with the three edges at one vertex subdivided
    y111 = build_graph(7, [(1, 2), (2, 3), (1, 3), (0, 4), (4, 1), (0, 5), (5, 2), (0, 6), (6, 3)])
    report = audit_minimal_structure(y111, 6)
    assert report.applicable and report.ok and report.profiles[0] == (1, 1, 1)
    assert not audit_minimal_structure(y_graph(3, 1, 1), 5).applicable


def test_corpus_structure_and_consistency():
    for g in corpus(8):
        for k in (5, 6):
            report = audit_minimal_structure(g, k)
            assert report.ok
            if mad_exact(g) < BOUNDS[k] and report.applicable:
                # configuration-free below the bound: only possible if DP-k holds directly
                assert is_dp_k_colorable(square(g), k)


def test_thread_config_variants():
    assert thread_config(3).graph.n == 5
    assert thread_config(3, shared_end=True).graph.n == 4
    with pytest.raises(InputError):
        thread_config(0)
