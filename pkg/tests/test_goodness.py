"""Density thresholds, the branch-and-bound search, and oracle agreement."""

import random

import pytest

import labelkit as lk
from labelkit.errors import DomainError, SizeGuardError
from labelkit.goodness import reports_agree
from labelkit.growth import log_growth

from oracles import max_edges_bruteforce


LOG = log_growth()


# -- thresholds ----------------------------------------------------------------


def test_threshold_examples():
    assert lk.threshold(4, 16, LOG, 1.0) == pytest.approx(4.0)  # 4*2/2
    assert lk.threshold(5, 16, LOG, 1.0) == pytest.approx(5 * 2.321928094887362)
    assert lk.threshold(2, 4, LOG, 2.0) == pytest.approx(4.0)  # 2*2*1/1


def test_threshold_regime_boundary_square_n():
    # k = sqrt(n) exactly still uses the stricter divided-by-log form.
    strict = lk.threshold(4, 16, LOG, 1.0)
    relaxed_would_be = 1.0 * 4 * LOG.value(4)
    assert strict == pytest.approx(relaxed_would_be / 2)
    # one vertex more tips the regime
    assert lk.threshold(4, 15, LOG, 1.0) == pytest.approx(relaxed_would_be)


def test_threshold_range_errors():
    with pytest.raises(DomainError):
        lk.threshold(1, 10, LOG, 1.0)
    with pytest.raises(DomainError):
        lk.threshold(11, 10, LOG, 1.0)


# -- densest k-subgraph search ---------------------------------------------------


def test_max_edges_examples(c6):
    res = lk.max_edges_k_subgraph(lk.complete_graph(5), 3)
    assert res.max_edges == 3 and res.exhaustive
    res = lk.max_edges_k_subgraph(c6, 3)
    assert res.max_edges == 2
    res = lk.max_edges_k_subgraph(lk.star_graph(5), 3)
    assert res.max_edges == 2


def test_max_edges_witness_consistent(c6):
    res = lk.max_edges_k_subgraph(c6, 4)
    assert len(res.witness) == 4
    sub = lk.induced_subgraph(c6, res.witness)
    assert sub.m == res.max_edges == 3


def test_max_edges_matches_bruteforce_random():
    rng = random.Random(11)
    for _ in range(60):
        n = rng.randint(2, 9)
        g = lk.sample_gnp(n, rng.random(), random.Random(rng.getrandbits(32)))
        k = rng.randint(2, n)
        res = lk.max_edges_k_subgraph(g, k)
        expect, _ = max_edges_bruteforce(g, k)
        assert res.max_edges == expect and res.exhaustive


def test_max_edges_early_exit(c6):
    res = lk.max_edges_k_subgraph(lk.complete_graph(6), 4, early_exit_above=3.0)
    assert res.status == "exceeded" and not res.exhaustive
    assert res.max_edges > 3 and len(res.witness) == 4
    res = lk.max_edges_k_subgraph(c6, 3, early_exit_above=2.0)
    assert res.status == "no_subset_exceeds"


def test_max_edges_budget_is_explicit():
    g = lk.sample_gnp(12, 0.5, random.Random(3))
    res = lk.max_edges_k_subgraph(g, 6, node_budget=3)
    assert res.status == "inconclusive" and not res.exhaustive


# -- is_f_good -------------------------------------------------------------------


def test_k4_good(k4):
    report = lk.is_f_good(k4, LOG, 1.0)
    assert report.verdict == "good"
    assert all(rec.certified for rec in report.records)


def test_k8_violated():
    report = lk.is_f_good(lk.complete_graph(8), LOG, 1.0)
    assert report.verdict == "violated"
    vertices, edges = report.witness
    assert lk.induced_subgraph(lk.complete_graph(8), vertices).m == edges
    thr = lk.threshold(len(vertices), 8, LOG, 1.0)
    assert edges > thr
    # the full graph itself also violates: 28 edges against threshold 24
    assert 28 > lk.threshold(8, 8, LOG, 1.0) == pytest.approx(24.0)


def test_empty_graph_good():
    report = lk.is_f_good(lk.empty_graph(10), LOG, 0.01)
    assert report.verdict == "good"


def test_tiny_graphs_vacuously_good():
    assert lk.is_f_good(lk.empty_graph(0), LOG, 1.0).verdict == "good"
    assert lk.is_f_good(lk.empty_graph(1), LOG, 1.0).verdict == "good"


def test_refute_mode_matches_exact_verdicts():
    rng = random.Random(5)
    for _ in range(40):
        n = rng.randint(2, 10)
        g = lk.sample_gnp(n, rng.random(), random.Random(rng.getrandbits(32)))
        for c in (0.5, 1.0, 2.0):
            exact = lk.is_f_good(g, LOG, c, mode="exact")
            refute = lk.is_f_good(g, LOG, c, mode="refute")
            assert exact.verdict == refute.verdict


def test_budget_exhaustion_is_inconclusive():
    g = lk.sample_gnp(12, 0.6, random.Random(9))
    report = lk.is_f_good(g, LOG, 1.3, node_budget=5)
    assert report.verdict in ("inconclusive", "violated")
    if report.verdict == "inconclusive":
        assert any(rec.method == "budget" for rec in report.records)


def test_witness_revalidates():
    rng = random.Random(21)
    seen = 0
    for _ in range(60):
        n = rng.randint(4, 10)
        g = lk.sample_gnp(n, 0.8, random.Random(rng.getrandbits(32)))
        report = lk.is_f_good(g, LOG, 0.8)
        if report.verdict == "violated":
            seen += 1
            vertices, edges = report.witness
            assert lk.induced_subgraph(g, vertices).m == edges
            assert edges > lk.threshold(len(vertices), n, LOG, 0.8)
    assert seen > 0


# -- oracle agreement --------------------------------------------------------------


def test_oracle_guard():
    with pytest.raises(SizeGuardError):
        lk.naive_goodness_oracle(lk.empty_graph(13), LOG, 1.0)


def test_oracle_matches_examples(k4):
    report = lk.naive_goodness_oracle(k4, LOG, 1.0)
    assert report.verdict == "good"
    maxima = {rec.k: rec.max_edges for rec in report.records}
    assert maxima == {2: 1, 3: 3, 4: 6}


def test_agreement_all_small_graphs():
    sqrt = lk.parse_growth_spec("pow:1:0.5")
    for n in range(2, 6):
        for g in lk.enumerate_unlabeled(n):
            for f in (LOG, sqrt):
                for c in (0.5, 1.0, 2.0):
                    fast = lk.is_f_good(g, f, c)
                    oracle = lk.naive_goodness_oracle(g, f, c)
                    assert reports_agree(fast, oracle), (g, f.spec(), c)


def test_goodness_monotone_under_subgraphs():
    rng = random.Random(17)
    checked = 0
    while checked < 30:
        n = rng.randint(4, 10)
        g = lk.sample_gnp(n, 0.3, random.Random(rng.getrandbits(32)))
        if lk.is_f_good(g, LOG, 1.0).verdict != "good":
            continue
        checked += 1
        verts = sorted(rng.sample(range(n), rng.randint(2, n)))
        sub = lk.induced_subgraph(g, verts)
        if sub.m and rng.random() < 0.5:
            sub = lk.Graph(sub.n, sub.edges - {rng.choice(sorted(sub.edges))})
        assert lk.is_f_good(sub, LOG, 1.0).verdict == "good"
