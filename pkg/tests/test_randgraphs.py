"""Samplers, tail bounds, and the Monte Carlo experiment plumbing."""

import math
import random
from fractions import Fraction
from itertools import combinations

import pytest
from scipy import stats

import labelkit as lk
from labelkit.errors import DomainError
from labelkit.growth import log_growth
from labelkit.randgraphs import (
    RngStream,
    derive_seed,
    exact_binomial_tail,
    pair_count,
    pair_from_index,
    run_goodness_experiment,
    wilson_interval,
)

from oracles import exact_binomial_tail_fraction


LOG = log_growth()


# -- seed derivation -----------------------------------------------------------


def test_derive_seed_deterministic_and_spread():
    a = derive_seed(42, 0)
    assert a == derive_seed(42, 0)
    seeds = {derive_seed(42, i) for i in range(1000)}
    assert len(seeds) == 1000
    assert derive_seed(43, 0) != a


def test_pair_index_bijection():
    for n in range(2, 9):
        expect = list(combinations(range(n), 2))
        got = [pair_from_index(n, i) for i in range(pair_count(n))]
        assert got == expect


# -- G(n, p) --------------------------------------------------------------------


def test_gnp_extremes():
    assert lk.sample_gnp(6, 0.0, random.Random(1)).m == 0
    assert lk.sample_gnp(6, 1.0, random.Random(1)) == lk.complete_graph(6)


def test_gnp_out_of_range():
    with pytest.raises(DomainError):
        lk.sample_gnp(5, 1.5, random.Random(1))


def test_gnp_deterministic_under_seed():
    g1 = lk.sample_gnp(30, 0.37, RngStream(99).trial(4))
    g2 = lk.sample_gnp(30, 0.37, RngStream(99).trial(4))
    assert g1 == g2
    assert g1 != lk.sample_gnp(30, 0.37, RngStream(99).trial(5))


def test_gnp_edge_count_concentration():
    # n = 10^4, p = 1/2: the count must land within 5 sigma of the mean.
    n, p = 10_000, 0.5
    N = pair_count(n)
    mean, sigma = N * p, math.sqrt(N * p * (1 - p))
    for seed in (1, 2):
        g = lk.sample_gnp(n, p, RngStream(seed).trial(0))
        assert abs(g.m - mean) < 5 * sigma


def test_gnp_bernoulli_law_small():
    # exhaustively compare edge marginals on n=4 against p
    trials, p = 20_000, 0.3
    stream = RngStream(7)
    counts = {pair: 0 for pair in combinations(range(4), 2)}
    for t in range(trials):
        g = lk.sample_gnp(4, p, stream.trial(t))
        for e in g.edges:
            counts[e] += 1
    for pair, hit in counts.items():
        assert abs(hit / trials - p) < 0.02, pair


# -- G(n, m) --------------------------------------------------------------------


def test_gnm_extremes():
    assert lk.sample_gnm(6, 0, random.Random(1)).m == 0
    assert lk.sample_gnm(6, 15, random.Random(1)) == lk.complete_graph(6)


def test_gnm_exact_count_and_range():
    g = lk.sample_gnm(12, 30, random.Random(5))
    assert g.m == 30
    with pytest.raises(DomainError):
        lk.sample_gnm(5, 11, random.Random(1))


def test_gnm_uniformity_chi_square():
    # n=5, m=4: all C(10,4) = 210 graphs should be equally likely.
    trials = 100_000
    stream = RngStream(12345)
    counts: dict[frozenset, int] = {}
    for t in range(trials):
        g = lk.sample_gnm(5, 4, stream.trial(t))
        counts[g.edges] = counts.get(g.edges, 0) + 1
    assert len(counts) == 210
    expected = trials / 210
    # per-cell 4-sigma band (binomial), as a uniformity screen
    sigma = math.sqrt(expected * (1 - 1 / 210))
    worst = max(abs(c - expected) for c in counts.values())
    assert worst < 4.5 * sigma
    chi2 = sum((c - expected) ** 2 / expected for c in counts.values())
    assert chi2 < stats.chi2.ppf(0.999, df=209)


def test_gnp_conditioned_on_count_matches_gnm():
    # Condition G(4, 0.5) on having exactly 3 edges; both laws are uniform on
    # the C(6,3) = 20 such graphs.  Chi-square screen at the 0.001 level.
    trials = 100_000
    m = 3
    cells = 20
    gnp_counts: dict[frozenset, int] = {}
    gnm_counts: dict[frozenset, int] = {}
    stream = RngStream(777)
    for t in range(trials):
        g = lk.sample_gnp(4, 0.5, stream.substream(1).trial(t))
        if g.m == m:
            gnp_counts[g.edges] = gnp_counts.get(g.edges, 0) + 1
        h = lk.sample_gnm(4, m, stream.substream(2).trial(t))
        gnm_counts[h.edges] = gnm_counts.get(h.edges, 0) + 1
    crit = stats.chi2.ppf(0.999, df=cells - 1)
    for counts in (gnp_counts, gnm_counts):
        assert len(counts) == cells
        total = sum(counts.values())
        expected = total / cells
        chi2 = sum((c - expected) ** 2 / expected for c in counts.values())
        assert chi2 < crit


# -- binomial tail bounds ----------------------------------------------------------


def test_chernoff_example_values():
    tight, loose = lk.chernoff_tail(100, 0.1, 20)
    assert tight == pytest.approx((math.e / 4) ** 10, rel=1e-12)
    assert tight <= loose
    # 1+a = 2 < e here, so the loose form exceeds one
    assert loose > 1


def test_chernoff_dominates_exact_tail():
    tight, _ = lk.chernoff_tail(100, 0.1, 20)
    exact = exact_binomial_tail_fraction(100, Fraction(1, 10), 20)
    assert tight >= float(exact)


def test_chernoff_monotone_toward_zero():
    prev = None
    for mu_scale in (10, 100, 1000):
        tight, loose = lk.chernoff_tail(10 * mu_scale, 0.1, 2 * mu_scale)
        if prev is not None:
            assert tight < prev[0] and loose < prev[1]
        prev = (tight, loose)
    assert prev[0] < 1e-30


def test_chernoff_loose_below_one_iff_arg_at_least_e():
    N, p = 100, 0.1
    _, at_e = lk.chernoff_tail(N, p, math.e * N * p * 1.001)
    assert at_e < 1
    _, below = lk.chernoff_tail(N, p, math.e * N * p * 0.9)
    assert below > 1


def test_chernoff_preconditions():
    with pytest.raises(DomainError):
        lk.chernoff_tail(100, 0.1, 9.0)  # t below the mean
    with pytest.raises(DomainError):
        lk.chernoff_tail(100, 0.0, 5.0)


def test_exact_tail_float_matches_fraction():
    got = exact_binomial_tail(60, 0.25, 25)
    want = exact_binomial_tail_fraction(60, Fraction(1, 4), 25)
    assert got == pytest.approx(float(want), rel=1e-9)


# -- goodness experiment --------------------------------------------------------


def _config(c, n_values=(12, 16), trials=20, seed=42, mode="gnp"):
    return lk.ExperimentConfig(
        n_values=tuple(n_values),
        f=LOG,
        f_spec="log",
        gamma=2.0,
        c=c,
        trials=trials,
        base_seed=seed,
        mode=mode,
    )


def test_experiment_p_substitution():
    cfg = _config(c=1.0)
    report = run_goodness_experiment(cfg)
    row16 = [r for r in report.rows if r.n == 16][0]
    assert row16.p_used == pytest.approx(0.5)  # 2 * log2(16) / 16


def test_experiment_generous_scale_has_no_violations():
    cert = lk.certify_builtin(LOG)
    c = lk.scale_constants(cert, 2.0).c
    report = run_goodness_experiment(_config(c=c, trials=50))
    for row in report.rows:
        assert row.violations == 0 and row.inconclusive == 0


def test_experiment_tiny_scale_sees_violations():
    report = run_goodness_experiment(_config(c=0.1, trials=20))
    assert any(row.violations > 0 for row in report.rows)


def test_experiment_deterministic_bytes():
    a = run_goodness_experiment(_config(c=1.0)).to_csv()
    b = run_goodness_experiment(_config(c=1.0)).to_csv()
    assert a == b
    assert a.splitlines()[0] == (
        "n,trials,violations,inconclusive,rate,n_pow_minus_2,c_used,p_used"
    )


def test_experiment_thread_count_does_not_change_results():
    cfg = _config(c=1.0, trials=16)
    assert (
        run_goodness_experiment(cfg, threads=1).rows
        == run_goodness_experiment(cfg, threads=4).rows
    )


def test_experiment_infeasible_p_is_reported():
    cfg = lk.ExperimentConfig(
        n_values=(4,), f=LOG, f_spec="log", gamma=3.0, c=1.0, trials=5, base_seed=1
    )
    report = run_goodness_experiment(cfg)
    assert report.rows[0].status == "infeasible"  # p = 3*2/4 > 1


def test_experiment_gnm_mode_runs():
    report = run_goodness_experiment(_config(c=50.0, trials=10, mode="gnm"))
    assert all(row.status == "ok" for row in report.rows)


# -- transfer experiment -----------------------------------------------------------


def test_transfer_triangle_inequality_satisfied():
    report = lk.run_transfer_experiment("contains-triangle", 20, 0.1, 2000, 42)
    assert report.m == math.ceil(0.1 * 190)
    assert report.factor == pytest.approx(10 * math.sqrt(report.m))
    assert report.point_estimate_ok
    assert not report.statistically_violated


def test_transfer_trivial_properties():
    always = lk.run_transfer_experiment("always-true", 10, 0.3, 200, 1)
    assert always.fixed_count.frequency == 1.0
    assert always.independent.frequency == 1.0
    assert always.point_estimate_ok and not always.statistically_violated
    never = lk.run_transfer_experiment("always-false", 10, 0.3, 200, 1)
    assert never.fixed_count.frequency == 0.0
    assert never.point_estimate_ok and not never.statistically_violated


def test_transfer_unknown_property():
    with pytest.raises(DomainError):
        lk.run_transfer_experiment("no-such-thing", 10, 0.5, 10, 1)


def test_wilson_interval_sane():
    lo, hi = wilson_interval(50, 100)
    assert 0.0 <= lo < 0.5 < hi <= 1.0
    lo0, hi0 = wilson_interval(0, 100)
    assert lo0 == 0.0 and hi0 > 0.0
