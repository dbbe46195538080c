"""Seeded random graphs, binomial tail bounds, and Monte Carlo experiments.

Determinism contract: a 64-bit base seed plus an index pin down every trial
through a SplitMix64 derivation, so runs are reproducible within this
implementation and trials are independent of evaluation order.  Bit-identity
across implementations is out of scope.
"""

from __future__ import annotations

import math
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .errors import DomainError
from .goodness import GoodnessReport, is_f_good
from .graphs import Graph

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def splitmix64(x: int) -> int:
    """The SplitMix64 finalizer; a bijection on 64-bit words."""
    z = (x + _GOLDEN) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def derive_seed(base_seed: int, index: int) -> int:
    """Per-trial seed: mix the base with the index's slot in the stream."""
    return splitmix64((base_seed + index * _GOLDEN) & _MASK64)


@dataclass(frozen=True)
class RngStream:
    """A base seed plus the SplitMix64 rule for spawning per-trial generators."""

    seed: int

    def trial(self, index: int) -> random.Random:
        return random.Random(derive_seed(self.seed, index))

    def substream(self, index: int) -> "RngStream":
        return RngStream(derive_seed(self.seed, index))


def pair_count(n: int) -> int:
    return n * (n - 1) // 2


def pair_from_index(n: int, idx: int) -> tuple[int, int]:
    """Inverse of lexicographic pair enumeration (0,1), (0,2), ..., (1,2), ..."""
    total = pair_count(n)
    if not (0 <= idx < total):
        raise DomainError(f"pair index {idx} out of range for n={n}")
    r = total - 1 - idx
    j = (math.isqrt(8 * r + 1) - 1) // 2
    u = n - 2 - j
    v = n - 1 - (r - j * (j + 1) // 2)
    return u, v


def sample_gnp(n: int, p: float, rng: random.Random) -> Graph:
    """Each pair, in lexicographic order, is an edge independently with
    probability p.  Uses geometric gap skipping, so only the edges present
    consume randomness; the pair-index stream is still strictly increasing.
    """
    if not (0.0 <= p <= 1.0):
        raise DomainError(f"edge probability must lie in [0,1], got {p}")
    total = pair_count(n)
    if p <= 0.0 or total == 0:
        return Graph(n, frozenset())
    if p >= 1.0:
        return Graph(n, frozenset(pair_from_index(n, i) for i in range(total)))
    log_q = math.log1p(-p)
    edges = []
    idx = -1
    while True:
        u = 1.0 - rng.random()  # in (0, 1], keeps log finite
        idx += 1 + int(math.log(u) / log_q)
        if idx >= total:
            break
        edges.append(pair_from_index(n, idx))
    return Graph(n, frozenset(edges))


def sample_gnm(n: int, m: int, rng: random.Random) -> Graph:
    """Uniform graph with exactly m edges, via a virtual partial Fisher-Yates
    shuffle of the pair indices (O(m) memory regardless of n)."""
    total = pair_count(n)
    if not (0 <= m <= total):
        raise DomainError(f"edge count {m} out of range [0, {total}]")
    displaced: dict[int, int] = {}
    chosen = []
    for j in range(m):
        r = rng.randrange(j, total)
        chosen.append(displaced.get(r, r))
        displaced[r] = displaced.get(j, j)
    return Graph(n, frozenset(pair_from_index(n, i) for i in chosen))


# ---------------------------------------------------------------------------
# Binomial tail bounds.


def chernoff_tail(N: int, p: float, t: float) -> tuple[float, float]:
    """Upper bounds on P(Bin(N, p) > t) for t above the mean mu = N*p.

    With 1+a = t/mu, returns the pair
      tight = (e^a / (1+a)^(1+a))^mu   and   loose = exp(-(1+a) mu ln((1+a)/e)).
    tight <= loose always, and loose <= 1 exactly when 1+a >= e.
    """
    mu = N * p
    if not (0 < mu < t):
        raise DomainError(f"bounds need t > mu > 0, got mu={mu}, t={t}")
    one_plus_a = t / mu
    a = one_plus_a - 1
    log_tight = mu * (a - one_plus_a * math.log(one_plus_a))
    log_loose = -one_plus_a * mu * (math.log(one_plus_a) - 1)
    return math.exp(log_tight), math.exp(log_loose)


def exact_binomial_tail(N: int, p: float, t: float) -> float:
    """P(Bin(N, p) > t) by direct summation (float); fine for N in the
    thousands.  Kept for CLI display; the test oracle recomputes this with
    exact rational arithmetic."""
    if not (0 <= p <= 1):
        raise DomainError(f"p must lie in [0,1], got {p}")
    lo = math.floor(t) + 1
    total = 0.0
    for i in range(N, lo - 1, -1):  # smallest terms first
        total += math.comb(N, i) * p**i * (1 - p) ** (N - i)
    return total


def wilson_interval(successes: int, trials: int, z: float = 3.0) -> tuple[float, float]:
    """Wilson score interval for a binomial proportion."""
    if trials <= 0:
        raise DomainError("trials must be positive")
    phat = successes / trials
    denom = 1 + z * z / trials
    center = (phat + z * z / (2 * trials)) / denom
    half = z * math.sqrt(phat * (1 - phat) / trials + z * z / (4 * trials * trials)) / denom
    return max(0.0, center - half), min(1.0, center + half)


# ---------------------------------------------------------------------------
# Goodness of sparse random graphs, against the n^-2 reference line.


@dataclass(frozen=True)
class ExperimentConfig:
    """One sweep: for each n, draw ``trials`` graphs at p = gamma*f(n)/n and
    check goodness at scale c.  c may be given explicitly or derived from a
    certificate upstream; it is stored explicitly here."""

    n_values: tuple[int, ...]
    f: object
    f_spec: str
    gamma: float
    c: float
    trials: int
    base_seed: int
    mode: str = "gnp"  # or "gnm" with m = ceil(p * C(n,2))
    node_budget: int | None = 2_000_000

    def __post_init__(self):
        if self.trials < 1:
            raise DomainError("trials must be at least 1")
        if self.gamma <= 1:
            raise DomainError(f"gamma must exceed 1, got {self.gamma}")
        if self.mode not in ("gnp", "gnm"):
            raise DomainError(f"mode must be gnp or gnm, got {self.mode!r}")


@dataclass(frozen=True)
class ExperimentRow:
    n: int
    trials: int
    violations: int
    inconclusive: int
    rate: float
    n_pow_minus_2: float
    c_used: float
    p_used: float
    status: str = "ok"  # or "infeasible" when p would exceed 1


@dataclass(frozen=True)
class ExperimentReport:
    rows: tuple[ExperimentRow, ...]
    config_summary: dict = field(hash=False, default_factory=dict)

    CSV_HEADER = "n,trials,violations,inconclusive,rate,n_pow_minus_2,c_used,p_used"

    def to_csv(self) -> str:
        lines = [self.CSV_HEADER]
        for r in self.rows:
            lines.append(
                f"{r.n},{r.trials},{r.violations},{r.inconclusive},"
                f"{r.rate!r},{r.n_pow_minus_2!r},{r.c_used!r},{r.p_used!r}"
            )
        return "\n".join(lines) + "\n"


def _goodness_trial(args) -> str:
    n, p, mode, seed, f, c, budget = args
    rng = random.Random(seed)
    if mode == "gnp":
        g = sample_gnp(n, p, rng)
    else:
        g = sample_gnm(n, math.ceil(p * pair_count(n)), rng)
    report: GoodnessReport = is_f_good(g, f, c, mode="refute", node_budget=budget)
    return report.verdict


def run_goodness_experiment(cfg: ExperimentConfig, threads: int = 1) -> ExperimentReport:
    """Sample, check, tally.  Per-trial seeds come from nested SplitMix64
    derivation on (n, trial), so the tally is independent of execution order
    and of the thread count."""
    rows = []
    for n in sorted(cfg.n_values):
        p = cfg.gamma * cfg.f.value(n) / n
        if p > 1.0:
            rows.append(
                ExperimentRow(n, cfg.trials, 0, 0, 0.0, n ** (-2.0), cfg.c, p, "infeasible")
            )
            continue
        stream = RngStream(cfg.base_seed).substream(n)
        tasks = [
            (n, p, cfg.mode, derive_seed(stream.seed, t), cfg.f, cfg.c, cfg.node_budget)
            for t in range(cfg.trials)
        ]
        if threads > 1:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                verdicts = list(pool.map(_goodness_trial, tasks))
        else:
            verdicts = [_goodness_trial(t) for t in tasks]
        violations = sum(1 for v in verdicts if v == "violated")
        inconclusive = sum(1 for v in verdicts if v == "inconclusive")
        rows.append(
            ExperimentRow(
                n,
                cfg.trials,
                violations,
                inconclusive,
                violations / cfg.trials,
                n ** (-2.0),
                cfg.c,
                p,
            )
        )
    summary = {
        "f": cfg.f_spec,
        "gamma": cfg.gamma,
        "c": cfg.c,
        "trials": cfg.trials,
        "seed": cfg.base_seed,
        "mode": cfg.mode,
    }
    return ExperimentReport(tuple(rows), summary)


# ---------------------------------------------------------------------------
# Fixed-edge-count versus independent-edge sampling.

GRAPH_PROPERTIES: dict[str, callable] = {}


def graph_property(name: str):
    def register(fn):
        GRAPH_PROPERTIES[name] = fn
        return fn

    return register


@graph_property("contains-triangle")
def _contains_triangle(g: Graph) -> bool:
    masks = g.adj_masks
    return any(masks[u] & masks[v] for u, v in g.edges)

@graph_property("always-true")
def _always_true(g: Graph) -> bool:
    return True


@graph_property("always-false")
def _always_false(g: Graph) -> bool:
    return False


@graph_property("connected")
def _connected(g: Graph) -> bool:
    return g.is_connected()


@dataclass(frozen=True)
class TransferRow:
    model: str
    hits: int
    trials: int
    frequency: float
    wilson_low: float
    wilson_high: float


@dataclass(frozen=True)
class TransferReport:
    """Empirical check that fixing the edge count at m = ceil(p*C(n,2)) can
    increase a property's probability by at most the factor 10*sqrt(m)."""

    property_name: str
    n: int
    p: float
    m: int
    factor: float
    fixed_count: TransferRow
    independent: TransferRow
    point_estimate_ok: bool
    statistically_violated: bool


def run_transfer_experiment(
    property_name: str, n: int, p: float, trials: int, base_seed: int
) -> TransferReport:
    if property_name not in GRAPH_PROPERTIES:
        known = ", ".join(sorted(GRAPH_PROPERTIES))
        raise DomainError(f"unknown property {property_name!r}; known: {known}")
    if not (0.0 <= p <= 1.0):
        raise DomainError(f"p must lie in [0,1], got {p}")
    if trials < 1:
        raise DomainError("trials must be at least 1")
    prop = GRAPH_PROPERTIES[property_name]
    m = math.ceil(p * pair_count(n))
    factor = 10 * math.sqrt(m) if m > 0 else 10.0
    gnm_stream = RngStream(base_seed).substream(1)
    gnp_stream = RngStream(base_seed).substream(2)
    gnm_hits = sum(
        1 for t in range(trials) if prop(sample_gnm(n, m, gnm_stream.trial(t)))
    )
    gnp_hits = sum(
        1 for t in range(trials) if prop(sample_gnp(n, p, gnp_stream.trial(t)))
    )

    def row(model: str, hits: int) -> TransferRow:
        lo, hi = wilson_interval(hits, trials)
        return TransferRow(model, hits, trials, hits / trials, lo, hi)

    fixed = row("gnm", gnm_hits)
    indep = row("gnp", gnp_hits)
    # Violation is only called when the intervals leave no ambiguity.
    statistically_violated = fixed.wilson_low > factor * indep.wilson_high
    point_ok = fixed.frequency <= factor * indep.frequency or fixed.frequency == 0.0
    return TransferReport(
        property_name,
        n,
        p,
        m,
        factor,
        fixed,
        indep,
        point_ok,
        statistically_violated,
    )
