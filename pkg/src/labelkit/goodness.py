"""Subgraph-density certification: is every k-vertex subgraph sparse enough?

An n-vertex graph is good for a growth function f and scale c when every
k-vertex subgraph has at most c*k*f(k)/log2(k) edges for 2 <= k <= sqrt(n)
and at most c*k*f(k) edges for larger k.  The regime boundary is decided by
the exact integer test k*k <= n, and an integer edge count m only counts as a
violation when m > threshold + 1e-9, guarding against float round-off.

The checker is a branch-and-bound search for the densest k-subgraph with two
sound shortcuts (the clique bound and the degeneracy bound); the all-subsets
oracle exists solely to cross-examine it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, SizeGuardError
from .graphs import Graph
from .labeling import degeneracy

#: Absolute slack when comparing an integer edge count to a real threshold.
THRESHOLD_EPS = 1e-9

#: naive_goodness_oracle enumerates all vertex subsets; keep it honest.
ORACLE_LIMIT = 12


def threshold(k: int, n: int, f, c: float) -> float:
    """Edge allowance for k-vertex subgraphs of an n-vertex graph."""
    if not (2 <= k <= n):
        raise DomainError(f"need 2 <= k <= n, got k={k}, n={n}")
    if c <= 0:
        raise DomainError(f"scale must be positive, got {c}")
    fk = f.value(k)
    if k * k <= n:
        return c * k * fk / math.log2(k)
    return c * k * fk


def exceeds(edge_count: int, bound: float) -> bool:
    return edge_count > bound + THRESHOLD_EPS


@dataclass(frozen=True)
class MaxEdgesResult:
    """Outcome of one densest-k-subgraph search.

    status is 'exact' (max_edges is the true maximum), 'exceeded' (stopped at
    the first subset above the early-exit level; max_edges is that subset's
    count), 'no_subset_exceeds' (threshold-pruned search certified that no
    subset goes above the level; max_edges is only the best seen), or
    'inconclusive' (node budget ran out).
    """

    max_edges: int
    witness: tuple[int, ...] | None
    exhaustive: bool
    status: str
    nodes: int


def max_edges_k_subgraph(
    g: Graph,
    k: int,
    early_exit_above: float | None = None,
    node_budget: int | None = None,
) -> MaxEdgesResult:
    """Branch-and-bound maximum of e(G[S]) over |S| = k.

    The bound at each node is the chosen set's internal edges plus, for the
    r highest-gain candidates, their edges into the chosen set and half their
    residual degree among candidates (capped at r-1).  Degrees are recomputed
    at every branch node.  With ``early_exit_above`` the search returns the
    first subset exceeding that level instead of the maximum.
    """
    n = g.n
    if not (2 <= k <= n):
        raise DomainError(f"need 2 <= k <= n, got k={k}, n={n}")
    masks = g.adj_masks
    state = {"best": -1, "best_mask": 0, "nodes": 0, "exceeded": None, "out_of_budget": False}
    prune_floor = None if early_exit_above is None else early_exit_above + THRESHOLD_EPS

    def dfs(chosen_mask: int, chosen_count: int, inside: int, cand: list[int]) -> None:
        if state["exceeded"] is not None or state["out_of_budget"]:
            return
        state["nodes"] += 1
        if node_budget is not None and state["nodes"] > node_budget:
            state["out_of_budget"] = True
            return
        if chosen_count == k:
            if inside > state["best"]:
                state["best"] = inside
                state["best_mask"] = chosen_mask
            if prune_floor is not None and inside > prune_floor:
                state["exceeded"] = (chosen_mask, inside)
            return
        r = k - chosen_count
        if len(cand) < r:
            return
        cand_mask = 0
        for v in cand:
            cand_mask |= 1 << v
        gains = []
        for v in cand:
            to_chosen = (masks[v] & chosen_mask).bit_count()
            within = (masks[v] & cand_mask).bit_count()
            gains.append((to_chosen + min(within, r - 1) / 2.0, v, to_chosen))
        gains.sort(key=lambda t: (-t[0], t[1]))
        upper = inside + sum(t[0] for t in gains[:r])
        cutoff = state["best"] if prune_floor is None else max(state["best"], prune_floor)
        if upper <= cutoff:
            return
        _, v, to_chosen = gains[0]
        rest = [u for _, u, _ in gains if u != v]
        dfs(chosen_mask | (1 << v), chosen_count + 1, inside + to_chosen, rest)
        dfs(chosen_mask, chosen_count, inside, rest)

    dfs(0, 0, 0, list(range(n)))

    if state["out_of_budget"]:
        return MaxEdgesResult(state["best"], None, False, "inconclusive", state["nodes"])
    if state["exceeded"] is not None:
        mask, count = state["exceeded"]
        witness = tuple(v for v in range(n) if mask >> v & 1)
        return MaxEdgesResult(count, witness, False, "exceeded", state["nodes"])
    witness = tuple(v for v in range(n) if state["best_mask"] >> v & 1)
    if early_exit_above is None:
        return MaxEdgesResult(state["best"], witness, True, "exact", state["nodes"])
    return MaxEdgesResult(state["best"], witness, False, "no_subset_exceeds", state["nodes"])


@dataclass(frozen=True)
class KRecord:
    """Per-size outcome.  max_edges is filled only when the exact maximum was
    established; certified means no subset of this size can violate."""

    k: int
    thresh: float
    max_edges: int | None
    exhaustive: bool
    certified: bool
    method: str  # search | clique_bound | degeneracy_bound | refuted | skipped_after_violation | budget


@dataclass(frozen=True)
class GoodnessReport:
    verdict: str  # good | violated | inconclusive
    records: tuple[KRecord, ...]
    witness: tuple[tuple[int, ...], int] | None
    nodes: int

    def record_for(self, k: int) -> KRecord:
        for rec in self.records:
            if rec.k == k:
                return rec
        raise KeyError(k)


def _bounds_skip(k: int, thr: float, d: int) -> str | None:
    """Sound reasons to skip the size-k search outright."""
    if not exceeds(math.comb(k, 2), thr):
        return "clique_bound"
    if k >= d + 1 and not exceeds(d * k - d * (d + 1) // 2, thr):
        return "degeneracy_bound"
    return None


def is_f_good(
    g: Graph,
    f,
    c: float,
    mode: str = "exact",
    node_budget: int | None = None,
) -> GoodnessReport:
    """Certify or refute goodness of g at scale c.

    mode 'exact' establishes the true per-k maximum wherever a search runs;
    mode 'refute' prunes against the threshold and stops at the first
    violating subset, which is much faster when only the verdict matters.
    Graphs on at most one vertex are vacuously good.  A node-budget exhaustion
    yields the explicit verdict 'inconclusive', never a silent wrong answer.
    """
    if mode not in ("exact", "refute"):
        raise DomainError(f"mode must be 'exact' or 'refute', got {mode!r}")
    n = g.n
    if n <= 1:
        return GoodnessReport("good", (), None, 0)
    d = degeneracy(g)
    records: list[KRecord] = []
    witness: tuple[tuple[int, ...], int] | None = None
    verdict = "good"
    nodes = 0
    budget_left = node_budget
    for k in range(2, n + 1):
        thr = threshold(k, n, f, c)
        if verdict == "violated" and mode == "refute":
            records.append(KRecord(k, thr, None, False, False, "skipped_after_violation"))
            continue
        skip = _bounds_skip(k, thr, d)
        if skip is not None:
            records.append(KRecord(k, thr, None, False, True, skip))
            continue
        if verdict == "inconclusive":
            records.append(KRecord(k, thr, None, False, False, "budget"))
            continue
        early = thr if mode == "refute" else None
        res = max_edges_k_subgraph(g, k, early_exit_above=early, node_budget=budget_left)
        nodes += res.nodes
        if budget_left is not None:
            budget_left = max(0, budget_left - res.nodes)
        if res.status == "inconclusive":
            verdict = "inconclusive"
            records.append(KRecord(k, thr, None, False, False, "budget"))
            continue
        if res.status == "exact":
            bad = exceeds(res.max_edges, thr)
            records.append(KRecord(k, thr, res.max_edges, True, not bad, "search"))
            if bad and verdict == "good":
                verdict = "violated"
                witness = (res.witness, res.max_edges)
        elif res.status == "exceeded":
            records.append(KRecord(k, thr, None, False, False, "search"))
            verdict = "violated"
            witness = (res.witness, res.max_edges)
        else:  # no_subset_exceeds
            records.append(KRecord(k, thr, None, False, True, "refuted"))
    return GoodnessReport(verdict, tuple(records), witness, nodes)


def naive_goodness_oracle(g: Graph, f, c: float) -> GoodnessReport:
    """Same report, computed by enumerating every vertex subset.

    Exists to cross-check is_f_good; guarded at n <= 12.
    """
    n = g.n
    if n > ORACLE_LIMIT:
        raise SizeGuardError(f"naive_goodness_oracle: n={n} exceeds {ORACLE_LIMIT}")
    if n <= 1:
        return GoodnessReport("good", (), None, 0)
    from itertools import combinations

    masks = g.adj_masks
    records: list[KRecord] = []
    verdict = "good"
    witness = None
    for k in range(2, n + 1):
        thr = threshold(k, n, f, c)
        best = -1
        best_subset: tuple[int, ...] = ()
        for subset in combinations(range(n), k):
            smask = 0
            for v in subset:
                smask |= 1 << v
            count = sum((masks[v] & smask).bit_count() for v in subset) // 2
            if count > best:
                best = count
                best_subset = subset
        bad = exceeds(best, thr)
        records.append(KRecord(k, thr, best, True, not bad, "search"))
        if bad and verdict == "good":
            verdict = "violated"
            witness = (best_subset, best)
    return GoodnessReport(verdict, tuple(records), witness, 0)


def reports_agree(fast: GoodnessReport, oracle: GoodnessReport) -> bool:
    """Agreement test used by the suite: verdicts match, exact maxima match
    wherever both sides established them, and every skipped size is confirmed
    safe by the oracle's true maximum."""
    if fast.verdict != oracle.verdict:
        return False
    for rec in fast.records:
        try:
            orec = oracle.record_for(rec.k)
        except KeyError:
            return False
        if rec.exhaustive and orec.exhaustive and rec.max_edges != orec.max_edges:
            return False
        if rec.certified and orec.max_edges is not None and exceeds(orec.max_edges, rec.thresh):
            return False
    return True
