"""Constructive machinery for monotone closures and their growth arithmetic.

Three layers live here.  First, greedy maximal trees of bounded degree and
the dense cores they carve out: a graph of minimum degree d always contains
an induced subgraph of minimum degree at least d spanned by a tree of maximum
degree at most d.  Second, exact censuses of monotone closures of small seed
graphs, with labeled counts obtained from the identity |X_n| = sum n!/aut(G)
over the isomorphism classes.  Third, a log-space calculator comparing the
number of graph collections coverable by one universal graph against the
number of collections of good graphs; the second eventually dwarfs the first.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, SizeGuardError
from .graphs import (
    Graph,
    are_isomorphic,
    automorphism_count,
    canonical_key,
    count_embeddings_search,
    induced_subgraph,
    labeled_count,
)

#: spanning_family materializes 2^(m-n+1) graphs; cap the exponent.
FAMILY_GUARD = 20

#: Monotone closures are only computed for seeds this small.
CENSUS_LIMIT = 8


@dataclass(frozen=True)
class TreeSubgraph:
    """A tree living inside a host graph, on the host's vertex ids."""

    vertices: tuple[int, ...]
    edges: frozenset[tuple[int, int]]

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def max_degree(self) -> int:
        return max((self.degree(v) for v in self.vertices), default=0)


def bounded_degree_max_tree(g: Graph, d: int) -> TreeSubgraph:
    """Grow an inclusion-maximal tree of maximum degree at most d.

    Starts at vertex 0 and repeatedly attaches the lowest-id outside neighbor
    reachable through a tree vertex of tree-degree below d (the attachment
    point is the lowest-id such vertex).  On return, no outside vertex can be
    attached without pushing some tree degree above d, which is exactly the
    maximality the dense-core construction needs.
    """
    if d < 1:
        raise DomainError(f"degree cap must be at least 1, got {d}")
    if g.n == 0:
        raise DomainError("graph must have at least one vertex")
    in_tree = {0}
    tree_deg = {0: 0}
    edges: set[tuple[int, int]] = set()
    while True:
        attach: tuple[int, int] | None = None  # (outside vertex, tree vertex)
        for w in range(g.n):
            if w in in_tree:
                continue
            hosts = [
                u for u in g.adj[w] if u in in_tree and tree_deg[u] < d
            ]
            if hosts:
                attach = (w, min(hosts))
                break
        if attach is None:
            break
        w, u = attach
        in_tree.add(w)
        tree_deg[w] = 1
        tree_deg[u] += 1
        edges.add((u, w) if u < w else (w, u))
    return TreeSubgraph(tuple(sorted(in_tree)), frozenset(edges))


@dataclass(frozen=True)
class DenseCore:
    """Induced subgraph of minimum degree >= d together with a spanning tree
    of maximum degree <= d, both relabeled to 0..|vertices|-1."""

    vertices: tuple[int, ...]
    subgraph: Graph
    tree: Graph


def dense_core(g: Graph, d: int) -> DenseCore:
    """Carve the dense core out of a graph of minimum degree >= d.

    The induced subgraph on a maximal bounded-degree tree's vertices has
    minimum degree at least d: a tree vertex of tree-degree below d kept all
    its neighbors inside (otherwise the tree could have grown), and one of
    tree-degree d already has d neighbors inside.
    """
    if d < 1:
        raise DomainError(f"d must be at least 1, got {d}")
    if g.n == 0 or g.min_degree() < d:
        raise DomainError(
            f"dense_core needs minimum degree >= {d}, got {g.min_degree() if g.n else 'empty'}"
        )
    tree = bounded_degree_max_tree(g, d)
    verts = tree.vertices
    index = {v: i for i, v in enumerate(verts)}
    sub = induced_subgraph(g, verts)
    tree_edges = frozenset(
        (index[u], index[v]) if index[u] < index[v] else (index[v], index[u])
        for u, v in tree.edges
    )
    return DenseCore(verts, sub, Graph(len(verts), tree_edges))


def _is_spanning_tree(g: Graph, tree_edges: frozenset[tuple[int, int]]) -> bool:
    if len(tree_edges) != g.n - 1:
        return False
    if not tree_edges <= g.edges:
        return False
    return Graph(g.n, tree_edges).is_connected()


@dataclass(frozen=True)
class FamilyReport:
    """All spanning subgraphs containing a fixed spanning tree.

    family_size is exactly 2^(m-n+1); every member's automorphism count is
    bounded by the number of embeddings of the tree into the host, which is
    what keeps the family's isomorphism classes numerous.
    """

    family_size: int
    extra_edges: int
    iso_classes: int
    max_aut: int
    tree_embeddings: int
    aut_bound_holds: bool
    violations: tuple[int, ...]  # member indices breaking the aut bound, if any


def spanning_family(g: Graph, tree_edges) -> FamilyReport:
    """Enumerate every spanning subgraph of a connected g containing the
    given spanning tree, and verify aut(F) <= #Emb(tree -> g) member by
    member."""
    tree_edges = frozenset(
        (u, v) if u < v else (v, u) for u, v in tree_edges
    )
    if not g.is_connected():
        raise DomainError("host graph must be connected")
    if not _is_spanning_tree(g, tree_edges):
        raise DomainError("the given edges are not a spanning tree of the host")
    extra = sorted(g.edges - tree_edges)
    if len(extra) > FAMILY_GUARD:
        raise SizeGuardError(
            f"family of 2^{len(extra)} spanning subgraphs exceeds guard 2^{FAMILY_GUARD}"
        )
    tree_graph = Graph(g.n, tree_edges)
    emb = count_embeddings_search(tree_graph, g)
    members: list[Graph] = []
    for mask in range(1 << len(extra)):
        edges = set(tree_edges)
        for i, e in enumerate(extra):
            if mask >> i & 1:
                edges.add(e)
        members.append(Graph(g.n, frozenset(edges)))

    auts = [automorphism_count(F) for F in members]
    violations = tuple(i for i, a in enumerate(auts) if a > emb)

    # Isomorphism classes: bucket by cheap invariants, then pairwise checks.
    buckets: dict[tuple, list[int]] = {}
    for i, F in enumerate(members):
        key = (F.m, tuple(sorted(F.degrees)))
        buckets.setdefault(key, []).append(i)
    iso_classes = 0
    for indices in buckets.values():
        reps: list[int] = []
        for i in indices:
            if not any(
                are_isomorphic(members[i], members[r]) is not None for r in reps
            ):
                reps.append(i)
        iso_classes += len(reps)

    return FamilyReport(
        family_size=len(members),
        extra_edges=len(extra),
        iso_classes=iso_classes,
        max_aut=max(auts),
        tree_embeddings=emb,
        aut_bound_holds=not violations,
        violations=violations,
    )


# ---------------------------------------------------------------------------
# Monotone closure census.


@dataclass(frozen=True)
class CensusRow:
    n: int
    unlabeled: int
    labeled: int  # exact, arbitrary precision
    representatives: tuple[Graph, ...]


@dataclass(frozen=True)
class CensusTable:
    rows: tuple[CensusRow, ...]

    def row_for(self, n: int) -> CensusRow:
        for row in self.rows:
            if row.n == n:
                return row
        raise KeyError(n)


def mon_closure_census(seeds: list[Graph], max_n: int) -> CensusTable:
    """Isomorphism classes reachable from the seeds by vertex and edge
    deletions, with labeled counts from the n!/aut identity.

    Downward breadth-first closure with canonical-form deduplication; the
    closure never adds vertices, so it terminates after finitely many levels.
    """
    if max_n > CENSUS_LIMIT:
        raise SizeGuardError(f"census max_n={max_n} exceeds {CENSUS_LIMIT}")
    for g in seeds:
        if g.n > max_n:
            raise DomainError(f"seed on {g.n} vertices exceeds max_n={max_n}")
    by_key: dict[str, Graph] = {}
    frontier: list[Graph] = []
    for g in seeds:
        key = canonical_key(g)
        if key not in by_key:
            by_key[key] = g
            frontier.append(g)
    while frontier:
        g = frontier.pop()
        children = []
        for e in g.edges:
            children.append(Graph(g.n, g.edges - {e}))
        if g.n >= 1:
            for v in range(g.n):
                children.append(
                    induced_subgraph(g, [u for u in range(g.n) if u != v])
                )
        for child in children:
            key = canonical_key(child)
            if key not in by_key:
                by_key[key] = child
                frontier.append(child)
    per_n: dict[int, list[tuple[str, Graph]]] = {}
    for key, g in by_key.items():
        per_n.setdefault(g.n, []).append((key, g))
    rows = []
    for n in sorted(per_n):
        classes = [g for _, g in sorted(per_n[n])]
        total = sum(labeled_count(g) for g in classes)
        rows.append(CensusRow(n, len(classes), total, tuple(classes)))
    return CensusTable(tuple(rows))


def smallness_probe(table: CensusTable) -> list[tuple[int, float]]:
    """Per-level minimal constant c with labeled count <= n! * c^n, i.e.
    c_n = (count/n!)^(1/n).  A diagnostic trend, not an asymptotic claim."""
    if not table.rows:
        raise DomainError("census table is empty")
    out = []
    for row in table.rows:
        if row.n < 1:
            continue
        ratio = row.labeled / math.factorial(row.n)
        out.append((row.n, ratio ** (1.0 / row.n)))
    return out


# ---------------------------------------------------------------------------
# The counting ledger.


def log2_add_exp(a: float, b: float) -> float:
    """log2(2^a + 2^b) without overflow."""
    hi, lo = (a, b) if a >= b else (b, a)
    return hi + math.log2(1.0 + 2.0 ** (lo - hi))


@dataclass(frozen=True)
class LedgerRow:
    n: int
    log2_u: float  # log2 of the universal graph size, f(n) log2(n)
    log2_k: float  # log2 of the collection cardinality, sqrt(n f(n))
    log2_E1: float  # log2 of the exponent counting coverable collections
    log2_E2: float  # log2 of the exponent counting good collections
    ratio: float  # E2 / E1
    dominant: bool


@dataclass(frozen=True)
class LedgerReport:
    """Log-space comparison of the two counting exponents.

    E1 = u_n^2-term + k_n * n * log2(u_n) counts collections of n-vertex
    graphs coverable by one universal graph of size u_n = 2^(f(n) log n);
    E2 = k_n * (gamma*delta/2) * n * f(n) * log n counts collections of good
    graphs.  Collections have cardinality k_n = ceil(2^sqrt(n f(n))); the
    ceiling and all o(1) terms are dropped, as recorded in ``note``.
    """

    rows: tuple[LedgerRow, ...]
    gamma: float
    delta: float
    f_spec: str
    crossover_n: int | None
    note: str = (
        "leading-order arithmetic only: o(1) terms and the ceiling in the "
        "collection cardinality are dropped"
    )


def counting_ledger(f, cert, gamma: float | None, n_values) -> LedgerReport:
    """Evaluate both counting exponents along a grid of sizes.

    gamma defaults to 4/delta, the choice that makes the good-collection
    exponent approach twice the coverable-collection exponent.  Requires a
    decency certificate; refuses to run without one.
    """
    if cert is None:
        raise DomainError("counting_ledger needs a decency certificate for f")
    if gamma is None:
        gamma = 4.0 / cert.delta
    if gamma <= 1:
        raise DomainError(f"gamma must exceed 1, got {gamma}")
    rows = []
    crossover = None
    for n in sorted(n_values):
        if n < 2:
            raise DomainError("grid sizes must be at least 2")
        fn = f.value(n)
        log2_n = math.log2(n)
        log2_u = fn * log2_n
        log2_k = math.sqrt(n * fn)
        log2_term = math.log2(n * fn * log2_n)
        log2_e1 = log2_add_exp(2 * log2_u, log2_k + log2_term)
        log2_e2 = log2_k + math.log2(gamma * cert.delta / 2.0) + log2_term
        diff = log2_e2 - log2_e1
        ratio = 2.0**diff if diff > -1020 else 0.0
        dominant = diff > 0
        if dominant and crossover is None:
            crossover = n
        rows.append(LedgerRow(n, log2_u, log2_k, log2_e1, log2_e2, ratio, dominant))
    return LedgerReport(tuple(rows), gamma, cert.delta, getattr(f, "spec", lambda: "?")(), crossover)


def parse_n_grid(text: str) -> list[int]:
    """Grid syntax for the CLI: 'A..B' doubles from A to B inclusive, where
    each bound is an integer or 2^t; a comma list gives explicit sizes."""
    text = text.strip()
    if ".." in text:
        lo_s, hi_s = text.split("..", 1)
        lo, hi = _parse_size(lo_s), _parse_size(hi_s)
        if lo < 2 or hi < lo:
            raise DomainError(f"bad grid bounds {text!r}")
        out = []
        n = lo
        while n <= hi:
            out.append(n)
            n *= 2
        return out
    return [_parse_size(part) for part in text.split(",") if part.strip()]


def _parse_size(s: str) -> int:
    s = s.strip()
    if s.startswith("2^"):
        return 2 ** int(s[2:])
    return int(s)
