"""Exact primitives for small simple graphs.

Vertices are the contiguous integers 0..n-1 and edges are unordered pairs
(u, v) stored with u < v.  Everything here is correctness-first: isomorphism,
automorphism counting and subgraph counting are exhaustive searches with
degree-based pruning, guarded by explicit size limits so that nothing is
silently slow.  Unlabeled graphs are represented by a canonical labeled
representative, which keeps deduplication deterministic.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations, permutations
from pathlib import Path

from .errors import (
    DomainError,
    DuplicateEdgeError,
    EndpointRangeError,
    GraphParseError,
    LoopEdgeError,
    MalformedLineError,
    SizeGuardError,
)

#: Default ceiling for exhaustive permutation searches (aut, iso, counting).
DEFAULT_SEARCH_GUARD = 10

#: canonical_form enumerates all n! labelings, so it gets a tighter default.
DEFAULT_CANONICAL_GUARD = 8

#: enumerate_unlabeled is complete only up to this size.
ENUMERATION_LIMIT = 7

#: Known class counts for 0..7 vertices, used to sanity-check the cache.
UNLABELED_GRAPH_COUNTS = (1, 1, 2, 4, 11, 34, 156, 1044)


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on vertices 0..n-1.

    ``edges`` holds pairs (u, v) with 0 <= u < v < n, no loops, no duplicates.
    Instances are immutable and hash/compare by (n, edges).
    """

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        if self.n < 0:
            raise DomainError(f"vertex count must be non-negative, got {self.n}")
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise DomainError(f"invalid edge ({u}, {v}) for n={self.n}")

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        """Build a graph, normalizing pair order and rejecting loops/dups."""
        seen = set()
        for u, v in edges:
            if u == v:
                raise DomainError(f"loop edge ({u}, {v})")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise DomainError(f"duplicate edge {e}")
            seen.add(e)
        return cls(n, frozenset(seen))

    @property
    def m(self) -> int:
        """Number of edges."""
        return len(self.edges)

    @cached_property
    def adj(self) -> tuple[frozenset[int], ...]:
        """Adjacency sets indexed by vertex."""
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def adj_masks(self) -> tuple[int, ...]:
        """Adjacency as bitmasks; handy for subset edge counting, n <= 64ish."""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(self.adj[v]) for v in range(self.n))

    def max_degree(self) -> int:
        return max(self.degrees) if self.n else 0

    def min_degree(self) -> int:
        return min(self.degrees) if self.n else 0

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self.edges

    def is_connected(self) -> bool:
        """True for graphs with at most one component (vacuously for n <= 1)."""
        if self.n <= 1:
            return True
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for w in self.adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def to_edge_list(self) -> str:
        """Canonical Edge-List v1 document: LF endings, edges sorted."""
        lines = [f"n {self.n}"]
        lines.extend(f"e {u} {v}" for u, v in self.sorted_edges())
        return "\n".join(lines) + "\n"

    def relabel(self, perm) -> "Graph":
        """Apply a vertex permutation: vertex v becomes perm[v]."""
        return Graph(
            self.n,
            frozenset(
                (perm[u], perm[v]) if perm[u] < perm[v] else (perm[v], perm[u])
                for u, v in self.edges
            ),
        )

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


# ---------------------------------------------------------------------------
# Named constructions used throughout the tests and CLI examples.


def empty_graph(n: int) -> Graph:
    return Graph(n, frozenset())


def complete_graph(n: int) -> Graph:
    return Graph(n, frozenset((u, v) for u in range(n) for v in range(u + 1, n)))


def path_graph(n: int) -> Graph:
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise DomainError("cycles need at least 3 vertices")
    edges = {(i, i + 1) for i in range(n - 1)}
    edges.add((0, n - 1))
    return Graph(n, frozenset(edges))


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves}: center 0 joined to 1..leaves."""
    return Graph(leaves + 1, frozenset((0, i) for i in range(1, leaves + 1)))


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


# ---------------------------------------------------------------------------
# Parsing / serialization (Edge-List v1).


def parse_graph(text: str) -> Graph:
    """Parse an Edge-List v1 document.

    Grammar: optional comment lines starting with '#' and blank lines, then
    a header line ``n <N>``, then zero or more lines ``e <u> <v>`` with
    0 <= u < v < N.  Each defect raises a distinct error naming the line.
    """
    n: int | None = None
    edges: set[tuple[int, int]] = set()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n":
                raise MalformedLineError(line_no, f"expected 'n <N>', got {raw!r}")
            try:
                n = int(parts[1])
            except ValueError:
                raise MalformedLineError(line_no, f"vertex count not an integer: {parts[1]!r}") from None
            if n < 0:
                raise MalformedLineError(line_no, f"vertex count must be non-negative, got {n}")
            continue
        if len(parts) != 3 or parts[0] != "e":
            raise MalformedLineError(line_no, f"expected 'e <u> <v>', got {raw!r}")
        try:
            u, v = int(parts[1]), int(parts[2])
        except ValueError:
            raise MalformedLineError(line_no, f"endpoints not integers: {raw!r}") from None
        if u == v:
            raise LoopEdgeError(line_no, f"loop edge ({u}, {v})")
        if u > v:
            raise MalformedLineError(line_no, f"endpoints must satisfy u < v, got ({u}, {v})")
        if not (0 <= u and v < n):
            raise EndpointRangeError(line_no, f"endpoint out of range in ({u}, {v}), n={n}")
        if (u, v) in edges:
            raise DuplicateEdgeError(line_no, f"duplicate edge ({u}, {v})")
        edges.add((u, v))
    if n is None:
        raise MalformedLineError(0, "missing 'n <N>' header line")
    return Graph(n, frozenset(edges))


def load_graph(path) -> Graph:
    return parse_graph(Path(path).read_text(encoding="utf-8"))


# ---------------------------------------------------------------------------
# Vertex subsets and induced subgraphs.


def as_vertex_set(vertices, n: int) -> tuple[int, ...]:
    """Validate and sort a collection of vertex ids for a host of size n."""
    vs = sorted(vertices)
    for v in vs:
        if not (0 <= v < n):
            raise DomainError(f"vertex {v} out of range for n={n}")
    for a, b in zip(vs, vs[1:]):
        if a == b:
            raise DomainError(f"duplicate vertex {a} in vertex set")
    return tuple(vs)


def induced_subgraph(g: Graph, vertices) -> Graph:
    """Induced subgraph on ``vertices``, relabeled 0..|s|-1 in sorted order."""
    vs = as_vertex_set(vertices, g.n)
    index = {v: i for i, v in enumerate(vs)}
    edges = frozenset(
        (index[u], index[v]) for u, v in g.edges if u in index and v in index
    )
    return Graph(len(vs), edges)


def count_edges_within(g: Graph, vertices) -> int:
    """Number of edges of g with both endpoints in ``vertices``."""
    inside = set(vertices)
    return sum(1 for u, v in g.edges if u in inside and v in inside)


# ---------------------------------------------------------------------------
# Isomorphism, automorphisms, counting.


@dataclass(frozen=True)
class IsoCertificate:
    """Witness for an isomorphism claim: vertex v of the source maps to
    permutation[v] in the target."""

    permutation: tuple[int, ...]

    def validates(self, source: Graph, target: Graph) -> bool:
        if source.n != target.n or len(self.permutation) != source.n:
            return False
        if sorted(self.permutation) != list(range(source.n)):
            return False
        mapped = {
            (self.permutation[u], self.permutation[v]) for u, v in source.edges
        }
        mapped = {(a, b) if a < b else (b, a) for a, b in mapped}
        return mapped == set(target.edges)


def _check_guard(n: int, guard: int, what: str) -> None:
    if n > guard:
        raise SizeGuardError(f"{what}: n={n} exceeds guard {guard}")


def _neighbor_degree_key(g: Graph, v: int) -> tuple[int, ...]:
    return tuple(sorted(g.degree(w) for w in g.adj[v]))


def are_isomorphic(
    g: Graph, h: Graph, guard: int = DEFAULT_SEARCH_GUARD
) -> IsoCertificate | None:
    """Search for an edge-preserving bijection g -> h.

    Returns a validating certificate, or None when no bijection exists.
    Pruned backtracking: candidates must match on degree and on the multiset
    of neighbor degrees, and must be adjacency-consistent with the mapped
    prefix.  Absence of a certificate is a value, not an error.
    """
    if g.n != h.n or g.m != h.m:
        return None
    _check_guard(g.n, guard, "are_isomorphic")
    if sorted(g.degrees) != sorted(h.degrees):
        return None
    n = g.n
    g_nd = [_neighbor_degree_key(g, v) for v in range(n)]
    h_nd = [_neighbor_degree_key(h, v) for v in range(n)]
    # Map high-degree, rare vertices first to fail fast.
    order = sorted(range(n), key=lambda v: (-g.degree(v), g_nd[v], v))
    mapping = [-1] * n
    used = [False] * n

    def extend(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        for w in range(n):
            if used[w] or g.degree(v) != h.degree(w) or g_nd[v] != h_nd[w]:
                continue
            ok = True
            for prev in order[:i]:
                if (prev in g.adj[v]) != (mapping[prev] in h.adj[w]):
                    ok = False
                    break
            if not ok:
                continue
            mapping[v] = w
            used[w] = True
            if extend(i + 1):
                return True
            mapping[v] = -1
            used[w] = False
        return False

    if extend(0):
        return IsoCertificate(tuple(mapping))
    return None


def automorphism_count(g: Graph, guard: int = DEFAULT_SEARCH_GUARD) -> int:
    """Exact order of the automorphism group, by pruned exhaustive search."""
    _check_guard(g.n, guard, "automorphism_count")
    n = g.n
    if n <= 1:
        return 1
    nd = [_neighbor_degree_key(g, v) for v in range(n)]
    order = sorted(range(n), key=lambda v: (-g.degree(v), nd[v], v))
    mapping = [-1] * n
    used = [False] * n
    count = 0

    def extend(i: int) -> None:
        nonlocal count
        if i == n:
            count += 1
            return
        v = order[i]
        for w in range(n):
            if used[w] or g.degree(v) != g.degree(w) or nd[v] != nd[w]:
                continue
            ok = True
            for prev in order[:i]:
                if (prev in g.adj[v]) != (mapping[prev] in g.adj[w]):
                    ok = False
                    break
            if not ok:
                continue
            mapping[v] = w
            used[w] = True
            extend(i + 1)
            mapping[v] = -1
            used[w] = False

    extend(0)
    return count


def labeled_count(g: Graph, guard: int = DEFAULT_SEARCH_GUARD) -> int:
    """Number of labeled graphs isomorphic to g: n! / aut(g), exactly."""
    return math.factorial(g.n) // automorphism_count(g, guard=guard)


#: Subset enumeration budget for count_subgraph_copies.
DEFAULT_SUBSET_BUDGET = 2_000_000


def count_subgraph_copies(
    f: Graph,
    g: Graph,
    guard: int = DEFAULT_SEARCH_GUARD,
    subset_budget: int = DEFAULT_SUBSET_BUDGET,
) -> int:
    """Spanning-pattern subgraph count: the number of edge subsets of g whose
    graph on the full vertex set is isomorphic to f.

    Both graphs must have the same vertex count; f plays the role of a
    candidate spanning subgraph pattern.
    """
    if f.n != g.n:
        raise DomainError(f"vertex count mismatch: pattern n={f.n}, host n={g.n}")
    _check_guard(g.n, guard, "count_subgraph_copies")
    if f.m > g.m:
        return 0
    if math.comb(g.m, f.m) > subset_budget:
        raise SizeGuardError(
            f"count_subgraph_copies: C({g.m},{f.m}) subsets exceed budget {subset_budget}"
        )
    host_edges = g.sorted_edges()
    f_degree_sig = sorted(f.degrees)
    count = 0
    for subset in combinations(host_edges, f.m):
        candidate = Graph(g.n, frozenset(subset))
        if sorted(candidate.degrees) != f_degree_sig:
            continue
        if are_isomorphic(candidate, f, guard=guard) is not None:
            count += 1
    return count


def count_embeddings(f: Graph, g: Graph, guard: int = DEFAULT_SEARCH_GUARD) -> int:
    """Number of permutations of [n] mapping f onto a copy of itself inside g,
    computed as subgraph copies times aut(f)."""
    return count_subgraph_copies(f, g, guard=guard) * automorphism_count(f, guard=guard)


def count_embeddings_search(
    f: Graph, g: Graph, guard: int = DEFAULT_SEARCH_GUARD
) -> int:
    """Count permutations pi with every edge (u, v) of f mapped to an edge of g,
    by direct backtracking.  Agrees with count_embeddings; kept as an
    independent route so the two can cross-check each other."""
    if f.n != g.n:
        raise DomainError(f"vertex count mismatch: pattern n={f.n}, host n={g.n}")
    _check_guard(g.n, guard, "count_embeddings_search")
    n = f.n
    if n == 0:
        return 1
    # Place pattern vertices in descending degree order; image degree must
    # be at least the pattern degree.
    order = sorted(range(n), key=lambda v: (-f.degree(v), v))
    mapping = [-1] * n
    used = [False] * n
    count = 0

    def extend(i: int) -> None:
        nonlocal count
        if i == n:
            count += 1
            return
        v = order[i]
        for w in range(n):
            if used[w] or f.degree(v) > g.degree(w):
                continue
            ok = True
            for prev in order[:i]:
                if prev in f.adj[v] and mapping[prev] not in g.adj[w]:
                    ok = False
                    break
            if not ok:
                continue
            mapping[v] = w
            used[w] = True
            extend(i + 1)
            mapping[v] = -1
            used[w] = False

    extend(0)
    return count


# ---------------------------------------------------------------------------
# Canonical forms and enumeration of unlabeled graphs.


def canonical_form(g: Graph, guard: int = DEFAULT_CANONICAL_GUARD) -> str:
    """Lexicographically minimal serialized edge list over all relabelings.

    Two graphs get the same string iff they are isomorphic, so the output
    doubles as a canonical key.  Brute force over n! permutations.
    """
    _check_guard(g.n, guard, "canonical_form")
    if g.n == 0 or g.m == 0:
        return Graph(g.n, frozenset()).to_edge_list()
    best: list[tuple[int, int]] | None = None
    edges = list(g.edges)
    for perm in permutations(range(g.n)):
        relabeled = sorted(
            (perm[u], perm[v]) if perm[u] < perm[v] else (perm[v], perm[u])
            for u, v in edges
        )
        if best is None or relabeled < best:
            best = relabeled
    lines = [f"n {g.n}"]
    lines.extend(f"e {u} {v}" for u, v in best)
    return "\n".join(lines) + "\n"


def canonical_key(g: Graph, guard: int = DEFAULT_CANONICAL_GUARD) -> str:
    """Alias of canonical_form, named for its role as a dict key."""
    return canonical_form(g, guard=guard)


def _pair_list(n: int) -> list[tuple[int, int]]:
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


def _mask_to_graph(n: int, mask: int, pairs: list[tuple[int, int]]) -> Graph:
    return Graph(
        n, frozenset(pairs[i] for i in range(len(pairs)) if mask >> i & 1)
    )


def _cache_dir() -> Path:
    env = os.environ.get("LABELKIT_CACHE_DIR")
    if env:
        return Path(env)
    return Path.home() / ".cache" / "labelkit"


def _enumerate_unlabeled_masks(n: int) -> list[int]:
    """All isomorphism classes of n-vertex graphs as minimal edge masks.

    Scans masks in increasing order; each unseen mask starts a new class and
    its whole orbit under vertex permutations is marked visited.  Complete by
    construction: every mask is either a representative or in a marked orbit.
    """
    pairs = _pair_list(n)
    npairs = len(pairs)
    if npairs == 0:
        return [0]
    pair_index = {p: i for i, p in enumerate(pairs)}
    perms = list(permutations(range(n)))
    # Bit-relocation tables per permutation, chunked 7 bits at a time so a
    # 21-bit mask transforms with three lookups instead of 21 bit tests.
    chunk_bits = 7
    nchunks = (npairs + chunk_bits - 1) // chunk_bits
    tables: list[list[list[int]]] = []
    for perm in perms:
        bit_map = [0] * npairs
        for i, (u, v) in enumerate(pairs):
            a, b = perm[u], perm[v]
            if a > b:
                a, b = b, a
            bit_map[i] = 1 << pair_index[(a, b)]
        chunk_tables = []
        for c in range(nchunks):
            lo = c * chunk_bits
            width = min(chunk_bits, npairs - lo)
            table = [0] * (1 << width)
            for value in range(1 << width):
                img = 0
                v = value
                while v:
                    low = v & -v
                    img |= bit_map[lo + low.bit_length() - 1]
                    v ^= low
                table[value] = img
            chunk_tables.append(table)
        tables.append(chunk_tables)

    total = 1 << npairs
    seen = bytearray(total)
    reps: list[int] = []
    chunk_mask = (1 << chunk_bits) - 1
    for mask in range(total):
        if seen[mask]:
            continue
        reps.append(mask)
        for chunk_tables in tables:
            img = 0
            rest = mask
            for c in range(nchunks):
                img |= chunk_tables[c][rest & chunk_mask]
                rest >>= chunk_bits
            seen[img] = 1
    return reps


@lru_cache(maxsize=None)
def _enumerate_unlabeled_cached(n: int) -> tuple[Graph, ...]:
    cache_file = _cache_dir() / f"unlabeled-v1-n{n}.txt"
    pairs = _pair_list(n)
    if cache_file.exists():
        lines = cache_file.read_text(encoding="utf-8").splitlines()
        masks = [int(s) for s in lines if s.strip()]
        if len(masks) == UNLABELED_GRAPH_COUNTS[n]:
            return tuple(_mask_to_graph(n, m, pairs) for m in masks)
    masks = _enumerate_unlabeled_masks(n)
    try:
        cache_file.parent.mkdir(parents=True, exist_ok=True)
        tmp = cache_file.with_suffix(".tmp")
        tmp.write_text("\n".join(str(m) for m in masks) + "\n", encoding="utf-8")
        tmp.replace(cache_file)
    except OSError:
        pass  # cache is best-effort; recompute next session if unwritable
    return tuple(_mask_to_graph(n, m, pairs) for m in masks)


def enumerate_unlabeled(n: int) -> list[Graph]:
    """One representative per isomorphism class of n-vertex graphs, in a
    deterministic order (increasing edge-mask of the minimal representative).

    Guarded at n <= 7; results are cached in memory and on disk.
    """
    if n < 0:
        raise DomainError("n must be non-negative")
    if n > ENUMERATION_LIMIT:
        raise SizeGuardError(
            f"enumerate_unlabeled: n={n} exceeds limit {ENUMERATION_LIMIT}"
        )
    return list(_enumerate_unlabeled_cached(n))


def connected_automorphism_bound(n: int, max_degree: int) -> int:
    """Upper bound n * D! * (D-1)^(n-D-1) on aut for connected graphs of
    maximum degree D >= 2.  The exponent n-D-1 is non-negative since D <= n-1."""
    if max_degree < 2:
        raise DomainError("bound applies to maximum degree >= 2")
    return n * math.factorial(max_degree) * (max_degree - 1) ** (n - max_degree - 1)
