"""Independent brute-force oracles used to cross-check the library.

Nothing here calls back into the implementation paths it checks: embeddings
are counted by raw permutation search, degeneracy by scanning all vertex
subsets, subgraph maxima by scanning all k-subsets, and binomial tails by
exact rational summation.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations
from math import comb

from labelkit import Graph


def count_embeddings_by_permutations(f: Graph, g: Graph) -> int:
    """Number of permutations of [n] mapping every edge of f to an edge of g."""
    assert f.n == g.n
    count = 0
    for perm in permutations(range(g.n)):
        if all(g.has_edge(perm[u], perm[v]) for u, v in f.edges):
            count += 1
    return count


def automorphisms_by_permutations(g: Graph) -> int:
    count = 0
    edges = set(g.edges)
    for perm in permutations(range(g.n)):
        mapped = {
            (perm[u], perm[v]) if perm[u] < perm[v] else (perm[v], perm[u])
            for u, v in g.edges
        }
        if mapped == edges:
            count += 1
    return count


def degeneracy_bruteforce(g: Graph) -> int:
    """Max over nonempty vertex subsets of the induced minimum degree."""
    if g.n == 0:
        return 0
    masks = g.adj_masks
    best = 0
    for subset in range(1, 1 << g.n):
        mindeg = min(
            (masks[v] & subset).bit_count()
            for v in range(g.n)
            if subset >> v & 1
        )
        best = max(best, mindeg)
    return best


def max_edges_bruteforce(g: Graph, k: int) -> tuple[int, tuple[int, ...]]:
    """Exact densest k-subset by scanning all of them."""
    masks = g.adj_masks
    best, best_set = -1, ()
    for subset in combinations(range(g.n), k):
        smask = 0
        for v in subset:
            smask |= 1 << v
        count = sum((masks[v] & smask).bit_count() for v in subset) // 2
        if count > best:
            best, best_set = count, subset
    return best, best_set


def exact_binomial_tail_fraction(N: int, p: Fraction, t: float) -> Fraction:
    """P(Bin(N, p) > t), exactly."""
    lo = int(t) + 1 if float(t) == int(t) else int(t) + 1
    total = Fraction(0)
    q = 1 - p
    for i in range(lo, N + 1):
        total += comb(N, i) * p**i * q ** (N - i)
    return total


def embeds_as_subgraph(pattern: Graph, host: Graph) -> bool:
    """Can the pattern's vertices map injectively into the host with every
    pattern edge landing on a host edge?  (Host may be larger.)"""
    if pattern.n > host.n or pattern.m > host.m:
        return False
    order = sorted(range(pattern.n), key=lambda v: -pattern.degree(v))
    mapping = {}
    used = set()

    def extend(i: int) -> bool:
        if i == pattern.n:
            return True
        v = order[i]
        for w in range(host.n):
            if w in used or pattern.degree(v) > host.degree(w):
                continue
            if all(
                mapping[u] in host.adj[w]
                for u in pattern.adj[v]
                if u in mapping
            ):
                mapping[v] = w
                used.add(w)
                if extend(i + 1):
                    return True
                del mapping[v]
                used.discard(w)
        return False

    return extend(0)


def all_labeled_graphs(n: int):
    """Every labeled graph on [n], as a Graph, in mask order."""
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for mask in range(1 << len(pairs)):
        yield Graph(
            n, frozenset(pairs[i] for i in range(len(pairs)) if mask >> i & 1)
        )
