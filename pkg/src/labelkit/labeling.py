"""Degeneracy orderings, compact adjacency labels, and universal graphs.

A graph of degeneracy k admits an ordering in which every vertex has at most
k neighbors later than itself.  Encoding each vertex as its own position
followed by the positions of those later neighbors yields labels of exactly
(k+1) fields of max(1, ceil(log2 n)) bits, and adjacency of two vertices can
be read off from their labels alone.  Materializing every well-formed label
as a vertex, with the decoder as the adjacency relation, gives a graph that
contains every n-vertex graph of degeneracy at most k as an induced subgraph.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, SizeGuardError
from .graphs import Graph

#: Hard ceiling on (k+1)*w when materializing all labels as a graph.
UNIVERSAL_GUARD_BITS = 14


def ceil_log2(n: int) -> int:
    """Smallest t with 2**t >= n; 0 for n <= 1."""
    if n <= 1:
        return 0
    return (n - 1).bit_length()


def field_width(n: int) -> int:
    """Bits per label field: max(1, ceil(log2 n)), never zero."""
    return max(1, ceil_log2(n))


@dataclass(frozen=True)
class SchemeParams:
    """Shape of a labeling: host size n, degeneracy bound k, field width w."""

    n: int
    k: int
    w: int

    def __post_init__(self):
        if self.n < 0 or self.k < 0:
            raise DomainError("n and k must be non-negative")
        if self.w != field_width(self.n):
            raise DomainError(
                f"field width must be max(1, ceil(log2 n)) = {field_width(self.n)}, got {self.w}"
            )
        if self.n > 1 and self.k >= self.n:
            raise DomainError(f"k={self.k} must be below n={self.n}")

    @classmethod
    def for_graph(cls, n: int, k: int) -> "SchemeParams":
        return cls(n, k, field_width(n))

    @property
    def bits(self) -> int:
        """Total label length: (k+1) fields of w bits."""
        return (self.k + 1) * self.w


@dataclass(frozen=True)
class PeelOrdering:
    """Greedy minimum-degree removal order of a graph.

    ``order[i]`` is the i-th vertex removed; ``position`` is the inverse
    permutation.  ``later_neighbors[v]`` lists, as positions, the neighbors of
    v removed after v; each edge shows up in exactly one endpoint's list.
    ``k`` is the largest residual degree seen at any removal, which equals the
    degeneracy of the graph.
    """

    order: tuple[int, ...]
    position: tuple[int, ...]
    later_neighbors: tuple[tuple[int, ...], ...]
    k: int


def degeneracy_ordering(g: Graph) -> PeelOrdering:
    """Peel the graph by repeatedly removing a minimum-degree vertex.

    Ties break toward the lowest vertex id, so the ordering (and every label
    derived from it) is reproducible byte for byte.
    """
    n = g.n
    remaining = set(range(n))
    residual = [g.degree(v) for v in range(n)]
    order: list[int] = []
    later: list[tuple[int, ...]] = [()] * n
    k = 0
    for _ in range(n):
        v = min(remaining, key=lambda u: (residual[u], u))
        k = max(k, residual[v])
        remaining.discard(v)
        order.append(v)
        survivors = sorted(w for w in g.adj[v] if w in remaining)
        later[v] = tuple(survivors)  # recorded as ids; converted below
        for w in survivors:
            residual[w] -= 1
    position = [0] * n
    for pos, v in enumerate(order):
        position[v] = pos
    later_positions = tuple(
        tuple(sorted(position[w] for w in later[v])) for v in range(n)
    )
    return PeelOrdering(tuple(order), tuple(position), later_positions, k)


def degeneracy(g: Graph) -> int:
    """Minimum d such that every subgraph has a vertex of degree at most d."""
    return degeneracy_ordering(g).k


@dataclass(frozen=True)
class Label:
    """Fixed-width bit string of (k+1) fields, most significant bit first.

    Field 0 is the vertex's position in the peel order; fields 1..k hold the
    positions of its later neighbors, padded with the vertex's own position.
    Loops are impossible, so the padding can never be mistaken for adjacency.
    """

    bits: str

    def fields(self, params: SchemeParams) -> tuple[int, ...]:
        w = params.w
        if len(self.bits) != params.bits or any(c not in "01" for c in self.bits):
            raise DomainError(
                f"malformed label: expected {params.bits} bits, got {self.bits!r}"
            )
        values = tuple(
            int(self.bits[i * w : (i + 1) * w], 2) for i in range(params.k + 1)
        )
        for value in values:
            if value >= max(params.n, 1):
                raise DomainError(
                    f"malformed label: field value {value} not below n={params.n}"
                )
        return values

    def to_hex(self) -> str:
        """Wire format: bits zero-padded at the end to a whole byte, big-endian
        byte order, lowercase hex."""
        padded = self.bits + "0" * (-len(self.bits) % 8)
        if not padded:
            return ""
        return bytes(
            int(padded[i : i + 8], 2) for i in range(0, len(padded), 8)
        ).hex()

    @classmethod
    def from_fields(cls, values, params: SchemeParams) -> "Label":
        w = params.w
        bits = "".join(format(v, f"0{w}b") for v in values)
        return cls(bits)

    @classmethod
    def from_hex(cls, hex_text: str, params: SchemeParams) -> "Label":
        try:
            raw = bytes.fromhex(hex_text)
        except ValueError:
            raise DomainError(f"malformed hex label: {hex_text!r}") from None
        bit_text = "".join(format(b, "08b") for b in raw)
        nbits = params.bits
        if len(bit_text) < nbits or any(c == "1" for c in bit_text[nbits:]):
            raise DomainError(
                f"hex label {hex_text!r} does not fit {nbits} bits plus zero padding"
            )
        return cls(bit_text[:nbits])


def encode_with_params(g: Graph, params: SchemeParams) -> list[Label]:
    """Labels for g's vertices in a (possibly larger) target scheme.

    The graph's own peel ordering supplies positions; its degeneracy must not
    exceed params.k and its size must not exceed params.n.
    """
    if g.n > params.n:
        raise DomainError(f"graph has {g.n} vertices, scheme allows {params.n}")
    ordering = degeneracy_ordering(g)
    if ordering.k > params.k:
        raise DomainError(
            f"degeneracy {ordering.k} exceeds scheme bound k={params.k}"
        )
    labels = []
    for v in range(g.n):
        own = ordering.position[v]
        fields = [own]
        fields.extend(ordering.later_neighbors[v])
        fields.extend([own] * (params.k - len(ordering.later_neighbors[v])))
        labels.append(Label.from_fields(fields, params))
    return labels


def encode(g: Graph) -> tuple[SchemeParams, list[Label]]:
    """Assign every vertex a ((k+1) * max(1, ceil(log2 n)))-bit label, where k
    is the graph's degeneracy."""
    k = degeneracy(g)
    params = SchemeParams.for_graph(g.n, k)
    return params, encode_with_params(g, params)


def decode(a: Label, b: Label, params: SchemeParams) -> bool:
    """Adjacency from two labels alone: true iff one label's own position
    appears among the other's neighbor fields.  Symmetric and irreflexive on
    all well-formed pairs."""
    fa = a.fields(params)
    fb = b.fields(params)
    if fa[0] == fb[0]:
        return False
    return fb[0] in fa[1:] or fa[0] in fb[1:]


@dataclass(frozen=True)
class UniversalGraph:
    """All well-formed labels of a scheme, made adjacent by the decoder.

    ``labels[i]`` is the bit string of vertex i; ``index`` inverts it.  Every
    graph the scheme can encode embeds into ``graph`` as an induced subgraph.
    """

    params: SchemeParams
    graph: Graph
    labels: tuple[str, ...]

    @property
    def index(self) -> dict[str, int]:
        return {bits: i for i, bits in enumerate(self.labels)}


def build_universal_graph(
    params: SchemeParams, guard_bits: int = UNIVERSAL_GUARD_BITS
) -> UniversalGraph:
    """Materialize the scheme: one vertex per well-formed label (every field
    below n), edges wherever the decoder answers true."""
    if params.bits > guard_bits:
        raise SizeGuardError(
            f"universal graph on 2^{params.bits} candidate labels exceeds "
            f"guard 2^{guard_bits}"
        )
    n_host = max(params.n, 1)
    field_values = [()]
    for _ in range(params.k + 1):
        field_values = [prefix + (v,) for prefix in field_values for v in range(n_host)]
    labels = [Label.from_fields(values, params) for values in field_values]
    label_bits = tuple(lab.bits for lab in labels)
    edges = set()
    for i in range(len(labels)):
        for j in range(i + 1, len(labels)):
            if decode(labels[i], labels[j], params):
                edges.add((i, j))
    return UniversalGraph(params, Graph(len(labels), frozenset(edges)), label_bits)


def embed_into_universal(
    g: Graph, params: SchemeParams, universal: UniversalGraph
) -> dict[int, int]:
    """Injective map from g's vertices into the universal graph, via labels.

    Adjacency and non-adjacency are both preserved because the universal
    graph's edges are exactly the decoder's yes-instances.
    """
    if universal.params != params:
        raise DomainError("universal graph was built for different parameters")
    labels = encode_with_params(g, params)
    index = universal.index
    mapping = {v: index[lab.bits] for v, lab in enumerate(labels)}
    if len(set(mapping.values())) != g.n:
        raise DomainError("embedding is not injective")  # unreachable: field 0 differs
    return mapping


def monotone_class_bound(C: float, f, n: int) -> tuple[int, int]:
    """Degeneracy bound floor(2*C*f(n)) for a subgraph-closed class of growth
    2^(C*n*f(n)), and the resulting label size (bound+1)*max(1, ceil(log2 n)).
    """
    if C <= 0:
        raise DomainError("C must be positive")
    bound = math.floor(2 * C * f.value(n))
    bits = (bound + 1) * field_width(n)
    return bound, bits
