"""Degeneracy orderings, labels, decoding, and universal graphs."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import labelkit as lk
from labelkit.errors import DomainError, SizeGuardError
from labelkit.labeling import (
    Label,
    SchemeParams,
    encode_with_params,
    field_width,
)
from labelkit.randgraphs import RngStream

from oracles import degeneracy_bruteforce


# -- peel orderings and degeneracy ------------------------------------------


def test_degeneracy_examples(k4, c5, petersen):
    assert lk.degeneracy(k4) == 3
    assert lk.degeneracy(c5) == 2
    assert lk.degeneracy(petersen) == 3
    assert lk.degeneracy(lk.empty_graph(5)) == 0
    assert lk.degeneracy(lk.path_graph(6)) == 1  # trees are 1-degenerate
    assert lk.degeneracy(lk.star_graph(5)) == 1


def test_degeneracy_k4_minus_edge(k4):
    g = lk.Graph(4, k4.edges - {(0, 1)})
    assert lk.degeneracy(g) == 2
    assert degeneracy_bruteforce(g) == 2


def test_degeneracy_matches_bruteforce_sample():
    rng = random.Random(7)
    for _ in range(40):
        n = rng.randint(1, 7)
        p = rng.random()
        g = lk.sample_gnp(n, p, random.Random(rng.getrandbits(32)))
        assert lk.degeneracy(g) == degeneracy_bruteforce(g)


def test_peel_ordering_structure(c5):
    ordering = lk.degeneracy_ordering(c5)
    assert sorted(ordering.order) == list(range(5))
    assert all(ordering.position[ordering.order[i]] == i for i in range(5))
    assert all(len(nbrs) <= ordering.k for nbrs in ordering.later_neighbors)
    assert max(len(nbrs) for nbrs in ordering.later_neighbors) == ordering.k
    # every edge appears in exactly one endpoint's later list
    assert sum(len(nbrs) for nbrs in ordering.later_neighbors) == c5.m


def test_degeneracy_monotone_under_subgraphs():
    rng = random.Random(13)
    for _ in range(25):
        n = rng.randint(2, 10)
        g = lk.sample_gnp(n, 0.5, random.Random(rng.getrandbits(32)))
        d = lk.degeneracy(g)
        verts = [v for v in range(n) if rng.random() < 0.7]
        sub = lk.induced_subgraph(g, verts)
        if sub.m and rng.random() < 0.5:
            sub = lk.Graph(sub.n, sub.edges - {next(iter(sub.edges))})
        assert lk.degeneracy(sub) <= d


# -- encode / decode ---------------------------------------------------------


def test_encode_single_edge_bit_exact():
    params, labels = lk.encode(lk.path_graph(2))
    assert (params.n, params.k, params.w) == (2, 1, 1)
    assert [lab.bits for lab in labels] == ["01", "11"]
    assert lk.decode(labels[0], labels[1], params) is True


def test_encode_empty_graph_positions_only():
    params, labels = lk.encode(lk.empty_graph(4))
    assert (params.k, params.w) == (0, 2)
    assert [lab.bits for lab in labels] == ["00", "01", "10", "11"]


def test_label_width_n8_k1():
    g = lk.path_graph(8)
    params, labels = lk.encode(g)
    assert params.k == 1 and params.bits == 6
    assert all(len(lab.bits) == 6 for lab in labels)


def test_decode_self_false(p3):
    params, labels = lk.encode(p3)
    for lab in labels:
        assert lk.decode(lab, lab, params) is False


def test_decode_isolated_vertices():
    params, labels = lk.encode(lk.empty_graph(4))
    assert lk.decode(labels[0], labels[3], params) is False


def test_decode_malformed():
    params = SchemeParams.for_graph(4, 1)
    good = Label("0001")
    with pytest.raises(DomainError):
        lk.decode(Label("001"), good, params)  # wrong length
    params3 = SchemeParams.for_graph(3, 1)
    with pytest.raises(DomainError):
        lk.decode(Label("0011"), Label("0001"), params3)  # field 3 >= n=3


def test_roundtrip_all_small_graphs():
    for n in range(6):
        for g in lk.enumerate_unlabeled(n):
            params, labels = lk.encode(g)
            assert params.bits == (params.k + 1) * field_width(g.n)
            for u in range(g.n):
                for v in range(u + 1, g.n):
                    assert lk.decode(labels[u], labels[v], params) == g.has_edge(u, v)


@given(st.integers(2, 24), st.floats(0.0, 1.0), st.integers(0, 2**32 - 1))
@settings(max_examples=40, deadline=None)
def test_roundtrip_random(n, p, seed):
    g = lk.sample_gnp(n, p, random.Random(seed))
    params, labels = lk.encode(g)
    for u in range(n):
        for v in range(u + 1, n):
            assert lk.decode(labels[u], labels[v], params) == g.has_edge(u, v)


def test_decode_symmetric_on_all_well_formed_pairs():
    params = SchemeParams.for_graph(4, 1)
    labels = [
        Label.from_fields((a, b), params) for a in range(4) for b in range(4)
    ]
    for a in labels:
        for b in labels:
            assert lk.decode(a, b, params) == lk.decode(b, a, params)
            if a.bits == b.bits:
                assert not lk.decode(a, b, params)


def test_hex_wire_format():
    params, labels = lk.encode(lk.path_graph(8))  # 6 bits -> 1 byte padded
    for lab in labels:
        assert len(lab.to_hex()) == 2
        assert Label.from_hex(lab.to_hex(), params).bits == lab.bits
    with pytest.raises(DomainError):
        Label.from_hex("ffff", params)  # padding bits set / wrong length


# -- universal graphs --------------------------------------------------------


def test_universal_n2_k1():
    params = SchemeParams.for_graph(2, 1)
    uni = lk.build_universal_graph(params)
    assert uni.graph.n == 4  # all four 2-bit strings are well-formed
    # "01" and "10" are the two encode outputs of a single edge; adjacent.
    idx = uni.index
    assert uni.graph.has_edge(idx["01"], idx["10"])


def test_universal_n1_k0():
    uni = lk.build_universal_graph(SchemeParams.for_graph(1, 0))
    assert uni.graph.n == 1 and uni.graph.m == 0


def test_universal_n6_k1_size():
    uni = lk.build_universal_graph(SchemeParams.for_graph(6, 1))
    assert uni.graph.n == 36  # strings with both 3-bit fields below 6


def test_universal_guard():
    with pytest.raises(SizeGuardError):
        lk.build_universal_graph(SchemeParams.for_graph(64, 2))


def test_embed_p4(p4):
    params = SchemeParams.for_graph(6, 1)
    uni = lk.build_universal_graph(params)
    mapping = lk.embed_into_universal(p4, params, uni)
    assert len(set(mapping.values())) == 4
    for u in range(4):
        for v in range(u + 1, 4):
            assert uni.graph.has_edge(mapping[u], mapping[v]) == p4.has_edge(u, v)


def test_embed_degeneracy_guard(k3):
    params = SchemeParams.for_graph(6, 1)
    uni = lk.build_universal_graph(params)
    with pytest.raises(DomainError):
        lk.embed_into_universal(k3, params, uni)


def test_embed_empty(k3):
    params = SchemeParams.for_graph(6, 1)
    uni = lk.build_universal_graph(params)
    mapping = lk.embed_into_universal(lk.empty_graph(3), params, uni)
    for u in range(3):
        for v in range(u + 1, 3):
            assert not uni.graph.has_edge(mapping[u], mapping[v])


# -- class-level label bound -------------------------------------------------


def test_monotone_class_bound_values():
    log = lk.parse_growth_spec("log")
    assert lk.monotone_class_bound(1.0, log, 1024) == (20, 210)
    assert lk.monotone_class_bound(1.0, log, 2) == (2, 3)
    sqrt = lk.parse_growth_spec("pow:1:0.5")
    assert lk.monotone_class_bound(0.5, sqrt, 100) == (10, 77)


def test_encode_with_larger_scheme(p4):
    params = SchemeParams.for_graph(6, 2)
    labels = encode_with_params(p4, params)
    assert all(len(lab.bits) == params.bits for lab in labels)
    for u in range(4):
        for v in range(u + 1, 4):
            assert lk.decode(labels[u], labels[v], params) == p4.has_edge(u, v)
