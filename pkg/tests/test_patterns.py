import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_copies, brute_mono, brute_rainbow
from rhl.constructions import messy_k6, star_clique2, tight_lb
from rhl.errors import ParseError
from rhl.hypergraph import Coloring, HostGraph, normalize, relabel_vertices
from rhl.patterns import (
    CATALOG,
    LOOSE_L,
    MATCHING2,
    MESSY_M,
    SINGLE_EDGE,
    TIGHT_T,
    Pattern,
    copy_table,
    count_copies,
    dumps_pattern,
    enumerate_embeddings,
    find_monochromatic_copy,
    find_rainbow_copy,
    get_pattern,
    is_rainbow_free,
    loads_pattern,
)

EXPECTED_EDGES = {
    "TIGHT_T": ["012", "123", "234"],
    "MESSY_M": ["012", "123", "345"],
    "LOOSE_L": ["012", "234", "456"],
    "LOOSE_CYCLE_C3": ["012", "045", "234"],
    "LOOSE_STAR_S2": ["012", "034"],
    "LOOSE_STAR_S3": ["012", "034", "056"],
    "TIGHT_STAR_DS2": ["012", "013"],
    "TIGHT_STAR_DS3": ["012", "013", "014"],
    "S2_PLUS_S1": ["012", "034", "567"],
    "DS2_PLUS_DS1": ["012", "013", "456"],
    "MATCHING2": ["012", "345"],
    "SINGLE_EDGE": ["012"],
}


def test_catalog_edges():
    for name, edges in EXPECTED_EDGES.items():
        p = CATALOG[name]
        assert ["".join(map(str, e)) for e in p.edges] == edges


def test_automorphism_counts():
    assert TIGHT_T.automorphism_count == 2
    assert MESSY_M.automorphism_count == 4
    assert LOOSE_L.automorphism_count == 8
    assert MATCHING2.automorphism_count == 72


def test_aliases():
    assert get_pattern("t") is TIGHT_T
    assert get_pattern("M") is MESSY_M
    assert get_pattern("loose_l") is LOOSE_L
    with pytest.raises(KeyError):
        get_pattern("nope")


def test_pattern_validation():
    with pytest.raises(ValueError):
        Pattern("CUSTOM", 4, ((0, 1, 2),))  # vertex 3 unused
    with pytest.raises(ValueError):
        Pattern("CUSTOM", 3, ((0, 1, 1),))
    with pytest.raises(ValueError):
        Pattern("CUSTOM", 3, ((0, 1, 2), (2, 1, 0)))


def test_pattern_file_round_trip():
    p = loads_pattern(dumps_pattern(LOOSE_L))
    assert p.edges == LOOSE_L.edges and p.name == "CUSTOM"
    with pytest.raises(ParseError) as info:
        loads_pattern("pattern 3\ne 0 1\n")
    assert info.value.line == 2
    with pytest.raises(ParseError):
        loads_pattern("pattern 4\ne 0 1 2\n")


@pytest.mark.parametrize(
    "host, p, count",
    [
        (HostGraph.complete(4), TIGHT_T, 0),
        (HostGraph.complete(5), TIGHT_T, 60),
        (HostGraph.complete(6), MESSY_M, 180),
        (HostGraph.complete(7), LOOSE_L, 630),
        (HostGraph.complete(5), SINGLE_EDGE, 10),
    ],
)
def test_copy_counts(host, p, count):
    assert count_copies(host, p) == count


@pytest.mark.parametrize("name", sorted(CATALOG))
def test_copies_match_brute_force(name):
    p = CATALOG[name]
    for host in (HostGraph.complete(6), HostGraph.tripartite(2, 2, 2)):
        mine = {frozenset(frozenset(e) for e in emb.host_edges()) for emb in enumerate_embeddings(host, p)}
        assert mine == brute_copies(host, p)


def test_tripartite_loose_count_matches_brute_force():
    host = HostGraph.tripartite(3)
    assert count_copies(host, LOOSE_L) == len(brute_copies(host, LOOSE_L)) == 648


def test_enumeration_order_is_lexicographic():
    table = copy_table(HostGraph.complete(6), MESSY_M)
    rows = [tuple(r) for r in table.edge_ids]
    assert rows == sorted(rows)
    assert all(list(r) == sorted(r) for r in rows)


def test_embedding_consistency():
    host = HostGraph.tripartite(3)
    for emb in enumerate_embeddings(host, LOOSE_L):
        assert len(set(emb.images)) == LOOSE_L.num_vertices
        assert sorted(emb.edge_images) == sorted(host.edges.index(e) for e in emb.host_edges())
        assert all(host.is_edge(e) for e in emb.host_edges())


def test_count_monotone_in_n():
    for p in (TIGHT_T, MESSY_M, LOOSE_L, MATCHING2):
        counts = [count_copies(HostGraph.complete(n), p) for n in range(3, 9)]
        assert counts == sorted(counts)


def test_detector_examples():
    mono = Coloring(HostGraph.complete(6), (0,) * 20)
    assert find_rainbow_copy(mono, MESSY_M) is None
    assert find_rainbow_copy(tight_lb(9), TIGHT_T) is None
    m6 = messy_k6()
    assert find_rainbow_copy(m6, MESSY_M) is None
    w = find_rainbow_copy(m6, TIGHT_T)
    assert w is not None and len({m6.colors[e] for e in w.edge_images}) == 3
    rainbow5 = Coloring(HostGraph.complete(5), tuple(range(10)))
    assert find_monochromatic_copy(rainbow5, MATCHING2) is None
    assert find_monochromatic_copy(Coloring(HostGraph.complete(7), (0,) * 35), MATCHING2) is not None
    assert find_monochromatic_copy(star_clique2(6), MATCHING2) is None
    assert not brute_mono(star_clique2(6), MATCHING2)


def test_detector_returns_first_copy_in_order():
    c = Coloring(HostGraph.complete(5), tuple(range(10)))
    assert find_rainbow_copy(c, TIGHT_T).edge_images == tuple(copy_table(c.host, TIGHT_T).edge_ids[0])


_small_hosts = [HostGraph.complete(5), HostGraph.complete(6), HostGraph.tripartite(2, 2, 2),
                HostGraph.tripartite(1, 2, 3)]


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(_small_hosts), st.sampled_from(sorted(CATALOG)), st.integers(1, 4), st.randoms(use_true_random=False))
def test_detector_oracle_equivalence(host, name, k, rng):
    p = CATALOG[name]
    c = Coloring(host, normalize([rng.randrange(k) for _ in range(host.num_edges)]))
    assert (find_rainbow_copy(c, p) is not None) == brute_rainbow(c, p)
    assert (find_monochromatic_copy(c, p) is not None) == brute_mono(c, p)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 5), st.randoms(use_true_random=False))
def test_rainbow_freeness_invariant_under_relabeling(k, rng):
    host = HostGraph.complete(7)
    raw = [rng.randrange(k) + 10 for _ in range(host.num_edges)]
    c = Coloring(host, raw)
    perm = list(range(7))
    rng.shuffle(perm)
    for p in (TIGHT_T, MESSY_M, LOOSE_L):
        base = is_rainbow_free(c, p)
        assert base == is_rainbow_free(Coloring(host, normalize(raw)), p)
        assert base == is_rainbow_free(relabel_vertices(c, perm), p)


def test_rainbow_mask_agrees_with_python_scan():
    rng = random.Random(1)
    host = HostGraph.complete(7)
    c = Coloring(host, [rng.randrange(4) for _ in range(35)])
    table = copy_table(host, LOOSE_L)
    from rhl.patterns import rainbow_mask

    expect = np.array([len({c.colors[e] for e in row}) == 3 for row in table.edge_ids])
    assert (rainbow_mask(c, LOOSE_L) == expect).all()
