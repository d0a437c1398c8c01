import itertools

import pytest

from rhl.certifiers import verify_certificate
from rhl.constructions import (
    COMPLETE_CASES,
    TRIPARTITE_CASES,
    build,
    intersecting,
    perfect_matching_classes,
    sample_structured,
    sample_with_certificate,
)
from rhl.errors import BadParameters
from rhl.hypergraph import HostGraph
from rhl.patterns import LOOSE_L, MATCHING2, MESSY_M, TIGHT_T, find_monochromatic_copy, find_rainbow_copy


@pytest.mark.parametrize("n", range(5, 13))
def test_tight_lb(n):
    c = build("TIGHT_LB", n)
    assert c.palette_size == n // 3 + 1
    assert find_rainbow_copy(c, TIGHT_T) is None
    assert c.is_normalized


def test_tight_lb_structure():
    c = build("tight-lb", 9)
    base = c[(0, 3, 6)]
    for i in range(3):
        assert c[(3 * i, 3 * i + 1, 3 * i + 2)] != base
    assert sum(1 for x in c.colors if x == base) == 84 - 3


def test_messy_k6():
    c = build("MESSY_K6")
    assert c.palette_size == 10
    assert perfect_matching_classes(c)
    assert find_rainbow_copy(c, MESSY_M) is None
    for e in c.host.edges:
        assert c[e] == c[tuple(v for v in range(6) if v not in e)]


@pytest.mark.parametrize("n", range(7, 11))
def test_loose_lb(n):
    c = build("LOOSE_LB", n)
    assert c.palette_size == n - 1
    assert find_rainbow_copy(c, LOOSE_L) is None
    base = c[(0, 1, 2)]
    for e in c.host.edges:
        if c[e] != base:
            assert {n - 2, n - 1} <= set(e)


@pytest.mark.parametrize("n", (3, 4, 5))
def test_multipartite_constructions(n):
    g1, g2, g3 = build("MP_G1", n), build("MP_G2", n), build("MP_G3", n)
    assert (g1.palette_size, g2.palette_size, g3.palette_size) == (n, n + 1, n + 1)
    assert find_rainbow_copy(g1, MESSY_M) is None
    assert find_rainbow_copy(g2, TIGHT_T) is None
    assert find_rainbow_copy(g3, LOOSE_L) is None


def test_mp_g1_colors_by_first_vertex():
    c = build("MP_G1", 3)
    for e in c.host.edges:
        assert c[e] == c[(e[0], 3, 6)]


def test_star_clique2():
    c = build("STAR_CLIQUE2", 6)
    assert c.palette_size == 2
    for ids in c.classes().values():
        assert intersecting([c.host.edges[i] for i in ids])
    assert find_monochromatic_copy(c, MATCHING2) is None


def test_j_canonical_tripartite():
    host = HostGraph.tripartite(2, 3, 4)
    assert build("J_CANONICAL", J=[], sizes=(2, 3, 4)).palette_size == 1
    full = build("J_CANONICAL", J=[1, 2, 3], sizes=(2, 3, 4))
    assert full.palette_size == host.num_edges
    for J in itertools.chain.from_iterable(itertools.combinations((1, 2, 3), k) for k in range(4)):
        c = build("J_CANONICAL", J=J, sizes=(2, 3, 4))
        want = 1
        for j in J:
            want *= host.sizes[j - 1]
        assert c.palette_size == want
    c = build("J_CANONICAL", n=3, J=[2])
    offs = [p.start for p in c.host.parts]
    for e, f in itertools.combinations(c.host.edges, 2):
        assert (c[e] == c[f]) == (e[1] - offs[1] == f[1] - offs[1])


def test_j_canonical_ordered():
    c = build("J_CANONICAL_ORDERED", 6, J=[1, 3])
    for e, f in itertools.combinations(c.host.edges, 2):
        assert (c[e] == c[f]) == ((e[0], e[2]) == (f[0], f[2]))
    assert build("J_CANONICAL_ORDERED", 6, J=[]).palette_size == 1
    assert build("J_CANONICAL_ORDERED", 6, J=[1, 2, 3]).palette_size == 20


@pytest.mark.parametrize(
    "name, kw",
    [
        ("TIGHT_LB", {"n": 4}),
        ("LOOSE_LB", {"n": 6}),
        ("MP_G2", {"n": 2}),
        ("MESSY_K6", {"n": 7}),
        ("J_CANONICAL", {"n": 3, "J": [4]}),
        ("J_CANONICAL", {"n": 3}),
        ("NO_SUCH", {"n": 5}),
        ("TIGHT_LB", {}),
    ],
)
def test_bad_parameters(name, kw):
    with pytest.raises(BadParameters):
        build(name, **kw)


@pytest.mark.parametrize("case", COMPLETE_CASES + TRIPARTITE_CASES)
def test_sampler_deterministic_and_valid(case):
    n = 3 if case.startswith("MP") else 8
    a = sample_structured(case, n, 11)
    assert a == sample_structured(case, n, 11)
    assert a.is_normalized
    for seed in range(25):
        c, cert = sample_with_certificate(case, n, seed)
        assert verify_certificate(c, cert), (case, seed)
        assert c.palette_size >= 3


def test_sampler_thresholds():
    with pytest.raises(BadParameters):
        sample_structured("TWO_APEX", 6, 0)
    with pytest.raises(BadParameters):
        sample_structured("MP_FIVE_VERTEX", 2, 0)
    with pytest.raises(BadParameters):
        sample_structured("WHATEVER", 8, 0)
