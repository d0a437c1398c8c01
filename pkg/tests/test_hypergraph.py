import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rhl.constructions import tight_lb
from rhl.errors import InvalidPermutation, NotAnEdge, OutOfRange, ParseError
from rhl.hypergraph import (
    Coloring,
    HostGraph,
    color_summary,
    dumps_coloring,
    edge_rank,
    edge_unrank,
    loads_coloring,
    normalize,
    normalize_colors,
    relabel_vertices,
)

K5 = HostGraph.complete(5)


def test_rank_examples():
    assert edge_rank(K5, (0, 1, 2)) == 0
    assert edge_rank(K5, (2, 3, 4)) == 9
    assert edge_rank(K5, (0, 1, 3)) == 1
    assert edge_rank(K5, (3, 0, 1)) == 1
    assert edge_unrank(K5, 0) == (0, 1, 2)
    assert edge_unrank(K5, 9) == (2, 3, 4)


def test_tripartite_rank_is_mixed_radix():
    h = HostGraph.tripartite(2, 3, 4)
    assert edge_rank(h, (1, 2, 5)) == 1
    assert edge_rank(h, (0, 3, 5)) == 2
    assert edge_rank(h, (0, 2, 6)) == 6
    assert edge_unrank(h, h.num_edges - 1) == (1, 4, 8)


def _hosts_upto_30():
    for n in range(3, 31):
        yield HostGraph.complete(n)
    for sizes in itertools.product(range(1, 11), repeat=3):
        if sum(sizes) <= 30 and sizes[0] <= sizes[1] <= sizes[2]:
            yield HostGraph.tripartite(*sizes)
    yield HostGraph.tripartite(10, 1, 3)


def test_rank_unrank_bijection_exhaustive():
    for h in _hosts_upto_30():
        ranks = [edge_rank(h, edge_unrank(h, k)) for k in range(h.num_edges)]
        assert ranks == list(range(h.num_edges)), h
        assert len(set(h.edges)) == h.num_edges
        assert [edge_rank(h, e) for e in h.edges] == list(range(h.num_edges))


def test_edge_counts():
    assert HostGraph.complete(7).num_edges == 35
    assert HostGraph.tripartite(2, 3, 4).num_edges == 24


@pytest.mark.parametrize("bad", [(0, 0, 1), (0, 1, 5), (0, 1), (-1, 2, 3)])
def test_not_an_edge(bad):
    with pytest.raises(NotAnEdge):
        edge_rank(K5, bad)


def test_tripartite_rejects_same_part_triple():
    with pytest.raises(NotAnEdge):
        edge_rank(HostGraph.tripartite(3), (0, 1, 3))


def test_unrank_out_of_range():
    for k in (-1, 10):
        with pytest.raises(OutOfRange):
            edge_unrank(K5, k)


@pytest.mark.parametrize("args", [("complete", (2,)), ("tripartite", (0, 1, 1)), ("torus", (3,))])
def test_degenerate_hosts_rejected(args):
    with pytest.raises(ValueError):
        HostGraph(*args)


def test_normalize_examples():
    assert normalize([5, 5, 9, 5, 2]) == (0, 0, 1, 0, 2)
    assert normalize([7, 7, 7]) == (0, 0, 0)
    c = Coloring(K5, (0, 1, 0, 2, 1, 0, 3, 3, 1, 0))
    assert normalize_colors(c) == c


@given(st.lists(st.integers(0, 6), min_size=10, max_size=10))
def test_normalize_idempotent_and_partition_preserving(raw):
    c = Coloring(K5, raw)
    n1 = normalize_colors(c)
    assert normalize_colors(n1) == n1
    assert n1.palette_size == c.palette_size
    for i, j in itertools.combinations(range(10), 2):
        assert (raw[i] == raw[j]) == (n1.colors[i] == n1.colors[j])


def test_relabel_identity_is_normalize():
    c = Coloring(K5, (3, 1, 3, 2, 1, 0, 0, 2, 1, 3))
    assert relabel_vertices(c, range(5)) == normalize_colors(c)


def test_relabel_moves_colors():
    c = Coloring(K5, (0, 1, 1, 2, 0, 3, 3, 1, 2, 0))
    perm = [1, 3, 0, 4, 2]
    out = relabel_vertices(c, perm)
    img = lambda e: edge_rank(K5, [perm[v] for v in e])  # noqa: E731
    for e, f in itertools.combinations(K5.edges, 2):
        assert (c[e] == c[f]) == (out.colors[img(e)] == out.colors[img(f)])
    assert out.is_normalized


def test_relabel_swap_on_tight_lb_preserves_class_sizes():
    c = tight_lb(5)
    out = relabel_vertices(c, [1, 0, 2, 3, 4])
    sizes = lambda x: sorted(len(v) for v in x.classes().values())  # noqa: E731
    assert sizes(out) == sizes(c)


@settings(max_examples=60)
@given(st.randoms(use_true_random=False), st.lists(st.integers(0, 4), min_size=27, max_size=27))
def test_relabel_invariants_tripartite(rng, raw):
    h = HostGraph.tripartite(3)
    c = Coloring(h, raw)
    parts = [list(p) for p in h.parts]
    order = list(range(3))
    rng.shuffle(order)
    perm = [0] * 9
    for src, dst in enumerate(order):
        targets = list(parts[dst])
        rng.shuffle(targets)
        for v, w in zip(parts[src], targets):
            perm[v] = w
    out = relabel_vertices(c, perm)
    assert out.palette_size == c.palette_size
    assert sorted(map(len, out.classes().values())) == sorted(map(len, c.classes().values()))


def test_relabel_rejects_bad_permutations():
    c = Coloring(K5, (0,) * 10)
    with pytest.raises(InvalidPermutation):
        relabel_vertices(c, [0, 0, 1, 2, 3])
    h = HostGraph.tripartite(2, 2, 3)
    with pytest.raises(InvalidPermutation):
        relabel_vertices(Coloring(h, (0,) * 12), [0, 2, 1, 3, 4, 5, 6])
    with pytest.raises(InvalidPermutation):
        relabel_vertices(Coloring(h, (0,) * 12), [4, 5, 6, 2, 3, 0, 1])


def test_color_summary_examples():
    mono = color_summary(Coloring(K5, (0,) * 10))
    assert mono.palette_size == 1 and set(mono.degrees) == {1}
    rainbow = color_summary(Coloring(K5, tuple(range(10))))
    assert rainbow.palette_size == 10 and set(rainbow.degrees) == {6} and rainbow.max_degree == 6
    assert color_summary(tight_lb(9)).palette_size == 4


def test_codec_round_trip_is_byte_identical():
    rng = random.Random(4)
    for h in (HostGraph.complete(6), HostGraph.tripartite(2, 3, 2)):
        c = Coloring(h, normalize([rng.randrange(5) for _ in range(h.num_edges)]))
        text = dumps_coloring(c)
        back = loads_coloring(text)
        assert back == c
        assert dumps_coloring(back) == text


def test_loader_normalizes_and_accepts_comments_and_any_order():
    lines = [f"e {a} {b} {c} c {9 - i}" for i, (a, b, c) in enumerate(K5.edges)]
    text = "# header comment\nhost complete 5\n" + "\n".join(reversed(lines)) + "  # trailing\n"
    c = loads_coloring(text)
    assert c.colors == tuple(range(10))


def _k5_text(mutate):
    lines = ["host complete 5"] + [f"e {a} {b} {c} c 0" for a, b, c in K5.edges]
    mutate(lines)
    return "\n".join(lines) + "\n"


@pytest.mark.parametrize(
    "mutate, line, word",
    [
        (lambda ls: ls.__setitem__(3, "e 0 1 2 c 0"), 4, "duplicate"),
        (lambda ls: ls.__setitem__(3, "e 0 0 2 c 0"), 4, "not an edge"),
        (lambda ls: ls.__setitem__(3, "edge 0 1 2"), 4, "malformed"),
        (lambda ls: ls.__setitem__(3, "e 0 1 x c 0"), 4, "integers"),
        (lambda ls: ls.__setitem__(0, "host complete 2"), 1, "n >= 3"),
        (lambda ls: ls.pop(), None, "missing"),
    ],
)
def test_parse_errors_report_line_and_reason(mutate, line, word):
    with pytest.raises(ParseError) as info:
        loads_coloring(_k5_text(mutate))
    assert info.value.line == line
    assert word in info.value.reason


def test_coloring_rejects_wrong_length_and_negative():
    with pytest.raises(ValueError):
        Coloring(K5, (0,) * 9)
    with pytest.raises(ValueError):
        Coloring(K5, (-1,) + (0,) * 9)
