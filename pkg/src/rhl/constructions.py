"""Explicit extremal colorings and seeded samplers of structured colorings.

Vertex labels are 0-based: a 1-based vertex ``v_i`` is label ``i - 1``.
On tripartite hosts ``x_i``, ``y_i``, ``z_i`` are the ``i``-th vertices of the
first, second and third part.
"""

from __future__ import annotations

import itertools
import random
from typing import Iterable

from .certifiers import (
    MonoMinusVertex,
    MPApexPartition,
    MPBasePartition,
    MPFiveVertex,
    MPTwoApex,
    MPUniqueEdge,
    NearMonoMinusVertex,
    SpecialEdge,
    SpecialEdge3,
    TightCertificate,
    TwoApex,
)
from .errors import BadParameters
from .hypergraph import Coloring, HostGraph, edge_rank, normalize

CONSTRUCTIONS = (
    "TIGHT_LB", "MESSY_K6", "LOOSE_LB", "STAR_CLIQUE2", "MP_G1", "MP_G2", "MP_G3",
    "J_CANONICAL", "J_CANONICAL_ORDERED",
)


def _finish(host: HostGraph, colors: Iterable[int]) -> Coloring:
    return Coloring(host, normalize(list(colors)))


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise BadParameters(msg)


def tight_lb(n: int) -> Coloring:
    _need(n >= 5, "TIGHT_LB needs n >= 5")
    host = HostGraph.complete(n)
    k = n // 3
    triples = {(3 * i, 3 * i + 1, 3 * i + 2): i for i in range(k)}
    return _finish(host, (triples.get(e, k) for e in host.edges))


def messy_k6() -> Coloring:
    host = HostGraph.complete(6)
    pair_index: dict[frozenset, int] = {}
    colors = []
    for e in host.edges:
        key = frozenset((frozenset(e), frozenset(set(range(6)) - set(e))))
        colors.append(pair_index.setdefault(key, len(pair_index)))
    return _finish(host, colors)


def loose_lb(n: int) -> Coloring:
    _need(n >= 7, "LOOSE_LB needs n >= 7")
    host = HostGraph.complete(n)
    hub = {n - 2, n - 1}

    def color(e):
        if hub <= set(e):
            return min(e)
        return n - 2

    return _finish(host, (color(e) for e in host.edges))


def star_clique2(n: int) -> Coloring:
    _need(n >= 4, "STAR_CLIQUE2 needs n >= 4")
    host = HostGraph.complete(n)
    return _finish(host, (0 if 0 in e else 1 for e in host.edges))


def _mp_host(n: int, name: str) -> HostGraph:
    _need(n >= 3, f"{name} needs n >= 3")
    return HostGraph.tripartite(n)


def mp_g1(n: int) -> Coloring:
    host = _mp_host(n, "MP_G1")
    return _finish(host, (e[0] for e in host.edges))


def mp_g2(n: int) -> Coloring:
    host = _mp_host(n, "MP_G2")

    def color(e):
        i, j, k = e[0], e[1] - n, e[2] - 2 * n
        return i if i == j == k else n

    return _finish(host, (color(e) for e in host.edges))


def mp_g3(n: int) -> Coloring:
    host = _mp_host(n, "MP_G3")

    def color(e):
        if e[0] == 0 and e[1] == n:
            return e[2] - 2 * n
        return n

    return _finish(host, (color(e) for e in host.edges))


def _check_J(J: Iterable[int]) -> tuple[int, ...]:
    J = tuple(sorted(set(int(j) for j in J)))
    _need(all(j in (1, 2, 3) for j in J), f"J must be a subset of {{1,2,3}}, got {J}")
    return J


def j_canonical(host: HostGraph, J: Iterable[int]) -> Coloring:
    """Edges share a color iff their part-local coordinates agree on ``J``."""
    _need(not host.is_complete, "J_CANONICAL needs a tripartite host")
    J = _check_J(J)
    offs = [r.start for r in host.parts]
    keys = (tuple(e[j - 1] - offs[j - 1] for j in J) for e in host.edges)
    return _finish(host, _dense(keys))


def j_canonical_ordered(n: int, J: Iterable[int]) -> Coloring:
    """Edges share a color iff the sorted triples agree on the positions in ``J``."""
    _need(n >= 3, "J_CANONICAL_ORDERED needs n >= 3")
    J = _check_J(J)
    host = HostGraph.complete(n)
    keys = (tuple(e[j - 1] for j in J) for e in host.edges)
    return _finish(host, _dense(keys))


def _dense(keys: Iterable[tuple]) -> list[int]:
    ids: dict[tuple, int] = {}
    return [ids.setdefault(k, len(ids)) for k in keys]


def canonical_name(name: str) -> str:
    return name.upper().replace("-", "_")


def build(name: str, n: int | None = None, J: Iterable[int] | None = None,
          sizes: tuple[int, int, int] | None = None) -> Coloring:
    """Build a named construction (names are case-insensitive, '-' or '_')."""
    key = canonical_name(name)
    if key == "MESSY_K6":
        _need(n in (None, 6), "MESSY_K6 is defined for n = 6 only")
        return messy_k6()
    if key == "J_CANONICAL":
        _need(J is not None, "J_CANONICAL needs J")
        if sizes is None:
            _need(n is not None, "J_CANONICAL needs n or part sizes")
            sizes = (n, n, n)
        try:
            host = HostGraph.tripartite(*sizes)
        except ValueError as exc:
            raise BadParameters(str(exc)) from None
        return j_canonical(host, J)
    if key == "J_CANONICAL_ORDERED":
        _need(J is not None and n is not None, "J_CANONICAL_ORDERED needs n and J")
        return j_canonical_ordered(n, J)
    simple = {"TIGHT_LB": tight_lb, "LOOSE_LB": loose_lb, "STAR_CLIQUE2": star_clique2,
              "MP_G1": mp_g1, "MP_G2": mp_g2, "MP_G3": mp_g3}
    if key not in simple:
        raise BadParameters(f"unknown construction {name!r}")
    _need(n is not None, f"{key} needs n")
    return simple[key](n)


# --- structured samplers --------------------------------------------------------
#
# Each sampler returns (colors by edge id, certificate). Colors are raw ids; the
# certificate is rewritten to normalized ids by ``sample_with_certificate``.

COMPLETE_CASES = ("TIGHT_PARTITION", "MONO_MINUS_VERTEX", "SPECIAL_EDGE", "TWO_APEX",
                  "NEAR_MONO_MINUS_VERTEX", "SPECIAL_EDGE3")
TRIPARTITE_CASES = ("MP_APEX_PARTITION", "MP_BASE_PARTITION", "MP_TWO_APEX",
                    "MP_UNIQUE_EDGE", "MP_FIVE_VERTEX")
SAMPLE_THRESHOLDS = {"TIGHT_PARTITION": 6, "MONO_MINUS_VERTEX": 7, "SPECIAL_EDGE": 7,
                     "TWO_APEX": 7, "NEAR_MONO_MINUS_VERTEX": 7, "SPECIAL_EDGE3": 7}


def _composition(rng: random.Random, n: int) -> list[int]:
    """Uniform composition of ``n`` into at least two parts of size >= 3."""
    comps = [c for k in range(2, n // 3 + 1) for c in _compositions(n, k, 3)]
    return list(rng.choice(comps))


def _compositions(n: int, k: int, lo: int):
    if k == 1:
        if n >= lo:
            yield (n,)
        return
    for first in range(lo, n - lo * (k - 1) + 1):
        for rest in _compositions(n - first, k - 1, lo):
            yield (first,) + rest


def _tight_partition(rng, host):
    n = host.num_vertices
    sizes = _composition(rng, n)
    verts = list(range(n))
    rng.shuffle(verts)
    parts, at = [], 0
    for s in sizes:
        parts.append(sorted(verts[at:at + s]))
        at += s
    k = len(parts)
    base = k
    where = {v: i for i, p in enumerate(parts) for v in p}
    while True:
        colors = []
        for e in host.edges:
            ps = {where[v] for v in e}
            if len(ps) == 1:
                (i,) = ps
                colors.append(i if rng.random() < 0.5 else base)
            else:
                colors.append(base)
        if len(set(colors)) == k + 1:
            break
    cert = TightCertificate(base, tuple((tuple(p), i) for i, p in enumerate(parts)))
    return colors, cert


def _link_colors(rng, host, u, base):
    """Colors for edges through ``u`` whose non-base link pairs pairwise meet or agree."""
    others = [v for v in range(host.num_vertices) if v != u]
    link: dict[frozenset, int] = {}
    if rng.random() < 0.5:
        v = rng.choice(others)
        k = rng.randint(2, 4)
        for w in others:
            if w != v:
                link[frozenset((v, w))] = rng.choice([base] + [base + 1 + j for j in range(k)])
    else:
        a, b, cc = rng.sample(others, 3)
        cols = [base + 1 + j for j in range(3)]
        rng.shuffle(cols)
        link[frozenset((a, b))] = rng.choice([cols[0], base])
        link[frozenset((a, cc))] = rng.choice([cols[1], base])
        link[frozenset((b, cc))] = cols[2]
        for x in others:
            if x not in (a, b, cc):
                link[frozenset((a, x))] = rng.choice([cols[2], base])
    colors = []
    for e in host.edges:
        if u in e:
            colors.append(link.get(frozenset(set(e) - {u}), base))
        else:
            colors.append(base)
    return colors


def _mono_minus_vertex(rng, host):
    u = rng.randrange(host.num_vertices)
    while True:
        colors = _link_colors(rng, host, u, 0)
        if len(set(colors)) >= 3:
            return colors, MonoMinusVertex(u, 0)


def _special_edge(rng, host, palette3=False):
    n = host.num_vertices
    while True:
        e = tuple(sorted(rng.sample(range(n), 3)))
        es = set(e)
        base = 0
        flavor = rng.choice("bgd")
        colors = []
        if flavor == "g":
            # all non-base edges inside one K4 around e
            x = rng.choice([v for v in range(n) if v not in es])
            quad = es | {x}
            k = 2 if palette3 else rng.randint(2, 4)
            for f in host.edges:
                colors.append(rng.randint(1, k) if set(f) <= quad else base)
            colors[edge_rank(host, e)] = rng.randint(1, k)
        elif flavor == "b":
            # near edges through a single pair of e
            pair = set(rng.sample(e, 2))
            k = 2 if palette3 else rng.randint(2, 5)
            for f in host.edges:
                fs = set(f)
                colors.append(rng.randint(1, k) if pair <= fs and fs != es else base)
            colors[edge_rank(host, e)] = rng.randint(1, k)
        else:
            # one color on every chosen near edge, another on e
            for f in host.edges:
                near = len(es & set(f)) == 2
                colors.append(2 if near and rng.random() < 0.6 else base)
            colors[edge_rank(host, e)] = 1
        if palette3 and len(set(colors)) != 3:
            continue
        if not palette3 and len(set(colors)) < 3:
            continue
        if colors[edge_rank(host, e)] == base:
            continue
        kind = SpecialEdge3 if palette3 else SpecialEdge
        return colors, kind(edge_rank(host, e), base)


def _two_apex(rng, host):
    n = host.num_vertices
    while True:
        u, v = sorted(rng.sample(range(n), 2))
        k = rng.randint(2, n - 2)
        colors = [rng.randint(1, k) if (u in e and v in e) and rng.random() < 0.8 else 0
                  for e in host.edges]
        if len(set(colors)) >= 3:
            return colors, TwoApex(u, v, 0)


def _near_mono(rng, host):
    n = host.num_vertices
    while True:
        quad = sorted(rng.sample(range(n), 4))
        v = rng.choice(quad)
        colors = []
        for f in host.edges:
            colors.append(rng.randint(1, 4) if set(f) <= set(quad) else 0)
        if not 3 <= len(set(colors)) <= 5:
            continue
        rest = tuple(sorted(set(quad) - {v}))
        r = edge_rank(host, rest)
        exc = r if colors[r] != 0 else None
        return colors, NearMonoMinusVertex(v, exc, 0)


def _mp_apex(rng, host):
    n = host.sizes[0]
    ell = rng.randrange(3)
    part = list(host.parts[ell])
    k = rng.randint(3, n)
    while True:
        groups = [rng.randrange(k) for _ in part]
        if len(set(groups)) == k:
            break
    g = dict(zip(part, groups))
    colors = [g[e[ell]] for e in host.edges]
    cert = MPApexPartition(ell, tuple((tuple(v for v in part if g[v] == i), i) for i in range(k)))
    return colors, cert


def _mp_base(rng, host):
    n = host.sizes[0]
    k = rng.randint(2, n)
    block = {}
    for p in host.parts:
        while True:
            bs = [rng.randrange(k) for _ in p]
            if len(set(bs)) == k:
                break
        block.update(zip(p, bs))
    base = k
    while True:
        colors = []
        for e in host.edges:
            bs = {block[v] for v in e}
            if len(bs) == 1:
                (i,) = bs
                colors.append(i if rng.random() < 0.5 else base)
            else:
                colors.append(base)
        if len(set(colors)) == k + 1:
            break
    blocks = tuple(
        (tuple(tuple(v for v in p if block[v] == i) for p in host.parts), i) for i in range(k))
    return colors, MPBasePartition(base, blocks)


def _mp_two_apex(rng, host):
    n = host.sizes[0]
    a, b = sorted(rng.sample(range(3), 2))
    x1 = rng.choice(list(host.parts[a]))
    y1 = rng.choice(list(host.parts[b]))
    while True:
        k = rng.randint(2, n)
        colors = [rng.randint(1, k) if (x1 in e and y1 in e) else 0 for e in host.edges]
        if len(set(colors)) >= 3:
            return colors, MPTwoApex(x1, y1, 0)


def _mp_unique_edge(rng, host):
    e = tuple(rng.choice(list(p)) for p in host.parts)
    es = set(e)
    while True:
        colors = []
        for f in host.edges:
            near = len(es & set(f)) == 2
            colors.append(2 if near and rng.random() < 0.6 else 0)
        r = edge_rank(host, e)
        colors[r] = 1
        if len(set(colors)) == 3:
            return colors, MPUniqueEdge(r, 1, 2, 0)


def _mp_five_vertex(rng, host):
    ell = rng.randrange(3)
    j, k = [p for p in range(3) if p != ell]
    x1 = rng.choice(list(host.parts[ell]))
    y1, y2 = sorted(rng.sample(list(host.parts[j]), 2))
    z1, z2 = sorted(rng.sample(list(host.parts[k]), 2))
    c1, c2 = rng.sample((1, 2), 2)
    want = {}
    for y, z, col in ((y1, z1, c1), (y2, z2, c1), (y1, z2, c2), (y2, z1, c2)):
        want[edge_rank(host, (x1, y, z))] = col
    colors = [want.get(i, 0) for i in range(host.num_edges)]
    return colors, MPFiveVertex(x1, y1, y2, z1, z2, c1, c2, 0)


_SAMPLERS = {
    "TIGHT_PARTITION": _tight_partition,
    "MONO_MINUS_VERTEX": _mono_minus_vertex,
    "SPECIAL_EDGE": _special_edge,
    "TWO_APEX": _two_apex,
    "NEAR_MONO_MINUS_VERTEX": _near_mono,
    "SPECIAL_EDGE3": lambda rng, host: _special_edge(rng, host, palette3=True),
    "MP_APEX_PARTITION": _mp_apex,
    "MP_BASE_PARTITION": _mp_base,
    "MP_TWO_APEX": _mp_two_apex,
    "MP_UNIQUE_EDGE": _mp_unique_edge,
    "MP_FIVE_VERTEX": _mp_five_vertex,
}


def _relabel_cert(cert, m: dict[int, int]):
    """Rewrite the color ids inside ``cert`` through ``m``."""
    def f(x):
        return m[x] if x in m else x

    if isinstance(cert, TightCertificate):
        return TightCertificate(f(cert.base_color), tuple((vs, f(i)) for vs, i in cert.parts))
    if isinstance(cert, MonoMinusVertex):
        return MonoMinusVertex(cert.u, f(cert.color))
    if isinstance(cert, (SpecialEdge, SpecialEdge3)):
        return type(cert)(cert.edge, f(cert.base_color))
    if isinstance(cert, TwoApex):
        return TwoApex(cert.u, cert.v, f(cert.base_color))
    if isinstance(cert, NearMonoMinusVertex):
        return NearMonoMinusVertex(cert.v, cert.exceptional, f(cert.color))
    if isinstance(cert, MPApexPartition):
        return MPApexPartition(cert.part, tuple((vs, f(i)) for vs, i in cert.groups))
    if isinstance(cert, MPBasePartition):
        return MPBasePartition(f(cert.base_color), tuple((ps, f(i)) for ps, i in cert.blocks))
    if isinstance(cert, MPTwoApex):
        return MPTwoApex(cert.x1, cert.y1, f(cert.base_color))
    if isinstance(cert, MPUniqueEdge):
        return MPUniqueEdge(cert.edge, f(cert.color1), f(cert.color2), f(cert.base_color))
    if isinstance(cert, MPFiveVertex):
        return MPFiveVertex(cert.x1, cert.y1, cert.y2, cert.z1, cert.z2,
                            f(cert.color1), f(cert.color2), f(cert.base_color))
    raise TypeError(type(cert).__name__)


def sample_with_certificate(case: str, n: int, seed: int):
    """Seeded structured coloring plus the certificate it was built to satisfy."""
    key = canonical_name(case)
    if key not in _SAMPLERS:
        raise BadParameters(f"unknown sampler case {case!r}")
    if key in TRIPARTITE_CASES:
        _need(n >= 3, f"{key} needs n >= 3")
        host = HostGraph.tripartite(n)
    else:
        _need(n >= SAMPLE_THRESHOLDS[key], f"{key} needs n >= {SAMPLE_THRESHOLDS[key]}")
        host = HostGraph.complete(n)
    rng = random.Random(seed)
    colors, cert = _SAMPLERS[key](rng, host)
    m: dict[int, int] = {}
    for x in colors:
        m.setdefault(x, len(m))
    return Coloring(host, tuple(m[x] for x in colors)), _relabel_cert(cert, m)


def sample_structured(case: str, n: int, seed: int) -> Coloring:
    return sample_with_certificate(case, n, seed)[0]


def perfect_matching_classes(c: Coloring) -> bool:
    """True when every color class is two disjoint triples covering the host."""
    N = c.host.num_vertices
    for ids in c.classes().values():
        if len(ids) != 2:
            return False
        a, b = (set(c.host.edges[i]) for i in ids)
        if a & b or len(a | b) != N:
            return False
    return True


def intersecting(edges: Iterable[tuple[int, ...]]) -> bool:
    return all(set(a) & set(b) for a, b in itertools.combinations(list(edges), 2))
