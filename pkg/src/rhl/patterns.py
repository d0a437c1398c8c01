"""Small 3-graph templates and their copies inside a host.

A *copy* of a pattern is identified with its edge-set image; injections that
differ by a pattern automorphism give the same copy and are reported once.
Copies of a given pattern in a given host are computed once and cached as an
``(m, k)`` array of edge ids, sorted lexicographically, which makes the
rainbow and monochromatic scans plain numpy reductions.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator

import numpy as np

from .errors import ParseError
from .hypergraph import Coloring, HostGraph, _rank_table

MAX_PATTERN_VERTICES = 10


@dataclass(frozen=True)
class Pattern:
    name: str
    num_vertices: int
    edges: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        edges = tuple(sorted(tuple(sorted(e)) for e in self.edges))
        for e in edges:
            if len(e) != 3 or len(set(e)) != 3:
                raise ValueError(f"pattern edge {e} is not a 3-set")
            if e[0] < 0 or e[2] >= self.num_vertices:
                raise ValueError(f"pattern edge {e} uses a vertex outside 0..{self.num_vertices - 1}")
        if len(set(edges)) != len(edges):
            raise ValueError("repeated pattern edge")
        if {v for e in edges for v in e} != set(range(self.num_vertices)):
            raise ValueError("every template vertex must lie on an edge")
        if self.num_vertices > MAX_PATTERN_VERTICES:
            raise ValueError(f"patterns are capped at {MAX_PATTERN_VERTICES} vertices")
        object.__setattr__(self, "edges", edges)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @functools.cached_property
    def automorphism_count(self) -> int:
        target = set(self.edges)
        count = 0
        for p in itertools.permutations(range(self.num_vertices)):
            if all(tuple(sorted((p[a], p[b], p[c]))) in target for a, b, c in self.edges):
                count += 1
        return count

    def is_connected(self) -> bool:
        seen = {0}
        frontier = [0]
        while frontier:
            v = frontier.pop()
            for e in self.edges:
                if v in e:
                    for w in e:
                        if w not in seen:
                            seen.add(w)
                            frontier.append(w)
        return len(seen) == self.num_vertices


def _pattern(name: str, *edges: str) -> Pattern:
    es = tuple(tuple(int(ch) for ch in e) for e in edges)
    return Pattern(name, 1 + max(max(e) for e in es), es)


TIGHT_T = _pattern("TIGHT_T", "012", "123", "234")
MESSY_M = _pattern("MESSY_M", "012", "123", "345")
LOOSE_L = _pattern("LOOSE_L", "012", "234", "456")
LOOSE_CYCLE_C3 = _pattern("LOOSE_CYCLE_C3", "012", "234", "450")
LOOSE_STAR_S2 = _pattern("LOOSE_STAR_S2", "012", "034")
LOOSE_STAR_S3 = _pattern("LOOSE_STAR_S3", "012", "034", "056")
TIGHT_STAR_DS2 = _pattern("TIGHT_STAR_DS2", "012", "013")
TIGHT_STAR_DS3 = _pattern("TIGHT_STAR_DS3", "012", "013", "014")
S2_PLUS_S1 = _pattern("S2_PLUS_S1", "012", "034", "567")
DS2_PLUS_DS1 = _pattern("DS2_PLUS_DS1", "012", "013", "456")
MATCHING2 = _pattern("MATCHING2", "012", "345")
SINGLE_EDGE = _pattern("SINGLE_EDGE", "012")

CATALOG: dict[str, Pattern] = {
    p.name: p
    for p in (
        TIGHT_T, MESSY_M, LOOSE_L, LOOSE_CYCLE_C3, LOOSE_STAR_S2, LOOSE_STAR_S3,
        TIGHT_STAR_DS2, TIGHT_STAR_DS3, S2_PLUS_S1, DS2_PLUS_DS1, MATCHING2, SINGLE_EDGE,
    )
}

ALIASES = {
    "T": "TIGHT_T", "M": "MESSY_M", "L": "LOOSE_L", "C3": "LOOSE_CYCLE_C3",
    "S2": "LOOSE_STAR_S2", "S3": "LOOSE_STAR_S3", "DS2": "TIGHT_STAR_DS2",
    "DS3": "TIGHT_STAR_DS3", "S2+S1": "S2_PLUS_S1", "DS2+DS1": "DS2_PLUS_DS1",
    "M2": "MATCHING2", "EDGE": "SINGLE_EDGE", "E": "SINGLE_EDGE",
}


def get_pattern(name: str) -> Pattern:
    key = ALIASES.get(name.upper(), name.upper())
    try:
        return CATALOG[key]
    except KeyError:
        raise KeyError(f"unknown pattern {name!r}") from None


def loads_pattern(text: str, name: str = "CUSTOM") -> Pattern:
    header = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].split()
        if not line:
            continue
        try:
            if header is None:
                if len(line) != 2 or line[0] != "pattern":
                    raise ParseError("first line must be 'pattern <vertexcount>'", lineno)
                header = int(line[1])
            elif len(line) == 4 and line[0] == "e":
                edges.append(tuple(int(t) for t in line[1:]))
            else:
                raise ParseError("expected 'e <a> <b> <c>'", lineno)
        except ValueError as exc:
            if isinstance(exc, ParseError):
                raise
            raise ParseError(f"bad integer in {raw.strip()!r}", lineno) from None
    if header is None:
        raise ParseError("empty pattern file")
    if not edges:
        raise ParseError("pattern has no edges")
    try:
        return Pattern(name, header, tuple(edges))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def read_pattern(path: str | Path) -> Pattern:
    p = Path(path)
    return loads_pattern(p.read_text(encoding="utf-8"), name="CUSTOM")


def dumps_pattern(p: Pattern) -> str:
    return "\n".join([f"pattern {p.num_vertices}"] + [f"e {a} {b} {c}" for a, b, c in p.edges]) + "\n"


# --- embeddings ------------------------------------------------------------


@dataclass(frozen=True)
class Embedding:
    pattern: Pattern
    images: tuple[int, ...]
    edge_images: tuple[int, ...]

    def host_edges(self) -> list[tuple[int, int, int]]:
        return [tuple(sorted(self.images[v] for v in e)) for e in self.pattern.edges]


@dataclass(frozen=True)
class CopyTable:
    """All copies of ``pattern`` in ``host`` in enumeration order."""

    host: HostGraph
    pattern: Pattern
    edge_ids: np.ndarray  # (m, k) int64, each row sorted
    images: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.images)

    def embedding(self, i: int) -> Embedding:
        return Embedding(self.pattern, self.images[i], tuple(int(x) for x in self.edge_ids[i]))


def _vertex_order(p: Pattern) -> list[int]:
    # BFS-ish order so that edges close early and prune the injection search
    order: list[int] = []
    for e in p.edges:
        for v in e:
            if v not in order:
                order.append(v)
    return order


@functools.lru_cache(maxsize=256)
def copy_table(host: HostGraph, p: Pattern) -> CopyTable:
    N = host.num_vertices
    order = _vertex_order(p)
    # edges that become fully mapped once order[i] is placed
    closing: list[list[tuple[int, int, int]]] = [[] for _ in order]
    pos = {v: i for i, v in enumerate(order)}
    for e in p.edges:
        closing[max(pos[v] for v in e)].append(e)
    tripartite = not host.is_complete
    part = [host.part_of(v) for v in range(N)]
    img = [-1] * p.num_vertices
    used = [False] * N
    found: dict[tuple[int, ...], tuple[int, ...]] = {}
    rank = _rank_table(host)

    def rec(i: int) -> None:
        if i == len(order):
            key = tuple(sorted(rank[tuple(sorted((img[a], img[b], img[c])))] for a, b, c in p.edges))
            if key not in found:
                found[key] = tuple(img)
            return
        v = order[i]
        for w in range(N):
            if used[w]:
                continue
            img[v] = w
            if tripartite:
                ok = all(len({part[img[a]], part[img[b]], part[img[c]]}) == 3 for a, b, c in closing[i])
                if not ok:
                    continue
            used[w] = True
            rec(i + 1)
            used[w] = False
        img[v] = -1

    if p.num_vertices <= N:
        rec(0)
    keys = sorted(found)
    arr = np.array(keys, dtype=np.int64).reshape(len(keys), p.num_edges)
    return CopyTable(host, p, arr, tuple(found[k] for k in keys))


def enumerate_embeddings(host: HostGraph, p: Pattern) -> Iterator[Embedding]:
    table = copy_table(host, p)
    for i in range(len(table)):
        yield table.embedding(i)


def count_copies(host: HostGraph, p: Pattern) -> int:
    return len(copy_table(host, p))


def _copy_colors(c: Coloring, p: Pattern) -> tuple[CopyTable, np.ndarray]:
    table = copy_table(c.host, p)
    colors = np.asarray(c.colors, dtype=np.int64)
    return table, colors[table.edge_ids]


def rainbow_mask(c: Coloring, p: Pattern) -> np.ndarray:
    """Boolean mask over the copy table: copy carries pairwise distinct colors."""
    _, cc = _copy_colors(c, p)
    if cc.shape[1] <= 1:
        return np.ones(cc.shape[0], dtype=bool)
    s = np.sort(cc, axis=1)
    return np.all(s[:, 1:] != s[:, :-1], axis=1)


def mono_mask(c: Coloring, p: Pattern) -> np.ndarray:
    _, cc = _copy_colors(c, p)
    return np.all(cc == cc[:, :1], axis=1) if cc.size else np.zeros(cc.shape[0], dtype=bool)


def _first(c: Coloring, p: Pattern, mask: np.ndarray) -> Embedding | None:
    hits = np.flatnonzero(mask)
    if hits.size == 0:
        return None
    return copy_table(c.host, p).embedding(int(hits[0]))


def find_rainbow_copy(c: Coloring, p: Pattern) -> Embedding | None:
    return _first(c, p, rainbow_mask(c, p))


def find_monochromatic_copy(c: Coloring, h: Pattern) -> Embedding | None:
    return _first(c, h, mono_mask(c, h))


def is_rainbow_free(c: Coloring, p: Pattern) -> bool:
    return not rainbow_mask(c, p).any()
