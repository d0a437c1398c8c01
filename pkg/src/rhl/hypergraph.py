"""Complete and tripartite 3-uniform hosts, edge colorings and their text format.

Vertices are the integers ``0..N-1``. A tripartite host numbers its parts as
contiguous ranges, so part membership is positional.

Edges are ranked colexicographically on complete hosts and in mixed radix
(first part fastest) on tripartite hosts; a coloring is a tuple of color ids
indexed by that rank.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from math import comb
from pathlib import Path
from typing import Iterable, Sequence

from .errors import InvalidPermutation, NotAnEdge, OutOfRange, ParseError

COMPLETE = "complete"
TRIPARTITE = "tripartite"

Triple = tuple[int, int, int]


@dataclass(frozen=True)
class HostGraph:
    kind: str
    sizes: tuple[int, ...]

    def __post_init__(self):
        if self.kind == COMPLETE:
            if len(self.sizes) != 1 or self.sizes[0] < 3:
                raise ValueError(f"complete host needs n >= 3, got {self.sizes}")
        elif self.kind == TRIPARTITE:
            if len(self.sizes) != 3 or min(self.sizes) < 1:
                raise ValueError(f"tripartite host needs three part sizes >= 1, got {self.sizes}")
        else:
            raise ValueError(f"unknown host kind {self.kind!r}")

    @classmethod
    def complete(cls, n: int) -> HostGraph:
        return cls(COMPLETE, (int(n),))

    @classmethod
    def tripartite(cls, n1: int, n2: int | None = None, n3: int | None = None) -> HostGraph:
        if n2 is None and n3 is None:
            n2 = n3 = n1
        return cls(TRIPARTITE, (int(n1), int(n2), int(n3)))

    @property
    def is_complete(self) -> bool:
        return self.kind == COMPLETE

    @property
    def num_vertices(self) -> int:
        return sum(self.sizes)

    @property
    def num_edges(self) -> int:
        if self.is_complete:
            return comb(self.sizes[0], 3)
        n1, n2, n3 = self.sizes
        return n1 * n2 * n3

    @property
    def parts(self) -> tuple[range, ...]:
        """Vertex ranges of the parts (a single range for complete hosts)."""
        out, start = [], 0
        for s in self.sizes:
            out.append(range(start, start + s))
            start += s
        return tuple(out)

    def part_of(self, v: int) -> int:
        if not 0 <= v < self.num_vertices:
            raise OutOfRange(f"vertex {v} not in host")
        if self.is_complete:
            return 0
        n1, n2, _ = self.sizes
        return 0 if v < n1 else (1 if v < n1 + n2 else 2)

    @property
    def edges(self) -> tuple[Triple, ...]:
        return _edge_list(self)

    def is_edge(self, triple: Iterable[int]) -> bool:
        t = tuple(sorted(triple))
        if len(t) != 3 or len(set(t)) != 3:
            return False
        if t[0] < 0 or t[2] >= self.num_vertices:
            return False
        if self.is_complete:
            return True
        return [self.part_of(v) for v in t] == [0, 1, 2]

    def __str__(self) -> str:
        return f"{self.kind} {' '.join(map(str, self.sizes))}"


@functools.lru_cache(maxsize=None)
def _edge_list(host: HostGraph) -> tuple[Triple, ...]:
    if host.is_complete:
        n = host.sizes[0]
        return tuple((a, b, c) for c in range(n) for b in range(c) for a in range(b))
    n1, n2, n3 = host.sizes
    return tuple(
        (i1, n1 + i2, n1 + n2 + i3) for i3 in range(n3) for i2 in range(n2) for i1 in range(n1)
    )


@functools.lru_cache(maxsize=None)
def _rank_table(host: HostGraph) -> dict[Triple, int]:
    return {e: i for i, e in enumerate(_edge_list(host))}


def edge_rank(host: HostGraph, triple: Iterable[int]) -> int:
    t = tuple(sorted(triple))
    if not host.is_edge(t):
        raise NotAnEdge(f"{t} is not an edge of {host}")
    a, b, c = t
    if host.is_complete:
        return a + comb(b, 2) + comb(c, 3)
    n1, n2, _ = host.sizes
    return a + n1 * (b - n1) + n1 * n2 * (c - n1 - n2)


def edge_unrank(host: HostGraph, rank: int) -> Triple:
    if not 0 <= rank < host.num_edges:
        raise OutOfRange(f"edge id {rank} outside [0, {host.num_edges})")
    if not host.is_complete:
        n1, n2, _ = host.sizes
        i1, rest = rank % n1, rank // n1
        i2, i3 = rest % n2, rest // n2
        return (i1, n1 + i2, n1 + n2 + i3)
    # greedy colex decoding
    c = 2
    while comb(c + 1, 3) <= rank:
        c += 1
    rank -= comb(c, 3)
    b = 1
    while comb(b + 1, 2) <= rank:
        b += 1
    rank -= comb(b, 2)
    return (rank, b, c)


def normalize(colors: Sequence[int]) -> tuple[int, ...]:
    """Relabel ``colors`` to first-appearance order 0, 1, 2, ..."""
    seen: dict[int, int] = {}
    return tuple(seen.setdefault(x, len(seen)) for x in colors)


@dataclass(frozen=True)
class Coloring:
    host: HostGraph
    colors: tuple[int, ...]
    _palette: int = field(default=-1, init=False, repr=False, compare=False)

    def __post_init__(self):
        colors = tuple(int(x) for x in self.colors)
        if len(colors) != self.host.num_edges:
            raise ValueError(f"{len(colors)} colors for {self.host.num_edges} edges")
        if colors and min(colors) < 0:
            raise ValueError("color ids must be non-negative")
        object.__setattr__(self, "colors", colors)
        object.__setattr__(self, "_palette", len(set(colors)))

    @classmethod
    def from_function(cls, host: HostGraph, fn) -> Coloring:
        """Build a coloring from ``fn(triple) -> color`` over the host edges."""
        return cls(host, tuple(fn(e) for e in host.edges))

    @property
    def palette_size(self) -> int:
        return self._palette

    @property
    def is_normalized(self) -> bool:
        return normalize(self.colors) == self.colors

    def __getitem__(self, triple: Iterable[int]) -> int:
        return self.colors[edge_rank(self.host, triple)]

    def classes(self) -> dict[int, list[int]]:
        """Edge ids of each color class, keyed by color id."""
        out: dict[int, list[int]] = {}
        for i, x in enumerate(self.colors):
            out.setdefault(x, []).append(i)
        return out


def normalize_colors(c: Coloring) -> Coloring:
    return Coloring(c.host, normalize(c.colors))


def relabel_vertices(c: Coloring, perm: Sequence[int]) -> Coloring:
    """Move every edge ``e`` of ``c`` to ``perm(e)``, keeping its color.

    ``perm[v]`` is the image of vertex ``v``. For tripartite hosts the map
    must send each part onto a part of the same size.
    """
    host = c.host
    N = host.num_vertices
    perm = tuple(int(v) for v in perm)
    if sorted(perm) != list(range(N)):
        raise InvalidPermutation(f"not a permutation of 0..{N - 1}: {perm}")
    if not host.is_complete:
        for part in host.parts:
            targets = {host.part_of(perm[v]) for v in part}
            if len(targets) != 1:
                raise InvalidPermutation("permutation splits a part")
            (t,) = targets
            if host.sizes[t] != len(part):
                raise InvalidPermutation("permutation maps a part onto one of different size")
    out = [0] * host.num_edges
    for i, e in enumerate(host.edges):
        out[edge_rank(host, (perm[e[0]], perm[e[1]], perm[e[2]]))] = c.colors[i]
    return Coloring(host, normalize(out))


@dataclass(frozen=True)
class ColorSummary:
    palette_size: int
    degrees: tuple[int, ...]
    max_degree: int


def color_summary(c: Coloring) -> ColorSummary:
    seen: list[set[int]] = [set() for _ in range(c.host.num_vertices)]
    for e, x in zip(c.host.edges, c.colors):
        for v in e:
            seen[v].add(x)
    degrees = tuple(len(s) for s in seen)
    return ColorSummary(c.palette_size, degrees, max(degrees, default=0))


def vertex_colors(c: Coloring) -> list[set[int]]:
    """Set of colors on the edges through each vertex."""
    seen: list[set[int]] = [set() for _ in range(c.host.num_vertices)]
    for e, x in zip(c.host.edges, c.colors):
        for v in e:
            seen[v].add(x)
    return seen


# --- text format -----------------------------------------------------------


def dumps_coloring(c: Coloring) -> str:
    lines = [f"host {c.host}"]
    for (a, b, cc), x in zip(c.host.edges, c.colors):
        lines.append(f"e {a} {b} {cc} c {x}")
    return "\n".join(lines) + "\n"


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def _ints(tokens: Sequence[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(tokens)!r}", lineno) from None


def parse_host(tokens: Sequence[str], lineno: int = 1) -> HostGraph:
    if len(tokens) < 2 or tokens[0] != "host":
        raise ParseError("first line must be 'host complete <n>' or 'host tripartite <n1> <n2> <n3>'", lineno)
    kind, args = tokens[1], _ints(tokens[2:], lineno)
    try:
        if kind == COMPLETE and len(args) == 1:
            return HostGraph.complete(args[0])
        if kind == TRIPARTITE and len(args) == 3:
            return HostGraph.tripartite(*args)
    except ValueError as exc:
        raise ParseError(str(exc), lineno) from None
    raise ParseError(f"malformed host line: {' '.join(tokens)!r}", lineno)


def loads_coloring(text: str) -> Coloring:
    """Parse the line format; colors are normalized on load."""
    lines = iter(_content_lines(text))
    try:
        lineno, tokens = next(lines)
    except StopIteration:
        raise ParseError("empty input") from None
    host = parse_host(tokens, lineno)
    colors: list[int | None] = [None] * host.num_edges
    for lineno, tokens in lines:
        if len(tokens) != 6 or tokens[0] != "e" or tokens[4] != "c":
            raise ParseError("malformed line, expected 'e <v1> <v2> <v3> c <color>'", lineno)
        a, b, cc, x = _ints(tokens[1:4] + tokens[5:6], lineno)
        if x < 0:
            raise ParseError("negative color", lineno)
        if not host.is_edge((a, b, cc)):
            raise ParseError(f"({a}, {b}, {cc}) is not an edge of the host", lineno)
        r = edge_rank(host, (a, b, cc))
        if colors[r] is not None:
            raise ParseError(f"duplicate edge ({a}, {b}, {cc})", lineno)
        colors[r] = x
    missing = [i for i, x in enumerate(colors) if x is None]
    if missing:
        raise ParseError(f"missing edge {host.edges[missing[0]]} ({len(missing)} missing)")
    return Coloring(host, normalize(colors))  # type: ignore[arg-type]


def read_coloring(path: str | Path) -> Coloring:
    return loads_coloring(Path(path).read_text(encoding="utf-8"))


def write_coloring(path: str | Path, c: Coloring) -> None:
    Path(path).write_text(dumps_coloring(c), encoding="utf-8")
