"""Independent brute-force oracles used by the tests (not part of the library)."""

from __future__ import annotations

import itertools

import numpy as np


def host_edge_set(host):
    """Host edges as frozensets, built from part membership only."""
    N = host.num_vertices
    if host.is_complete:
        return {frozenset(t) for t in itertools.combinations(range(N), 3)}
    bounds = np.cumsum((0,) + tuple(host.sizes))
    part = [int(np.searchsorted(bounds, v, side="right")) - 1 for v in range(N)]
    return {frozenset(t) for t in itertools.combinations(range(N), 3) if len({part[v] for v in t}) == 3}


def brute_copies(host, pattern):
    """Distinct edge-set images of all injections, deduplicated as sets."""
    edges = host_edge_set(host)
    out = set()
    for img in itertools.permutations(range(host.num_vertices), pattern.num_vertices):
        image = frozenset(frozenset(img[v] for v in e) for e in pattern.edges)
        if all(f in edges for f in image):
            out.add(image)
    return out


def brute_rainbow(coloring, pattern) -> bool:
    col = {frozenset(e): x for e, x in zip(coloring.host.edges, coloring.colors)}
    for image in brute_copies(coloring.host, pattern):
        cs = [col[f] for f in image]
        if len(set(cs)) == len(cs):
            return True
    return False


def brute_mono(coloring, pattern) -> bool:
    col = {frozenset(e): x for e, x in zip(coloring.host.edges, coloring.colors)}
    return any(len({col[f] for f in image}) == 1 for image in brute_copies(coloring.host, pattern))


def all_rgs(m: int) -> np.ndarray:
    """Every restricted growth string of length m, by direct recursion."""
    rows = []

    def rec(prefix, top):
        if len(prefix) == m:
            rows.append(prefix)
            return
        for x in range(top + 2):
            rec(prefix + [x], max(top, x))

    if m == 0:
        return np.zeros((1, 0), dtype=np.int64)
    rec([0], 0)
    return np.array(rows, dtype=np.int64)


def max_rainbow_free_by_enumeration(host, pattern, copy_edge_ids) -> int:
    """Largest palette over all set partitions with no rainbow copy (vectorized)."""
    A = all_rgs(host.num_edges)
    palettes = A.max(axis=1) + 1
    if len(copy_edge_ids) == 0:
        return int(palettes.max())
    cc = A[:, copy_edge_ids]  # (partitions, copies, k)
    s = np.sort(cc, axis=2)
    rainbow = np.all(s[:, :, 1:] != s[:, :, :-1], axis=2).any(axis=1)
    return int(palettes[~rainbow].max())
