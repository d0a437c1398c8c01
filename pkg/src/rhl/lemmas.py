"""Property checks for the auxiliary lemmas on small rainbow substructures.

Each check takes a coloring and returns a list of human-readable violations;
an empty list means the property held (or its hypothesis did not apply).
"""

from __future__ import annotations

import numpy as np

from .hypergraph import Coloring
from .patterns import (
    LOOSE_CYCLE_C3,
    LOOSE_L,
    LOOSE_STAR_S2,
    LOOSE_STAR_S3,
    S2_PLUS_S1,
    TIGHT_STAR_DS2,
    TIGHT_STAR_DS3,
    TIGHT_T,
    copy_table,
    find_rainbow_copy,
    rainbow_mask,
)
from .certifiers import pair_deletion_mono


def obs_s2(c: Coloring) -> list[str]:
    """Two or more colors force a rainbow loose 2-star and a rainbow tight 2-star."""
    host = c.host
    if host.is_complete and host.num_vertices < 5:
        return []
    if not host.is_complete and (len(set(host.sizes)) != 1 or host.sizes[0] < 3):
        return []
    if c.palette_size < 2:
        return []
    out = []
    for p in (LOOSE_STAR_S2, TIGHT_STAR_DS2):
        if find_rainbow_copy(c, p) is None:
            out.append(f"no rainbow {p.name} with {c.palette_size} colors")
    return out


def _rainbow_t_free(c: Coloring) -> bool:
    return c.host.is_complete and find_rainbow_copy(c, TIGHT_T) is None


def lem_t1(c: Coloring) -> list[str]:
    if not _rainbow_t_free(c):
        return []
    return [f"rainbow {p.name} in a rainbow-TIGHT_T-free coloring"
            for p in (LOOSE_CYCLE_C3, LOOSE_STAR_S3, TIGHT_STAR_DS3)
            if find_rainbow_copy(c, p) is not None]


def lem_t2(c: Coloring) -> list[str]:
    """Every edge meeting both edges of a rainbow loose 2-star takes one of their colors."""
    if not _rainbow_t_free(c):
        return []
    host = c.host
    table = copy_table(host, LOOSE_STAR_S2)
    hits = table.edge_ids[rainbow_mask(c, LOOSE_STAR_S2)]
    if hits.size == 0:
        return []
    colors = np.asarray(c.colors)
    N = host.num_vertices
    inc = np.zeros((host.num_edges, N), dtype=bool)
    for i, e in enumerate(host.edges):
        inc[i, list(e)] = True
    out = []
    for e1, e2 in hits:
        meets = inc[:, inc[e1]].any(axis=1) & inc[:, inc[e2]].any(axis=1)
        ok = (colors == colors[e1]) | (colors == colors[e2])
        bad = np.flatnonzero(meets & ~ok)
        if bad.size:
            f = int(bad[0])
            out.append(f"edge {host.edges[f]} meets rainbow star {host.edges[e1]}, {host.edges[e2]} "
                       f"but has color {colors[f]}")
    return out


def _rainbow_l_free_7(c: Coloring) -> bool:
    return c.host.is_complete and c.host.num_vertices >= 7 and find_rainbow_copy(c, LOOSE_L) is None


def lem_l1(c: Coloring) -> list[str]:
    if not _rainbow_l_free_7(c):
        return []
    return [f"rainbow {p.name} in a rainbow-LOOSE_L-free coloring"
            for p in (LOOSE_CYCLE_C3, LOOSE_STAR_S3, S2_PLUS_S1)
            if find_rainbow_copy(c, p) is not None]


def lem_l2(c: Coloring) -> list[str]:
    if c.palette_size < 3 or not _rainbow_l_free_7(c):
        return []
    if pair_deletion_mono(c) is None:
        return ["no vertex pair whose deletion leaves one color"]
    return []


LEMMAS = {"OBS-S2": obs_s2, "LEM-T1": lem_t1, "LEM-T2": lem_t2, "LEM-L1": lem_l1, "LEM-L2": lem_l2}


def check_all(c: Coloring) -> dict[str, list[str]]:
    return {name: fn(c) for name, fn in LEMMAS.items()}
