"""Structural certificates for rainbow-path-free colorings.

Each ``certify_*`` function checks its preconditions, searches for a
decomposition of the required shape, and re-verifies what it found with
:func:`verify_certificate` before returning it. A failed search under valid
preconditions raises :class:`TheoremViolation` carrying the coloring.

Verification never trusts the certifier: it rescans every edge.
"""

from __future__ import annotations

import itertools
import json
from collections import Counter
from dataclasses import dataclass

from .errors import ParseError, PreconditionFailed, TheoremViolation
from .hypergraph import Coloring, edge_rank, edge_unrank, vertex_colors
from .patterns import LOOSE_L, MESSY_M, TIGHT_T, Embedding, Pattern, find_rainbow_copy

MP_TIGHT = "MP_TIGHT"
MP_MESSY = "MP_MESSY"
MP_LOOSE = "MP_LOOSE"
TRIPARTITE_THEOREMS = {MP_TIGHT: TIGHT_T, MP_MESSY: MESSY_M, MP_LOOSE: LOOSE_L}


def _edge_json(c_host, e: int) -> dict:
    return {"id": e, "vertices": list(edge_unrank(c_host, e))}


# --- certificate types --------------------------------------------------------


@dataclass(frozen=True)
class TightCertificate:
    base_color: int
    parts: tuple[tuple[tuple[int, ...], int], ...]  # (vertices, part color)
    case = "TIGHT_PARTITION"

    def to_json(self, host=None) -> dict:
        return {
            "case": self.case,
            "base_color": self.base_color,
            "parts": [{"vertices": list(vs), "color": col} for vs, col in self.parts],
        }


@dataclass(frozen=True)
class MonoMinusVertex:
    u: int
    color: int
    case = "MONO_MINUS_VERTEX"

    def to_json(self, host=None) -> dict:
        return {"case": self.case, "u": self.u, "color": self.color}


@dataclass(frozen=True)
class SpecialEdge:
    edge: int
    base_color: int
    case = "SPECIAL_EDGE"

    def to_json(self, host=None) -> dict:
        d = {"case": self.case, "edge": self.edge, "base_color": self.base_color}
        if host is not None:
            d["edge"] = _edge_json(host, self.edge)
        return d


@dataclass(frozen=True)
class TwoApex:
    u: int
    v: int
    base_color: int
    case = "TWO_APEX"

    def to_json(self, host=None) -> dict:
        return {"case": self.case, "u": self.u, "v": self.v, "base_color": self.base_color}


@dataclass(frozen=True)
class NearMonoMinusVertex:
    v: int
    exceptional: int | None
    color: int
    case = "NEAR_MONO_MINUS_VERTEX"

    def to_json(self, host=None) -> dict:
        exc = self.exceptional
        if host is not None and exc is not None:
            exc = _edge_json(host, exc)
        return {"case": self.case, "v": self.v, "exceptional": exc, "color": self.color}


@dataclass(frozen=True)
class SpecialEdge3:
    edge: int
    base_color: int
    case = "SPECIAL_EDGE3"

    def to_json(self, host=None) -> dict:
        d = {"case": self.case, "edge": self.edge, "base_color": self.base_color}
        if host is not None:
            d["edge"] = _edge_json(host, self.edge)
        return d


@dataclass(frozen=True)
class MPApexPartition:
    part: int
    groups: tuple[tuple[tuple[int, ...], int], ...]  # (vertices of V_part, color)
    case = "MP_APEX_PARTITION"

    def to_json(self, host=None) -> dict:
        return {
            "case": self.case,
            "part": self.part,
            "groups": [{"vertices": list(vs), "color": col} for vs, col in self.groups],
        }


@dataclass(frozen=True)
class MPBasePartition:
    base_color: int
    blocks: tuple[tuple[tuple[tuple[int, ...], ...], int], ...]  # (per-part vertex sets, color)
    case = "MP_BASE_PARTITION"

    def to_json(self, host=None) -> dict:
        return {
            "case": self.case,
            "base_color": self.base_color,
            "blocks": [{"parts": [list(p) for p in ps], "color": col} for ps, col in self.blocks],
        }


@dataclass(frozen=True)
class MPTwoApex:
    x1: int
    y1: int
    base_color: int
    case = "MP_TWO_APEX"

    def to_json(self, host=None) -> dict:
        return {"case": self.case, "x1": self.x1, "y1": self.y1, "base_color": self.base_color}


@dataclass(frozen=True)
class MPUniqueEdge:
    edge: int
    color1: int  # the color held by ``edge`` alone
    color2: int  # edges of this color meet ``edge`` in two vertices
    base_color: int
    case = "MP_UNIQUE_EDGE"

    def to_json(self, host=None) -> dict:
        d = {"case": self.case, "edge": self.edge, "color1": self.color1,
             "color2": self.color2, "base_color": self.base_color}
        if host is not None:
            d["edge"] = _edge_json(host, self.edge)
        return d


@dataclass(frozen=True)
class MPFiveVertex:
    x1: int
    y1: int
    y2: int
    z1: int
    z2: int
    color1: int
    color2: int
    base_color: int
    case = "MP_FIVE_VERTEX"

    def to_json(self, host=None) -> dict:
        return {"case": self.case, "x1": self.x1, "y1": self.y1, "y2": self.y2,
                "z1": self.z1, "z2": self.z2, "color1": self.color1,
                "color2": self.color2, "base_color": self.base_color}


Certificate = (
    TightCertificate | MonoMinusVertex | SpecialEdge | TwoApex | NearMonoMinusVertex
    | SpecialEdge3 | MPApexPartition | MPBasePartition | MPTwoApex | MPUniqueEdge | MPFiveVertex
)

CASES = (
    "TIGHT_PARTITION", "MONO_MINUS_VERTEX", "SPECIAL_EDGE", "TWO_APEX",
    "NEAR_MONO_MINUS_VERTEX", "SPECIAL_EDGE3", "MP_APEX_PARTITION",
    "MP_BASE_PARTITION", "MP_TWO_APEX", "MP_UNIQUE_EDGE", "MP_FIVE_VERTEX",
)


def certificate_json(cert, host=None) -> str:
    return json.dumps(cert.to_json(host), sort_keys=False)


def _edge_field(x) -> int:
    if isinstance(x, dict):
        return int(x["id"])
    return int(x)


def certificate_from_json(data: dict | str):
    """Inverse of ``to_json``; edges may be given as ids or ``{"id": ...}`` objects."""
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise ParseError(f"certificate is not valid JSON: {exc.msg}", exc.lineno) from None
    try:
        case = data["case"]
        if case == "TIGHT_PARTITION":
            return TightCertificate(int(data["base_color"]),
                                    tuple((tuple(p["vertices"]), int(p["color"])) for p in data["parts"]))
        if case == "MONO_MINUS_VERTEX":
            return MonoMinusVertex(int(data["u"]), int(data["color"]))
        if case == "SPECIAL_EDGE":
            return SpecialEdge(_edge_field(data["edge"]), int(data["base_color"]))
        if case == "TWO_APEX":
            return TwoApex(int(data["u"]), int(data["v"]), int(data["base_color"]))
        if case == "NEAR_MONO_MINUS_VERTEX":
            exc = data["exceptional"]
            return NearMonoMinusVertex(int(data["v"]), None if exc is None else _edge_field(exc),
                                       int(data["color"]))
        if case == "SPECIAL_EDGE3":
            return SpecialEdge3(_edge_field(data["edge"]), int(data["base_color"]))
        if case == "MP_APEX_PARTITION":
            return MPApexPartition(int(data["part"]),
                                   tuple((tuple(g["vertices"]), int(g["color"])) for g in data["groups"]))
        if case == "MP_BASE_PARTITION":
            return MPBasePartition(int(data["base_color"]), tuple(
                (tuple(tuple(p) for p in b["parts"]), int(b["color"])) for b in data["blocks"]))
        if case == "MP_TWO_APEX":
            return MPTwoApex(int(data["x1"]), int(data["y1"]), int(data["base_color"]))
        if case == "MP_UNIQUE_EDGE":
            return MPUniqueEdge(_edge_field(data["edge"]), int(data["color1"]),
                                int(data["color2"]), int(data["base_color"]))
        if case == "MP_FIVE_VERTEX":
            return MPFiveVertex(*(int(data[k]) for k in
                                  ("x1", "y1", "y2", "z1", "z2", "color1", "color2", "base_color")))
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed certificate: {exc}") from None
    raise ParseError(f"unknown certificate case {data.get('case')!r}")


# --- verification -------------------------------------------------------------


def _vertex_partition_ok(groups, universe) -> bool:
    seen = [v for vs in groups for v in vs]
    return sorted(seen) == sorted(universe)


def _check_tight(c: Coloring, cert: TightCertificate) -> str | None:
    host = c.host
    if not host.is_complete:
        return "tight certificate needs a complete host"
    if not _vertex_partition_ok([vs for vs, _ in cert.parts], range(host.num_vertices)):
        return "parts do not partition the vertex set"
    cols = [col for _, col in cert.parts]
    if len(set(cols)) != len(cols) or cert.base_color in cols:
        return "part colors must be distinct and differ from the base color"
    where = {v: i for i, (vs, _) in enumerate(cert.parts) for v in vs}
    seen = [False] * len(cert.parts)
    for e, x in zip(host.edges, c.colors):
        ps = {where[v] for v in e}
        if len(ps) == 1:
            (i,) = ps
            if x == cols[i]:
                seen[i] = True
            elif x != cert.base_color:
                return f"internal edge {e} of part {i} has color {x}"
        elif x != cert.base_color:
            return f"crossing edge {e} has color {x}, not the base color"
    for i, ok in enumerate(seen):
        if not ok:
            return f"part {i} has no internal edge of its own color"
    return None


def _check_mono_minus_vertex(c: Coloring, cert: MonoMinusVertex) -> str | None:
    for e, x in zip(c.host.edges, c.colors):
        if cert.u not in e and x != cert.color:
            return f"edge {e} avoids {cert.u} but has color {x}"
    return None


def _check_special_edge(c: Coloring, e_id: int, base: int) -> str | None:
    host = c.host
    if not 0 <= e_id < host.num_edges:
        return f"edge id {e_id} out of range"
    e = set(host.edges[e_id])
    if c.colors[e_id] == base:
        return "special edge has the base color"
    for f_id, (f, x) in enumerate(zip(host.edges, c.colors)):
        if f_id != e_id and x != base and len(e & set(f)) != 2:
            return f"edge {f} has color {x} but meets the special edge in {len(e & set(f))} vertices"
    return None


def _check_two_apex(c: Coloring, u: int, v: int, base: int) -> str | None:
    if u == v:
        return "apexes must be distinct"
    for e, x in zip(c.host.edges, c.colors):
        if x != base and not (u in e and v in e):
            return f"edge {e} has color {x} but misses an apex"
    return None


def _check_near_mono(c: Coloring, cert: NearMonoMinusVertex) -> str | None:
    if not 3 <= c.palette_size <= 5:
        return f"palette size {c.palette_size} outside 3..5"
    if cert.exceptional is not None:
        if not 0 <= cert.exceptional < c.host.num_edges:
            return "exceptional edge id out of range"
        if cert.v in c.host.edges[cert.exceptional]:
            return "exceptional edge contains v"
    for i, (e, x) in enumerate(zip(c.host.edges, c.colors)):
        if cert.v not in e and i != cert.exceptional and x != cert.color:
            return f"edge {e} avoids {cert.v} but has color {x}"
    return None


def _check_apex_partition(c: Coloring, cert: MPApexPartition) -> str | None:
    host = c.host
    if host.is_complete or not 0 <= cert.part < 3:
        return "apex partition needs a tripartite host and a part index 0..2"
    if not _vertex_partition_ok([vs for vs, _ in cert.groups], host.parts[cert.part]):
        return f"groups do not partition part {cert.part}"
    cols = [col for _, col in cert.groups]
    if len(set(cols)) != len(cols):
        return "group colors must be distinct"
    color_of = {v: col for vs, col in cert.groups for v in vs}
    for e, x in zip(host.edges, c.colors):
        want = color_of[e[cert.part]]
        if x != want:
            return f"edge {e} has color {x}, expected {want}"
    return None


def _check_base_partition(c: Coloring, cert: MPBasePartition) -> str | None:
    host = c.host
    if host.is_complete:
        return "base partition needs a tripartite host"
    cols = [col for _, col in cert.blocks]
    if len(set(cols)) != len(cols) or cert.base_color in cols:
        return "block colors must be distinct and differ from the base color"
    block_of = {}
    for i, (parts, _) in enumerate(cert.blocks):
        if len(parts) != 3:
            return "each block lists three vertex sets"
        for vs in parts:
            for v in vs:
                if v in block_of:
                    return f"vertex {v} in two blocks"
                block_of[v] = i
    for ell in range(3):
        for v in host.parts[ell]:
            if v not in block_of:
                return f"vertex {v} in no block"
        for i, (parts, _) in enumerate(cert.blocks):
            if any(host.part_of(v) != ell for v in parts[ell]):
                return f"block {i} lists a vertex of the wrong part"
    for e, x in zip(host.edges, c.colors):
        bs = {block_of[v] for v in e}
        if len(bs) == 1:
            (i,) = bs
            if x not in (cert.base_color, cols[i]):
                return f"edge {e} inside block {i} has color {x}"
        elif x != cert.base_color:
            return f"edge {e} across blocks has color {x}"
    return None


def _check_unique_edge(c: Coloring, cert: MPUniqueEdge) -> str | None:
    if c.palette_size != 3:
        return f"palette size {c.palette_size} != 3"
    if len({cert.color1, cert.color2, cert.base_color}) != 3:
        return "the three roles need distinct colors"
    if not 0 <= cert.edge < c.host.num_edges:
        return "edge id out of range"
    e = set(c.host.edges[cert.edge])
    if c.colors[cert.edge] != cert.color1:
        return "listed edge does not carry color1"
    for i, (f, x) in enumerate(zip(c.host.edges, c.colors)):
        if i == cert.edge:
            continue
        if x == cert.color1:
            return f"edge {f} also has color1"
        if x == cert.color2 and len(e & set(f)) != 2:
            return f"edge {f} has color2 but meets the unique edge in {len(e & set(f))} vertices"
        if x not in (cert.color1, cert.color2, cert.base_color):
            return f"edge {f} has unlisted color {x}"
    return None


def _check_five_vertex(c: Coloring, cert: MPFiveVertex) -> str | None:
    host = c.host
    if host.is_complete:
        return "five-vertex case needs a tripartite host"
    if c.palette_size != 3:
        return f"palette size {c.palette_size} != 3"
    if len({cert.color1, cert.color2, cert.base_color}) != 3:
        return "the three roles need distinct colors"
    if cert.y1 == cert.y2 or cert.z1 == cert.z2:
        return "y1, y2 and z1, z2 must be distinct"
    want = {}
    try:
        for y, z, col in ((cert.y1, cert.z1, cert.color1), (cert.y2, cert.z2, cert.color1),
                          (cert.y1, cert.z2, cert.color2), (cert.y2, cert.z1, cert.color2)):
            want[edge_rank(host, (cert.x1, y, z))] = col
    except ValueError:
        return "listed vertices do not span host edges"
    for i, (e, x) in enumerate(zip(host.edges, c.colors)):
        expect = want.get(i, cert.base_color)
        if x != expect:
            return f"edge {e} has color {x}, expected {expect}"
    return None


def certificate_failure(c: Coloring, cert) -> str | None:
    """First violated clause of ``cert`` against ``c``, or ``None`` if it holds."""
    if isinstance(cert, TightCertificate):
        return _check_tight(c, cert)
    if isinstance(cert, MonoMinusVertex):
        return _check_mono_minus_vertex(c, cert)
    if isinstance(cert, SpecialEdge):
        return _check_special_edge(c, cert.edge, cert.base_color)
    if isinstance(cert, TwoApex):
        return _check_two_apex(c, cert.u, cert.v, cert.base_color)
    if isinstance(cert, NearMonoMinusVertex):
        return _check_near_mono(c, cert)
    if isinstance(cert, SpecialEdge3):
        if c.palette_size != 3:
            return f"palette size {c.palette_size} != 3"
        return _check_special_edge(c, cert.edge, cert.base_color)
    if isinstance(cert, MPApexPartition):
        return _check_apex_partition(c, cert)
    if isinstance(cert, MPBasePartition):
        return _check_base_partition(c, cert)
    if isinstance(cert, MPTwoApex):
        if c.host.is_complete:
            return "tripartite certificate on a complete host"
        return _check_two_apex(c, cert.x1, cert.y1, cert.base_color)
    if isinstance(cert, MPUniqueEdge):
        if c.host.is_complete:
            return "tripartite certificate on a complete host"
        return _check_unique_edge(c, cert)
    if isinstance(cert, MPFiveVertex):
        return _check_five_vertex(c, cert)
    return f"unknown certificate type {type(cert).__name__}"


def verify_certificate(c: Coloring, cert) -> bool:
    return certificate_failure(c, cert) is None


# --- certifiers ---------------------------------------------------------------


def _require_complete(c: Coloring, n_min: int) -> None:
    if not c.host.is_complete:
        raise PreconditionFailed("host must be complete")
    if c.host.num_vertices < n_min:
        raise PreconditionFailed(f"host too small: n = {c.host.num_vertices} < {n_min}")


def _require_rainbow_free(c: Coloring, p: Pattern) -> None:
    if c.palette_size < 3:
        raise PreconditionFailed(f"palette < 3 (palette size {c.palette_size})")
    w = find_rainbow_copy(c, p)
    if w is not None:
        raise PreconditionFailed(f"rainbow {p.name} found", witness=w)


def _checked(c: Coloring, cert):
    why = certificate_failure(c, cert)
    if why is not None:
        raise TheoremViolation(f"certificate {cert.case} failed its own check: {why}",
                               coloring=c, obstruction=why)
    return cert


def certify_tight(c: Coloring) -> TightCertificate:
    _require_complete(c, 5)
    _require_rainbow_free(c, TIGHT_T)
    seen = vertex_colors(c)
    common = set.intersection(*seen)
    if len(common) != 1:
        raise TheoremViolation(f"expected one color at every vertex, found {sorted(common)}",
                               coloring=c, obstruction="base color")
    (base,) = common
    members: dict[int, list[int]] = {}
    loose: list[int] = []
    for v, cols in enumerate(seen):
        extra = cols - {base}
        if len(extra) > 1:
            raise TheoremViolation(f"vertex {v} sees {len(extra) + 1} colors",
                                   coloring=c, obstruction=f"color degree at {v}")
        if extra:
            members.setdefault(extra.pop(), []).append(v)
        else:
            loose.append(v)
    if not members:
        raise TheoremViolation("no part colors found", coloring=c)
    members[min(members)].extend(loose)
    parts = tuple((tuple(sorted(vs)), col) for col, vs in sorted(members.items()))
    return _checked(c, TightCertificate(base, parts))


@dataclass(frozen=True)
class MessyVerdict:
    consistent: bool
    palette_size: int
    witness: Embedding | None

    @property
    def label(self) -> str:
        return "CONSISTENT" if self.witness is None else "RAINBOW_WITNESS"


def certify_messy(c: Coloring) -> MessyVerdict:
    """Check that a coloring of K_n (n >= 7) with three or more colors has a rainbow messy path."""
    _require_complete(c, 7)
    if c.palette_size <= 2:
        return MessyVerdict(True, c.palette_size, None)
    w = find_rainbow_copy(c, MESSY_M)
    if w is None:
        raise TheoremViolation(
            f"{c.palette_size} colors on K_{c.host.num_vertices} without a rainbow MESSY_M", coloring=c)
    return MessyVerdict(True, c.palette_size, w)


def _find_mono_minus_vertex(c: Coloring) -> MonoMinusVertex | None:
    for u in range(c.host.num_vertices):
        cols = {x for e, x in zip(c.host.edges, c.colors) if u not in e}
        if len(cols) == 1:
            return MonoMinusVertex(u, cols.pop())
    return None


def _find_special_edges(c: Coloring):
    """Yield (edge id, base) pairs in (EdgeId, color) order."""
    host = c.host
    sets = [set(e) for e in host.edges]
    for e_id, e in enumerate(sets):
        far = {x for f, x in zip(sets, c.colors) if len(e & f) <= 1}
        if len(far) == 1:
            (i,) = far
            if c.colors[e_id] != i:
                yield e_id, i


def certify_loose(c: Coloring):
    _require_complete(c, 7)
    _require_rainbow_free(c, LOOSE_L)
    cert = _find_mono_minus_vertex(c)
    if cert is None:
        for e_id, i in _find_special_edges(c):
            cert = SpecialEdge(e_id, i)
            break
    if cert is None:
        raise TheoremViolation("no vertex or special edge fits the loose structure", coloring=c)
    return _checked(c, cert)


def _find_two_apex(c: Coloring, kind=TwoApex):
    for base in sorted(set(c.colors)):
        common = None
        for e, x in zip(c.host.edges, c.colors):
            if x != base:
                common = set(e) if common is None else common & set(e)
                if len(common) < 2:
                    break
        if common is not None and len(common) >= 2:
            u, v = sorted(common)[:2]
            return kind(u, v, base)
    return None


def _find_near_mono(c: Coloring) -> NearMonoMinusVertex | None:
    if not 3 <= c.palette_size <= 5:
        return None
    for v in range(c.host.num_vertices):
        avoid = [(i, x) for i, (e, x) in enumerate(zip(c.host.edges, c.colors)) if v not in e]
        counts = Counter(x for _, x in avoid)
        color, k = min(counts.items(), key=lambda t: (-t[1], t[0]))
        if k == len(avoid):
            return NearMonoMinusVertex(v, None, color)
        if k == len(avoid) - 1:
            (odd,) = [i for i, x in avoid if x != color]
            return NearMonoMinusVertex(v, odd, color)
    return None


def certify_loose_plus(c: Coloring):
    _require_complete(c, 7)
    _require_rainbow_free(c, LOOSE_L)
    cert = _find_two_apex(c) or _find_near_mono(c)
    if cert is None and c.palette_size == 3:
        for e_id, i in _find_special_edges(c):
            cert = SpecialEdge3(e_id, i)
            break
    if cert is None:
        raise TheoremViolation("none of the three strengthened loose cases applies", coloring=c)
    return _checked(c, cert)


def _find_apex_partition(c: Coloring) -> MPApexPartition | None:
    host = c.host
    for ell in range(3):
        star: dict[int, set[int]] = {v: set() for v in host.parts[ell]}
        for e, x in zip(host.edges, c.colors):
            star[e[ell]].add(x)
        if all(len(s) == 1 for s in star.values()):
            groups: dict[int, list[int]] = {}
            for v, s in star.items():
                groups.setdefault(next(iter(s)), []).append(v)
            return MPApexPartition(ell, tuple((tuple(vs), col) for col, vs in sorted(groups.items())))
    return None


def _find_base_partition(c: Coloring) -> MPBasePartition | None:
    host = c.host
    seen = vertex_colors(c)
    common = set.intersection(*seen)
    if len(common) != 1:
        return None
    (base,) = common
    blocks: dict[int, list[list[int]]] = {}
    loose: list[int] = []
    for v, cols in enumerate(seen):
        extra = cols - {base}
        if len(extra) > 1:
            return None
        if extra:
            blocks.setdefault(extra.pop(), [[], [], []])[host.part_of(v)].append(v)
        else:
            loose.append(v)
    if not blocks:
        return None
    for v in loose:
        ell = host.part_of(v)
        target = min((col for col, ps in blocks.items() if ps[ell]), default=min(blocks))
        blocks[target][ell].append(v)
    return MPBasePartition(base, tuple(
        (tuple(tuple(sorted(p)) for p in ps), col) for col, ps in sorted(blocks.items())))


def _find_unique_edge(c: Coloring) -> MPUniqueEdge | None:
    if c.palette_size != 3:
        return None
    classes = c.classes()
    sets = [set(e) for e in c.host.edges]
    for a in sorted(classes):
        if len(classes[a]) != 1:
            continue
        e_id = classes[a][0]
        for b in sorted(classes):
            if b == a:
                continue
            if all(len(sets[e_id] & sets[f]) == 2 for f in classes[b]):
                (base,) = set(classes) - {a, b}
                return MPUniqueEdge(e_id, a, b, base)
    return None


def _find_five_vertex(c: Coloring) -> MPFiveVertex | None:
    if c.palette_size != 3:
        return None
    host = c.host
    for base in sorted(set(c.colors)):
        odd = [e for e, x in zip(host.edges, c.colors) if x != base]
        if len(odd) != 4:
            continue
        for ell in range(3):
            xs = {e[ell] for e in odd}
            if len(xs) != 1:
                continue
            (x1,) = xs
            j, k = [p for p in range(3) if p != ell]
            ys = sorted({e[j] for e in odd})
            zs = sorted({e[k] for e in odd})
            if len(ys) != 2 or len(zs) != 2:
                continue
            y1, y2 = ys
            z1, z2 = zs
            col1, col2 = c[(x1, y1, z1)], c[(x1, y1, z2)]
            cert = MPFiveVertex(x1, y1, y2, z1, z2, col1, col2, base)
            if certificate_failure(c, cert) is None:
                return cert
    return None


def certify_tripartite(c: Coloring, theorem: str):
    if theorem not in TRIPARTITE_THEOREMS:
        raise ValueError(f"theorem must be one of {sorted(TRIPARTITE_THEOREMS)}")
    host = c.host
    if host.is_complete:
        raise PreconditionFailed("host must be tripartite")
    if len(set(host.sizes)) != 1 or host.sizes[0] < 3:
        raise PreconditionFailed(f"need equal part sizes n >= 3, got {host.sizes}")
    _require_rainbow_free(c, TRIPARTITE_THEOREMS[theorem])
    if theorem == MP_TIGHT:
        finders = (_find_apex_partition, _find_base_partition)
    elif theorem == MP_MESSY:
        finders = (_find_apex_partition,)
    else:
        finders = (lambda c: _find_two_apex(c, MPTwoApex), _find_unique_edge, _find_five_vertex)
    for find in finders:
        cert = find(c)
        if cert is not None and certificate_failure(c, cert) is None:
            return cert
    raise TheoremViolation(f"no {theorem} decomposition found", coloring=c)


def certify(c: Coloring, theorem: str):
    """Dispatch by theorem name: TIGHT, MESSY, LOOSE, LOOSE_PLUS, MP_TIGHT, MP_MESSY, MP_LOOSE."""
    t = theorem.upper().replace("-", "_").replace("+", "_PLUS")
    if t == "TIGHT":
        return certify_tight(c)
    if t == "MESSY":
        return certify_messy(c)
    if t == "LOOSE":
        return certify_loose(c)
    if t == "LOOSE_PLUS":
        return certify_loose_plus(c)
    return certify_tripartite(c, t)


def pair_deletion_mono(c: Coloring) -> tuple[int, int] | None:
    """Lowest pair {u, v} whose deletion leaves a single color, if any."""
    n = c.host.num_vertices
    for u, v in itertools.combinations(range(n), 2):
        cols = {x for e, x in zip(c.host.edges, c.colors) if u not in e and v not in e}
        if len(cols) <= 1:
            return (u, v)
    return None
