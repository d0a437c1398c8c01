"""Exhaustive and branch-and-bound searches over edge colorings.

Colorings are identified with set partitions of the edge set, so color names
never matter. Every search below shares one engine:

* an edge may take any color already in use or exactly one fresh color
  (first-appearance canonical form; this is the only symmetry broken);
* *rainbow constraints* forbid a listed edge set from receiving pairwise
  distinct colors, *mono constraints* forbid it from being monochromatic;
* after each assignment, constraints with a single unassigned edge shrink that
  edge's domain (forward checking), and the next edge is the one with the
  smallest domain;
* when maximizing the number of classes, a node is cut when the classes in use
  plus the unassigned edges that can still open a fresh class cannot beat the
  incumbent.

A budget overrun yields ``INCONCLUSIVE``; it never produces a wrong value.
"""

from __future__ import annotations

import itertools
import multiprocessing as mp
import os
import time
from dataclasses import dataclass, field
from typing import Callable, Iterator, Sequence

from .errors import SearchInconclusive, TheoremViolation, TooLarge
from .hypergraph import Coloring, HostGraph, normalize
from .patterns import (
    Pattern,
    copy_table,
    find_monochromatic_copy,
    find_rainbow_copy,
)

PROVED = "PROVED"
INCONCLUSIVE = "INCONCLUSIVE"

FULL = -1
MAX_PARTITION_EDGES = 12


@dataclass(frozen=True)
class SearchBudget:
    node_limit: int | None = None
    time_limit: float | None = None
    threads: int = 1

    def __post_init__(self):
        if self.node_limit is not None and self.node_limit <= 0:
            raise ValueError("node limit must be positive")
        if self.time_limit is not None and self.time_limit <= 0:
            raise ValueError("time limit must be positive")
        if self.threads < 1:
            raise ValueError("thread count must be positive")


@dataclass
class SearchOutcome:
    status: str
    value: int
    witness: Coloring | None = None
    nodes: int = 0
    elapsed: float = 0.0

    @property
    def proved(self) -> bool:
        return self.status == PROVED


# --- exhaustive partition oracle -------------------------------------------


def iter_restricted_growth(m: int) -> Iterator[tuple[int, ...]]:
    """All restricted growth strings of length ``m`` in lexicographic order."""
    if m == 0:
        yield ()
        return
    a = [0] * m
    mx = [0] * m  # mx[i] = max(a[:i + 1])
    while True:
        yield tuple(a)
        i = m - 1
        while i > 0 and a[i] > mx[i - 1]:
            i -= 1
        if i == 0:
            return
        a[i] += 1
        mx[i] = max(mx[i - 1], a[i])
        for j in range(i + 1, m):
            a[j] = 0
            mx[j] = mx[i]


@dataclass
class PartitionStats:
    visited: int = 0
    by_palette: dict[int, int] = field(default_factory=dict)


def enumerate_color_partitions(host: HostGraph, visitor: Callable[[Coloring], None] | None = None) -> PartitionStats:
    m = host.num_edges
    if m > MAX_PARTITION_EDGES:
        raise TooLarge(f"{m} edges; partition enumeration is capped at {MAX_PARTITION_EDGES}")
    stats = PartitionStats()
    for rgs in iter_restricted_growth(m):
        stats.visited += 1
        k = max(rgs) + 1 if rgs else 0
        stats.by_palette[k] = stats.by_palette.get(k, 0) + 1
        if visitor is not None:
            visitor(Coloring(host, rgs))
    return stats


def bell_number(m: int) -> int:
    """Bell number via the Bell triangle (independent of the enumerator)."""
    row = [1]
    for _ in range(m):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]


# --- engine ------------------------------------------------------------------


class _Stop(Exception):
    pass


class _Found(Exception):
    pass


class _Engine:
    def __init__(
        self,
        num_edges: int,
        rainbow: Sequence[Sequence[int]] = (),
        mono: Sequence[Sequence[int]] = (),
        *,
        max_colors: int | None = None,
        maximize: bool = False,
        budget: SearchBudget | None = None,
        shared_best=None,
        debug: bool = False,
    ):
        E = self.E = num_edges
        self.rb3: list[list[tuple[int, int]]] = [[] for _ in range(E)]
        self.rbk: list[list[tuple[int, ...]]] = [[] for _ in range(E)]
        self.mono: list[list[tuple[int, ...]]] = [[] for _ in range(E)]
        for cp in rainbow:
            cp = tuple(cp)
            for i, e in enumerate(cp):
                rest = cp[:i] + cp[i + 1:]
                if len(cp) == 3:
                    self.rb3[e].append(rest)
                elif len(cp) >= 2:
                    self.rbk[e].append(rest)
        self.dead_edges = set()
        for cp in mono:
            cp = tuple(cp)
            if len(cp) == 1:
                self.dead_edges.add(cp[0])
            for i, e in enumerate(cp):
                self.mono[e].append(cp[:i] + cp[i + 1:])
        self.max_colors = max_colors if max_colors is not None else E
        self.maximize = maximize
        self.budget = budget or SearchBudget()
        self.shared_best = shared_best
        self.debug = debug
        self.rainbow_copies = [tuple(c) for c in rainbow] if debug else None
        self.mono_copies = [tuple(c) for c in mono] if debug else None

        self.color = [-1] * E
        self.opened = [False] * E
        self.incl = [FULL] * E
        self.excl = [0] * E
        self.trail: list[tuple[list[int], int, int]] = []
        self.used = 0
        self.assigned = 0
        self.best = 0
        self.best_colors: list[int] | None = None
        self.nodes = 0
        self.start = time.perf_counter()

    # -- propagation --

    def _restrict(self, q: int, mask: int) -> bool:
        d = self.incl[q]
        nd = mask if d == FULL else d & mask
        if nd != d:
            self.trail.append((self.incl, q, d))
            self.incl[q] = nd
            if nd & ~self.excl[q] == 0:
                return False
        return True

    def _exclude(self, q: int, x: int) -> bool:
        d = self.excl[q]
        if d >> x & 1:
            return True
        self.trail.append((self.excl, q, d))
        nd = self.excl[q] = d | (1 << x)
        inc = self.incl[q]
        if inc != FULL and inc & ~nd == 0:
            return False
        return True

    def assign(self, e: int, x: int) -> bool:
        color = self.color
        color[e] = x
        self.assigned += 1
        if x == self.used:
            self.used += 1
            self.opened[e] = True
        if e in self.dead_edges:
            return False
        bx = 1 << x
        for p, q in self.rb3[e]:
            cp, cq = color[p], color[q]
            if cp >= 0:
                if cq >= 0:
                    if cp != cq and cp != x and cq != x:
                        return False
                elif cp != x and not self._restrict(q, bx | (1 << cp)):
                    return False
            elif cq >= 0 and cq != x and not self._restrict(p, bx | (1 << cq)):
                return False
        for rest in self.rbk[e]:
            free = [o for o in rest if color[o] < 0]
            if len(free) > 1:
                continue
            seen = {x}
            distinct = True
            for o in rest:
                co = color[o]
                if co >= 0:
                    if co in seen:
                        distinct = False
                        break
                    seen.add(co)
            if not distinct:
                continue
            if not free:
                return False
            mask = 0
            for co in seen:
                mask |= 1 << co
            if not self._restrict(free[0], mask):
                return False
        for rest in self.mono[e]:
            free = -1
            ok = True
            for o in rest:
                co = color[o]
                if co < 0:
                    if free >= 0:
                        ok = False
                        break
                    free = o
                elif co != x:
                    ok = False
                    break
            if not ok:
                continue
            if free < 0:
                return False
            if not self._exclude(free, x):
                return False
        return True

    def unassign(self, e: int, x: int, mark: int) -> None:
        trail = self.trail
        while len(trail) > mark:
            arr, q, d = trail.pop()
            arr[q] = d
        self.color[e] = -1
        self.assigned -= 1
        if self.opened[e]:
            self.opened[e] = False
            self.used -= 1

    # -- search --

    def _tick(self) -> None:
        self.nodes += 1
        b = self.budget
        if b.node_limit is not None and self.nodes > b.node_limit:
            raise _Stop
        if b.time_limit is not None and self.nodes & 255 == 0:
            if time.perf_counter() - self.start > b.time_limit:
                raise _Stop

    def _goal(self) -> int:
        best = self.best
        if self.shared_best is not None:
            best = max(best, self.shared_best.value)
        return best + 1

    def _options(self, e: int) -> list[int]:
        d, ex, used = self.incl[e], self.excl[e], self.used
        if d == FULL:
            opts = [c for c in range(used) if not ex >> c & 1]
            if used < self.max_colors:
                opts.insert(0, used) if self.maximize else opts.append(used)
            return opts
        return [c for c in range(used) if d >> c & 1 and not ex >> c & 1]

    def _select(self) -> tuple[int, int]:
        """Return (edge, fresh-capable count); edge -1 means a dead end."""
        best_e, best_sz, fresh = -1, 1 << 30, 0
        used, cap = self.used, self.max_colors
        color, incl, excl = self.color, self.incl, self.excl
        for e in range(self.E):
            if color[e] >= 0:
                continue
            d = incl[e]
            if d == FULL:
                sz = used - bin(excl[e] & ((1 << used) - 1)).count("1")
                if used < cap:
                    sz += 1
                    fresh += 1
            else:
                sz = bin(d & ~excl[e]).count("1")
            if sz == 0:
                return -1, 0
            if sz < best_sz:
                best_e, best_sz = e, sz
        return best_e, fresh

    def _record(self) -> None:
        if self.maximize:
            if self.used > self.best:
                self.best = self.used
                self.best_colors = list(self.color)
                if self.shared_best is not None:
                    with self.shared_best.get_lock():
                        if self.used > self.shared_best.value:
                            self.shared_best.value = self.used
        else:
            self.best = self.used
            self.best_colors = list(self.color)
            raise _Found

    def rec(self) -> None:
        self._tick()
        if self.assigned == self.E:
            self._record()
            return
        e, fresh = self._select()
        if e < 0:
            if self.debug:
                self._check_deadend()
            return
        if self.maximize and self.used + fresh < self._goal():
            return
        for x in self._options(e):
            mark = len(self.trail)
            if self.assign(e, x):
                self.rec()
            elif self.debug:
                self._check_failure(e)
            self.unassign(e, x, mark)

    def replay(self, path: Sequence[tuple[int, int]]) -> bool:
        for e, x in path:
            if not self.assign(e, x):
                return False
        return True

    def frontier(self, depth: int) -> Iterator[list[tuple[int, int]]]:
        """Decision paths at ``depth`` (or complete leaves above it)."""
        path: list[tuple[int, int]] = []

        def walk(d: int):
            if d == depth or self.assigned == self.E:
                yield list(path)
                return
            e, fresh = self._select()
            if e < 0:
                return
            for x in self._options(e):
                mark = len(self.trail)
                if self.assign(e, x):
                    path.append((e, x))
                    yield from walk(d + 1)
                    path.pop()
                self.unassign(e, x, mark)

        yield from walk(0)

    # -- debug justification of prunes --

    def _forbidden_complete(self) -> bool:
        color = self.color
        for cp in self.rainbow_copies:
            cs = [color[e] for e in cp]
            if min(cs) >= 0 and len(set(cs)) == len(cs):
                return True
        for cp in self.mono_copies:
            cs = [color[e] for e in cp]
            if min(cs) >= 0 and len(set(cs)) == 1:
                return True
        return False

    def _edge_blocked(self, u: int) -> bool:
        """Every admissible color of ``u`` closes a forbidden copy."""
        fresh = self.used if self.used < self.max_colors else None
        for x in list(range(self.used)) + ([fresh] if fresh is not None else []):
            self.color[u] = x
            bad = self._forbidden_complete()
            self.color[u] = -1
            if not bad:
                return False
        return True

    def _check_failure(self, e: int) -> None:
        if self._forbidden_complete():
            return
        for u in range(self.E):
            if self.color[u] < 0 and self._edge_blocked(u):
                return
        raise AssertionError("pruned a node without a forbidden copy or a blocked edge")

    def _check_deadend(self) -> None:
        for u in range(self.E):
            if self.color[u] < 0 and self._edge_blocked(u):
                return
        raise AssertionError("dead end without a blocked edge")


# --- parallel driver ---------------------------------------------------------

_WORKER: dict = {}


def _worker_init(args, kwargs, shared):
    _WORKER["args"] = args
    _WORKER["kwargs"] = kwargs
    _WORKER["shared"] = shared


def _worker_run(path):
    eng = _Engine(*_WORKER["args"], shared_best=_WORKER["shared"], **_WORKER["kwargs"])
    if not eng.replay(path):
        return (0, None, eng.nodes, False)
    try:
        if eng.assigned == eng.E:
            eng._record()
        else:
            eng.rec()
    except _Found:
        return (eng.best, eng.best_colors, eng.nodes, True)
    except _Stop:
        return (eng.best, eng.best_colors, eng.nodes, False)
    return (eng.best, eng.best_colors, eng.nodes, True)


def _run(
    num_edges: int,
    rainbow=(),
    mono=(),
    *,
    max_colors: int | None = None,
    maximize: bool,
    budget: SearchBudget | None,
    debug: bool = False,
) -> tuple[str, int, list[int] | None, int, float]:
    """Run the engine; returns (status, best, colors, nodes, elapsed)."""
    budget = budget or SearchBudget()
    t0 = time.perf_counter()
    kwargs = dict(max_colors=max_colors, maximize=maximize, debug=debug)
    if budget.threads <= 1:
        eng = _Engine(num_edges, rainbow, mono, budget=budget, **kwargs)
        status = PROVED
        try:
            eng.rec()
        except _Found:
            pass
        except _Stop:
            status = INCONCLUSIVE
        return status, eng.best, eng.best_colors, eng.nodes, time.perf_counter() - t0

    ctx = mp.get_context("fork")
    shared = ctx.Value("i", 0)
    splitter = _Engine(num_edges, rainbow, mono, budget=SearchBudget(), **kwargs)
    paths = list(splitter.frontier(depth=4))
    per_task = SearchBudget(
        node_limit=budget.node_limit,
        time_limit=budget.time_limit,
    )
    status, best, best_colors, nodes = PROVED, 0, None, splitter.nodes
    with ctx.Pool(budget.threads, initializer=_worker_init,
                  initargs=((num_edges, rainbow, mono), dict(kwargs, budget=per_task), shared)) as pool:
        for value, colors, n, complete in pool.imap(_worker_run, paths):
            nodes += n
            if not complete and not (colors is not None and not maximize):
                status = INCONCLUSIVE
            if colors is not None and (best_colors is None or value > best):
                best, best_colors = value, colors
                if not maximize:
                    pool.terminate()
                    break
            if budget.time_limit is not None and time.perf_counter() - t0 > budget.time_limit:
                status = INCONCLUSIVE
                pool.terminate()
                break
    if not maximize and best_colors is not None:
        status = PROVED
    return status, best, best_colors, nodes, time.perf_counter() - t0


# --- anti-Ramsey -------------------------------------------------------------


def _copies(host: HostGraph, p: Pattern) -> list[tuple[int, ...]]:
    return [tuple(int(x) for x in row) for row in copy_table(host, p).edge_ids]


def max_rainbow_free_colors(host: HostGraph, p: Pattern, budget: SearchBudget | None = None,
                            *, debug: bool = False) -> SearchOutcome:
    """Largest number of color classes in a rainbow-``p``-free coloring of ``host``."""
    if p.num_edges < 2:
        raise ValueError("pattern needs at least two edges")
    status, best, colors, nodes, elapsed = _run(
        host.num_edges, rainbow=_copies(host, p), maximize=True, budget=budget, debug=debug
    )
    witness = Coloring(host, normalize(colors)) if colors is not None else None
    if witness is not None:
        if find_rainbow_copy(witness, p) is not None or witness.palette_size != best:
            raise AssertionError("search returned a witness that does not re-verify")
    return SearchOutcome(status, best, witness, nodes, elapsed)


def anti_ramsey(host: HostGraph, p: Pattern, budget: SearchBudget | None = None) -> int:
    out = max_rainbow_free_colors(host, p, budget)
    if not out.proved:
        raise SearchInconclusive(out)
    return out.value + 1


# --- Ramsey-type searches -----------------------------------------------------


def ramsey2_search(host: HostGraph, h: Pattern, budget: SearchBudget | None = None,
                   *, debug: bool = False) -> SearchOutcome:
    """Look for a 2-coloring of ``host`` without a monochromatic ``h``.

    ``value`` is 1 when such a coloring exists (returned as witness) and 0
    when the search space was exhausted without one.
    """
    status, _, colors, nodes, elapsed = _run(
        host.num_edges, mono=_copies(host, h), max_colors=2, maximize=False, budget=budget, debug=debug
    )
    if colors is None:
        return SearchOutcome(status, 0, None, nodes, elapsed)
    witness = Coloring(host, normalize(colors))
    if witness.palette_size > 2 or find_monochromatic_copy(witness, h) is not None:
        raise AssertionError("ramsey witness does not re-verify")
    return SearchOutcome(PROVED, 1, witness, nodes, elapsed)


def constrained_counterexample(host: HostGraph, h: Pattern, g: Pattern,
                               budget: SearchBudget | None = None) -> SearchOutcome:
    """Look for a coloring (any number of colors) with no mono ``h`` and no rainbow ``g``."""
    status, _, colors, nodes, elapsed = _run(
        host.num_edges, rainbow=_copies(host, g), mono=_copies(host, h), maximize=False, budget=budget
    )
    if colors is None:
        return SearchOutcome(status, 0, None, nodes, elapsed)
    witness = Coloring(host, normalize(colors))
    if find_monochromatic_copy(witness, h) is not None or find_rainbow_copy(witness, g) is not None:
        raise AssertionError("constrained witness does not re-verify")
    return SearchOutcome(PROVED, 1, witness, nodes, elapsed)


@dataclass
class RamseyValue:
    value: int | None
    witness: Coloring | None
    status: str
    nodes: int


def ramsey2_number(h: Pattern, budget: SearchBudget | None = None, *,
                   tripartite: bool = False, n_max: int = 9) -> RamseyValue:
    """Least ``n`` with no 2-coloring of K_n (or K_{n,n,n}) avoiding a mono ``h``.

    ``witness`` is a coloring at ``n - 1`` avoiding it, when that host exists.
    """
    nodes = 0
    witness = None
    if tripartite:
        n0 = 1
    else:
        n0 = 3
    for n in range(n0, n_max + 1):
        host = HostGraph.tripartite(n) if tripartite else HostGraph.complete(n)
        out = ramsey2_search(host, h, budget)
        nodes += out.nodes
        if not out.proved:
            return RamseyValue(None, witness, INCONCLUSIVE, nodes)
        if out.witness is None:
            return RamseyValue(n, witness, PROVED, nodes)
        witness = out.witness
    return RamseyValue(None, witness, INCONCLUSIVE, nodes)


@dataclass
class ConstrainedReport:
    target: Pattern
    path: Pattern
    r2: int | None
    r2_witness: Coloring | None
    f: int | None
    hypothesis: str
    hypothesis_met: bool
    equality_asserted: bool
    status: str
    trace: list[str] = field(default_factory=list)


PATH_HYPOTHESES = {
    "TIGHT_T": "target connected",
    "MESSY_M": "R2(target) >= 7",
    "LOOSE_L": "R2(target) >= max(|V(target)|+1, 7)",
}


def _hypothesis_holds(h: Pattern, path: Pattern, r2: int) -> bool:
    if path.name == "TIGHT_T":
        return h.is_connected()
    if path.name == "MESSY_M":
        return r2 >= 7
    if path.name == "LOOSE_L":
        return r2 >= max(h.num_vertices + 1, 7)
    raise ValueError(f"{path.name} is not one of the three 3-edge paths")


def constrained_ramsey_check(h: Pattern, path: Pattern, budget: SearchBudget | None = None,
                             *, n_max: int = 9) -> ConstrainedReport:
    """Compute R2(h) and f(h, path) by search and compare them.

    The lower bound f >= R2 holds because a 2-colored host has no rainbow
    3-edge copy. The upper bound is checked directly: no coloring of K_R2
    with any number of colors avoids both a mono ``h`` and a rainbow ``path``.
    """
    if path.name not in PATH_HYPOTHESES:
        raise ValueError(f"{path.name} is not one of the three 3-edge paths")
    trace: list[str] = []
    rv = ramsey2_number(h, budget, n_max=n_max)
    if rv.value is None:
        trace.append(f"R2 search inconclusive up to n={n_max}")
        return ConstrainedReport(h, path, None, rv.witness, None, PATH_HYPOTHESES[path.name],
                                 False, False, INCONCLUSIVE, trace)
    r2 = rv.value
    trace.append(f"R2={r2} (2-coloring DFS exhausted at n={r2}, {rv.nodes} nodes)")
    if rv.witness is not None:
        trace.append(f"lower bound: 2-colored K_{r2 - 1} without mono target has palette "
                     f"{rv.witness.palette_size} <= 2, so no rainbow path")
    met = _hypothesis_holds(h, path, r2)
    trace.append(f"hypothesis '{PATH_HYPOTHESES[path.name]}': {'holds' if met else 'fails'}")

    if path.name == "MESSY_M" and r2 >= 7:
        mr = max_rainbow_free_colors(HostGraph.complete(r2), path, budget)
        trace.append(f"structure route: max rainbow-free palette at n={r2} is {mr.value} ({mr.status})")

    f = None
    status = PROVED
    for n in range(r2, n_max + 1):
        ce = constrained_counterexample(HostGraph.complete(n), h, path, budget)
        if not ce.proved:
            trace.append(f"counterexample search at n={n} inconclusive")
            status = INCONCLUSIVE
            break
        if ce.witness is None:
            f = n
            trace.append(f"upper bound: every coloring of K_{n} has mono target or rainbow path "
                         f"({ce.nodes} nodes)")
            break
        trace.append(f"K_{n} admits a coloring with neither (palette {ce.witness.palette_size})")
        if met and n == r2:
            raise TheoremViolation(
                f"f({h.name}, {path.name}) > R2 = {r2} although the hypothesis holds",
                coloring=ce.witness,
            )
    else:
        status = INCONCLUSIVE
    equality = met and f is not None and f == r2
    return ConstrainedReport(h, path, r2, rv.witness, f, PATH_HYPOTHESES[path.name], met,
                             equality, status, trace)


# --- canonical colorings --------------------------------------------------------


@dataclass
class CanonicalRow:
    J: tuple[int, ...]
    palette: int
    mono: bool
    rainbow: bool

    @property
    def ok(self) -> bool:
        return self.mono or self.rainbow


@dataclass
class CanonicalTable:
    t: int
    host_kind: str
    rows: list[CanonicalRow]

    @property
    def exists(self) -> bool:
        return all(r.ok for r in self.rows)


def canonical_existence_check(h: Pattern, g: Pattern, t: int, host_kind: str) -> CanonicalTable:
    from .constructions import j_canonical, j_canonical_ordered

    if host_kind == "tripartite":
        if t > 4:
            raise TooLarge("tripartite canonical check is capped at t = 4")
        build = lambda J: j_canonical(HostGraph.tripartite(t), J)  # noqa: E731
    elif host_kind in ("ordered", "complete-ordered"):
        if t > 9:
            raise TooLarge("ordered canonical check is capped at t = 9")
        if t < 3:
            raise TooLarge("ordered host needs t >= 3")
        build = lambda J: j_canonical_ordered(t, J)  # noqa: E731
    else:
        raise ValueError(f"unknown host kind {host_kind!r}")
    rows = []
    for k in range(4):
        for J in itertools.combinations((1, 2, 3), k):
            c = build(J)
            rows.append(CanonicalRow(J, c.palette_size,
                                     find_monochromatic_copy(c, h) is not None,
                                     find_rainbow_copy(c, g) is not None))
    return CanonicalTable(t, host_kind, rows)


def default_budget_secs() -> float | None:
    raw = os.environ.get("RHL_DEFAULT_BUDGET_SECS")
    return float(raw) if raw else None
