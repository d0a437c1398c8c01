"""Named verification bundles, one per acceptance criterion.

Every bundle returns a :class:`CriterionResult`. A search that runs out of
budget makes its bundle fail with status ``INCONCLUSIVE``; nothing is ever
reported as passing on a partial search.
"""

from __future__ import annotations

import functools
import random
import time
from dataclasses import dataclass, field
from math import perm

from . import constructions as cons
from .certifiers import MP_LOOSE, MP_MESSY, MP_TIGHT, certify, certify_messy, verify_certificate
from .hypergraph import Coloring, HostGraph
from .lemmas import LEMMAS
from .patterns import (
    LOOSE_L,
    MATCHING2,
    MESSY_M,
    TIGHT_T,
    count_copies,
    find_rainbow_copy,
)
from .search import (
    INCONCLUSIVE,
    PROVED,
    SearchBudget,
    bell_number,
    canonical_existence_check,
    constrained_ramsey_check,
    enumerate_color_partitions,
    max_rainbow_free_colors,
    ramsey2_search,
)

PASS = "PASS"
FAIL = "FAIL"


@dataclass
class CriterionResult:
    number: int
    name: str
    status: str  # PASS, FAIL or INCONCLUSIVE
    checks: list[tuple[str, bool]] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def line(self) -> str:
        return f"criterion {self.number:>2} {self.name:<28} {self.status:<12} {self.elapsed:8.2f}s"


class _Recorder:
    def __init__(self, number: int, name: str):
        self.r = CriterionResult(number, name, PASS)
        self.t0 = time.perf_counter()
        self.inconclusive = False

    def check(self, label: str, ok: bool) -> bool:
        self.r.checks.append((label, bool(ok)))
        return ok

    def outcome(self, label: str, out, expected: int) -> None:
        if out.status != PROVED:
            self.inconclusive = True
            self.r.notes.append(f"{label}: search INCONCLUSIVE after {out.nodes} nodes")
        self.check(f"{label} = {expected} ({out.status})", out.status == PROVED and out.value == expected)

    def within(self, label: str, start: float, limit: float) -> None:
        self.check(f"{label} within {limit:g}s", time.perf_counter() - start <= limit)

    def done(self) -> CriterionResult:
        r = self.r
        r.elapsed = time.perf_counter() - self.t0
        if self.inconclusive:
            r.status = INCONCLUSIVE
        elif not all(ok for _, ok in r.checks):
            r.status = FAIL
        return r


def _budget(secs: float, threads: int) -> SearchBudget:
    return SearchBudget(time_limit=secs, threads=threads)


def crit_tight_ar(threads: int = 1) -> CriterionResult:
    rec = _Recorder(1, "anti-Ramsey tight path")
    t = time.perf_counter()
    best = [0]

    def visit(c: Coloring):
        if c.palette_size > best[0] and find_rainbow_copy(c, TIGHT_T) is None:
            best[0] = c.palette_size

    enumerate_color_partitions(HostGraph.complete(5), visit)
    rec.check("n=5 partition oracle max palette = 2", best[0] == 2)
    out5 = max_rainbow_free_colors(HostGraph.complete(5), TIGHT_T, _budget(60, threads))
    rec.outcome("n=5 branch and bound max palette", out5, 2)
    rec.check("n=5 oracle and search agree", out5.value == best[0])
    rec.within("n=5", t, 60)
    t = time.perf_counter()
    out6 = max_rainbow_free_colors(HostGraph.complete(6), TIGHT_T, _budget(900, threads))
    rec.outcome("n=6 max palette", out6, 3)
    rec.within("n=6", t, 900)
    t = time.perf_counter()
    for n in range(7, 13):
        c = cons.tight_lb(n)
        rec.check(f"TIGHT_LB({n}) palette {n // 3 + 1}, rainbow-free",
                  c.palette_size == n // 3 + 1 and find_rainbow_copy(c, TIGHT_T) is None)
    rec.within("lower bounds n=7..12", t, 60)
    return rec.done()


def crit_messy_ar(threads: int = 1) -> CriterionResult:
    rec = _Recorder(2, "anti-Ramsey messy path")
    t = time.perf_counter()
    rec.outcome("n=6 max palette", max_rainbow_free_colors(HostGraph.complete(6), MESSY_M, _budget(1200, threads)), 10)
    rec.within("n=6", t, 1200)
    t = time.perf_counter()
    rec.outcome("n=7 max palette", max_rainbow_free_colors(HostGraph.complete(7), MESSY_M, _budget(1200, threads)), 2)
    rec.within("n=7", t, 1200)
    t = time.perf_counter()
    c = cons.messy_k6()
    rec.check("MESSY_K6 has 10 colors and no rainbow MESSY_M",
              c.palette_size == 10 and find_rainbow_copy(c, MESSY_M) is None)
    rec.within("MESSY_K6", t, 1)
    return rec.done()


def crit_loose_ar(threads: int = 1) -> CriterionResult:
    rec = _Recorder(3, "anti-Ramsey loose path")
    t = time.perf_counter()
    c = cons.loose_lb(7)
    rec.check("LOOSE_LB(7) has 6 colors and no rainbow LOOSE_L",
              c.palette_size == 6 and find_rainbow_copy(c, LOOSE_L) is None)
    rec.within("LOOSE_LB(7)", t, 1)
    t = time.perf_counter()
    out = max_rainbow_free_colors(HostGraph.complete(7), LOOSE_L, _budget(3600, threads))
    if out.status == PROVED:
        rec.outcome("n=7 max palette", out, 6)
        rec.within("n=7", t, 3600)
        return rec.done()
    # budget overrun: structural fallback, the numeric claim stays unproven
    rec.r.notes.append("ar(7, LOOSE_L) = 7 NOT PROVED; structural fallback used")
    ok_palette = ok_cert = True
    for i in range(10_000):
        case = ("TWO_APEX", "NEAR_MONO_MINUS_VERTEX", "SPECIAL_EDGE3")[i % 3]
        s = cons.sample_structured(case, 7, i)
        ok_palette &= s.palette_size <= 6
        ok_cert &= verify_certificate(s, certify(s, "LOOSE_PLUS"))
    rec.check("fallback: sampled palettes <= 6", ok_palette)
    rec.check("fallback: loose+ certifier accepts every sample", ok_cert)
    rec.inconclusive = True
    return rec.done()


def crit_exhaustive_k5() -> CriterionResult:
    rec = _Recorder(4, "exhaustive n=5 tight")
    free3 = rainbow3 = total3 = 0

    def visit(c: Coloring):
        nonlocal free3, rainbow3, total3
        if c.palette_size >= 3:
            total3 += 1
            if find_rainbow_copy(c, TIGHT_T) is None:
                free3 += 1
            else:
                rainbow3 += 1

    stats = enumerate_color_partitions(HostGraph.complete(5), visit)
    rec.check(f"visited {stats.visited} = Bell(10) = {bell_number(10)}", stats.visited == bell_number(10) == 115975)
    rec.check(f"(a) rainbow-free partitions with >= 3 colors: {free3} = 0", free3 == 0)
    rec.check(f"(b) partitions with >= 3 colors containing a rainbow path: {rainbow3} = {total3}",
              rainbow3 == total3 > 0)
    rec.within("enumeration", rec.t0, 120)
    return rec.done()


def random_three_colorings(n: int, count: int, seed: int = 0):
    rng = random.Random(seed)
    host = HostGraph.complete(n)
    m = host.num_edges
    made = 0
    while made < count:
        colors = [rng.randrange(3) for _ in range(m)]
        if len(set(colors)) == 3:
            made += 1
            yield Coloring(host, colors)


def crit_messy_structure(threads: int = 1) -> CriterionResult:
    rec = _Recorder(5, "messy structure n=7")
    rec.outcome("max rainbow-free palette at n=7",
                max_rainbow_free_colors(HostGraph.complete(7), MESSY_M, _budget(1200, threads)), 2)
    t = time.perf_counter()
    hits = sum(certify_messy(c).witness is not None for c in random_three_colorings(7, 10_000))
    rec.check(f"random 3-colorings with a rainbow witness: {hits}/10000", hits == 10_000)
    rec.within("random suite", t, 120)
    return rec.done()


SAMPLE_PLAN = {
    "TIGHT_PARTITION": ("TIGHT", TIGHT_T, (7, 8, 9)),
    "MONO_MINUS_VERTEX": ("LOOSE", LOOSE_L, (7, 8)),
    "SPECIAL_EDGE": ("LOOSE", LOOSE_L, (7, 8)),
    "TWO_APEX": ("LOOSE_PLUS", LOOSE_L, (7, 8)),
    "NEAR_MONO_MINUS_VERTEX": ("LOOSE_PLUS", LOOSE_L, (7, 8)),
    "SPECIAL_EDGE3": ("LOOSE_PLUS", LOOSE_L, (7, 8)),
    "MP_APEX_PARTITION": (MP_MESSY, MESSY_M, (3, 4)),
    "MP_BASE_PARTITION": (MP_TIGHT, TIGHT_T, (3, 4)),
    "MP_TWO_APEX": (MP_LOOSE, LOOSE_L, (3, 4)),
    "MP_UNIQUE_EDGE": (MP_LOOSE, LOOSE_L, (3, 4)),
    "MP_FIVE_VERTEX": (MP_LOOSE, LOOSE_L, (3, 4)),
}


@functools.lru_cache(maxsize=4)
def structured_samples(per_case: int = 1000) -> tuple[tuple[str, Coloring, object], ...]:
    """(case, coloring, intended certificate) for every sampler case, seeded."""
    out = []
    for case, (_, _, sizes) in SAMPLE_PLAN.items():
        for seed in range(per_case):
            c, cert = cons.sample_with_certificate(case, sizes[seed % len(sizes)], seed)
            out.append((case, c, cert))
    return tuple(out)


def crit_certifier_round_trips(per_case: int = 1000) -> CriterionResult:
    rec = _Recorder(6, "certifier round trips")
    failures: dict[str, int] = {}
    for case, c, intended in structured_samples(per_case):
        theorem, pattern, _ = SAMPLE_PLAN[case]
        ok = verify_certificate(c, intended) and find_rainbow_copy(c, pattern) is None
        got = certify(c, theorem)
        ok = ok and verify_certificate(c, got)
        if not ok:
            failures[case] = failures.get(case, 0) + 1
    for case in SAMPLE_PLAN:
        rec.check(f"{case}: {per_case - failures.get(case, 0)}/{per_case} certified and verified",
                  case not in failures)
    rec.within("round trips", rec.t0, 300)
    return rec.done()


def crit_lemmas(per_case: int = 1000) -> CriterionResult:
    rec = _Recorder(7, "lemma property suites")
    bad = {name: 0 for name in LEMMAS}

    def run(c: Coloring):
        for name, fn in LEMMAS.items():
            if fn(c):
                bad[name] += 1

    enumerate_color_partitions(HostGraph.complete(5), run)
    for _, c, _ in structured_samples(per_case):
        run(c)
    for name, k in bad.items():
        rec.check(f"{name}: {k} violations", k == 0)
    rec.within("lemma suites", rec.t0, 300)
    return rec.done()


def crit_constrained() -> CriterionResult:
    rec = _Recorder(8, "constrained Ramsey sharpness")
    t = time.perf_counter()
    w = ramsey2_search(HostGraph.complete(6), MATCHING2)
    rec.check("K6 admits a 2-coloring without a mono MATCHING2", w.status == PROVED and w.witness is not None)
    e = ramsey2_search(HostGraph.complete(7), MATCHING2)
    rec.check("K7 2-colorings exhausted without a witness", e.status == PROVED and e.witness is None)
    rec.within("Ramsey DFS", t, 60)
    report = constrained_ramsey_check(MATCHING2, MESSY_M)
    if report.status != PROVED:
        rec.inconclusive = True
    rec.check(f"R2 = {report.r2} = 7 and f = {report.f} = 7", report.r2 == 7 and report.f == 7)
    rec.check("hypothesis held and equality asserted", report.hypothesis_met and report.equality_asserted)
    return rec.done()


def crit_multipartite(threads: int = 1) -> CriterionResult:
    rec = _Recorder(9, "multipartite anti-Ramsey")
    t = time.perf_counter()
    for name, build, p, k in (("MP_G1", cons.mp_g1, MESSY_M, 3), ("MP_G2", cons.mp_g2, TIGHT_T, 4),
                              ("MP_G3", cons.mp_g3, LOOSE_L, 4)):
        c = build(3)
        rec.check(f"{name}(3) has {k} colors and no rainbow {p.name}",
                  c.palette_size == k and find_rainbow_copy(c, p) is None)
    rec.within("constructions", t, 1)
    host = HostGraph.tripartite(3)
    for p, ar in ((MESSY_M, 4), (TIGHT_T, 5), (LOOSE_L, 5)):
        t = time.perf_counter()
        rec.outcome(f"max palette {p.name} in K333", max_rainbow_free_colors(host, p, _budget(3600, threads)), ar - 1)
        rec.within(p.name, t, 3600)
    return rec.done()


def crit_canonical() -> CriterionResult:
    rec = _Recorder(10, "canonical existence table")
    for g in (TIGHT_T, MESSY_M):
        for t in range(1, 5):
            table = canonical_existence_check(MATCHING2, g, t, "tripartite")
            rec.check(f"{g.name}, t={t}: no rainbow copy for |J|=1",
                      not any(r.rainbow for r in table.rows if len(r.J) == 1))
    table = canonical_existence_check(MATCHING2, LOOSE_L, 3, "tripartite")
    rec.check("LOOSE_L, t=3: rainbow copy for every |J|=1",
              all(r.rainbow for r in table.rows if len(r.J) == 1))
    for g in (TIGHT_T, MESSY_M, LOOSE_L):
        table = canonical_existence_check(MATCHING2, g, 3, "tripartite")
        rec.check(f"{g.name}, t=3: rainbow copy for every |J|=2",
                  all(r.rainbow for r in table.rows if len(r.J) == 2))
    rec.within("table", rec.t0, 60)
    return rec.done()


def crit_copy_counts() -> CriterionResult:
    """Library-side check: counts against (n)_v / |Aut| for complete hosts."""
    rec = _Recorder(11, "copy counts")
    for n, p, want in ((5, TIGHT_T, 60), (6, MESSY_M, 180), (7, LOOSE_L, 630)):
        got = count_copies(HostGraph.complete(n), p)
        formula = perm(n, p.num_vertices) // p.automorphism_count
        rec.check(f"{p.name} in K{n}: {got} = {want} = {formula}", got == want == formula)
    rec.within("counts", rec.t0, 60)
    return rec.done()


SUITES = {
    "tight-ar": crit_tight_ar,
    "messy-ar": crit_messy_ar,
    "loose-ar": crit_loose_ar,
    "exhaustive-k5": crit_exhaustive_k5,
    "messy-structure": crit_messy_structure,
    "certifiers": crit_certifier_round_trips,
    "lemmas": crit_lemmas,
    "constrained": crit_constrained,
    "multipartite": crit_multipartite,
    "canonical": crit_canonical,
    "copy-counts": crit_copy_counts,
}

THREADED = {"tight-ar", "messy-ar", "loose-ar", "messy-structure", "multipartite"}


def run_suite(name: str, threads: int = 1) -> list[CriterionResult]:
    names = list(SUITES) if name == "all" else [name]
    out = []
    for s in names:
        fn = SUITES[s]
        out.append(fn(threads) if s in THREADED else fn())
    return out
