"""Exact decision procedure for the independent cut problem.

Pipeline: :func:`preprocess` settles every instance that is disconnected,
tiny, has an articulation point or a vertex outside all triangles. The rest
go through the partition search: for each split of a quasi-cover into a left
and a right half, the question "is there an independent cut separating the
two halves" is a 2-SAT instance over the components of the bipartite graph
between the side-exclusive vertices.
"""
from __future__ import annotations

import json
import time
from concurrent.futures import FIRST_COMPLETED, ProcessPoolExecutor, wait
from dataclasses import dataclass, field
from typing import Iterable

from .cover import QuasiCover, check_quasi_cover, make_cover
from .graph import (Graph, bits, component_masks, cut_vertices, is_independent_mask,
                    mask_of, triangle_vertices_mask, triangles)
from .twosat import TwoSatFormula, solve_clauses

BRUTE_MAX_N = 26
STRATEGIES = ("auto", "windmill", "dense", "brute")


class CertificateError(RuntimeError):
    """A constructed cut failed verification; indicates a bug, never a NO answer."""


@dataclass(frozen=True)
class PreprocessOutcome:
    kind: str  # "yes", "no" or "nontrivial"
    certificate: frozenset[int] | None = None
    reason: str | None = None


@dataclass(frozen=True)
class Verdict:
    has_cut: bool
    certificate: frozenset[int] | None
    reason: str
    stats: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.has_cut != (self.certificate is not None):
            raise ValueError("certificate must be present exactly when has_cut is true")

    def to_dict(self) -> dict:
        cert = None if self.certificate is None else sorted(v + 1 for v in self.certificate)
        return {"has_cut": self.has_cut, "certificate": cert, "reason": self.reason,
                "stats": dict(self.stats)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=False)


@dataclass(frozen=True)
class PartitionContext:
    """Everything derived from one left/right split of the cover."""

    mask: int
    I: frozenset[int]
    L: frozenset[int]
    R: frozenset[int]
    M: frozenset[int]
    components: tuple[tuple[frozenset[int], frozenset[int]], ...]  # (L_i, R_i)
    m_components: tuple[frozenset[int], ...]
    formula: TwoSatFormula

    def component_of(self, v: int) -> int:
        for i, (li, ri) in enumerate(self.components):
            if v in li or v in ri:
                return i
        raise KeyError(v)


# --- basic checks -----------------------------------------------------------


def _is_cut_mask(adj, removed: int, full: int) -> bool:
    alive = full & ~removed
    if not alive:
        return False
    comp = frontier = alive & -alive
    while frontier:
        reach = 0
        for v in bits(frontier):
            reach |= adj[v]
        frontier = reach & alive & ~comp
        comp |= frontier
    return comp != alive


def verify_cut(g: Graph, s: Iterable[int]) -> bool:
    """True iff ``s`` is independent in ``g`` and ``g - s`` is disconnected."""
    sm = mask_of(s)
    return is_independent_mask(g.adj, sm) and _is_cut_mask(g.adj, sm, g.all_mask)


def preprocess(g: Graph) -> PreprocessOutcome:
    """Resolve instances that are not 2-connected with every vertex in a triangle.

    Rules are tried in order: disconnected, at most two vertices, articulation
    point, vertex in no triangle.
    """
    if len(component_masks(g.adj, g.all_mask)) >= 2:
        return PreprocessOutcome("yes", frozenset(), "disconnected")
    if g.n <= 2:
        return PreprocessOutcome("no", None, "too-small")
    cv = cut_vertices(g)
    if cv:
        return PreprocessOutcome("yes", frozenset((min(cv),)), "cut-vertex")
    outside = g.all_mask & ~triangle_vertices_mask(g)
    if outside:
        u = (outside & -outside).bit_length() - 1
        # g is 2-connected, so N(u) separates u from the rest
        return PreprocessOutcome("yes", g.neighbors(u), "triangle-free-vertex")
    return PreprocessOutcome("nontrivial")


def assign_triangles(g: Graph, cover: QuasiCover) -> dict[int, tuple[int, int, int]]:
    """Least triangle through each vertex outside the cover."""
    covered = mask_of(cover.vertices)
    first: dict[int, tuple[int, int, int]] = {}
    for t in triangles(g):
        for v in t:
            first.setdefault(v, t)
    out = {}
    for v in range(g.n):
        if covered >> v & 1:
            continue
        t = first.get(v)
        if t is None:
            raise AssertionError(f"vertex {v} lies in no triangle; instance is not non-trivial")
        if (mask_of(t) & ~covered).bit_count() != 1:
            raise AssertionError(f"triangle {t} has more than one vertex outside the cover")
        out[v] = t
    return out


# --- partition search -------------------------------------------------------


class _Search:
    """Precomputed, picklable state for the mask loop."""

    def __init__(self, g: Graph, cover: QuasiCover, fixed: dict[int, tuple[int, int, int]]):
        self.adj = g.adj
        self.full = g.all_mask
        self.groups = tuple(cover.masks())
        self.fixed = tuple((1 << v, mask_of(t) & ~(1 << v)) for v, t in sorted(fixed.items()))

    def encode(self, mask: int):
        """Clauses for ``mask`` or None when the split is rejected."""
        adj = self.adj
        left = right = 0
        for i, gm in enumerate(self.groups):
            if mask >> i & 1:
                left |= gm
            else:
                right |= gm
        inter = left & right
        if inter and not is_independent_mask(adj, inter):
            return None
        lx, rx, mid = left, right, 0
        for vbit, pair in self.fixed:
            if (pair & left).bit_count() == 2:
                lx |= vbit
            elif (pair & right).bit_count() == 2:
                rx |= vbit
            else:
                mid |= vbit
        L = lx & ~rx
        R = rx & ~lx

        # components of the bipartite graph of L-R edges
        comp_of = {}
        comps = []
        todo = L | R
        while todo:
            k = frontier = todo & -todo
            while frontier:
                reach = 0
                for v in bits(frontier):
                    reach |= adj[v] & (R if L >> v & 1 else L)
                frontier = reach & ~k
                k |= frontier
            todo &= ~k
            idx = len(comps)
            comps.append((k & L, k & R))
            for v in bits(k):
                comp_of[v] = idx + 1  # variables are 1-based literals

        clauses = set()
        if inter:
            near_i = 0
            for v in bits(inter):
                near_i |= adj[v]
            for idx, (li, ri) in enumerate(comps):
                if li & near_i:
                    clauses.add((idx + 1,))
                if ri & near_i:
                    clauses.add((-(idx + 1),))
        for v in bits(L):
            cv = comp_of[v]
            for w in bits(adj[v] & L & ~((2 << v) - 1)):
                cw = comp_of[w]
                clauses.add((cv,) if cv == cw else (min(cv, cw), max(cv, cw)))
        for v in bits(R):
            cv = comp_of[v]
            for w in bits(adj[v] & R & ~((2 << v) - 1)):
                cw = comp_of[w]
                clauses.add((-cv,) if cv == cw else (-min(cv, cw), -max(cv, cw)))
        m_comps = component_masks(adj, mid) if mid else []
        for kc in m_comps:
            near = 0
            for v in bits(kc):
                near |= adj[v]
            ls = sorted({comp_of[v] for v in bits(near & L)})
            rs = sorted({comp_of[v] for v in bits(near & R)})
            for i in ls:
                for j in rs:
                    if i != j:
                        clauses.add((-i, j))
        return inter, L, R, mid, comps, m_comps, sorted(clauses, key=lambda c: (len(c), c))

    def certificate(self, mask: int, enc) -> int | None:
        inter, L, R, mid, comps, m_comps, clauses = enc
        assignment = solve_clauses(len(comps), clauses)
        if assignment is None:
            return None
        s = inter
        for value, (li, ri) in zip(assignment, comps):
            s |= ri if value else li
        if not (is_independent_mask(self.adj, s) and _is_cut_mask(self.adj, s, self.full)):
            raise CertificateError(f"2-SAT model at mask {mask:#x} does not give an independent cut")
        return s

    def masks(self, pin: str = "L"):
        """Splits with group 0 pinned to one side, both sides non-empty, ascending."""
        half = 1 << (len(self.groups) - 1)
        if pin == "L":
            return (1 | r << 1 for r in range(half - 1))
        return (r << 1 for r in range(1, half))

    def run(self, masks) -> tuple[int | None, int | None, int, int]:
        """Scan ``masks``; return (mask, cut, tried, twosat_calls) at the first hit."""
        tried = calls = 0
        for mask in masks:
            tried += 1
            enc = self.encode(mask)
            if enc is None:
                continue
            calls += 1
            s = self.certificate(mask, enc)
            if s is not None:
                return mask, s, tried, calls
        return None, None, tried, calls


def _run_chunk(search: _Search, masks: list[int]):
    return search.run(masks)


def build_partition(g: Graph, cover: QuasiCover, fixed: dict, mask: int) -> PartitionContext | None:
    """Inspectable form of one split; None when the split is rejected."""
    search = _Search(g, cover, fixed)
    enc = search.encode(mask)
    if enc is None:
        return None
    inter, L, R, mid, comps, m_comps, clauses = enc
    fs = lambda m: frozenset(bits(m))  # noqa: E731
    return PartitionContext(
        mask=mask, I=fs(inter), L=fs(L), R=fs(R), M=fs(mid),
        components=tuple((fs(li), fs(ri)) for li, ri in comps),
        m_components=tuple(fs(k) for k in m_comps),
        formula=TwoSatFormula(len(comps), tuple(clauses)),
    )


def solve_partition(g: Graph, cover: QuasiCover, fixed: dict, mask: int) -> frozenset[int] | None:
    """Independent cut respecting the split ``mask`` (bit i set: group i on the left)."""
    full = (1 << len(cover)) - 1
    if not 0 < mask < full:
        raise ValueError("both sides of the split must be non-empty")
    search = _Search(g, cover, fixed)
    enc = search.encode(mask)
    if enc is None:
        return None
    s = search.certificate(mask, enc)
    return None if s is None else frozenset(bits(s))


def _parallel_run(search: _Search, n_jobs: int, pin: str):
    masks = list(search.masks(pin))
    chunk = max(64, len(masks) // (8 * n_jobs) + 1)
    pieces = [masks[i:i + chunk] for i in range(0, len(masks), chunk)]
    tried = calls = 0
    hit = (None, None)
    with ProcessPoolExecutor(max_workers=n_jobs) as pool:
        pending = {pool.submit(_run_chunk, search, p) for p in pieces}
        while pending:
            done, pending = wait(pending, return_when=FIRST_COMPLETED)
            for fut in done:
                mask, s, t, c = fut.result()
                tried += t
                calls += c
                if mask is not None and (hit[0] is None or mask < hit[0]):
                    hit = (mask, s)
            if hit[0] is not None:
                for fut in pending:
                    fut.cancel()
                break
    return hit[0], hit[1], tried, calls


def search_cover(g: Graph, cover: QuasiCover, n_jobs: int = 1, pin: str = "L") -> Verdict:
    """Partition search over a given quasi-cover of a non-trivial instance."""
    start = time.perf_counter()
    stats = {"cover_method": cover.method, "cover_size": len(cover),
             "partitions": 0, "twosat_calls": 0}
    if len(cover) <= 1:
        stats["wall_ms"] = round((time.perf_counter() - start) * 1000, 3)
        return Verdict(False, None, "cover-size<=1", stats)
    if not check_quasi_cover(g, cover):
        raise AssertionError("cover does not quasi-cover the graph")
    search = _Search(g, cover, assign_triangles(g, cover))
    if n_jobs > 1:
        mask, s, tried, calls = _parallel_run(search, n_jobs, pin)
    else:
        mask, s, tried, calls = search.run(search.masks(pin))
    stats.update(partitions=tried, twosat_calls=calls,
                 wall_ms=round((time.perf_counter() - start) * 1000, 3))
    if mask is None:
        return Verdict(False, None, "exhausted", stats)
    stats["winning_mask"] = mask
    return Verdict(True, frozenset(bits(s)), f"mask:{mask}", stats)


def solve(g: Graph, strategy: str = "auto", n_jobs: int = 1,
          brute_max_n: int = BRUTE_MAX_N) -> Verdict:
    """Decide whether ``g`` has an independent cut.

    ``strategy`` picks the quasi-cover (``windmill``, ``dense``, or ``auto`` for
    the smaller) or ``brute`` for exhaustive enumeration. ``n_jobs > 1`` spreads
    the split enumeration over worker processes; the answer is unchanged but
    the certificate may come from a different split.
    """
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}")
    if n_jobs < 1:
        raise ValueError("n_jobs must be at least 1")
    if strategy == "brute":
        return brute_force(g, max_n=brute_max_n)
    start = time.perf_counter()
    pre = preprocess(g)
    if pre.kind != "nontrivial":
        stats = {"partitions": 0, "twosat_calls": 0,
                 "wall_ms": round((time.perf_counter() - start) * 1000, 3)}
        if pre.kind == "yes" and not verify_cut(g, pre.certificate):
            raise CertificateError(f"preprocessing certificate ({pre.reason}) failed verification")
        return Verdict(pre.kind == "yes", pre.certificate, pre.reason, stats)
    cover = make_cover(g, strategy)
    verdict = search_cover(g, cover, n_jobs=n_jobs)
    verdict.stats["wall_ms"] = round((time.perf_counter() - start) * 1000, 3)
    return verdict


# --- oracle -----------------------------------------------------------------


def brute_force(g: Graph, max_n: int = BRUTE_MAX_N) -> Verdict:
    """Try every independent set in ascending bitmask order.

    Independent subsets of ``{0..k}`` containing ``k`` all sort after those of
    ``{0..k-1}``, so growing the list one vertex at a time visits sets in
    ascending order and stops at the first cut.
    """
    if g.n > max_n:
        raise ValueError(f"brute force refuses n={g.n} (limit {max_n})")
    start = time.perf_counter()
    adj, full = g.adj, g.all_mask
    tried = 1
    found = 0 if _is_cut_mask(adj, 0, full) else None
    sets = [0]
    k = 0
    while found is None and k < g.n:
        bit = 1 << k
        lower = adj[k] & (bit - 1)
        fresh = []
        for s in sets:
            if s & lower:
                continue
            s |= bit
            tried += 1
            if _is_cut_mask(adj, s, full):
                found = s
                break
            fresh.append(s)
        sets.extend(fresh)
        k += 1
    stats = {"partitions": 0, "twosat_calls": 0, "sets_tried": tried,
             "wall_ms": round((time.perf_counter() - start) * 1000, 3)}
    if found is None:
        return Verdict(False, None, "brute-force", stats)
    return Verdict(True, frozenset(bits(found)), "brute-force", stats)
