"""Seeded test-instance generators used by the ``gen`` and ``bench`` commands.

Every generator takes a ``random.Random`` (or a seed) and is fully
deterministic given it.
"""
from __future__ import annotations

import math
import random
from fractions import Fraction
from itertools import combinations

from .graph import Graph


def _rng(seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def maxdeg(n: int, delta: int, p: float, seed=0) -> Graph:
    """Random graph with maximum degree at most ``delta``.

    Vertex pairs are visited in random order; each is kept with probability
    ``p`` unless an endpoint is already saturated.
    """
    if n < 0 or delta < 0 or not 0 <= p <= 1:
        raise ValueError("need n >= 0, delta >= 0 and 0 <= p <= 1")
    rng = _rng(seed)
    pairs = list(combinations(range(n), 2))
    rng.shuffle(pairs)
    deg = [0] * n
    edges = []
    for u, v in pairs:
        if deg[u] < delta and deg[v] < delta and rng.random() < p:
            edges.append((u, v))
            deg[u] += 1
            deg[v] += 1
    return Graph(n, edges)


def dense(n: int, beta: float, seed=0, p: float = 0.5) -> Graph:
    """Random graph with minimum degree at least ``ceil(beta * n)``, built as
    the complement of a :func:`maxdeg` graph."""
    b = Fraction(str(beta))
    if not 0 <= b < 1:
        raise ValueError("beta must lie in [0, 1)")
    need = math.ceil(b * n)
    cap = n - 1 - need
    if cap < 0:
        raise ValueError(f"minimum degree {need} impossible on {n} vertices")
    return maxdeg(n, cap, p, seed).complement()


def windmills(ps: list[int], connect: bool = False) -> Graph:
    """Disjoint union of ``p``-windmills; ``connect`` chains consecutive ones
    by an edge between the last leaf of one and the first leaf of the next."""
    if any(p < 1 for p in ps):
        raise ValueError("windmill sizes must be positive")
    edges = []
    start = 0
    prev_last = None
    for p in ps:
        c = start
        for i in range(p):
            x, y = c + 1 + 2 * i, c + 2 + 2 * i
            edges += [(c, x), (c, y), (x, y)]
        if connect and prev_last is not None:
            edges.append((prev_last, c + 1))
        prev_last = c + 2 * p
        start += 1 + 2 * p
    return Graph(start, edges)


def prismlike(k: int) -> Graph:
    """``k`` triangles in a ring, corresponding corners of neighbouring
    triangles joined (``k = 2`` gives the triangular prism)."""
    if k < 1:
        raise ValueError("need at least one triangle")
    edges = set()
    for j in range(k):
        a = 3 * j
        edges |= {(a, a + 1), (a + 1, a + 2), (a, a + 2)}
        if k > 1:
            b = 3 * ((j + 1) % k)
            for i in range(3):
                edges.add((min(a + i, b + i), max(a + i, b + i)))
    return Graph(3 * k, sorted(edges))


def gnp(n: int, p: float, seed=0) -> Graph:
    rng = _rng(seed)
    return Graph(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def triangle_soup(n: int, delta: int, seed=0, extra_p: float = 0.2) -> Graph:
    """Triangle-rich graph with maximum degree at most ``delta``.

    Random triangles are glued while degrees allow, then random extra edges
    are offered with probability ``extra_p``.
    """
    rng = _rng(seed)
    deg = [0] * n
    edges = set()

    def room(u, v):
        return (u, v) in edges or (deg[u] < delta and deg[v] < delta)

    def add(u, v):
        if (u, v) not in edges:
            edges.add((u, v))
            deg[u] += 1
            deg[v] += 1

    for _ in range(3 * n):
        a, b, c = sorted(rng.sample(range(n), 3))
        if all(room(u, v) for u, v in ((a, b), (a, c), (b, c))):
            # re-check jointly: a vertex may gain two edges
            gain = {a: 0, b: 0, c: 0}
            for u, v in ((a, b), (a, c), (b, c)):
                if (u, v) not in edges:
                    gain[u] += 1
                    gain[v] += 1
            if all(deg[x] + gain[x] <= delta for x in gain):
                add(a, b)
                add(a, c)
                add(b, c)
    pairs = list(combinations(range(n), 2))
    rng.shuffle(pairs)
    for u, v in pairs:
        if (u, v) not in edges and deg[u] < delta and deg[v] < delta and rng.random() < extra_p:
            add(u, v)
    return Graph(n, sorted(edges))
