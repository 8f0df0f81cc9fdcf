"""Immutable simple undirected graphs backed by integer bitmasks.

Vertices are ``0..n-1``. ``Graph.adj[v]`` is an ``int`` whose bit ``u`` is set
iff ``uv`` is an edge, which keeps neighbourhood intersections, component
sweeps and independence tests cheap in the solver's inner loop.
"""
from __future__ import annotations

import logging
from typing import Iterable, Iterator

logger = logging.getLogger(__name__)


class ParseError(ValueError):
    """Malformed DIMACS input. ``lineno`` is 1-based (0 if not line-specific)."""

    def __init__(self, message: str, lineno: int = 0):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}" if lineno else message)


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Parameters
    ----------
    n : int
        Number of vertices.
    edges : iterable of (int, int)
        Edge list. Duplicates collapse; self-loops and out-of-range ids raise
        ``ValueError``.
    """

    __slots__ = ("n", "adj", "m")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.adj = tuple(adj)
        self.m = sum(a.bit_count() for a in adj) // 2

    @classmethod
    def from_masks(cls, adj: Iterable[int]) -> "Graph":
        adj = tuple(adj)
        g = cls.__new__(cls)
        g.n = len(adj)
        g.adj = adj
        g.m = sum(a.bit_count() for a in adj) // 2
        return g

    def __setattr__(self, name, value):
        if hasattr(self, "m"):
            raise AttributeError("Graph is immutable")
        object.__setattr__(self, name, value)

    def __eq__(self, other):
        return isinstance(other, Graph) and self.adj == other.adj

    def __hash__(self):
        return hash(self.adj)

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in ascending order."""
        for u in range(self.n):
            yield from ((u, v) for v in bits(self.adj[u] >> (u + 1) << (u + 1)))

    def max_degree(self) -> int:
        return max((a.bit_count() for a in self.adj), default=0)

    def min_degree(self) -> int:
        return min((a.bit_count() for a in self.adj), default=0)

    def complement(self) -> "Graph":
        full = self.all_mask
        return Graph.from_masks((full ^ a) & ~(1 << v) for v, a in enumerate(self.adj))


# --- structural queries -----------------------------------------------------


def component_masks(adj: tuple[int, ...], alive: int) -> list[int]:
    """Connected components of the subgraph induced by ``alive``, as bitmasks,
    ordered by smallest member."""
    comps = []
    while alive:
        comp = frontier = alive & -alive
        while frontier:
            reach = 0
            for v in bits(frontier):
                reach |= adj[v]
            frontier = reach & alive & ~comp
            comp |= frontier
        comps.append(comp)
        alive &= ~comp
    return comps


def components(g: Graph, removed: Iterable[int] = ()) -> list[frozenset[int]]:
    """Vertex sets of the components of ``g - removed``, ordered by smallest member."""
    alive = g.all_mask & ~mask_of(removed)
    return [frozenset(bits(c)) for c in component_masks(g.adj, alive)]


def is_connected(g: Graph) -> bool:
    return len(component_masks(g.adj, g.all_mask)) <= 1


def cut_vertices(g: Graph) -> frozenset[int]:
    """Articulation points of ``g`` (iterative Hopcroft-Tarjan low-link DFS)."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    found = set()
    clock = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = clock
        clock += 1
        root_children = 0
        stack = [(root, -1, iter(bits(g.adj[root])))]
        while stack:
            v, parent, it = stack[-1]
            for w in it:
                if disc[w] == -1:
                    disc[w] = low[w] = clock
                    clock += 1
                    if v == root:
                        root_children += 1
                    stack.append((w, v, iter(bits(g.adj[w]))))
                    break
                if w != parent and disc[w] < low[v]:
                    low[v] = disc[w]
            else:
                stack.pop()
                if parent >= 0:
                    if low[v] < low[parent]:
                        low[parent] = low[v]
                    if parent != root and low[v] >= disc[parent]:
                        found.add(parent)
        if root_children > 1:
            found.add(root)
    return frozenset(found)


def triangles(g: Graph) -> list[tuple[int, int, int]]:
    """All triangles ``(a, b, c)`` with ``a < b < c``, lexicographically sorted.

    Each edge ``ab`` (``a < b``) is intersected with the neighbourhood of ``a``
    restricted to ids above ``b``.
    """
    out = []
    adj = g.adj
    for a in range(g.n):
        higher = adj[a] >> (a + 1) << (a + 1)
        for b in bits(higher):
            common = higher & adj[b] & ~((2 << b) - 1)
            out.extend((a, b, c) for c in bits(common))
    return out


def triangle_vertices_mask(g: Graph) -> int:
    """Bitmask of the vertices lying in at least one triangle."""
    covered = 0
    adj = g.adj
    for v in range(g.n):
        for u in bits(adj[v]):
            if adj[v] & adj[u]:
                covered |= 1 << v
                break
    return covered


def is_independent_mask(adj: tuple[int, ...], s: int) -> bool:
    for v in bits(s):
        if adj[v] & s:
            return False
    return True


def is_independent(g: Graph, s: Iterable[int]) -> bool:
    return is_independent_mask(g.adj, mask_of(s))


# --- DIMACS edge format -----------------------------------------------------


def parse_dimacs(text: str | bytes) -> Graph:
    """Parse the DIMACS edge format (``c`` comments, ``p edge n m``, ``e u v``).

    Ids in the file are 1-based. Duplicate edges are merged with a warning;
    the header's edge count is informational only.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    n = None
    edges = set()
    duplicates = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        tag = parts[0]
        if tag == "p":
            if n is not None:
                raise ParseError("duplicate header", lineno)
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise ParseError(f"malformed header {raw.strip()!r}", lineno)
            try:
                n, _ = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError(f"malformed header {raw.strip()!r}", lineno) from None
            if n < 0:
                raise ParseError("negative vertex count", lineno)
        elif tag == "e":
            if n is None:
                raise ParseError("edge before header", lineno)
            if len(parts) != 3:
                raise ParseError(f"malformed edge line {raw.strip()!r}", lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError(f"malformed edge line {raw.strip()!r}", lineno) from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"vertex id out of range 1..{n}", lineno)
            if u == v:
                raise ParseError(f"self-loop at vertex {u}", lineno)
            key = (min(u, v) - 1, max(u, v) - 1)
            if key in edges:
                duplicates += 1
            edges.add(key)
        else:
            raise ParseError(f"unknown line type {tag!r}", lineno)
    if n is None:
        raise ParseError("missing 'p edge' header")
    if duplicates:
        logger.warning("ignored %d duplicate edge line(s)", duplicates)
    return Graph(n, sorted(edges))


def write_dimacs(g: Graph, comments: Iterable[str] = ()) -> str:
    lines = [f"c {c}" for c in comments]
    lines.append(f"p edge {g.n} {g.m}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
