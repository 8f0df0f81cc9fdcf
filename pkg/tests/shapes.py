"""Small named graphs shared by the tests."""
import networkx as nx

from indcut.graph import Graph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def path3():
    return Graph(3, [(0, 1), (1, 2)])


def cycle(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def prism():
    return Graph(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (0, 3), (1, 4), (2, 5)])


def bowtie():
    return Graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])


def friendship2():
    return Graph(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])


def two_k4():
    a = [(i, j) for i in range(4) for j in range(i + 1, 4)]
    b = [(i + 4, j + 4) for i, j in a]
    return Graph(8, a + b + [(0, 4), (1, 5)])


def windmill_ring(k):
    """``k`` 2-windmills in a ring; max degree 4, every vertex in a triangle."""
    edges = set()
    for j in range(k):
        c = 5 * j
        x, y, u, w = c + 1, c + 2, c + 3, c + 4
        edges |= {(c, x), (c, y), (x, y), (c, u), (c, w), (u, w)}
        nxt = 5 * ((j + 1) % k)
        for a, b in ((w, nxt + 1), (u, nxt + 2), (y, nxt + 3)):
            edges.add((min(a, b), max(a, b)))
    return Graph(5 * k, sorted(edges))
