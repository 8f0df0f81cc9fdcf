"""Quasi-covering families of solid subgraphs.

A family quasi-covers ``G`` when its combined vertex set contains at least two
vertices of every triangle of ``G``. Two constructions are provided:

* :func:`windmill_cover` packs vertex-disjoint windmills (a centre joined to
  ``p`` disjoint edges) and returns their triangles. On graphs of maximum
  degree ``delta`` it uses at most ``(1/2 - 1/(2 + 4*floor(delta/2))) * n``
  triangles.
* :func:`dense_cover` merges triangles that share an edge until no two groups
  share one. Small when adjacent vertices have many common neighbours.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from scipy.cluster.hierarchy import DisjointSet

from .graph import Graph, bits, mask_of, triangles


class CoverInvariantError(AssertionError):
    """A windmill collection or its termination meters went out of bounds."""


@dataclass(frozen=True)
class Windmill:
    center: int
    pairs: tuple[tuple[int, int], ...]

    @property
    def p(self) -> int:
        return len(self.pairs)

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset((self.center, *(v for pair in self.pairs for v in pair)))

    def triangles(self) -> list[frozenset[int]]:
        return [frozenset((self.center, x, y)) for x, y in self.pairs]

    def check(self, g: Graph) -> None:
        c = self.center
        if self.p < 1:
            raise CoverInvariantError(f"windmill at {c} has no pairs")
        if len(self.vertices) != 1 + 2 * self.p:
            raise CoverInvariantError(f"windmill at {c} repeats a vertex")
        for x, y in self.pairs:
            if not (g.has_edge(c, x) and g.has_edge(c, y) and g.has_edge(x, y)):
                raise CoverInvariantError(f"windmill at {c}: ({x}, {y}) is not a triangle with the centre")


@dataclass(frozen=True)
class QuasiCover:
    groups: tuple[frozenset[int], ...]
    method: str
    windmills: tuple[Windmill, ...] = field(default=(), compare=False)

    def __len__(self) -> int:
        return len(self.groups)

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset().union(*self.groups)

    def masks(self) -> list[int]:
        return [mask_of(grp) for grp in self.groups]


def _sorted_groups(groups) -> tuple[frozenset[int], ...]:
    return tuple(sorted((frozenset(grp) for grp in groups), key=sorted))


# --- bounds -----------------------------------------------------------------


def alpha(delta: int) -> Fraction:
    return Fraction(1, 2 + 4 * (delta // 2))


def windmill_bound(n: int, delta: int) -> Fraction:
    """Upper bound ``(1/2 - alpha(delta)) * n`` on the windmill cover size."""
    return (Fraction(1, 2) - alpha(delta)) * n


def dense_bound(m: int, ell: int) -> Fraction:
    """``2m / ((ell+1)(ell+2))``, valid when adjacent vertices with a common
    neighbour always have at least ``ell`` common neighbours."""
    return Fraction(2 * m, (ell + 1) * (ell + 2))


def min_degree_bound(beta) -> Fraction:
    """Strict upper bound ``1/(2*beta - 1)**2`` for min degree >= beta*n, beta > 1/2."""
    b = Fraction(str(beta))
    if b <= Fraction(1, 2):
        raise ValueError("beta must exceed 1/2")
    return 1 / (2 * b - 1) ** 2


# --- quasi-cover check ------------------------------------------------------


def check_quasi_cover(g: Graph, cover: QuasiCover) -> bool:
    covered = mask_of(cover.vertices)
    return all((mask_of(t) & covered).bit_count() >= 2 for t in triangles(g))


# --- windmill construction --------------------------------------------------


class _Packing:
    """Mutable vertex-disjoint windmill collection used while building."""

    def __init__(self, g: Graph):
        self.g = g
        self.tris = [(mask_of(t), t) for t in triangles(g)]
        self.mills: list[Windmill] = []
        self.used = 0

    def owner(self, v: int) -> int:
        for i, w in enumerate(self.mills):
            if v == w.center or any(v in pair for pair in w.pairs):
                return i
        raise KeyError(v)

    def add(self, w: Windmill) -> None:
        self.mills.append(w)
        self.used |= mask_of(w.vertices)

    def replace(self, i: int, new: list[Windmill]) -> None:
        self.used &= ~mask_of(self.mills[i].vertices)
        del self.mills[i]
        for w in new:
            self.add(w)

    def check(self) -> None:
        seen = 0
        for w in self.mills:
            w.check(self.g)
            vm = mask_of(w.vertices)
            if vm & seen:
                raise CoverInvariantError("windmills are not vertex-disjoint")
            seen |= vm
        if seen != self.used:
            raise CoverInvariantError("vertex bookkeeping out of sync")

    def extend_once(self) -> bool:
        """Apply one greedy move; False when none applies."""
        for tm, (a, b, c) in self.tris:
            if not tm & self.used:
                self.add(Windmill(a, ((b, c),)))
                return True
        adj = self.g.adj
        for i in sorted(range(len(self.mills)), key=lambda k: self.mills[k].center):
            w = self.mills[i]
            free = adj[w.center] & ~self.used
            for x in bits(free):
                ys = adj[x] & free & ~((2 << x) - 1)
                if ys:
                    y = (ys & -ys).bit_length() - 1
                    self.replace(i, [Windmill(w.center, (*w.pairs, (x, y)))])
                    return True
        return False


def build_windmills(g: Graph, validate: bool = False) -> list[Windmill]:
    """Windmill collection whose triangles quasi-cover ``g``.

    Greedy extension (new disjoint triangles, then pendant pairs on existing
    centres) alternates with a repair step for the least triangle ``T`` with
    exactly one vertex ``v`` in the collection, ``v`` in windmill ``W``:

    * ``v`` a leaf and ``p(W) >= 2``: replace ``W`` by ``T`` and a triangle of
      ``W - v``;
    * ``v`` the centre of ``W``: the rest of ``T`` becomes a new leaf pair;
    * ``v`` a leaf of the triangle ``{c, u, v}``: re-centre at ``v`` with the
      leaf pairs ``{c, u}`` and ``T - v``.

    ``validate`` re-checks the collection after every move.
    """
    pack = _Packing(g)
    n = g.n
    replacements = 0
    steps = 0
    while True:
        while pack.extend_once():
            steps += 1
            if validate:
                pack.check()
        target = None
        for tm, t in pack.tris:
            if (tm & pack.used).bit_count() <= 1:
                target = t
                break
        if target is None:
            break
        inside = [v for v in target if pack.used >> v & 1]
        if len(inside) != 1:
            raise CoverInvariantError(f"triangle {target} disjoint from a maximal packing")
        v = inside[0]
        x, y = (u for u in target if u != v)
        i = pack.owner(v)
        w = pack.mills[i]
        if v == w.center:
            pack.replace(i, [Windmill(v, (*w.pairs, (x, y)))])
            steps += 1
        elif w.p >= 2:
            other = next(pr for pr in w.pairs if v not in pr)
            a, b, c = target
            pack.replace(i, [Windmill(a, ((b, c),)), Windmill(w.center, (other,))])
            replacements += 1
            steps = 0
        else:
            (old,) = w.pairs
            c, u = w.center, (old[0] if old[1] == v else old[1])
            pack.replace(i, [Windmill(v, (tuple(sorted((c, u))), (min(x, y), max(x, y))))])
            steps += 1
        if validate:
            pack.check()
        if replacements > n // 3 or steps > n:
            raise CoverInvariantError(f"termination meter exceeded (replacements={replacements}, steps={steps})")
    return sorted(pack.mills, key=lambda w: w.center)


def windmill_cover(g: Graph, validate: bool = False) -> QuasiCover:
    mills = build_windmills(g, validate=validate)
    groups = [t for w in mills for t in w.triangles()]
    return QuasiCover(_sorted_groups(groups), "windmill", tuple(mills))


# --- dense construction -----------------------------------------------------


def dense_cover(g: Graph) -> QuasiCover:
    """Vertex sets of the classes of triangles under "shares an edge"."""
    tris = triangles(g)
    ds = DisjointSet(range(len(tris)))
    first_on_edge: dict[tuple[int, int], int] = {}
    for k, (a, b, c) in enumerate(tris):
        for e in ((a, b), (a, c), (b, c)):
            j = first_on_edge.setdefault(e, k)
            if j != k:
                ds.merge(j, k)
    groups = [frozenset(v for k in cls for v in tris[k]) for cls in ds.subsets()]
    return QuasiCover(_sorted_groups(groups), "dense")


def auto_cover(g: Graph) -> QuasiCover:
    """The smaller of the two covers; ties go to the windmill cover."""
    w = windmill_cover(g)
    d = dense_cover(g)
    return d if len(d) < len(w) else w


def make_cover(g: Graph, method: str) -> QuasiCover:
    try:
        builder = {"windmill": windmill_cover, "dense": dense_cover, "auto": auto_cover}[method]
    except KeyError:
        raise ValueError(f"unknown cover method {method!r}") from None
    return builder(g)


# --- serialization ----------------------------------------------------------


def format_cover(cover: QuasiCover) -> str:
    lines = [f"method {cover.method}"]
    lines.extend(" ".join(str(v + 1) for v in sorted(grp)) for grp in cover.groups)
    return "\n".join(lines) + "\n"


def parse_cover(text: str) -> QuasiCover:
    lines = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0][0] != "method" or len(lines[0]) != 2:
        raise ValueError("cover dump must start with 'method <name>'")
    groups = [frozenset(int(tok) - 1 for tok in ln) for ln in lines[1:]]
    return QuasiCover(_sorted_groups(groups), lines[0][1])
