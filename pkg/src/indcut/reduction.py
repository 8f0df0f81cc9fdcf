"""Linear reduction 3-SAT -> 1-in-3-SAT -> positive 1-in-3-SAT -> independent cut.

Literals are DIMACS-style signed integers (variable ``i`` is ``i + 1``).
An exactly-one clause ``R(a, b, c)`` holds when exactly one of its three
literals is true.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .graph import Graph, ParseError

BRUTE_MAX_VARS = 25


@dataclass(frozen=True)
class Cnf3:
    num_vars: int
    clauses: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        fixed = []
        for c in self.clauses:
            c = tuple(c)
            if not 1 <= len(c) <= 3:
                raise ValueError(f"clause {c} must have 1 to 3 literals")
            if any(lit == 0 or abs(lit) > self.num_vars for lit in c):
                raise ValueError(f"clause {c} has a literal out of range")
            # pad short clauses by repeating the last literal
            fixed.append(c + (c[-1],) * (3 - len(c)))
        object.__setattr__(self, "clauses", tuple(fixed))


@dataclass(frozen=True)
class R3Formula:
    num_vars: int
    clauses: tuple[tuple[int, int, int], ...]

    @property
    def all_positive(self) -> bool:
        return all(lit > 0 for c in self.clauses for lit in c)


@dataclass(frozen=True)
class IcInstance:
    graph: Graph
    labels: dict[str, int]
    stages: dict[str, int] = field(default_factory=dict)


# --- stage 1 ----------------------------------------------------------------


def to_one_in_three(f: Cnf3) -> R3Formula:
    """Each clause ``(x or y or z)`` becomes ``R(a,b,-x), R(b,c,y), R(c,d,-z)``
    over four fresh variables."""
    clauses = []
    nxt = f.num_vars
    for x, y, z in f.clauses:
        a, b, c, d = nxt + 1, nxt + 2, nxt + 3, nxt + 4
        nxt += 4
        clauses += [(a, b, -x), (b, c, y), (c, d, -z)]
    out = R3Formula(nxt, tuple(clauses))
    assert out.num_vars == f.num_vars + 4 * len(f.clauses)
    assert len(out.clauses) == 3 * len(f.clauses)
    return out


# --- stage 2 ----------------------------------------------------------------


def positivize(f: R3Formula) -> R3Formula:
    """Remove negative literals.

    Every variable ``a`` gets a twin ``a'`` forced to ``not a`` by
    ``R(a, a', f1)`` and ``R(a, a', f2)``; ``R(f1, f2, t)`` pins ``f1``, ``f2``
    false. Negative occurrences ``-a`` become ``a'``. Formulas without negative
    literals are returned unchanged.
    """
    if f.all_positive:
        return f
    n = f.num_vars
    f1, f2, t = 2 * n + 1, 2 * n + 2, 2 * n + 3
    twin = lambda lit: lit if lit > 0 else n - lit  # noqa: E731  (-a -> n + a)
    clauses = [tuple(twin(lit) for lit in c) for c in f.clauses]
    for a in range(1, n + 1):
        clauses += [(a, n + a, f1), (a, n + a, f2)]
    clauses.append((f1, f2, t))
    out = R3Formula(2 * n + 3, tuple(clauses))
    assert len(out.clauses) == len(f.clauses) + 2 * n + 1
    return out


# --- stage 3 ----------------------------------------------------------------


def build_ic_instance(f: R3Formula) -> IcInstance:
    """Graph with an independent cut iff the positive formula ``f`` is satisfiable.

    Vertices: one per variable, nine per clause, a triangle ``r1 r2 r3`` and an
    edge ``t1 t2``. The clause gadget has 14 edges: triangles on the ``a``,
    ``b`` and ``c`` vertices, the edge ``a1 b1`` and the two paths
    ``a3 c1 b3`` and ``a2 c2 c3 b2`` that run through the ``c`` triangle.
    """
    if not f.all_positive:
        raise ValueError("build_ic_instance needs a formula without negative literals")
    nv, mc = f.num_vars, len(f.clauses)
    labels: dict[str, int] = {f"v{i + 1}": i for i in range(nv)}
    for i in range(mc):
        for j, part in enumerate("abc"):
            for k in range(3):
                labels[f"{part}_{i + 1}_{k + 1}"] = nv + 9 * i + 3 * j + k
    base = nv + 9 * mc
    for k, name in enumerate(("r1", "r2", "r3", "t1", "t2")):
        labels[name] = base + k
    r1, r2, r3, t1, t2 = (labels[x] for x in ("r1", "r2", "r3", "t1", "t2"))

    edges = {(r1, r2), (r1, r3), (r2, r3), (t1, t2)}
    for v in range(nv):
        edges |= {(v, r1), (v, r2)}
    for i, clause in enumerate(f.clauses, start=1):
        a = [labels[f"a_{i}_{k}"] for k in (1, 2, 3)]
        b = [labels[f"b_{i}_{k}"] for k in (1, 2, 3)]
        c = [labels[f"c_{i}_{k}"] for k in (1, 2, 3)]
        for tri in (a, b, c):
            edges |= {(tri[0], tri[1]), (tri[0], tri[2]), (tri[1], tri[2])}
        edges |= {(a[0], b[0]), (a[2], c[0]), (b[2], c[0]), (a[1], c[1]), (b[1], c[2])}
        edges |= {(abs(lit) - 1, c[k]) for k, lit in enumerate(clause)}
        edges |= {(r1, a[0]), (r2, b[0]), (r3, a[0]), (r3, b[0])}
        edges |= {(t1, c[0]), (t1, c[1]), (t2, c[0]), (t2, c[2])}
    g = Graph(base + 5, [(min(u, v), max(u, v)) for u, v in edges])
    assert g.n == nv + 9 * mc + 5
    assert g.m == gadget_size(nv, mc)
    return IcInstance(g, labels, {"order": g.n, "size": g.m})


def gadget_size(num_vars: int, num_clauses: int) -> int:
    """Edge count of :func:`build_ic_instance` output: 14 per gadget, 3 per
    clause to variables, 2 per variable to ``r1``/``r2``, 4 + 4 per clause to
    the ``r`` and ``t`` vertices, and 4 inside ``R`` and ``T``."""
    return 14 * num_clauses + 4 + 3 * num_clauses + 2 * num_vars + 4 * num_clauses + 4 * num_clauses


def reduce_full(f: Cnf3) -> IcInstance:
    one = to_one_in_three(f)
    pos = positivize(one)
    inst = build_ic_instance(pos)
    stages = {"n": f.num_vars, "m": len(f.clauses),
              "n1": one.num_vars, "m1": len(one.clauses),
              "n2": pos.num_vars, "m2": len(pos.clauses),
              "order": inst.graph.n, "size": inst.graph.m}
    return IcInstance(inst.graph, inst.labels, stages)


# --- oracles ----------------------------------------------------------------


def _value(lit: int, assignment) -> bool:
    return assignment[abs(lit) - 1] == (lit > 0)


def brute_r3(f: R3Formula, max_vars: int = BRUTE_MAX_VARS):
    """First satisfying assignment in counting order, or None."""
    if f.num_vars > max_vars:
        raise ValueError(f"brute_r3 refuses {f.num_vars} variables (limit {max_vars})")
    for pattern in range(1 << f.num_vars):
        assignment = [bool(pattern >> i & 1) for i in range(f.num_vars)]
        if all(sum(_value(lit, assignment) for lit in c) == 1 for c in f.clauses):
            return assignment
    return None


def brute_3sat(f: Cnf3, max_vars: int = BRUTE_MAX_VARS):
    if f.num_vars > max_vars:
        raise ValueError(f"brute_3sat refuses {f.num_vars} variables (limit {max_vars})")
    for assignment in product((False, True), repeat=f.num_vars):
        if all(any(_value(lit, assignment) for lit in c) for c in f.clauses):
            return list(assignment)
    return None


# --- I/O --------------------------------------------------------------------


def parse_cnf(text: str | bytes) -> Cnf3:
    """DIMACS CNF. Clauses may span lines; clauses with more than three
    literals or no literals are rejected."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    header = None
    clauses = []
    current: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        parts = raw.split()
        if not parts or parts[0] == "c" or parts[0] == "%":
            continue
        if parts[0] == "p":
            if header is not None or len(parts) != 4 or parts[1] != "cnf":
                raise ParseError(f"malformed header {raw.strip()!r}", lineno)
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise ParseError(f"malformed header {raw.strip()!r}", lineno) from None
            continue
        if header is None:
            raise ParseError("clause before header", lineno)
        for tok in parts:
            try:
                lit = int(tok)
            except ValueError:
                raise ParseError(f"bad literal {tok!r}", lineno) from None
            if lit == 0:
                if not current:
                    raise ParseError("empty clause", lineno)
                if len(current) > 3:
                    raise ParseError(f"clause with {len(current)} literals (max 3)", lineno)
                clauses.append(tuple(current))
                current = []
            elif abs(lit) > header[0]:
                raise ParseError(f"variable {abs(lit)} exceeds declared {header[0]}", lineno)
            else:
                current.append(lit)
    if header is None:
        raise ParseError("missing 'p cnf' header")
    if current:
        if len(current) > 3:
            raise ParseError(f"clause with {len(current)} literals (max 3)")
        clauses.append(tuple(current))
    return Cnf3(header[0], tuple(clauses))


def format_labels(inst: IcInstance) -> str:
    """Sidecar map: ``<role> <1-based vertex id>`` per line, by vertex id."""
    rows = sorted(inst.labels.items(), key=lambda kv: kv[1])
    return "".join(f"{role} {vid + 1}\n" for role, vid in rows)
