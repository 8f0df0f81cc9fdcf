"""2-SAT via the implication graph and its strongly connected components.

Literals use the DIMACS convention: variable ``i`` (0-based) is written
``i + 1`` for the positive literal and ``-(i + 1)`` for its negation. A unit
clause ``(a,)`` is encoded as the implication ``-a -> a``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

BRUTE_MAX_VARS = 25


@dataclass(frozen=True)
class TwoSatFormula:
    num_vars: int
    clauses: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        clauses = tuple(tuple(c) for c in self.clauses)
        for c in clauses:
            if not 1 <= len(c) <= 2:
                raise ValueError(f"clause {c} must have 1 or 2 literals")
            for lit in c:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise ValueError(f"literal {lit} out of range for {self.num_vars} variables")
        object.__setattr__(self, "clauses", clauses)


def evaluate(f: TwoSatFormula, assignment: Sequence[bool]) -> bool:
    """True iff ``assignment`` satisfies every clause of ``f``."""
    if len(assignment) != f.num_vars:
        raise ValueError("assignment length differs from variable count")
    return all(any(assignment[abs(l) - 1] == (l > 0) for l in c) for c in f.clauses)


def _node(lit: int) -> int:
    # positive literal of var i -> 2i, negative -> 2i + 1
    return 2 * (lit - 1) if lit > 0 else 2 * (-lit - 1) + 1


def solve_clauses(num_vars: int, clauses) -> list[bool] | None:
    """Unchecked core of :func:`solve`; ``clauses`` is any iterable of 1- or
    2-tuples of literals."""
    size = 2 * num_vars
    succ = [[] for _ in range(size)]
    touched = [False] * num_vars
    for c in clauses:
        a = c[0]
        b = c[1] if len(c) == 2 else a
        na, nb = _node(a), _node(b)
        # (a or b) == (-a -> b) and (-b -> a)
        succ[na ^ 1].append(nb)
        succ[nb ^ 1].append(na)
        touched[abs(a) - 1] = touched[abs(b) - 1] = True

    # iterative Tarjan; component ids are issued in reverse topological order
    index = [-1] * size
    low = [0] * size
    comp = [-1] * size
    on_stack = [False] * size
    stack = []
    counter = 0
    ncomp = 0
    for start in range(size):
        if index[start] != -1:
            continue
        work = [(start, 0)]
        index[start] = low[start] = counter
        counter += 1
        stack.append(start)
        on_stack[start] = True
        while work:
            v, i = work[-1]
            edges = succ[v]
            if i < len(edges):
                work[-1] = (v, i + 1)
                w = edges[i]
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, 0))
                elif on_stack[w] and index[w] < low[v]:
                    low[v] = index[w]
                continue
            work.pop()
            if work:
                u = work[-1][0]
                if low[v] < low[u]:
                    low[u] = low[v]
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp[w] = ncomp
                    if w == v:
                        break
                ncomp += 1

    assignment = []
    for i in range(num_vars):
        cp, cn = comp[2 * i], comp[2 * i + 1]
        if cp == cn:
            return None
        # the literal whose component comes later in topological order wins
        assignment.append(touched[i] and cp < cn)
    return assignment


def solve(f: TwoSatFormula) -> list[bool] | None:
    """Satisfying assignment of ``f`` or ``None`` when unsatisfiable.

    Runs in linear time. Variables that occur in no clause are set to False.
    """
    return solve_clauses(f.num_vars, f.clauses)


def brute_solve(f: TwoSatFormula, max_vars: int = BRUTE_MAX_VARS) -> list[bool] | None:
    """Exhaustive reference solver.

    Patterns are scanned in counting order from all-false; bit ``i`` of the
    pattern is the value of variable ``i``. The first satisfying pattern wins.
    """
    t = f.num_vars
    if t > max_vars:
        raise ValueError(f"brute_solve refuses {t} variables (limit {max_vars})")
    falsifying = []
    for c in f.clauses:
        if len(c) == 2 and c[0] == -c[1]:
            continue  # tautology
        # the clause is false exactly on patterns with (pattern & care) == want
        care = want = 0
        for lit in c:
            b = 1 << (abs(lit) - 1)
            care |= b
            if lit < 0:
                want |= b
        falsifying.append((care, want))
    for pattern in range(1 << t):
        if all(pattern & care != want for care, want in falsifying):
            return [bool(pattern >> i & 1) for i in range(t)]
    return None
