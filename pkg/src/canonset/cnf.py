"""Clause store with a fresh-variable pool, the lexicographic and cardinality
encodings shared by every constraint builder, and DIMACS I/O.

Lex comparisons operate on "cells", the unit of comparison at one string
position: either a single Boolean variable id, or a tuple of literals (one
per symbol, in increasing symbol order) of a one-hot finite-domain variable.
Graph encodings compare plain edge variables; matrix models compare one-hot
cells.  Both compile through the same prefix-equality chain
e_k <-> (x_1 = y_1 & ... & x_k = y_k).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field


class CnfFormula:
    """Growable CNF over a dense pool of variable ids 1..num_vars."""

    def __init__(self, num_vars=0):
        self.num_vars = num_vars
        self.clauses: list[list[int]] = []
        self.unsat_marked = False

    def new_var(self) -> int:
        self.num_vars += 1
        return self.num_vars

    def new_vars(self, k) -> list[int]:
        ids = list(range(self.num_vars + 1, self.num_vars + k + 1))
        self.num_vars += k
        return ids

    def add_clause(self, lits):
        clause = list(lits)
        for lit in clause:
            if lit == 0 or abs(lit) > self.num_vars:
                raise ValueError(f"literal {lit} outside pool of {self.num_vars} vars")
        self.clauses.append(clause)

    def mark_unsatisfiable(self):
        """Record infeasibility detected during encoding (distinct status)."""
        self.unsat_marked = True
        self.clauses.append([])

    def __len__(self):
        return len(self.clauses)


@dataclass
class LexPair:
    """Operands of one lex comparison; entries are cells (see as_cell)."""

    xs: list
    ys: list

    def __post_init__(self):
        if len(self.xs) != len(self.ys):
            raise ValueError(f"operand length mismatch: {len(self.xs)} vs {len(self.ys)}")


def as_cell(c):
    """Normalize a cell: a Boolean var id v becomes the pair (-v, +v)."""
    if isinstance(c, int):
        return (-c, c)
    cell = tuple(c)
    if len(cell) < 2:
        raise ValueError("a cell needs at least two value literals")
    return cell


def encode_lex_leq(f: CnfFormula, pair: LexPair, strict=False):
    """Constrain xs <=lex ys (or <lex when strict) over the pair's cells.

    One auxiliary prefix-equality variable per position; the auxiliaries are
    functionally determined by the compared cells, so projected model counts
    are unaffected.  An empty strict comparison is falsum.
    """
    xs = [as_cell(c) for c in pair.xs]
    ys = [as_cell(c) for c in pair.ys]
    m = len(xs)
    if m == 0:
        if strict:
            f.mark_unsatisfiable()
        return
    prev = None  # literal meaning "all earlier positions equal"; None at k=0
    for k, (xc, yc) in enumerate(zip(xs, ys)):
        q = len(xc)
        if len(yc) != q:
            raise ValueError("cell arity mismatch inside one pair")
        guard = [] if prev is None else [-prev]
        for s in range(q):
            for t in range(s):
                f.add_clause(guard + [-xc[s], -yc[t]])  # no X > Y while prefix equal
        if k == m - 1 and not strict:
            break
        e = f.new_var()
        if prev is not None:
            f.add_clause([-e, prev])
        for s in range(q) if q > 2 else (1,):
            f.add_clause([-e, -xc[s], yc[s]])
            f.add_clause([-e, xc[s], -yc[s]])
        for s in range(q):
            f.add_clause(guard + [-xc[s], -yc[s], e])
        prev = e
    if strict:
        f.add_clause([-prev])


def simplify_permuted_lex(xs, ys):
    """Filter a lex comparison whose right side permutes the left side.

    Scans pairs left to right with a union-find over positions: a pair whose
    members are already in one class is implied by the equalities of earlier
    kept pairs and is dropped; otherwise it is kept and the classes merge.
    The kept pairs are logically equivalent to the full comparison (for the
    strict form as well).
    """
    if Counter(xs) != Counter(ys):
        raise ValueError("ys is not a permutation of xs")
    parent = {}

    def find(a):
        root = a
        while parent.get(root, root) != root:
            root = parent[root]
        while parent.get(a, a) != a:
            parent[a], a = root, parent[a]
        return root

    kept = []
    for x, y in zip(xs, ys):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry
            kept.append((x, y))
    return kept


def encode_exactly_k(f: CnfFormula, vars, k):
    """Exactly k of vars are true, via a sequential unary counter.

    r[i][j] <-> at least j+1 true among vars[:i+1]; counters are functionally
    determined.  An out-of-range k marks the formula unsatisfiable instead of
    raising (infeasible cardinality is a result, not a usage error).
    """
    vars = list(vars)
    m = len(vars)
    if k < 0 or k > m:
        f.mark_unsatisfiable()
        return
    if k == 0:
        for v in vars:
            f.add_clause([-v])
        return
    if k == m:
        for v in vars:
            f.add_clause([v])
        return
    r = [[f.new_var() for _ in range(min(i, k - 1) + 1)] for i in range(m)]
    for i in range(m):
        x = vars[i]
        for j in range(min(i, k - 1) + 1):
            if i > 0 and j <= min(i - 1, k - 1):
                f.add_clause([-r[i - 1][j], r[i][j]])  # count never decreases
            if j == 0:
                f.add_clause([-x, r[i][0]])
            else:
                f.add_clause([-r[i - 1][j - 1], -x, r[i][j]])
            if i > 0 and j <= min(i - 1, k - 1):
                f.add_clause([-r[i][j], r[i - 1][j], x])
            else:
                f.add_clause([-r[i][j], x])  # prefix too short to reach j+1 without x
            if j > 0:
                f.add_clause([-r[i][j], r[i - 1][j - 1]])
    for i in range(k, m):
        f.add_clause([-vars[i], -r[i - 1][k - 1]])  # k reached: no further true var
    f.add_clause([r[m - 1][k - 1]])


def encode_at_most_one(f: CnfFormula, vars):
    vars = list(vars)
    for a in range(len(vars)):
        for b in range(a + 1, len(vars)):
            f.add_clause([-vars[a], -vars[b]])


def encode_exactly_one(f: CnfFormula, vars):
    f.add_clause(list(vars))
    encode_at_most_one(f, vars)


def emit_dimacs(f: CnfFormula, sink, comments=()):
    """Write standard DIMACS: comments, header, one 0-terminated clause/line."""
    for line in comments:
        sink.write(f"c {line}\n")
    sink.write(f"p cnf {f.num_vars} {len(f.clauses)}\n")
    for clause in f.clauses:
        sink.write(" ".join(str(lit) for lit in clause) + " 0\n")


def parse_dimacs(source) -> CnfFormula:
    """Read DIMACS text (string or file-like); tolerant of multi-line clauses."""
    if isinstance(source, str):
        lines = source.splitlines()
    else:
        lines = source.read().splitlines()
    num_vars = None
    tokens = []
    for line in lines:
        line = line.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ValueError(f"bad DIMACS header: {line!r}")
            num_vars = int(parts[2])
            continue
        tokens.extend(int(t) for t in line.split())
    if num_vars is None:
        raise ValueError("missing DIMACS header")
    f = CnfFormula(num_vars)
    clause = []
    for t in tokens:
        if t == 0:
            if not clause:
                f.mark_unsatisfiable()
            else:
                f.add_clause(clause)
            clause = []
        else:
            clause.append(t)
    if clause:
        raise ValueError("unterminated final clause")
    return f
