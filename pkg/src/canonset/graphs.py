"""Simple graphs as upper-triangle bit strings, vertex permutations, and the
lexicographic order used to pick canonical (lex-least) representatives.

Vertices are 1-based.  The upper triangle of the adjacency matrix is stored
row-major: positions (1,2),(1,3),...,(1,n),(2,3),...,(n-1,n).  This position
order doubles as the variable numbering shared by every encoding in the
package, so nothing else may reorder it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations

BRUTE_FORCE_MAX = 9


class BruteForceLimitError(RuntimeError):
    """An operation would iterate n! permutations for n above the guard."""


class Graph6Error(ValueError):
    """Malformed graph6 input; carries the byte offset of the bad byte."""

    def __init__(self, message, offset):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


@dataclass(frozen=True)
class Permutation:
    """A bijection on {1..n} in tuple notation: images[i-1] = p(i)."""

    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a bijection on 1..{len(self.images)}: {self.images!r}")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    @classmethod
    def identity(cls, n):
        return cls(tuple(range(1, n + 1)))

    def is_identity(self) -> bool:
        return self.images == tuple(range(1, self.n + 1))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, img in enumerate(self.images, start=1):
            inv[img - 1] = i
        return Permutation(tuple(inv))

    def compose(self, other: "Permutation") -> "Permutation":
        """self after other: compose(p2, p1)(i) = p2(p1(i))."""
        if self.n != other.n:
            raise ValueError("size mismatch")
        return Permutation(tuple(self.images[j - 1] for j in other.images))


@lru_cache(maxsize=None)
def edge_pairs(n: int) -> tuple[tuple[int, int], ...]:
    """Vertex pairs in position order; index k maps to edge_pairs(n)[k]."""
    return tuple(combinations(range(1, n + 1), 2))


@lru_cache(maxsize=None)
def _pair_index(n):
    return {pair: k for k, pair in enumerate(edge_pairs(n))}


def edge_index(n: int, i: int, j: int) -> int:
    """0-based upper-triangle position of the unordered pair {i, j}."""
    if i > j:
        i, j = j, i
    return _pair_index(n)[(i, j)]


@dataclass(frozen=True)
class GraphAssignment:
    """A concrete simple graph: vertex count plus upper-triangle bits.

    Symmetry and the zero diagonal hold by construction since only the
    upper triangle is stored.
    """

    n: int
    bits: str

    def __post_init__(self):
        m = self.n * (self.n - 1) // 2
        if len(self.bits) != m or set(self.bits) - {"0", "1"}:
            raise ValueError(f"need {m} bits of 0/1 for n={self.n}, got {self.bits!r}")

    @classmethod
    def from_edges(cls, n, edges):
        bits = ["0"] * (n * (n - 1) // 2)
        for i, j in edges:
            bits[edge_index(n, i, j)] = "1"
        return cls(n, "".join(bits))

    def edges(self):
        return [pair for pair, b in zip(edge_pairs(self.n), self.bits) if b == "1"]

    def has_edge(self, i, j) -> bool:
        return self.bits[edge_index(self.n, i, j)] == "1"

    def degree(self, i) -> int:
        return sum(1 for j in range(1, self.n + 1) if j != i and self.has_edge(i, j))

    def degrees(self) -> tuple[int, ...]:
        return tuple(self.degree(i) for i in range(1, self.n + 1))


def all_graphs(n):
    """Every graph on n vertices, in lex order of the bit string."""
    m = n * (n - 1) // 2
    for x in range(1 << m):
        yield GraphAssignment(n, format(x, f"0{m}b") if m else "")


def upper_tri_string(g: GraphAssignment) -> str:
    """Concatenated rows of the upper triangle of the adjacency matrix."""
    return g.bits


def graph_leq(g1: GraphAssignment, g2: GraphAssignment) -> bool:
    """Lexicographic order on upper-triangle strings, with 0 < 1."""
    if g1.n != g2.n:
        raise ValueError("size mismatch")
    return g1.bits <= g2.bits


@lru_cache(maxsize=None)
def edge_position_perm(p: Permutation, n: int) -> tuple[int, ...]:
    """Position map q with apply_perm(p, g).bits[k] == g.bits[q[k]].

    Position k = (i, j) of the relabeled graph reads the original edge
    between p^-1(i) and p^-1(j).
    """
    if p.n != n:
        raise ValueError("size mismatch")
    inv = p.inverse()
    return tuple(edge_index(n, inv(i), inv(j)) for i, j in edge_pairs(n))


def apply_perm(p: Permutation, g: GraphAssignment) -> GraphAssignment:
    """Relabel g by p: the result has edge (p(u),p(v)) iff g has edge (u,v)."""
    if p.n != g.n:
        raise ValueError("size mismatch")
    q = edge_position_perm(p, g.n)
    return GraphAssignment(g.n, "".join(g.bits[k] for k in q))


@lru_cache(maxsize=None)
def all_permutations(n: int) -> tuple[Permutation, ...]:
    """S_n in lexicographic order of image tuples (keeps minima deterministic)."""
    return tuple(Permutation(images) for images in permutations(range(1, n + 1)))


def _guard_bruteforce(n):
    if n > BRUTE_FORCE_MAX:
        raise BruteForceLimitError(
            f"n={n} exceeds the n<={BRUTE_FORCE_MAX} permutation brute-force guard"
        )


def is_canonical_bruteforce(g: GraphAssignment) -> bool:
    """True iff g is lex-least among all n! relabelings of itself."""
    _guard_bruteforce(g.n)
    bits = g.bits
    for p in all_permutations(g.n):
        q = edge_position_perm(p, g.n)
        if "".join(bits[k] for k in q) < bits:
            return False
    return True


def canonical_form_bruteforce(g: GraphAssignment) -> GraphAssignment:
    """Lex-least relabeling of g, scanning permutations in lex image order."""
    _guard_bruteforce(g.n)
    best = g.bits
    for p in all_permutations(g.n):
        q = edge_position_perm(p, g.n)
        s = "".join(g.bits[k] for k in q)
        if s < best:
            best = s
    return GraphAssignment(g.n, best)


def to_graph6(g: GraphAssignment) -> str:
    """Short-form graph6 line (no newline) for 1 <= n <= 62."""
    if not 1 <= g.n <= 62:
        raise ValueError("short-form graph6 covers 1 <= n <= 62")
    # graph6 packs the upper triangle column by column: (1,2),(1,3),(2,3),...
    colbits = "".join(
        g.bits[edge_index(g.n, i, j)] for j in range(2, g.n + 1) for i in range(1, j)
    )
    chars = [chr(63 + g.n)]
    for k in range(0, len(colbits), 6):
        chunk = colbits[k : k + 6].ljust(6, "0")
        chars.append(chr(63 + int(chunk, 2)))
    return "".join(chars)


def from_graph6(line: str) -> GraphAssignment:
    """Decode one short-form graph6 line; raises Graph6Error when malformed."""
    s = line.strip()
    if not s:
        raise Graph6Error("empty graph6 line", 0)
    first = ord(s[0])
    if first == 126:
        raise Graph6Error("long-form graph6 (n > 62) not supported", 0)
    if not 63 <= first <= 125:
        raise Graph6Error(f"bad size byte {s[0]!r}", 0)
    n = first - 63
    m = n * (n - 1) // 2
    need = (m + 5) // 6
    if len(s) - 1 < need:
        raise Graph6Error(f"truncated payload, need {need} bytes for n={n}", len(s))
    if len(s) - 1 > need:
        raise Graph6Error(f"trailing bytes after {need} payload bytes for n={n}", 1 + need)
    groups = []
    for off, ch in enumerate(s[1:], start=1):
        v = ord(ch)
        if not 63 <= v <= 126:
            raise Graph6Error(f"bad payload byte {ch!r}", off)
        groups.append(format(v - 63, "06b"))
    colbits = "".join(groups)
    if "1" in colbits[m:]:
        raise Graph6Error("nonzero padding bits", 1 + m // 6)
    rowbits = ["0"] * m
    k = 0
    for j in range(2, n + 1):
        for i in range(1, j):
            rowbits[edge_index(n, i, j)] = colbits[k]
            k += 1
    return GraphAssignment(n, "".join(rowbits))
