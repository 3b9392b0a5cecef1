"""Simple undirected graphs with bitset adjacency rows.

Rows are Python ints used as bitsets; graphs are immutable after
construction. The on-disk edge-list format is bit-exact: a header line
"n m", then m lines "u v" with 0 <= u < v < n in ascending lexicographic
order, LF line endings, no comments.
"""

from __future__ import annotations

from .perm import Perm, orbits


def bits(mask: int):
    """Yield set bit positions of mask, ascending."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


class Graph:
    __slots__ = ("n", "rows", "m")

    def __init__(self, n: int, rows: tuple[int, ...], m: int):
        self.n = n
        self.rows = rows
        self.m = m

    @classmethod
    def build(cls, n: int, edges) -> "Graph":
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        rows = [0] * n
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if rows[u] >> v & 1:
                continue  # ignore duplicates from symmetric constructions
            rows[u] |= 1 << v
            rows[v] |= 1 << u
            m += 1
        return cls(n, tuple(rows), m)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, u: int):
        return bits(self.rows[u])

    def degree(self, u: int) -> int:
        return self.rows[u].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.rows[u]) if u < v]

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        rows = tuple((full & ~r) & ~(1 << u) for u, r in enumerate(self.rows))
        m = self.n * (self.n - 1) // 2 - self.m
        return Graph(self.n, rows, m)

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= self.rows[v]
            frontier = nxt & ~seen
            seen |= nxt
        return seen == (1 << self.n) - 1

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return hash((self.n, self.rows))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def remove_intra_orbit_edges(g: Graph, a: Perm) -> Graph:
    """Drop every edge whose endpoints lie in the same orbit of a."""
    if len(a) != g.n:
        raise ValueError(f"degree mismatch: permutation on {len(a)}, graph on {g.n}")
    part = orbits(a)
    masks = [0] * len(part.orbits)
    for i, orb in enumerate(part.orbits):
        for v in orb:
            masks[i] |= 1 << v
    rows = tuple(r & ~masks[part.orbit_of[v]] for v, r in enumerate(g.rows))
    m = sum(r.bit_count() for r in rows) // 2
    return Graph(g.n, rows, m)


def parse_edgelist(text: str) -> Graph:
    lines = text.splitlines()
    if not lines:
        raise ValueError("line 1: missing header")
    try:
        n, m = (int(tok) for tok in lines[0].split())
    except ValueError:
        raise ValueError(f"line 1: malformed header {lines[0]!r}") from None
    if n < 0 or m < 0:
        raise ValueError("line 1: negative count in header")
    rows = [0] * n
    count = 0
    for ln, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        try:
            u, v = (int(tok) for tok in line.split())
        except ValueError:
            raise ValueError(f"line {ln}: malformed edge {line!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"line {ln}: endpoint out of range")
        if u == v:
            raise ValueError(f"line {ln}: loop at vertex {u}")
        if rows[u] >> v & 1:
            raise ValueError(f"line {ln}: duplicate edge ({u}, {v})")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        count += 1
    if count != m:
        raise ValueError(f"header says {m} edges, found {count}")
    return Graph(n, tuple(rows), m)


def emit_edgelist(g: Graph) -> str:
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(out) + "\n"
