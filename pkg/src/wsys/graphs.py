"""Simple labeled graphs with GF(2) linear algebra.

Vertices are labeled 1..n.  Adjacency is stored as one integer bitmask per
vertex (bit j-1 of ``rows[i-1]`` is set iff i ~ j), which makes Gaussian
elimination over GF(2) a few word operations per row.  All operations are
pure: they return new graphs.

Text format: ``"n=4; edges=1-2,1-3,2-3"`` (edges sorted, smaller endpoint
first).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import DomainError, ParseError


@dataclass(frozen=True)
class Graph:
    """Simple graph on vertices 1..n; symmetric bitmask adjacency, no loops."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or len(self.rows) != self.n:
            raise DomainError(f"adjacency size {len(self.rows)} != n = {self.n}")
        for i, row in enumerate(self.rows):
            if row < 0 or row >> self.n:
                raise DomainError(f"row {i + 1} has bits outside 1..{self.n}")
            if row >> i & 1:
                raise DomainError(f"loop at vertex {i + 1}")
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if (self.rows[i] >> j & 1) != (self.rows[j] >> i & 1):
                    raise DomainError(f"asymmetric adjacency at {i + 1},{j + 1}")

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for a, b in edges:
            if not (1 <= a <= n and 1 <= b <= n):
                raise DomainError(f"edge {a}-{b} out of range 1..{n}")
            if a == b:
                raise DomainError(f"loop at vertex {a}")
            rows[a - 1] |= 1 << (b - 1)
            rows[b - 1] |= 1 << (a - 1)
        return cls(n, tuple(rows))

    def has_edge(self, a: int, b: int) -> bool:
        return bool(self.rows[a - 1] >> (b - 1) & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [
            (i + 1, j + 1)
            for i in range(self.n)
            for j in range(i + 1, self.n)
            if self.rows[i] >> j & 1
        ]

    def neighbors(self, v: int) -> set[int]:
        row = self.rows[v - 1]
        return {j + 1 for j in range(self.n) if row >> j & 1}

    def toggle_edge(self, a: int, b: int) -> "Graph":
        if a == b:
            raise DomainError(f"cannot toggle a loop at {a}")
        rows = list(self.rows)
        rows[a - 1] ^= 1 << (b - 1)
        rows[b - 1] ^= 1 << (a - 1)
        return Graph(self.n, tuple(rows))


# -- text form -------------------------------------------------------------

_GRAPH_RE = re.compile(r"^\s*n\s*=\s*(\d+)\s*;\s*edges\s*=\s*(.*?)\s*$")


def graph_parse(text: str) -> Graph:
    match = _GRAPH_RE.match(text)
    if not match:
        raise ParseError(f"malformed graph text: {text!r}")
    n = int(match.group(1))
    body = match.group(2)
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    if body:
        for part in body.split(","):
            piece = part.strip()
            m = re.fullmatch(r"(\d+)\s*-\s*(\d+)", piece)
            if not m:
                raise ParseError(f"malformed edge {piece!r}")
            a, b = int(m.group(1)), int(m.group(2))
            if not (1 <= a <= n and 1 <= b <= n):
                raise ParseError(f"edge {a}-{b} out of range 1..{n}")
            if a == b:
                raise ParseError(f"loop at vertex {a}")
            key = (min(a, b), max(a, b))
            if key in seen:
                raise ParseError(f"duplicate edge {a}-{b}")
            seen.add(key)
            edges.append(key)
    return Graph.from_edges(n, edges)


def graph_format(g: Graph) -> str:
    body = ",".join(f"{a}-{b}" for a, b in g.edges())
    return f"n={g.n}; edges={body}"


# -- GF(2) linear algebra ---------------------------------------------------


def gf2_rank(rows: Sequence[int]) -> int:
    """Rank of a bit-row matrix by Gaussian elimination."""
    basis: list[int] = []
    for row in rows:
        for b in basis:
            low = b & -b
            if row & low:
                row ^= b
        if row:
            basis.append(row)
    return len(basis)


def gf2_corank(rows: Sequence[int], n: int) -> int:
    """n - rank of a square n x n bit matrix given as n row masks."""
    if len(rows) != n:
        raise DomainError(f"non-square matrix: {len(rows)} rows, width {n}")
    for i, row in enumerate(rows):
        if row < 0 or row >> n:
            raise DomainError(f"row {i + 1} wider than {n} columns")
    return n - gf2_rank(rows)


def adjacency_matrix(g: Graph) -> list[int]:
    return list(g.rows)


def induced_corank(g: Graph, vertices: Iterable[int]) -> int:
    """Corank of the adjacency matrix restricted to a vertex subset,
    eliminating directly on the compressed rows (no subgraph object)."""
    vs = sorted(set(vertices))
    for v in vs:
        if not 1 <= v <= g.n:
            raise DomainError(f"vertex {v} out of range 1..{g.n}")
    rows = []
    for v in vs:
        full = g.rows[v - 1]
        packed = 0
        for i, u in enumerate(vs):
            if full >> (u - 1) & 1:
                packed |= 1 << i
        rows.append(packed)
    return len(vs) - gf2_rank(rows)


def is_nondegenerate(g: Graph) -> bool:
    """True iff the adjacency matrix is invertible mod 2 (empty graph: yes)."""
    return gf2_corank(g.rows, g.n) == 0


# -- subgraphs and pivot ----------------------------------------------------


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    vs = sorted(set(vertices))
    for v in vs:
        if not 1 <= v <= g.n:
            raise DomainError(f"vertex {v} out of range 1..{g.n}")
    index = {v: i for i, v in enumerate(vs)}
    rows = [0] * len(vs)
    for v in vs:
        for u in vs:
            if u != v and g.has_edge(v, u):
                rows[index[v]] |= 1 << index[u]
    return Graph(len(vs), tuple(rows))


def delete_vertex(g: Graph, v: int) -> Graph:
    if not 1 <= v <= g.n:
        raise DomainError(f"vertex {v} out of range 1..{g.n}")
    return induced_subgraph(g, (u for u in range(1, g.n + 1) if u != v))


def graph_pivot(g: Graph, a: int, b: int) -> Graph:
    """Toggle all edges between the three neighbor classes of the edge ab.

    Vertices outside {a, b} split into: adjacent to both ends, adjacent to a
    only, adjacent to b only, adjacent to neither.  Every edge (present or
    absent) between two *different* classes among the first three is
    toggled; everything else is untouched.
    """
    if not g.has_edge(a, b):
        raise DomainError(f"pivot requires edge {a}-{b}")
    classes: dict[int, int] = {}
    for v in range(1, g.n + 1):
        if v in (a, b):
            continue
        va, vb = g.has_edge(v, a), g.has_edge(v, b)
        if va and vb:
            classes[v] = 1
        elif va:
            classes[v] = 2
        elif vb:
            classes[v] = 3
    out = g
    for u, v in combinations(sorted(classes), 2):
        if classes[u] != classes[v]:
            out = out.toggle_edge(u, v)
    return out


def four_term_images(g: Graph, a: int, b: int) -> tuple[Graph, Graph, Graph]:
    """The three companions of g in the graph 4-term relation at (a, b).

    Returns (g', g~, g~') where g' toggles the edge ab, g~ toggles the edge
    {a, v} for every v adjacent to b other than a, and g~' is g~ with ab
    toggled again.
    """
    if a == b:
        raise DomainError("4-term images need two distinct vertices")
    g_prime = g.toggle_edge(a, b)
    g_tilde = g
    for v in sorted(g.neighbors(b)):
        if v not in (a, b):
            g_tilde = g_tilde.toggle_edge(a, v)
    return g_prime, g_tilde, g_tilde.toggle_edge(a, b)


# -- enumeration and standard graphs ----------------------------------------


def all_graphs(n: int) -> Iterator[Graph]:
    """All labeled simple graphs on n vertices."""
    pairs = list(combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, (p for i, p in enumerate(pairs) if mask >> i & 1))


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(1, n + 1), 2))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(1, n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise DomainError("cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)] + [(n, 1)])


def diamond_graph() -> Graph:
    """K_4 minus one edge."""
    return Graph.from_edges(4, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4)])
