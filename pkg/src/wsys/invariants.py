"""Interlace and skew-characteristic polynomial families.

Graph invariants here are plain functions Graph -> Poly, so they can be
passed around first-class (the convolution product takes two of them).
The delta-matroid versions take a :class:`~wsys.dmat.DMat` and use the
distance function in place of the GF(2) corank; on systems coming from
graphs the two agree subset by subset.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, MutableMapping

from .algebra import Poly
from .dmat import DMat, distance
from .graphs import (
    Graph,
    delete_vertex,
    four_term_images,
    graph_pivot,
    induced_corank,
    induced_subgraph,
)

GraphInvariant = Callable[[Graph], Poly]


def _vertex_subsets(n: int):
    for mask in range(1 << n):
        yield mask, [v + 1 for v in range(n) if mask >> v & 1]


def skew_char(g: Graph) -> Poly:
    """Q(u) = sum over mod-2 nondegenerate vertex subsets of u^(n - |U|)."""
    terms: dict = {}
    for mask, subset in _vertex_subsets(g.n):
        if induced_corank(g, subset) == 0:
            e = g.n - len(subset)
            key = (("u", e),) if e else ()
            terms[key] = terms.get(key, Fraction(0)) + 1
    return Poly(terms)


def refined_skew_char_graph(g: Graph) -> Poly:
    """Qbar(u, w) = sum over all vertex subsets of u^(n-|U|) w^(corank A_U)."""
    terms: dict = {}
    for mask, subset in _vertex_subsets(g.n):
        upow = g.n - len(subset)
        wpow = induced_corank(g, subset)
        mono = []
        if upow:
            mono.append(("u", upow))
        if wpow:
            mono.append(("w", wpow))
        key = tuple(mono)
        terms[key] = terms.get(key, Fraction(0)) + 1
    return Poly(terms)


def refined_skew_char_dmat(d: DMat) -> Poly:
    """Qbar(u, w) with the distance to the admissible family as exponent."""
    terms: dict = {}
    for mask in range(1 << d.ground):
        upow = d.ground - mask.bit_count()
        wpow = distance(d, mask)
        mono = []
        if upow:
            mono.append(("u", upow))
        if wpow:
            mono.append(("w", wpow))
        key = tuple(mono)
        terms[key] = terms.get(key, Fraction(0)) + 1
    return Poly(terms)


def interlace_dmat(d: DMat) -> Poly:
    """L(x) = sum over all subsets of x^(distance)."""
    terms: dict = {}
    for mask in range(1 << d.ground):
        e = distance(d, mask)
        key = (("x", e),) if e else ()
        terms[key] = terms.get(key, Fraction(0)) + 1
    return Poly(terms)


def two_var_interlace(d: DMat) -> Poly:
    """Lbar(x, y) = sum over all subsets of x^|U| y^(distance)."""
    terms: dict = {}
    for mask in range(1 << d.ground):
        xpow = mask.bit_count()
        ypow = distance(d, mask)
        mono = []
        if xpow:
            mono.append(("x", xpow))
        if ypow:
            mono.append(("y", ypow))
        key = tuple(mono)
        terms[key] = terms.get(key, Fraction(0)) + 1
    return Poly(terms)


# -- recursive interlace -------------------------------------------------------

_RECURSION_MEMO: dict[tuple[int, tuple[int, ...]], Poly] = {}


def first_edge(g: Graph) -> tuple[int, int] | None:
    for a in range(1, g.n + 1):
        row = g.rows[a - 1] >> a  # neighbors above a
        if row:
            b = a + 1 + (row & -row).bit_length() - 1
            return a, b
    return None


def interlace_graph_recursive(
    g: Graph,
    memo: MutableMapping[tuple[int, tuple[int, ...]], Poly] | None = None,
    edge_policy: Callable[[Graph], tuple[int, int] | None] = first_edge,
) -> Poly:
    """L(x) by the vertex recursion L(G) = L(G - a) + L(G^{ab} - b), with
    (x+1)^n on edgeless graphs.  The result does not depend on which edge
    the policy picks; the default takes the lexicographically first."""
    table = _RECURSION_MEMO if memo is None else memo
    key = (g.n, g.rows)
    cached = table.get(key)
    if cached is not None:
        return cached
    edge = edge_policy(g)
    if edge is None:
        result = (Poly.var("x") + Poly.one()) ** g.n
    else:
        a, b = edge
        result = interlace_graph_recursive(
            delete_vertex(g, a), table, edge_policy
        ) + interlace_graph_recursive(
            delete_vertex(graph_pivot(g, a, b), b), table, edge_policy
        )
    table[key] = result
    return result


def interlace_graph(g: Graph) -> Poly:
    """Interlace polynomial of a graph (recursive computation)."""
    return interlace_graph_recursive(g)


def shift_variable(p: Poly, var: str) -> Poly:
    """Substitute var -> var - 1 (the alternative normalization some
    sources use for the interlace polynomial)."""
    return p.subs({var: Poly.var(var) - Poly.one()})


# -- convolution and 4-term check -----------------------------------------------


def convolution(f: GraphInvariant, g: GraphInvariant, graph: Graph) -> Poly:
    """(f * g)(G) = sum over vertex subsets U of f(G|U) g(G|rest)."""
    total = Poly.zero()
    for mask, subset in _vertex_subsets(graph.n):
        rest = [v for v in range(1, graph.n + 1) if v not in set(subset)]
        total = total + f(induced_subgraph(graph, subset)) * g(
            induced_subgraph(graph, rest)
        )
    return total


def graph_4t_check(f: GraphInvariant, g: Graph, a: int, b: int) -> bool:
    """f(G) - f(G') = f(G~) - f(G~') at the ordered pair (a, b)."""
    g_prime, g_tilde, g_tilde_prime = four_term_images(g, a, b)
    return f(g) - f(g_prime) == f(g_tilde) - f(g_tilde_prime)


# -- invariants used as convolution factors --------------------------------------


def nondegeneracy_indicator(g: Graph) -> Poly:
    """1 on mod-2 nondegenerate graphs, 0 otherwise."""
    return Poly.one() if induced_corank(g, range(1, g.n + 1)) == 0 else Poly.zero()


def vertex_count_power_u(g: Graph) -> Poly:
    """u^|V|."""
    return Poly.var("u", g.n) if g.n else Poly.one()


def corank_power_N(g: Graph) -> Poly:
    """N^(corank of the adjacency matrix)."""
    c = induced_corank(g, range(1, g.n + 1))
    return Poly.var("N", c) if c else Poly.one()


def unit_invariant(g: Graph) -> Poly:
    """1 on the empty graph, 0 otherwise (the counit)."""
    return Poly.one() if g.n == 0 else Poly.zero()
